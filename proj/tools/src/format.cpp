#include "format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace wiltonlab::cli {
namespace {

std::optional<double> parseReal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const std::string owned(text);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

void emit(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        emit(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double value = j.get<double>();
      out += std::isfinite(value) ? formatDouble(value) : "null";
      break;
    }
    default:
      out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
  }
}

}  // namespace

std::string formatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value == 0.0 ? 0.0 : value);
  return buffer;
}

std::string formatComplex(Complex z) {
  if (z.imag() == 0.0) return formatDouble(z.real());
  std::string out = formatDouble(z.real());
  const std::string im = formatDouble(z.imag());
  if (im.front() != '-') out += '+';
  return out + im + "i";
}

std::optional<Complex> parseComplex(std::string_view text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i' && s.back() != 'j') {
    const auto re = parseReal(s);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string rePart = split == std::string::npos ? "" : s.substr(0, split);
  std::string imPart = split == std::string::npos ? s : s.substr(split);
  if (imPart.empty() || imPart == "+") imPart = "1";
  if (imPart == "-") imPart = "-1";
  const auto im = parseReal(imPart);
  if (!im) return std::nullopt;
  double re = 0.0;
  if (!rePart.empty()) {
    const auto parsed = parseReal(rePart);
    if (!parsed) return std::nullopt;
    re = *parsed;
  }
  return Complex(re, *im);
}

Json complexJson(Complex z) {
  Json j = Json::object();
  j["re"] = numberJson(z.real());
  j["im"] = numberJson(z.imag());
  return j;
}

Complex complexFromJson(const Json& j) { return {numberFromJson(j.at("re")), numberFromJson(j.at("im"))}; }

Json numberJson(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

double numberFromJson(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

std::string dumpJson(const Json& j) {
  std::string out;
  emit(j, out);
  return out;
}

std::string csvField(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t hash = seed;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

}  // namespace wiltonlab::cli
