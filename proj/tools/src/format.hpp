#pragma once

// Text rendering shared by every emitter: 17-digit floats, complex literals,
// JSON with insertion-ordered keys, CSV fields.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "wiltonlab/types.hpp"

namespace wiltonlab::cli {

using Json = nlohmann::ordered_json;

/// %.17g, or "nan"/"inf"/"-inf" for non-finite values.
std::string formatDouble(double value);

/// "a+bi" with both parts at 17 digits; "a" when the imaginary part is zero.
std::string formatComplex(Complex z);

/// Accepts "2", "-0.5", "1e-3", "2+3i", "2-3.5i", "3i", "-i", "i", "2+i".
std::optional<Complex> parseComplex(std::string_view text);

Json complexJson(Complex z);
Complex complexFromJson(const Json& j);

/// Finite doubles as numbers, non-finite as null.
Json numberJson(double value);
double numberFromJson(const Json& j);

/// Compact JSON (no spaces), floats at 17 significant digits.
std::string dumpJson(const Json& j);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csvField(std::string_view text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t value);

}  // namespace wiltonlab::cli
