#pragma once

// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace oracle_values {

inline constexpr double kGammaHalf = 1.7724538509055160273;
inline const std::complex<double> kLogGamma_3p7_2p1i{0.78534695807382238876, 2.5830129251152622486};
inline const std::complex<double> kGamma_2p5_1i{0.77476210455108367117, 0.70763120437959258559};
inline const std::complex<double> kGamma_m2p5_0p5i{-0.3338752035224323374, -0.20645730796360841492};
inline constexpr double kBesselJ0_1 = 0.76519768655796655145;
inline constexpr double kBesselJ11_30p5 = -0.044086751716523027768;
inline constexpr double kBesselJ11_3 = 1.7939896623474464966e-6;
inline constexpr double kBesselJhalf_100p3 = -0.018237591911259394774;
inline constexpr double kBesselJ1p5_7p25 = -0.13464968568116875681;
inline constexpr double kBesselJ0_60 = -0.091471804089061869531;
inline constexpr double kBesselJ1_50 = -0.097511828125175137661;
inline const std::complex<double> kZeta_half_14i{0.022241142609993589246, -0.1032581232664500579};
inline const std::complex<double> kZeta_2_30i{0.82587982431582637523, -0.26903382749730631099};
inline constexpr double kZeta_m1p5 = -0.02548520188983303595;
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kHurwitz_2p5_0p3 = 21.069239202247724917;
inline const std::complex<double> kHurwitz_half_3i_0p75{0.39644488076339164742, 0.58211343187901931494};
inline const std::complex<double> kLchi4_half_2i{1.0788687937679351776, 0.40127519539587026143};
inline const std::complex<double> kLchi5_2{0.95871612271688315539, 0.14556587678508959046};
inline const std::complex<double> kLchi5_half{0.76374788011728687822, 0.21696476751886069364};
inline constexpr double kDedekindQ7_2 = 1.894841448968806529;
inline const std::complex<double> kDedekindQ3_1p5_1i{0.8872610982787378909, -0.37420915149478605212};
inline constexpr double kEpsteinSum4_3 = 14.829782627229720886;
inline const std::complex<double> kEpsteinTwoSquares_1p5_2i{3.361427777673580634, -0.96875987289644176253};
inline constexpr double kEisensteinL4_5 = 409.36266943098850572;
inline constexpr double kEisensteinL6_7p5 = -680.04908394828831943;
inline constexpr double kRamanujanL12 = 0.99454369291844374905;
inline constexpr double kMomentTheta_n3_u0p2 = 0.057303309196389478871;
inline constexpr double kMomentDelta_n2_u11p5 = 457.09843763074956653;
inline constexpr double kMomentOdd4_n5_u1p25 = 4.2137201073560766867;
inline constexpr double kMomentTheta_n200_u0p3 = 0.051953040975440179853;
inline constexpr double kMomentTheta_n1_u0p75 = -4.0205649716447486237;
inline constexpr double kMomentTheta_n200_u0p75 = -3.9985367456641094621;
inline constexpr double kMomentDelta_n1_u12p5 = -98.108939434326294775;
inline constexpr double kMomentDelta_n41_u14p5 = -1928656493363938.191;
inline constexpr double kMomentDelta_n160_u14p5 = -1.0373943808523333183e+20;
inline constexpr double kMomentDelta_n160_u11p5 = 1497778620343.255725;
inline const std::complex<double> kMomentTheta_n4_u0p8_0p3i{-1.8583456902366512906, -2.4767321205797263519};
inline constexpr double kWiltonLhs_2_3 = 0.35381949973058883092;
inline const std::complex<double> kWiltonLhs_half_1i_1p7{0.19648621324528973179, 0.063684578033622275676};
inline constexpr double kWiltonTail_u2_A2pi = 0.0032550962148135833917;
inline constexpr double kWiltonTail_u2_A60pi = 1.4926227347365910025e-7;
inline const std::complex<double> kWiltonTail_u0p4_1i_A60pi{0.00032802960922568658399, 0.00056399661489918221436};
inline constexpr double kWiltonTail_um0p5_A4pi = 0.28082009069127894054;

}  // namespace oracle_values
