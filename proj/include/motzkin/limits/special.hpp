#pragma once

namespace motzkin::limits {

/// Scaled complementary error function H(x) = exp(x^2) erfc(x). Continued
/// fraction for x >= 4, direct product on [0, 4), and
/// H(x) = 2 exp(x^2) - H(-x) for x < 0 (overflows to +inf below about -26.6).
double erfcx(double x);

/// Normalizer C_{a,c} of the tilted killed-Brownian density, closed form in
/// H. Requires a + c > 0 (InvalidParams otherwise). For |a - c| below
/// 1e-8 (1 + |a|) the a = c expression is used at the midpoint; up to 1e-3 a
/// second-order expansion about the midpoint replaces the divided
/// difference, which would otherwise lose digits to cancellation.
double norm_const_ac(double a, double c);

}  // namespace motzkin::limits
