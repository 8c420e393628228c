#include "motzkin/limits/special.hpp"

#include <cmath>
#include <numbers>

#include "motzkin/core/errors.hpp"

namespace motzkin::limits {

namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

// Lentz evaluation of erfc(x) exp(x^2) sqrt(pi) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
double erfcx_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double C = x;
    double D = 0.0;
    for (int n = 1; n < 500; ++n) {
        const double an = 0.5 * n;
        D = x + an * D;
        C = x + an / C;
        if (std::abs(D) < tiny) D = tiny;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return kInvSqrtPi / f;
}

// x H(x/2) and its first and third derivatives.
double F1(double m) {
    return (1.0 + 0.5 * m * m) * erfcx(0.5 * m) - m * kInvSqrtPi;
}

double F3(double m) {
    const double m2 = m * m;
    return (m2 * m2 / 8.0 + 1.5 * m2 + 1.5) * erfcx(0.5 * m) - (0.25 * m2 * m + 2.5 * m) * kInvSqrtPi;
}

}  // namespace

double erfcx(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 * std::exp(x * x) - erfcx(-x);
    if (x >= 4.0) return erfcx_continued_fraction(x);
    return std::exp(x * x) * std::erfc(x);
}

double norm_const_ac(double a, double c) {
    if (!(a + c > 0.0)) fail(ErrorCode::InvalidParams, "C_{a,c} needs a + c > 0");
    const double m = 0.5 * (a + c);
    const double h = 0.5 * (a - c);
    const double gap = std::abs(a - c);
    // sqrt(2) (F(a) - F(c)) / (a^2 - c^2) with F(x) = x H(x/2)
    double divided;
    if (gap < 1e-8 * (1.0 + std::abs(a))) divided = F1(m);
    else if (gap < 1e-3) divided = F1(m) + F3(m) * h * h / 6.0;
    else divided = (a * erfcx(0.5 * a) - c * erfcx(0.5 * c)) / (a - c);
    return std::numbers::sqrt2 * divided / (a + c);
}

}  // namespace motzkin::limits
