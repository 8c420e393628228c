#include "motzkin/limits/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "motzkin/core/errors.hpp"
#include "motzkin/limits/special.hpp"

namespace motzkin::limits {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_time(double t) {
    if (!(t > 0.0)) fail(ErrorCode::InvalidParams, "time parameter must be positive");
}

// Support check with a relative slack for points produced by x = 2 sqrt(t) cos(theta).
bool inside(double x, double radius) { return std::abs(x) <= radius * (1.0 + 1e-14); }

double root_gap(double r2, double x) { return std::sqrt(std::max(0.0, r2 - x * x)); }

}  // namespace

double killed_bm_kernel(double t, double x, double y) {
    require_positive_time(t);
    if (!(x > 0.0) || !(y > 0.0)) return 0.0;
    const double d = x - y;
    return std::exp(-d * d / (2.0 * t)) * -std::expm1(-2.0 * x * y / t) / std::sqrt(2.0 * kPi * t);
}

double biane_kernel(double t, double x, double y) {
    require_positive_time(t);
    if (x < 0.0 || y < 0.0 || !std::isfinite(y)) return 0.0;
    const double t2 = t * t;
    const double d = y - x;
    return (2.0 / kPi) * t * std::sqrt(y) / (t2 * t2 + d * d + 2.0 * (y + x) * t2);
}

double eta_fdd_pdf(std::span<const double> grid, std::span<const double> values, double a, double c) {
    if (grid.size() < 2 || grid.size() != values.size())
        fail(ErrorCode::InvalidGrid, "grid and values must have the same size >= 2");
    if (grid.front() != 0.0 || grid.back() != 1.0)
        fail(ErrorCode::InvalidGrid, "grid must start at 0 and end at 1");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1])) fail(ErrorCode::InvalidGrid, "grid must be strictly increasing");
    const double norm = norm_const_ac(a, c);
    for (double y : values)
        if (!(y > 0.0)) return 0.0;
    double density = std::exp(-(c * values.front() + a * values.back()) / std::numbers::sqrt2) / norm;
    for (std::size_t k = 1; k < grid.size(); ++k)
        density *= killed_bm_kernel(grid[k] - grid[k - 1], values[k - 1], values[k]);
    return density;
}

double eta_fdd_pdf(std::span<const double> grid, std::span<const double> values, const KernelParams& kp) {
    return eta_fdd_pdf(grid, values, kp.a, kp.c);
}

double semicircle_density(double t, double y) {
    require_positive_time(t);
    if (!inside(y, 2.0 * std::sqrt(t))) return 0.0;
    return root_gap(4.0 * t, y) / (2.0 * kPi * t);
}

double semicircle_transition(double s, double t, double x, double y) {
    if (!(s >= 0.0) || !(t > s)) fail(ErrorCode::InvalidParams, "transition needs 0 <= s < t");
    if (!inside(x, 2.0 * std::sqrt(s)) || !inside(y, 2.0 * std::sqrt(t)))
        fail(ErrorCode::OutOfSupport, "semicircle transition evaluated outside |x| <= 2 sqrt(s), |y| <= 2 sqrt(t)");
    const double gap = t - s;
    const double denom = t * x * x + s * y * y - (s + t) * x * y + gap * gap;
    return gap * root_gap(4.0 * t, y) / (2.0 * kPi * denom);
}

KernelPair semicircle_kernels(double s, double t, double x, double y) {
    const double transition = semicircle_transition(s, t, x, y);
    return {semicircle_density(t, y), transition};
}

double stationary_u_marginal(double y) {
    if (!inside(y, 2.0)) fail(ErrorCode::OutOfSupport, "stationary kernel needs |y| <= 2");
    return root_gap(4.0, y) / (2.0 * kPi);
}

double stationary_u_transition(double delta, double y_prev, double y) {
    require_positive_time(delta);
    const double marginal = stationary_u_marginal(y);
    if (!inside(y_prev, 2.0)) fail(ErrorCode::OutOfSupport, "stationary kernel needs |y'| <= 2");
    const double denom = -2.0 * y * y_prev * std::cosh(delta) + 2.0 * std::cosh(2.0 * delta) + y * y +
                         y_prev * y_prev - 2.0;
    return marginal * std::expm1(2.0 * delta) / denom;
}

KernelPair stationary_u_kernels(double delta, double y, double y_prev) {
    return {stationary_u_marginal(y), stationary_u_transition(delta, y_prev, y)};
}

double chebyshev_p(int n, double x) {
    if (n < 0) fail(ErrorCode::InvalidParams, "polynomial degree must be nonnegative");
    double previous = 1.0, current = x;
    if (n == 0) return previous;
    for (int k = 1; k < n; ++k) {
        const double next = x * current - previous;
        previous = current;
        current = next;
    }
    return current;
}

double chebyshev_generating(double x, double z) {
    if (!(std::abs(z) < 1.0)) fail(ErrorCode::InvalidParams, "generating function needs |z| < 1");
    return 1.0 / (1.0 - x * z + z * z);
}

double chebyshev_series(double x, double z, int order) {
    double previous = 0.0, current = 1.0, power = 1.0, sum = 0.0;
    for (int n = 0; n <= order; ++n) {
        sum += power * current;
        const double next = x * current - previous;
        previous = current;
        current = next;
        power *= z;
    }
    return sum;
}

}  // namespace motzkin::limits
