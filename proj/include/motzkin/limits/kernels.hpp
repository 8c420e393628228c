#pragma once

#include <span>

namespace motzkin::limits {

/// Parameters shared by the limit kernels: a, c enter the normalizer and the
/// boundary tilts, t and s are times.
struct KernelParams {
    double a = 1.0;
    double c = 1.0;
    double sigma = 1.0;
    double t = 1.0;
    double s = 0.0;
};

/// Transition density of Brownian motion killed at zero,
/// (2 pi t)^{-1/2} (exp(-(x-y)^2/2t) - exp(-(x+y)^2/2t)) for x, y > 0, else 0.
double killed_bm_kernel(double t, double x, double y);

/// (2/pi) t sqrt(y) / (t^4 + (y-x)^2 + 2(y+x) t^2) for x, y >= 0, else 0.
double biane_kernel(double t, double x, double y);

/// Joint density of the tilted killed-Brownian process at grid points
/// 0 = x_0 < ... < x_d = 1: exp(-(c y_0 + a y_d)/sqrt 2) prod g_{dx}(y_{k-1}, y_k)
/// divided by C_{a,c}. Zero if any y_k <= 0. Throws InvalidGrid unless the
/// grid is strictly increasing from 0 to 1 and matches values in size.
double eta_fdd_pdf(std::span<const double> grid, std::span<const double> values, double a, double c);
double eta_fdd_pdf(std::span<const double> grid, std::span<const double> values, const KernelParams& kp);

/// Semicircle density of variance t, sqrt(4t - y^2) / (2 pi t) on |y| <= 2 sqrt t.
double semicircle_density(double t, double y);

/// Transition density from (s, x) to (t, y) of the semicircle martingale.
/// Requires 0 <= s < t, |x| <= 2 sqrt s and |y| <= 2 sqrt t (OutOfSupport).
double semicircle_transition(double s, double t, double x, double y);

struct KernelPair {
    double marginal = 0.0;
    double transition = 0.0;
};

/// {p_t(y), p_{s,t}(x, y)} with the same preconditions as semicircle_transition.
KernelPair semicircle_kernels(double s, double t, double x, double y);

/// Stationary [-2, 2]-valued process: semicircle marginal at y, and the
/// transition density from y_prev to y over a time lag delta > 0.
double stationary_u_marginal(double y);
double stationary_u_transition(double delta, double y_prev, double y);
KernelPair stationary_u_kernels(double delta, double y, double y_prev);

/// Chebyshev polynomials of the second kind on [-2, 2]: p_0 = 1, p_1 = x,
/// x p_n = p_{n+1} + p_{n-1}.
double chebyshev_p(int n, double x);

/// 1 / (1 - x z + z^2), the generating function sum_n z^n p_n(x) for |z| < 1.
double chebyshev_generating(double x, double z);

/// Partial sum sum_{n <= order} z^n p_n(x) by the recurrence.
double chebyshev_series(double x, double z, int order);

}  // namespace motzkin::limits
