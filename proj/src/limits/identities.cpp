#include "motzkin/limits/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "motzkin/core/errors.hpp"
#include "motzkin/limits/kernels.hpp"
#include "motzkin/limits/special.hpp"

namespace motzkin::limits {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double IdentityValue::abs_gap() const { return std::abs(lhs - rhs); }

double IdentityValue::rel_gap() const {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0.0 ? abs_gap() / scale : 0.0;
}

IdentityValue gaussian_integral_identity(double a, double c, double tau, const QuadOptions& opt) {
    if (!(a + c > 0.0)) fail(ErrorCode::InvalidParams, "identity needs a + c > 0");
    if (!(tau > 0.0)) fail(ErrorCode::InvalidParams, "identity needs tau > 0");
    const double a2 = a * a, c2 = c * c;
    const auto integrand = [&](double v) {
        const double v2 = v * v;
        return std::exp(-0.5 * tau * v2) * 4.0 * v2 / ((a2 + v2) * (c2 + v2)) / (2.0 * kPi);
    };
    const double breaks[] = {std::abs(a), std::abs(c), 1.0 / std::sqrt(tau), 4.0 / std::sqrt(tau)};
    IdentityValue out;
    out.lhs = integrate_half_line(integrand, 0.0, breaks, opt).value;
    const double scale = std::sqrt(2.0 * tau);
    out.rhs = std::sqrt(tau) * norm_const_ac(std::abs(a) * scale, std::abs(c) * scale);
    return out;
}

namespace detail {

double biane_chain_integral(double tau, const std::vector<double>& weights, const std::vector<double>& times,
                            double F, double G, const QuadOptions& opt) {
    const std::size_t n = weights.size();
    if (n == 0 || times.size() + 1 != n) fail(ErrorCode::InvalidParams, "chain needs weights.size() == times.size() + 1");
    const double F2 = F * F, G2 = G * G;
    const std::vector<QuadOptions> levels = nested_levels(opt, static_cast<int>(n));

    // tail(k, u_prev): integral over v_k, ..., v_n given u_{k-1} = u_prev
    std::function<double(std::size_t, double)> tail = [&](std::size_t k, double u_prev) -> double {
        const double t = times[k - 1];
        const auto integrand = [&](double v) {
            const double u = v * v;
            double value = std::exp(-tau * weights[k] * u) * biane_kernel(t, u_prev, u) * 2.0 * v;
            if (value == 0.0) return 0.0;
            value *= (k + 1 == n) ? 1.0 / (G2 + u) : tail(k + 1, u);
            return value;
        };
        const double centre = std::sqrt(u_prev);
        const double spread = t * t / std::max(centre, t) + t;
        const double breaks[] = {std::max(0.0, centre - spread), centre, centre + spread, centre + 4 * spread};
        return integrate_half_line(integrand, 0.0, breaks, levels[k]).value;
    };

    const auto outer = [&](double v) {
        const double u = v * v;
        // f(u) du = sqrt(u)/(F^2 + u) 2v dv
        double value = std::exp(-tau * weights[0] * u) * 2.0 * u / (F2 + u);
        if (value == 0.0) return 0.0;
        value *= n == 1 ? 1.0 / (G2 + u) : tail(1, u);
        return value;
    };
    const double scale = 1.0 / std::sqrt(tau * weights[0]);
    const double breaks[] = {std::abs(F), std::abs(G), scale, 4.0 * scale};
    return integrate_half_line(outer, 0.0, breaks, levels[0]).value;
}

double sine_envelope(double F, double beta) { return 0.5 * std::log1p(1.0 / (beta * F * F)); }

double sine_transform(double F, double beta, double z, const QuadOptions& opt) {
    if (z == 0.0) return 0.0;
    // exp(-beta u^2) < 1e-18 beyond the cutoff
    const double cutoff = std::sqrt(42.0 / beta);
    const double F2 = F * F;
    const auto integrand = [&](double u) { return u * std::sin(u * z) * std::exp(-beta * u * u) / (F2 + u * u); };
    const double half_period = kPi / std::abs(z);
    const int pieces = std::clamp(static_cast<int>(cutoff / half_period) + 1, 4, 100000);
    std::vector<double> breaks(pieces + 1);
    for (int i = 0; i <= pieces; ++i) breaks[i] = cutoff * i / pieces;
    QuadOptions local = opt;
    local.abs_tol = std::max(opt.abs_tol, opt.rel_tol * sine_envelope(F, beta));
    local.accept_roundoff = true;
    local.max_intervals = std::max(opt.max_intervals, 4 * pieces);
    return integrate(integrand, std::span<const double>(breaks), local).value;
}

}  // namespace detail

IdentityValue duality_evaluate(const DualityInput& in, const QuadOptions& opt) {
    const std::size_t d = in.grid.size() - 1;
    if (in.grid.size() < 3 || in.grid.size() > 4) fail(ErrorCode::InvalidParams, "duality is evaluated for d = 2 or 3");
    if (in.cs.size() != d - 1) fail(ErrorCode::InvalidParams, "need c_1..c_{d-1}");
    if (!(in.tau > 0.0)) fail(ErrorCode::InvalidParams, "tau must be positive");
    if (in.grid.front() != 0.0 || in.grid.back() > 1.0) fail(ErrorCode::InvalidGrid, "grid must run from 0 into (0, 1]");
    for (std::size_t k = 1; k <= d; ++k)
        if (!(in.grid[k] > in.grid[k - 1])) fail(ErrorCode::InvalidGrid, "grid must be strictly increasing");
    for (double ck : in.cs)
        if (!(ck > 0.0)) fail(ErrorCode::InvalidParams, "c_k must be positive");
    const double F = in.c + in.c0;
    const double G = in.a + in.cd;
    if (!(F > 0.0) || !(G > 0.0)) fail(ErrorCode::InvalidParams, "need c + c0 > 0 and a + cd > 0");

    std::vector<double> dx(d);
    for (std::size_t k = 0; k < d; ++k) dx[k] = in.grid[k + 1] - in.grid[k];

    IdentityValue out;
    out.lhs = detail::biane_chain_integral(in.tau, dx, in.cs, F, G, opt);

    const std::vector<QuadOptions> levels = nested_levels(opt, static_cast<int>(d));
    const QuadOptions& deepest = levels.back();
    const auto fhat = [&](double z) { return detail::sine_transform(F, in.tau * dx.front(), z, deepest); };
    const auto ghat = [&](double z) { return detail::sine_transform(G, in.tau * dx.back(), z, deepest); };
    // |fhat|, |ghat| are bounded, so exp(-c z) < 1e-18 past these ends
    const auto range = [](double c) {
        const double end = 42.0 / c;
        return std::vector<double>{0.0, end / 64, end / 16, end / 4, end};
    };
    const std::vector<double> breaks = range(in.cs.front());
    if (d == 2) {
        const auto integrand = [&](double z) { return std::exp(-in.cs[0] * z) * fhat(z) * ghat(z); };
        out.rhs = 4.0 / kPi * integrate(integrand, std::span<const double>(breaks), levels[0]).value;
    } else {
        const double z2_end = 42.0 / in.cs[1];
        // ghat carries absolute noise near deepest.rel_tol times its envelope;
        // the kernel factor has mass at most one
        QuadOptions middle = levels[1];
        middle.abs_tol = 10.0 * deepest.rel_tol * detail::sine_envelope(G, in.tau * dx.back());
        const double t = 2.0 * in.tau * dx[1];
        const auto integrand = [&](double z1) {
            const double head = std::exp(-in.cs[0] * z1) * fhat(z1);
            if (head == 0.0) return 0.0;
            const auto inner_integrand = [&](double z2) {
                return std::exp(-in.cs[1] * z2) * killed_bm_kernel(t, z1, z2) * ghat(z2);
            };
            const double sd = std::sqrt(t);
            std::vector<double> inner_breaks{0.0, z2_end};
            for (double m : {-10.0, -6.0, -3.0, 0.0, 3.0, 6.0, 10.0})
                if (const double x = z1 + m * sd; x > 0.0 && x < z2_end) inner_breaks.push_back(x);
            std::sort(inner_breaks.begin(), inner_breaks.end());
            return head * integrate(inner_integrand, std::span<const double>(inner_breaks), middle).value;
        };
        out.rhs = 4.0 / kPi * integrate(integrand, std::span<const double>(breaks), levels[0]).value;
    }
    return out;
}

}  // namespace motzkin::limits
