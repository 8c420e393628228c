#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "motzkin/core/errors.hpp"

namespace motzkin::limits {

struct QuadOptions {
    double rel_tol = 1e-11;
    double abs_tol = 0.0;
    int max_intervals = 4000;
    // stop once every panel sits at its rounding floor; for inner levels of
    // nested integrals whose value may be tiny against the outer integral
    bool accept_roundoff = false;
    // relative noise of the integrand values, e.g. an inner tolerance
    double noise = 0.0;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

namespace detail {

struct Panel {
    double a, b, value, error, l1;
    bool operator<(const Panel& other) const { return error < other.error; }
};

inline std::string fmt_g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

template <class F>
Panel gk21(F& f, double a, double b) {
    Panel p{a, b, 0.0, 0.0, 0.0};
    p.value = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
    // the single-panel error comes back in [-1, 1] units; L1 is already scaled
    p.error *= 0.5 * (b - a);
    return p;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (21-point panels): the panel with the
/// largest error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol |I|). Each panel's estimate is floored at
/// 50 eps times its L1 mass, so tolerances below rounding are reported as
/// QuadratureNotConverged, without further bisection, rather than met by
/// accident.
template <class F>
QuadResult integrate(F f, std::span<const double> breaks, const QuadOptions& opt = {}) {
    if (breaks.size() < 2) fail(ErrorCode::InvalidParams, "quadrature needs at least two break points");
    const double floor_factor = std::max(50.0 * std::numeric_limits<double>::epsilon(), opt.noise);
    std::priority_queue<detail::Panel> heap;
    double value = 0.0, error = 0.0, floor = 0.0;
    // below ~1e-290 relative accuracy is lost to subnormal rounding
    const auto panel_floor = [&](const detail::Panel& p) { return std::max(floor_factor * p.l1, 1e-290); };
    const auto push = [&](detail::Panel p) {
        p.error = std::max(p.error, panel_floor(p));
        value += p.value;
        error += p.error;
        floor += panel_floor(p);
        heap.push(p);
    };
    const auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(value)); };
    const auto done = [&] {
        if (error <= target()) return true;
        return opt.accept_roundoff && error <= 2.0 * floor;
    };
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (breaks[i + 1] > breaks[i]) push(detail::gk21(f, breaks[i], breaks[i + 1]));
    int intervals = static_cast<int>(heap.size());
    while (!done()) {
        // bisection leaves the summed floor unchanged, so a floor above the
        // target can never be met
        const bool below_floor = !opt.accept_roundoff && floor > target();
        if (below_floor || intervals >= opt.max_intervals || heap.empty() || !std::isfinite(value))
            fail(ErrorCode::QuadratureNotConverged,
                 "error estimate " + detail::fmt_g(error) + " for value " + detail::fmt_g(value) + " after " + std::to_string(intervals) +
                     " panels");
        const detail::Panel worst = heap.top();
        heap.pop();
        value -= worst.value;
        error -= worst.error;
        floor -= panel_floor(worst);
        const double mid = 0.5 * (worst.a + worst.b);
        push(detail::gk21(f, worst.a, mid));
        push(detail::gk21(f, mid, worst.b));
        ++intervals;
    }
    // re-add to shed drift accumulated by the running subtractions
    value = 0.0;
    error = 0.0;
    for (; !heap.empty(); heap.pop()) {
        value += heap.top().value;
        error += heap.top().error;
    }
    return {value, error, intervals};
}

/// Options for the levels of a nested integral, outermost first. Each level
/// is 10x tighter than its parent down to 2e-14; inner levels stop at their
/// rounding floor and each level's floor carries the tolerance below it.
inline std::vector<QuadOptions> nested_levels(const QuadOptions& opt, int depth) {
    std::vector<QuadOptions> levels(depth, opt);
    for (int i = 1; i < depth; ++i) {
        levels[i].rel_tol = std::max(levels[i - 1].rel_tol * 0.1, 2e-14);
        levels[i].abs_tol = 0.0;
        levels[i].accept_roundoff = true;
    }
    for (int i = 0; i + 1 < depth; ++i) levels[i].noise = std::max(opt.noise, levels[i + 1].rel_tol);
    return levels;
}

template <class F>
QuadResult integrate(F f, double a, double b, const QuadOptions& opt = {}) {
    const double ends[] = {a, b};
    return integrate(std::move(f), std::span<const double>(ends), opt);
}

/// Integral over [a, inf) through x = a + (s / (1 - s))^2, which keeps
/// tails down to x^{-3/2} bounded in s. Points in `breaks` (all > a) are
/// mapped to s-space break points.
template <class F>
QuadResult integrate_half_line(F f, double a, std::span<const double> breaks = {}, const QuadOptions& opt = {}) {
    std::vector<double> s{0.0};
    for (double x : breaks) {
        if (!(x > a) || !std::isfinite(x)) continue;
        const double r = std::sqrt(x - a);
        s.push_back(r / (1.0 + r));
    }
    s.push_back(1.0);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto mapped = [&](double t) {
        const double gap = 1.0 - t;
        if (!(gap > 0.0)) return 0.0;
        const double r = t / gap;
        const double value = f(a + r * r);
        return value == 0.0 ? 0.0 : value * 2.0 * r / (gap * gap);
    };
    return integrate(mapped, std::span<const double>(s), opt);
}

template <class F>
double integrate_value(F f, double a, double b, const QuadOptions& opt = {}) {
    return integrate(std::move(f), a, b, opt).value;
}

}  // namespace motzkin::limits
