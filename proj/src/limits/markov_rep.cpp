#include "motzkin/limits/markov_rep.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "motzkin/core/combinatorics.hpp"
#include "motzkin/core/errors.hpp"
#include "motzkin/core/partition.hpp"
#include "motzkin/limits/kernels.hpp"
#include "motzkin/limits/partition_integral.hpp"

namespace motzkin::limits {

namespace {

double step_factor(int step, std::size_t k, const MarkovRepInput& in, double sigma) {
    if (step > 0) return 1.0;
    if (step < 0) return in.t[k];
    return sigma * in.u[k];
}

// Unnormalized sum over paths of (rho0 z0)^{g_0} prod(step factors) (rho1 z1)^{g_L}.
double enumeration_side(const MarkovRepInput& in, const GeometricModel& m) {
    const int L = static_cast<int>(in.t.size());
    const double q0 = m.rho0 * in.z0;
    const double q1 = m.rho1 * in.z1;
    double total = 0.0;
    for (int i = 0; i < L; ++i) {
        for (int j = std::max(0, i - L); j <= i + L; ++j) {
            for (const MotzkinPath& p : enumerate_paths(L, i, j)) {
                double w = std::pow(q0, i) * std::pow(q1, j);
                for (int k = 1; k <= L; ++k) w *= step_factor(p[k] - p[k - 1], k - 1, in, m.sigma);
                total += w;
            }
        }
    }
    // starts g_0 >= L admit every step sequence:
    // sum_{g >= L} q0^g q1^{g + S} = q1^S (q0 q1)^L / (1 - q0 q1)
    const double q = q0 * q1;
    for (const auto& walk : enumerate_walks(L)) {
        double w = 1.0;
        for (int k = 1; k <= L; ++k) w *= step_factor(walk[k] - walk[k - 1], k - 1, in, m.sigma);
        const int S = walk.back();
        double block;
        if (q1 != 0.0) block = std::pow(q1, S) * std::pow(q, L) / (1.0 - q);
        else block = S == -L ? std::pow(q0, L) : 0.0;
        total += w * block;
    }
    return total;
}

// E over the semicircle martingale, in angles: X_t = 2 sqrt(t) cos(theta).
double process_side(const MarkovRepInput& in, const GeometricModel& m, const QuadOptions& opt) {
    const int L = static_cast<int>(in.t.size());
    const double b0 = m.rho0 * in.z0;
    const double b1 = m.rho1 * in.z1;
    const double t1 = in.t.front(), tL = in.t.back();
    std::vector<double> x(L);
    // level 0 is the outermost integral, over x at index L - 1
    const std::vector<QuadOptions> levels = nested_levels(opt, L);

    const auto payoff = [&]() {
        double value = 1.0;
        for (int k = 0; k < L; ++k) value *= m.sigma * in.u[k] + x[k];
        value /= 1.0 - b0 * x[0] + b0 * b0 * t1;
        value /= 1.0 - b1 * x[L - 1] / tL + b1 * b1 / tL;
        return value;
    };
    // the process starts at time t_L (index L-1) and moves to larger times
    std::function<double(int)> level = [&](int k) -> double {
        if (k < 0) return payoff();
        const double t = in.t[k];
        const double radius = 2.0 * std::sqrt(t);
        if (k + 1 < L && in.t[k + 1] == t) {
            x[k] = x[k + 1];
            return level(k - 1);
        }
        if (k == L - 1) {
            const auto integrand = [&](double th) {
                x[k] = radius * std::cos(th);
                const double s = std::sin(th);
                return 2.0 * s * s / std::numbers::pi * level(k - 1);
            };
            return integrate(integrand, 0.0, std::numbers::pi, levels[0]).value;
        }
        const double s = in.t[k + 1];
        const double prev = x[k + 1];
        const auto integrand = [&](double th) {
            const double y = radius * std::cos(th);
            x[k] = y;
            const double sn = std::sin(th);
            // p_{s,t}(prev, y) dy with sqrt(4t - y^2) dy = 4 t sin^2(theta) dtheta
            const double denom = t * prev * prev + s * y * y - (s + t) * prev * y + (t - s) * (t - s);
            return (t - s) * 4.0 * t * sn * sn / (2.0 * std::numbers::pi * denom) * level(k - 1);
        };
        const double peak = std::acos(std::clamp(prev / radius, -1.0, 1.0));
        const double breaks[] = {0.0, peak, std::numbers::pi};
        return integrate(integrand, std::span<const double>(breaks), levels[L - 1 - k]).value;
    };
    return level(L - 1);
}

}  // namespace

IdentityValue markov_rep_evaluate(const MarkovRepInput& in, const GeometricModel& model, const QuadOptions& opt) {
    model.validate();
    const std::size_t L = in.t.size();
    if (L < 1 || L > 3 || in.u.size() != L) fail(ErrorCode::InvalidParams, "need L in {1,2,3} and matching t, u");
    for (std::size_t k = 0; k < L; ++k) {
        if (!(in.t[k] > 0.0) || !(in.u[k] > 0.0)) fail(ErrorCode::InvalidParams, "t_k and u_k must be positive");
        if (k > 0 && in.t[k] > in.t[k - 1]) fail(ErrorCode::ConditionViolated, "t must be non-increasing");
    }
    if (!(model.rho0 * std::abs(in.z0) * std::sqrt(in.t.front()) < 1.0) ||
        !(model.rho1 * std::abs(in.z1) / std::sqrt(in.t.back()) < 1.0))
        fail(ErrorCode::ConditionViolated, "need rho0 |z0| sqrt(t_1) < 1 and rho1 |z1| / sqrt(t_L) < 1");

    IdentityValue out;
    out.lhs = enumeration_side(in, model) / partition_function(model, static_cast<int>(L), 1e-15).value();
    out.rhs = process_side(in, model, opt) / std::exp(log_partition_integral(model, static_cast<int>(L), opt));
    return out;
}

IdentityValue markov_rep_simplified(const std::vector<double>& taus, double z0, const GeometricModel& model,
                                    const QuadOptions& opt) {
    MarkovRepInput in;
    double product = 1.0;
    for (double tau : taus) {
        if (!(tau > 0.0)) fail(ErrorCode::InvalidParams, "tau_k must be positive");
        in.t.push_back(1.0 / (tau * tau));
        in.u.push_back(1.0 / tau);
        product *= tau;
    }
    in.z0 = z0;
    in.z1 = 1.0;
    IdentityValue out = markov_rep_evaluate(in, model, opt);
    out.lhs *= product;
    out.rhs *= product;
    return out;
}

}  // namespace motzkin::limits
