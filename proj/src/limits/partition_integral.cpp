#include "motzkin/limits/partition_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "motzkin/core/errors.hpp"
#include "motzkin/core/numeric.hpp"
#include "motzkin/limits/special.hpp"

namespace motzkin::limits {

double log_partition_integral(const GeometricModel& model, int L, const QuadOptions& opt) {
    model.validate();
    if (L < 0) fail(ErrorCode::InvalidParams, "length must be nonnegative");
    double r0 = model.rho0, r1 = model.rho1;
    if (r0 >= 1.0) std::swap(r0, r1);
    const double sigma = model.sigma;
    const double top = 2.0 + sigma;

    // 1 - 2 rho cos(theta) + rho^2 = (1 - rho)^2 + 4 rho sin^2(theta/2)
    const auto boundary = [](double rho, double half_sin2) { return (1.0 - rho) * (1.0 - rho) + 4.0 * rho * half_sin2; };
    const auto integrand = [&](double th) {
        const double hs = std::sin(0.5 * th);
        const double half_sin2 = hs * hs;
        const double ratio = 1.0 - 4.0 * half_sin2 / top;  // (sigma + 2 cos theta) / (2 + sigma)
        double power;
        if (ratio > 0.0) power = std::exp(L * std::log1p(-4.0 * half_sin2 / top));
        else power = std::pow(ratio, L);
        const double s = std::sin(th);
        return 4.0 * s * s * power / (boundary(r0, half_sin2) * boundary(r1, half_sin2)) / (2.0 * std::numbers::pi);
    };

    std::vector<double> breaks{0.0};
    const double width = 1.0 / std::sqrt(std::max(1, L));
    for (int k = 1; k <= 40 && k * width < std::numbers::pi; ++k) breaks.push_back(k * width);
    // boundary factors peak near theta ~ |1 - rho|
    for (double rho : {r0, r1})
        if (std::abs(1.0 - rho) < 0.5) breaks.push_back(std::abs(1.0 - rho));
    breaks.push_back(std::numbers::pi);
    std::sort(breaks.begin(), breaks.end());

    QuadOptions local = opt;
    const double continuous = integrate(integrand, std::span<const double>(breaks), local).value;

    if (r1 <= 1.0) {
        if (!(continuous > 0.0)) fail(ErrorCode::QuadratureNotConverged, "partition integral is not positive");
        return L * std::log(top) + std::log(continuous);
    }
    const double location = r1 + 1.0 / r1;
    const double log_atom = std::log1p(-1.0 / (r1 * r1)) + L * std::log((location + sigma) / top) -
                            std::log((1.0 - r0 * r1) * (1.0 - r0 / r1));
    if (continuous > 0.0) return L * std::log(top) + log_add(log_atom, std::log(continuous));
    // odd L with sigma < 2: the continuous part can be negative
    const double total_scaled = 1.0 + continuous * std::exp(-log_atom);
    if (!(total_scaled > 0.0)) fail(ErrorCode::QuadratureNotConverged, "partition integral is not positive");
    return L * std::log(top) + log_atom + std::log(total_scaled);
}

double log_partition_integral(const ModelParams& params, const QuadOptions& opt) {
    return log_partition_integral(params.geometric(), params.length, opt);
}

double log_partition_asymptotic(const ModelParams& params) {
    params.validate();
    const double top = 2.0 + params.sigma;
    const double L = params.length;
    return L * std::log(top) + 0.5 * std::log(L) + 0.5 * std::log(2.0 / top) +
           std::log(norm_const_ac(params.a_prime(), params.c_prime()));
}

}  // namespace motzkin::limits
