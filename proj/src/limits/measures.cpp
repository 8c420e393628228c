#include "motzkin/limits/measures.hpp"

#include <cmath>
#include <numbers>

#include "motzkin/core/errors.hpp"

namespace motzkin::limits {

double MixedMeasure::continuous_mass(const QuadOptions& opt) const {
    return integrate_value([&](double th) { return density(2.0 * std::cos(th)) * 2.0 * std::sin(th); }, 0.0,
                           std::numbers::pi, opt);
}

double MixedMeasure::integrate(const std::function<double(double)>& f, const QuadOptions& opt) const {
    const double continuous = integrate_value(
        [&](double th) {
            const double x = 2.0 * std::cos(th);
            return f(x) * density(x) * 2.0 * std::sin(th);
        },
        0.0, std::numbers::pi, opt);
    return continuous + (atom_location ? atom_mass * f(*atom_location) : 0.0);
}

MixedMeasure mp_measure(double rho) {
    if (!(rho > 0.0)) fail(ErrorCode::InvalidParams, "rho must be positive");
    MixedMeasure m;
    m.density = [rho](double x) {
        if (std::abs(x) >= 2.0) return 0.0;
        return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi * (1.0 - x * rho + rho * rho));
    };
    if (rho > 1.0) {
        m.atom_location = rho + 1.0 / rho;
        m.atom_mass = 1.0 - 1.0 / (rho * rho);
    }
    return m;
}

}  // namespace motzkin::limits
