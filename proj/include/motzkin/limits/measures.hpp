#pragma once

#include <functional>
#include <optional>

#include "motzkin/limits/quadrature.hpp"

namespace motzkin::limits {

/// A density on (-2, 2) plus an optional point mass.
struct MixedMeasure {
    std::function<double(double)> density;
    std::optional<double> atom_location;
    double atom_mass = 0.0;

    /// Integral of the density over (-2, 2), through x = 2 cos(theta).
    double continuous_mass(const QuadOptions& opt = {}) const;
    double total_mass(const QuadOptions& opt = {}) const { return continuous_mass(opt) + atom_mass; }
    /// Integral of f against the measure.
    double integrate(const std::function<double(double)>& f, const QuadOptions& opt = {}) const;
};

/// sqrt(4 - x^2) / (2 pi (1 - x rho + rho^2)) on (-2, 2), plus mass
/// 1 - rho^{-2} at rho + 1/rho when rho > 1. Requires rho > 0.
MixedMeasure mp_measure(double rho);

}  // namespace motzkin::limits
