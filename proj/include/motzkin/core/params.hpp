#pragma once

#include <string>

#include "motzkin/core/weights.hpp"

namespace motzkin {

/// Constant step weights (a = c = 1, b = sigma) with geometric boundary
/// weights alpha_n = rho0^n, beta_n = rho1^n. Requires rho0 * rho1 < 1.
struct GeometricModel {
    double sigma = 1.0;
    double rho0 = 0.5;
    double rho1 = 0.5;

    /// Throws InvalidParams unless sigma > 0, rho0 > 0, rho1 > 0 and
    /// rho0 * rho1 < 1.
    void validate() const;

    WeightModel<double> weights() const {
        return WeightModel<double>::constant(sigma, rho0, rho1);
    }
};

enum class BoundaryForm { Linear, Exponential };

std::string to_string(BoundaryForm form);
BoundaryForm parse_boundary_form(const std::string& text);

/// Length-dependent boundary parameters. The linear form uses
/// rho0 = 1 - c/sqrt(L), rho1 = 1 - a/sqrt(L); the exponential form uses
/// rho0 = exp(-c/sqrt(L)), rho1 = exp(-a/sqrt(L)).
struct ModelParams {
    double sigma = 1.0;
    int length = 100;
    double a = 1.0;
    double c = 1.0;
    BoundaryForm form = BoundaryForm::Linear;

    double rho0() const;
    double rho1() const;

    /// Rescaled limit parameters a' = 2a/sqrt(2+sigma), c' = 2c/sqrt(2+sigma).
    double a_prime() const;
    double c_prime() const;

    /// Throws InvalidParams on sigma <= 0, L < 1, a + c <= 0, or when the
    /// induced rho's are not positive with product in (0, 1).
    void validate() const;

    /// Validated geometric model at this length.
    GeometricModel geometric() const;
};

}  // namespace motzkin
