#include "motzkin/core/params.hpp"

#include <cmath>

#include "motzkin/core/errors.hpp"

namespace motzkin {

void GeometricModel::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) fail(ErrorCode::InvalidParams, "sigma must be positive");
    if (!(rho0 > 0.0) || !(rho1 > 0.0) || !std::isfinite(rho0) || !std::isfinite(rho1))
        fail(ErrorCode::InvalidParams, "rho0 and rho1 must be positive");
    if (!(rho0 * rho1 < 1.0))
        fail(ErrorCode::InvalidParams, "rho0 * rho1 = " + std::to_string(rho0 * rho1) + " is not below 1");
}

std::string to_string(BoundaryForm form) {
    return form == BoundaryForm::Linear ? "linear" : "exponential";
}

BoundaryForm parse_boundary_form(const std::string& text) {
    if (text == "linear") return BoundaryForm::Linear;
    if (text == "exponential") return BoundaryForm::Exponential;
    fail(ErrorCode::InvalidParams, "unknown boundary form '" + text + "'");
}

double ModelParams::rho0() const {
    const double s = std::sqrt(static_cast<double>(length));
    return form == BoundaryForm::Linear ? 1.0 - c / s : std::exp(-c / s);
}

double ModelParams::rho1() const {
    const double s = std::sqrt(static_cast<double>(length));
    return form == BoundaryForm::Linear ? 1.0 - a / s : std::exp(-a / s);
}

double ModelParams::a_prime() const { return 2.0 * a / std::sqrt(2.0 + sigma); }
double ModelParams::c_prime() const { return 2.0 * c / std::sqrt(2.0 + sigma); }

void ModelParams::validate() const {
    if (!(sigma > 0.0)) fail(ErrorCode::InvalidParams, "sigma must be positive");
    if (length < 1) fail(ErrorCode::InvalidParams, "length must be at least 1");
    if (!(a + c > 0.0)) fail(ErrorCode::InvalidParams, "a + c must be positive");
    const double r0 = rho0();
    const double r1 = rho1();
    if (!(r0 > 0.0) || !(r1 > 0.0) || !(r0 * r1 < 1.0))
        fail(ErrorCode::InvalidParams,
             "L = " + std::to_string(length) + " too small: rho0 = " + std::to_string(r0) +
                 ", rho1 = " + std::to_string(r1) + " violate rho0, rho1 > 0, rho0*rho1 < 1");
}

GeometricModel ModelParams::geometric() const {
    validate();
    return GeometricModel{sigma, rho0(), rho1()};
}

}  // namespace motzkin
