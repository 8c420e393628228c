#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "motzkin/limits/quadrature.hpp"

namespace motzkin::limits {

struct LaplaceInput {
    /// c_0, ..., c_d (nonnegative).
    std::vector<double> cs;
    /// theta_1, ..., theta_d; empty means all zero.
    std::vector<double> thetas;
    /// 0 = x_0 < ... < x_d = 1.
    std::vector<double> grid;
    double sigma = 1.0;
    double a = 1.0;
    double c = 1.0;
};

struct LaplaceResult {
    /// Psi through the Biane-kernel integral.
    double psi_kernel = 0.0;
    /// Psi as E exp(-sqrt(2/(2+sigma)) sum c_k eta_{x_k}) under the
    /// tilted killed-Brownian law with parameters (a', c'); set when d <= 2.
    std::optional<double> psi_eta;
    /// exp(sigma/(2+sigma)^2 sum dx_k s_k^2), s_k = theta_k + ... + theta_d.
    double gaussian_factor = 1.0;
    double value() const { return psi_kernel * gaussian_factor; }
};

/// Limit of the joint Laplace transform of the rescaled altitudes and
/// horizontal-step fluctuations. Interior c_k = 0 collapse the Biane kernel
/// to a point mass and the adjacent variables are merged. Requires
/// c + c_0 > 0, a + c_d > 0 and at most 3 variables after merging.
LaplaceResult limit_laplace(const LaplaceInput& in, const QuadOptions& opt = {});

/// E f(eta_{x_0}, ..., eta_{x_d}) under eta_fdd_pdf(grid, ., a, c), by nested
/// quadrature (d <= 2). `extra_breaks` are added to every level, e.g. the
/// jump of an indicator.
double eta_expectation(const std::vector<double>& grid, const std::function<double(std::span<const double>)>& f,
                       double a, double c, const QuadOptions& opt = {}, const std::vector<double>& extra_breaks = {});

/// E exp(-lambda sum_k c_k eta_{x_k}) under eta_fdd_pdf(grid, ., a, c), by
/// nested quadrature over y_0..y_d (d <= 2).
double eta_laplace(const std::vector<double>& grid, const std::vector<double>& cs, double lambda, double a,
                   double c, const QuadOptions& opt = {});

}  // namespace motzkin::limits
