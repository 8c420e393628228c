#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motzkin/core/params.hpp"
#include "motzkin/core/path.hpp"
#include "motzkin/harness/report.hpp"

namespace motzkin::harness {

enum class Statistic { Laplace, Moments, Cdf };

std::string to_string(Statistic s);
Statistic parse_statistic(const std::string& text);

struct ExperimentSpec {
    ModelParams params;
    std::size_t M = 0;
    /// Strictly increasing evaluation points in [0, 1]; must contain 0 and 1.
    std::vector<double> grid{0.0, 0.5, 1.0};
    std::vector<Statistic> statistics{Statistic::Laplace, Statistic::Moments};
    /// Laplace arguments for the rescaled altitude.
    std::vector<double> cs{0.25, 0.5, 1.0};
    /// Laplace arguments for the horizontal-step fluctuation.
    std::vector<double> thetas{0.5, 1.0};
    /// Points t of P(rescaled gamma_L <= t).
    std::vector<double> cdf_points{0.5, 1.0, 2.0};
    std::uint64_t seed = 1;
    int workers = 1;
    double k = 3.0;
    /// Added to k * stderr for rows against a quadrature limit.
    double quad_tol = 1e-4;
    double table_eps = 1e-12;

    /// Throws InvalidParams or InvalidGrid.
    void validate() const;
    nlohmann::json to_json() const;
};

/// Samples M paths from Pr_L and compares, on the grid,
///  - fractions of up, horizontal and down steps with 1/(2+s), s/(2+s), 1/(2+s);
///  - Laplace transforms of sqrt((2+s)/2L) gamma_{[Lx]} with E exp(-c eta~_x),
///    of (H_L(x) - s/(2+s) [Lx]) / sqrt(L) with the Gaussian factor, and
///    their joint transform at x = 1 with limit_laplace;
///  - means of the rescaled altitude (Moments) and P(rescaled gamma_L <= t) (Cdf).
/// Rows tagged "_exact_L" compare against the exact finite-L value instead
/// of the limit. Every sampled path is checked for U + H + D = L and
/// U - D = gamma_L - gamma_0; a violation throws std::logic_error.
/// M = 0 gives an empty report.
ConvergenceReport run_theorem1_experiment(const ExperimentSpec& spec);

/// Info rows for a batch of sampled paths: mean step fractions next to the
/// centering constants, and the mean start and end altitudes.
ConvergenceReport summarize_sample(const std::vector<MotzkinPath>& paths, double sigma);

}  // namespace motzkin::harness
