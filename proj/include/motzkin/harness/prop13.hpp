#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "motzkin/core/params.hpp"
#include "motzkin/harness/report.hpp"

namespace motzkin::harness {

/// A path X on [0, 1] seen through the values the test functionals need.
struct PathView {
    double half = 0.0;  // X(1/2)
    double end = 0.0;   // X(1)
    double min = 0.0;   // min over [0, 1]
};

struct TestFunctional {
    std::string name;
    std::function<double(const PathView&)> phi;
};

/// Bounded continuous functionals: 1, exp(-X(1/2)^2), atan X(1),
/// max(min X, -2) and 1 / (1 + X(1)^2).
const std::vector<TestFunctional>& functional_library();

struct Prop13Spec {
    /// sigma, a, c; the length is taken from `Ls` and the form must be exponential.
    ModelParams params;
    std::vector<int> Ls{50, 100, 200, 400, 800};
    std::size_t M = 20000;
    std::uint64_t seed = 1;
    int workers = 1;
    double k = 3.0;
    int mesh = 4096;
    /// Lengths 1..rn_exact_max_L get an exact rational comparison of the two
    /// finite-L laws of the increment path.
    int rn_exact_max_L = 8;

    void validate() const;
    nlohmann::json to_json() const;
};

/// Three estimators of E Phi(xi_L / sqrt(L)), xi_L(k) = gamma_k - gamma_0:
/// the exact path sampler, the reweighted walk (self-normalized) and the
/// Brownian oracle for sqrt(2/(2+sigma)) eta^{(a',c')} (self-normalized).
/// direct vs reweighted is judged at every L; gaps to the limit are info
/// rows, judged through a median-of-3 smoothed trend over L.
ConvergenceReport run_prop13_experiment(const Prop13Spec& spec);

}  // namespace motzkin::harness
