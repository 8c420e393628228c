#pragma once

#include <map>
#include <string>

#include "motzkin/harness/report.hpp"

namespace motzkin::harness {

struct IdentityTolerances {
    /// Relative tolerance handed to every quadrature.
    double quadrature = 1e-10;
    double partition = 1e-8;
    double asymptotic_1e3 = 0.05;
    double asymptotic_1e4 = 0.02;
    double norm_const = 1e-6;
    double gaussian = 1e-8;
    double markov = 1e-6;
    double duality = 1e-6;
    double laplace = 1e-5;
    double kernels = 1e-8;

    /// Defaults with the named fields replaced; an unknown name throws
    /// InvalidParams. An empty map gives the defaults.
    static IdentityTolerances with_overrides(const std::map<std::string, double>& overrides);
    nlohmann::json to_json() const;
};

/// One deterministic row per identity and parameter point of the built-in
/// grid; a row whose evaluation throws records the error code as its
/// verdict and the suite continues.
ConvergenceReport run_identity_suite(const IdentityTolerances& tol = {});

}  // namespace motzkin::harness
