#pragma once

#include <vector>

#include "motzkin/core/params.hpp"
#include "motzkin/limits/identities.hpp"
#include "motzkin/limits/quadrature.hpp"

namespace motzkin::limits {

struct MarkovRepInput {
    /// t_1 >= ... >= t_L > 0.
    std::vector<double> t;
    /// u_1, ..., u_L > 0.
    std::vector<double> u;
    double z0 = 1.0;
    double z1 = 1.0;
};

/// lhs: E_L[z0^{g_0} prod t_k^{down_k} u_k^{flat_k} z1^{g_L}] by path
/// enumeration (starts below L explicitly, the rest as a geometric series);
/// rhs: E[prod (sigma u_k + X_{t_k}) / boundary factors] over the semicircle
/// martingale by L-fold quadrature, divided by the spectral partition
/// integral. L in {1, 2, 3}; throws ConditionViolated unless
/// rho0 |z0| sqrt(t_1) < 1 and rho1 |z1| / sqrt(t_L) < 1.
IdentityValue markov_rep_evaluate(const MarkovRepInput& in, const GeometricModel& model, const QuadOptions& opt = {});

/// The one-parameter form: t_k = 1/tau_k^2, u_k = 1/tau_k, z1 = 1, both
/// sides multiplied by prod tau_k, so lhs = E_L[z0^{g_0} prod tau_k^{g_k - g_{k-1}}].
/// tau_1 <= ... <= tau_L.
IdentityValue markov_rep_simplified(const std::vector<double>& taus, double z0, const GeometricModel& model,
                                    const QuadOptions& opt = {});

}  // namespace motzkin::limits
