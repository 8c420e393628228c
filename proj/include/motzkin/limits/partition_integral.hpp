#pragma once

#include "motzkin/core/params.hpp"
#include "motzkin/limits/quadrature.hpp"

namespace motzkin::limits {

/// log C_L from the spectral integral of (x + sigma)^L / (1 - x rho0 + rho0^2)
/// against mp_measure(rho1). The continuous part is integrated in theta
/// (x = 2 cos theta) with (2 + sigma)^L factored out and break points
/// spaced 1/sqrt(L) near theta = 0; the atom enters in log space. Requires
/// rho0, rho1 > 0 and rho0 rho1 < 1; when rho0 >= 1 the symmetric roles of
/// rho0 and rho1 are swapped.
double log_partition_integral(const GeometricModel& model, int L, const QuadOptions& opt = {});
double log_partition_integral(const ModelParams& params, const QuadOptions& opt = {});

/// log of (2 + sigma)^L sqrt(L) sqrt(2 / (2 + sigma)) C_{a',c'}.
double log_partition_asymptotic(const ModelParams& params);

}  // namespace motzkin::limits
