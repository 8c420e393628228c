#pragma once

#include <cstdint>
#include <vector>

#include "motzkin/harness/report.hpp"
#include "motzkin/limits/kernels.hpp"

namespace motzkin::harness {

enum class MinMode {
    /// Minimum over the mesh points: biased upward by O(mesh^{-1/2}).
    MeshPoints,
    /// Minimum of an exact Brownian-bridge draw on every mesh interval,
    /// which makes the (values, minimum) pair exact in law.
    Bridge,
};

struct OracleOptions {
    int mesh = 4096;
    MinMode min_mode = MinMode::Bridge;
    int workers = 1;
};

/// One weighted draw of eta^{(a,c)}: the increment process eta = sqrt(2) B,
/// B a variance-1/2 Brownian motion, under the density
/// sqrt(2)/((a+c) C_{a,c}) exp((a+c) min B - a B_1), which has unit mass.
struct OraclePath {
    /// eta at the requested grid points (rounded to the mesh).
    std::vector<double> eta;
    /// min of eta over [0, 1] under the selected MinMode.
    double eta_min = 0.0;
    /// the same minimum taken over mesh points only.
    double eta_min_mesh = 0.0;
    double weight = 0.0;
};

/// M weighted paths; deterministic in (seed, mesh) for any worker count.
/// Requires a + c > 0 and grid points in [0, 1].
std::vector<OraclePath> run_brownian_oracle(const limits::KernelParams& kp, const std::vector<double>& grid,
                                            std::size_t M, std::uint64_t seed, const OracleOptions& opt = {});

/// Oracle estimates (plain weighted means, so the normalizing constant is
/// tested too) of the mass and of E eta_1, E eta_1^2, E exp(-eta_1) and
/// E exp(-eta_{1/2}) against quadrature of the eta~ fdd density, plus
/// E exp(-eta_1) = C_{a+sqrt2, c-sqrt2} / C_{a,c} as a deterministic row.
ConvergenceReport run_oracle_check(const limits::KernelParams& kp, std::size_t M, std::uint64_t seed,
                                   const OracleOptions& opt = {}, double k = 3.0);

/// Mesh-halving study of the mesh-point minimum: for each mesh, the paired
/// mean of eta_min_mesh - eta_min (bridge) and the weighted mass, plus a
/// verdict that the bias decreases monotonically.
ConvergenceReport run_oracle_mesh_study(const limits::KernelParams& kp, const std::vector<int>& meshes,
                                        std::size_t M, std::uint64_t seed, int workers = 1);

}  // namespace motzkin::harness
