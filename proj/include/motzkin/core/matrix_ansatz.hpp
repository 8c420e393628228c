#pragma once

#include <vector>

#include "motzkin/core/weights.hpp"

namespace motzkin {

/// Per-step multipliers of the up (s), down (t) and flat (u) operators and
/// the boundary arguments z0, z1 of <W_alpha(z0)| and |V_beta(z1)>.
struct AnsatzFactors {
    std::vector<double> s;
    std::vector<double> t;
    std::vector<double> u;
    double z0 = 1.0;
    double z1 = 1.0;

    /// s = t = u = 1 for all L steps, z0 = z1 = 1.
    static AnsatzFactors ones(int L);
};

struct AnsatzValue {
    double value = 0.0;
    /// Certified bound on the mass dropped by the N x N truncation.
    double tail_bound = 0.0;
};

/// <W_alpha(z0)| prod_k (s_k A + t_k C + u_k B) |V_beta(z1)> with the
/// tridiagonal operators truncated to N x N, applied right to left as
/// banded matrix-vector products. Requires w.bounds for the tail
/// certificate; throws TruncationInsufficient when tail_bound > tol * value.
AnsatzValue matrix_ansatz_eval(int L, const AnsatzFactors& factors, const WeightModel<double>& w,
                               int N, double tol);

/// A truncation order (grown geometrically from L + 1) at which
/// matrix_ansatz_eval certifies relative error tol.
int matrix_ansatz_order(int L, const AnsatzFactors& factors, const WeightModel<double>& w, double tol);

}  // namespace motzkin
