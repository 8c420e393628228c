#include "motzkin/core/matrix_ansatz.hpp"

#include <cmath>
#include <string>

#include "motzkin/core/errors.hpp"
#include "motzkin/core/numeric.hpp"
#include "motzkin/core/partition.hpp"

namespace motzkin {

AnsatzFactors AnsatzFactors::ones(int L) {
    AnsatzFactors f;
    f.s.assign(L, 1.0);
    f.t.assign(L, 1.0);
    f.u.assign(L, 1.0);
    return f;
}

namespace {

void check_factors(int L, const AnsatzFactors& f) {
    if (L < 0) fail(ErrorCode::InvalidParams, "length must be nonnegative");
    if (static_cast<int>(f.s.size()) != L || static_cast<int>(f.t.size()) != L ||
        static_cast<int>(f.u.size()) != L)
        fail(ErrorCode::InvalidParams, "s, t, u must each have L entries");
    for (int k = 0; k < L; ++k)
        if (!(f.s[k] > 0.0 && f.t[k] > 0.0 && f.u[k] > 0.0))
            fail(ErrorCode::InvalidParams, "s, t, u must be positive");
    if (!(f.z0 > 0.0 && f.z0 <= 1.0 && f.z1 > 0.0 && f.z1 <= 1.0))
        fail(ErrorCode::InvalidParams, "z0, z1 must lie in (0, 1]");
}

double log_tail(int L, int N, const AnsatzFactors& f, const TailBounds& b) {
    double log_rows = 0.0;
    for (int k = 0; k < L; ++k)
        log_rows += std::log(f.s[k] * b.edge_a + f.u[k] * b.edge_b + f.t[k] * b.edge_c);
    // indices 0..N-1 are kept, so altitude N is the first one dropped
    return log_truncation_tail(L, N, log_rows, b.alpha_rate * f.z0, b.beta_rate * f.z1);
}

}  // namespace

AnsatzValue matrix_ansatz_eval(int L, const AnsatzFactors& factors, const WeightModel<double>& w,
                               int N, double tol) {
    check_factors(L, factors);
    if (N < 1) fail(ErrorCode::InvalidParams, "truncation order must be positive");
    if (!w.bounds) fail(ErrorCode::TruncationInsufficient, "weight model carries no tail bounds");

    std::vector<double> v(N), next(N);
    double zpow = 1.0;
    for (int n = 0; n < N; ++n, zpow *= factors.z1) v[n] = w.beta(n) * zpow;

    for (int k = L - 1; k >= 0; --k) {
        const double s = factors.s[k], t = factors.t[k], u = factors.u[k];
        for (int n = 0; n < N; ++n) {
            // (A v)_n = a_n v_{n+1}, (B v)_n = b_n v_n, (C v)_n = c_n v_{n-1}
            double x = u * w.b(n) * v[n];
            if (n + 1 < N) x += s * w.a(n) * v[n + 1];
            if (n > 0) x += t * w.c(n) * v[n - 1];
            next[n] = x;
        }
        std::swap(v, next);
    }

    CompensatedSum sum;
    zpow = 1.0;
    for (int n = 0; n < N; ++n, zpow *= factors.z0) sum.add(w.alpha(n) * zpow * v[n]);
    AnsatzValue out{sum.value(), 0.0};
    out.tail_bound = std::exp(log_tail(L, N, factors, *w.bounds));
    if (out.tail_bound > tol * std::abs(out.value))
        fail(ErrorCode::TruncationInsufficient,
             "N = " + std::to_string(N) + " leaves tail bound " + std::to_string(out.tail_bound) +
                 " above tolerance");
    return out;
}

int matrix_ansatz_order(int L, const AnsatzFactors& factors, const WeightModel<double>& w, double tol) {
    check_factors(L, factors);
    if (!w.bounds) fail(ErrorCode::TruncationInsufficient, "weight model carries no tail bounds");
    int N = std::max(1, L + 1);
    for (;;) {
        try {
            matrix_ansatz_eval(L, factors, w, N, tol);
            return N;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TruncationInsufficient) throw;
        }
        if (N > 10'000'000) fail(ErrorCode::TruncationInsufficient, "no feasible truncation order");
        N += std::max(8, N / 4);
    }
}

}  // namespace motzkin
