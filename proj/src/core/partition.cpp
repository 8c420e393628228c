#include "motzkin/core/partition.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "motzkin/core/errors.hpp"
#include "motzkin/core/numeric.hpp"

namespace motzkin {

namespace {

// log sum_{i=lo}^{hi} q^i for q >= 0.
double log_geometric_block(double q, long lo, long hi) {
    if (lo > hi) return kNegInf;
    if (q == 0.0) return lo == 0 ? 0.0 : kNegInf;
    if (q == 1.0) return std::log(static_cast<double>(hi - lo + 1));
    const double lq = std::log(q);
    const double n = static_cast<double>(hi - lo + 1);
    // (1 - q^n) / (1 - q), both factors of the same sign.
    return static_cast<double>(lo) * lq + std::log(-std::expm1(n * lq)) - std::log(-std::expm1(lq));
}

}  // namespace

double log_truncation_tail(int L, int top, double log_row_bound, double q0, double q1) {
    if (!(q0 >= 0.0) || !(q1 >= 0.0) || !(q0 * q1 < 1.0))
        fail(ErrorCode::InvalidParams, "tail bound needs q0, q1 >= 0 and q0*q1 < 1");
    const long m = std::max(0L, static_cast<long>(top) - L);
    double log_sum;
    if (q1 >= 1.0) {
        // max over reachable end altitudes is q1^(i+L)
        if (q0 == 0.0) log_sum = m == 0 ? L * std::log(q1) : kNegInf;
        else
            log_sum = L * std::log(q1) + static_cast<double>(m) * std::log(q0 * q1) -
                      std::log1p(-q0 * q1);
    } else if (q1 == 0.0) {
        // only j = 0 carries boundary weight; reachable iff i <= L
        log_sum = log_geometric_block(q0, m, L);
    } else {
        // i < L can end at altitude 0 (weight <= 1); i >= L ends no lower than i - L
        const double near = log_geometric_block(q0, m, static_cast<long>(L) - 1);
        const long far_start = std::max(m, static_cast<long>(L));
        double far = kNegInf;
        if (q0 > 0.0)
            far = -L * std::log(q1) + static_cast<double>(far_start) * std::log(q0 * q1) -
                  std::log1p(-q0 * q1);
        else if (far_start == 0)
            far = 0.0;
        log_sum = log_add(near, far);
    }
    if (log_sum == kNegInf) return kNegInf;
    return log_row_bound + log_sum;
}

namespace detail {

void backward_sweep(const GeometricModel& model, int L, int n_max,
                    const std::function<void(int, std::span<const double>, double)>& visit) {
    const double log_rho1 = std::log(model.rho1);
    std::vector<double> row(n_max + 1);
    const double top_log = std::max(0.0, n_max * log_rho1);
    for (int n = 0; n <= n_max; ++n) row[n] = std::exp(n * log_rho1 - top_log);
    double log_scale = top_log;
    visit(L, row, log_scale);

    std::vector<double> next(n_max + 1);
    for (int k = L; k > 0; --k) {
        double peak = 0.0;
        for (int n = 0; n <= n_max; ++n) {
            double v = model.sigma * row[n];
            if (n < n_max) v += row[n + 1];
            if (n > 0) v += row[n - 1];
            next[n] = v;
            peak = std::max(peak, v);
        }
        for (double& v : next) v /= peak;
        log_scale += std::log(peak);
        std::swap(row, next);
        visit(k - 1, row, log_scale);
    }
}

double log_boundary_sum(double rho0, std::span<const double> row, double log_scale) {
    const double log_rho0 = std::log(rho0);
    double top = kNegInf;
    for (std::size_t n = 0; n < row.size(); ++n)
        if (row[n] > 0.0) top = std::max(top, n * log_rho0 + std::log(row[n]));
    if (top == kNegInf) return kNegInf;
    CompensatedSum sum;
    for (std::size_t n = 0; n < row.size(); ++n)
        if (row[n] > 0.0) sum.add(std::exp(n * log_rho0 + std::log(row[n]) - top));
    return top + std::log(sum.value()) + log_scale;
}

}  // namespace detail

double log_partition_truncated(const GeometricModel& model, int L, int n_max) {
    model.validate();
    if (L < 0 || n_max < 0) fail(ErrorCode::InvalidParams, "negative length or truncation");
    double result = kNegInf;
    detail::backward_sweep(model, L, n_max, [&](int k, std::span<const double> row, double log_scale) {
        if (k == 0) result = detail::log_boundary_sum(model.rho0, row, log_scale);
    });
    return result;
}

int truncation_altitude(const GeometricModel& model, int L, double eps, double log_lower_bound) {
    const double log_rows = L * std::log(2.0 + model.sigma);
    const double target = std::log(eps) + log_lower_bound;
    auto ok = [&](long top) {
        return log_truncation_tail(L, static_cast<int>(top), log_rows, model.rho0, model.rho1) <= target;
    };
    long hi = std::max(1, L);
    while (!ok(hi)) {
        hi *= 2;
        if (hi > 100'000'000L)
            fail(ErrorCode::TruncationInsufficient, "altitude cap needed for eps exceeds 1e8");
    }
    long lo = 0;
    while (lo < hi) {
        const long mid = (lo + hi) / 2;
        if (ok(mid)) hi = mid;
        else lo = mid + 1;
    }
    // top is the first excluded altitude
    return static_cast<int>(std::max(0L, hi - 1));
}

PartitionResult partition_function(const GeometricModel& model, int L, double eps) {
    model.validate();
    if (L < 0) fail(ErrorCode::InvalidParams, "length must be nonnegative");
    if (!(eps > 0.0)) fail(ErrorCode::InvalidParams, "eps must be positive");
    const double log_rows = L * std::log(2.0 + model.sigma);

    const int probe = L + 16;
    const double lower = log_partition_truncated(model, L, probe);
    int n_max = truncation_altitude(model, L, eps, lower);
    double value = n_max == probe ? lower : log_partition_truncated(model, L, n_max);
    double log_tail = log_truncation_tail(L, n_max + 1, log_rows, model.rho0, model.rho1);
    while (log_tail - value > std::log(eps)) {
        n_max += std::max(1, n_max / 8);
        value = log_partition_truncated(model, L, n_max);
        log_tail = log_truncation_tail(L, n_max + 1, log_rows, model.rho0, model.rho1);
    }
    return PartitionResult{value, std::exp(log_tail - value), n_max};
}

PartitionResult partition_function(const ModelParams& params, double eps) {
    return partition_function(params.geometric(), params.length, eps);
}

}  // namespace motzkin
