#include "motzkin/sampler/backward_table.hpp"

#include <algorithm>
#include <cmath>

#include "motzkin/core/errors.hpp"
#include "motzkin/core/numeric.hpp"
#include "motzkin/core/partition.hpp"

namespace motzkin::sampler {

BackwardTable BackwardTable::build(const GeometricModel& model, int L, double eps) {
    const PartitionResult part = partition_function(model, L, eps);

    BackwardTable table;
    table.model_ = model;
    table.length_ = L;
    table.n_max_ = part.n_max;
    const std::size_t width = static_cast<std::size_t>(part.n_max) + 1;
    table.rows_.assign(width * (L + 1), 0.0);
    table.log_scales_.assign(L + 1, 0.0);
    detail::backward_sweep(model, L, part.n_max, [&](int k, std::span<const double> row, double log_scale) {
        std::copy(row.begin(), row.end(), table.rows_.begin() + k * width);
        table.log_scales_[k] = log_scale;
    });

    const auto first = table.scaled(0);
    table.log_partition_ = detail::log_boundary_sum(model.rho0, first, table.log_scales_[0]);
    table.tail_eps_ = part.tail_bound;

    // start weights rho0^n h_0(n), shifted by their maximum before exponentiating
    const double log_rho0 = std::log(model.rho0);
    std::vector<double> logs(width, kNegInf);
    double top = kNegInf;
    for (std::size_t n = 0; n < width; ++n) {
        if (first[n] > 0.0) logs[n] = n * log_rho0 + std::log(first[n]);
        top = std::max(top, logs[n]);
    }
    table.start_cdf_.resize(width);
    CompensatedSum acc;
    for (std::size_t n = 0; n < width; ++n) {
        acc.add(logs[n] == kNegInf ? 0.0 : std::exp(logs[n] - top));
        table.start_cdf_[n] = acc.value();
    }
    const double total = table.start_cdf_.back();
    for (double& v : table.start_cdf_) v /= total;
    return table;
}

BackwardTable BackwardTable::build(const ModelParams& params, double eps) {
    return build(params.geometric(), params.length, eps);
}

std::span<const double> BackwardTable::scaled(int k) const {
    if (k < 0 || k > length_) fail(ErrorCode::InvalidParams, "row index out of range");
    const std::size_t width = static_cast<std::size_t>(n_max_) + 1;
    return {rows_.data() + k * width, width};
}

double BackwardTable::h(int k, int n) const { return std::exp(log_h(k, n)); }

double BackwardTable::log_h(int k, int n) const {
    if (n < 0 || n > n_max_) return kNegInf;
    const double v = scaled(k)[n];
    return v > 0.0 ? std::log(v) + log_scales_[k] : kNegInf;
}

}  // namespace motzkin::sampler
