#pragma once

#include <span>
#include <vector>

#include "motzkin/core/params.hpp"

namespace motzkin::sampler {

/// Partial partition weights h_k(n) = sum_j W_{n,j}^{(L-k)} beta_j of the
/// geometric model, for k = 0..L and altitudes n = 0..n_max. Altitudes above
/// n_max are treated as carrying zero weight; tail_eps certifies the
/// relative mass lost by that truncation. Immutable after build() and safe
/// to share across threads.
class BackwardTable {
public:
    static BackwardTable build(const GeometricModel& model, int L, double eps = 1e-12);
    static BackwardTable build(const ModelParams& params, double eps = 1e-12);

    int length() const noexcept { return length_; }
    int n_max() const noexcept { return n_max_; }
    double tail_eps() const noexcept { return tail_eps_; }
    const GeometricModel& model() const noexcept { return model_; }

    /// Row k rescaled so its largest entry is 1; h_k(n) = scaled(k)[n] * exp(log_scale(k)).
    std::span<const double> scaled(int k) const;
    double log_scale(int k) const { return log_scales_[k]; }

    double h(int k, int n) const;
    double log_h(int k, int n) const;

    /// log of sum_n alpha_n h_0(n), the truncated partition function.
    double log_partition() const noexcept { return log_partition_; }

    /// Cumulative distribution of gamma_0, proportional to alpha_n h_0(n).
    std::span<const double> start_cdf() const noexcept { return start_cdf_; }

private:
    BackwardTable() = default;

    GeometricModel model_;
    int length_ = 0;
    int n_max_ = 0;
    double tail_eps_ = 0.0;
    double log_partition_ = 0.0;
    std::vector<double> rows_;
    std::vector<double> log_scales_;
    std::vector<double> start_cdf_;
};

}  // namespace motzkin::sampler
