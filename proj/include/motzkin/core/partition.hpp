#pragma once

#include <cmath>
#include <functional>
#include <span>

#include "motzkin/core/params.hpp"

namespace motzkin {

/// Partition function of the geometric model, carried in log space.
struct PartitionResult {
    double log_value = 0.0;
    /// Certified bound on (true - computed) / computed.
    double tail_bound = 0.0;
    /// Highest altitude kept by the truncated sweep.
    int n_max = 0;

    double value() const { return std::exp(log_value); }
};

/// Log of an upper bound on the boundary-and-edge weight carried by paths
/// that reach altitude >= top. Such paths start at gamma_0 >= top - L;
/// alpha_n <= q0^n, beta_n <= q1^n, and every length-L path from a fixed
/// start has total edge weight at most exp(log_row_bound). Requires
/// q0 * q1 < 1. Returns -inf when the bound is exactly zero.
double log_truncation_tail(int L, int top, double log_row_bound, double q0, double q1);

/// Sum over n <= n_max of alpha_n h_0(n) where h is the backward table
/// truncated at n_max (h_k(n_max + 1) = 0). Nondecreasing in n_max.
double log_partition_truncated(const GeometricModel& model, int L, int n_max);

/// C_L = sum_{i,j} alpha_i W_{i,j}^{(L)} beta_j with relative truncation
/// error <= eps. Throws InvalidParams when rho0 * rho1 >= 1.
PartitionResult partition_function(const GeometricModel& model, int L, double eps = 1e-13);
PartitionResult partition_function(const ModelParams& params, double eps = 1e-13);

/// Smallest n_max whose certified relative tail is <= eps, given a lower
/// bound on log C_L.
int truncation_altitude(const GeometricModel& model, int L, double eps, double log_lower_bound);

namespace detail {

/// Backward sweep h_L(n) = rho1^n, h_{k-1}(n) = h_k(n+1) + sigma h_k(n) +
/// 1{n>0} h_k(n-1) on 0..n_max. Each visited row is stored rescaled to a
/// maximum of one: h_k(n) = row[n] * exp(log_scale). Rows are visited from
/// k = L down to k = 0.
void backward_sweep(const GeometricModel& model, int L, int n_max,
                    const std::function<void(int k, std::span<const double> row, double log_scale)>& visit);

/// log(sum_n rho0^n row[n]) + log_scale with compensated summation.
double log_boundary_sum(double rho0, std::span<const double> row, double log_scale);

}  // namespace detail

}  // namespace motzkin
