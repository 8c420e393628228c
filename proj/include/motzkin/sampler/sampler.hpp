#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "motzkin/core/params.hpp"
#include "motzkin/core/path.hpp"
#include "motzkin/sampler/backward_table.hpp"
#include "motzkin/sampler/rng.hpp"

namespace motzkin::sampler {

/// Draws gamma_0 from alpha_n h_0(n), then each step from
/// {h_k(n+1), sigma h_k(n), h_k(n-1)}: an exact draw from Pr_L up to the
/// table's certified truncation error.
MotzkinPath sample_path(const BackwardTable& table, Rng& rng);
MotzkinPath sample_path(const BackwardTable& table, std::uint64_t seed);

/// M independent paths; path i is identical for any worker count.
std::vector<MotzkinPath> sample_paths(const BackwardTable& table, std::size_t count,
                                      std::uint64_t seed, int workers = 1);

/// A walk S_0 = 0..S_L with i.i.d. steps +1, 0, -1 of probabilities
/// 1/(2+sigma), sigma/(2+sigma), 1/(2+sigma), and its unnormalized
/// likelihood ratio against the Motzkin increment process.
struct WalkSample {
    std::vector<int> walk;
    double importance_weight = 1.0;
};

/// exp((a+c) min_k S_k / sqrt(L) - a S_L / sqrt(L)), i.e.
/// (rho0 rho1)^(-min S) rho1^(S_L) under the exponential boundary form.
double importance_weight(std::span<const int> walk, const ModelParams& params);

/// Requires the exponential boundary form, sigma > 0 and a + c > 0.
WalkSample sample_reweighted_walk(const ModelParams& params, Rng& rng);
WalkSample sample_reweighted_walk(const ModelParams& params, std::uint64_t seed);

std::vector<WalkSample> sample_reweighted_walks(const ModelParams& params, std::size_t count,
                                                std::uint64_t seed, int workers = 1);

}  // namespace motzkin::sampler
