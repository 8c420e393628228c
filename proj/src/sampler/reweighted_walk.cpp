#include <algorithm>
#include <cmath>

#include "motzkin/core/errors.hpp"
#include "motzkin/sampler/sampler.hpp"

namespace motzkin::sampler {

namespace {

void require_exponential(const ModelParams& params) {
    if (params.form != BoundaryForm::Exponential)
        fail(ErrorCode::InvalidParams, "the reweighted walk is defined for the exponential boundary form");
    if (!(params.sigma > 0.0)) fail(ErrorCode::InvalidParams, "sigma must be positive");
    if (!(params.a + params.c > 0.0)) fail(ErrorCode::InvalidParams, "a + c must be positive");
    if (params.length < 1) fail(ErrorCode::InvalidParams, "length must be at least 1");
}

}  // namespace

double importance_weight(std::span<const int> walk, const ModelParams& params) {
    const double scale = std::sqrt(static_cast<double>(params.length));
    const int lowest = *std::min_element(walk.begin(), walk.end());
    return std::exp(((params.a + params.c) * lowest - params.a * walk.back()) / scale);
}

WalkSample sample_reweighted_walk(const ModelParams& params, Rng& rng) {
    require_exponential(params);
    const double p = 1.0 / (2.0 + params.sigma);
    WalkSample out;
    out.walk.reserve(params.length + 1);
    out.walk.push_back(0);
    for (int k = 0; k < params.length; ++k) {
        const double u = rng.uniform();
        const int step = u < p ? 1 : (u < 1.0 - p ? 0 : -1);
        out.walk.push_back(out.walk.back() + step);
    }
    out.importance_weight = importance_weight(out.walk, params);
    return out;
}

WalkSample sample_reweighted_walk(const ModelParams& params, std::uint64_t seed) {
    Rng rng(seed);
    return sample_reweighted_walk(params, rng);
}

std::vector<WalkSample> sample_reweighted_walks(const ModelParams& params, std::size_t count,
                                                std::uint64_t seed, int workers) {
    require_exponential(params);
    std::vector<WalkSample> out(count);
    for_each_chunk(count, seed, workers, [&](std::size_t, Rng& rng, std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) out[i] = sample_reweighted_walk(params, rng);
    });
    return out;
}

}  // namespace motzkin::sampler
