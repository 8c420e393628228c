#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "motzkin/core/combinatorics.hpp"
#include "motzkin/core/errors.hpp"

namespace motzkin::sampler {

/// Law of the increment path (gamma_k - gamma_0)_{k=0..L}, keyed by the
/// increment sequence.
template <class T>
using IncrementLaw = std::map<std::vector<int>, T>;

namespace detail {

template <class T>
void normalize(IncrementLaw<T>& law) {
    T total(0);
    for (const auto& [_, p] : law) total += p;
    for (auto& [_, p] : law) p /= total;
}

template <class T>
int flats(const std::vector<int>& walk) {
    int count = 0;
    for (std::size_t k = 1; k < walk.size(); ++k) count += walk[k] == walk[k - 1];
    return count;
}

}  // namespace detail

/// Increment law under Pr_L for a = c = 1, b = sigma and geometric boundary
/// weights rho0^n, rho1^n, by path enumeration. Starts gamma_0 < L are
/// enumerated explicitly; from gamma_0 >= L every increment sequence stays
/// nonnegative, so that block is the geometric series
/// (rho0 rho1)^L / (1 - rho0 rho1) * rho1^{S_L} sigma^{#flat}.
template <class T>
IncrementLaw<T> increment_law_from_paths(int L, const T& sigma, const T& rho0, const T& rho1) {
    if (!(rho0 * rho1 < 1)) fail(ErrorCode::InvalidParams, "rho0 * rho1 must be below 1");
    IncrementLaw<T> law;
    const auto weights = WeightModel<T>::constant(sigma, rho0, rho1);
    for (int i = 0; i < L; ++i) {
        for (int j = std::max(0, i - L); j <= i + L; ++j) {
            for (const MotzkinPath& path : enumerate_paths(L, i, j)) {
                std::vector<int> inc(path.altitudes().begin(), path.altitudes().end());
                for (int& v : inc) v -= i;
                T weight = ipow(rho0, i) * ipow(rho1, j) * path_weight(path, weights);
                law[inc] += weight;
            }
        }
    }
    const T product = rho0 * rho1;
    const T free_block = ipow(product, L) / (T(1) - product);
    for (const auto& walk : enumerate_walks(L)) {
        // increments ending at S_L contribute rho1^{S_L}, possibly negative powers
        const int end = walk.back();
        T end_weight = end >= 0 ? ipow(rho1, end) : T(1) / ipow(rho1, -end);
        law[walk] += free_block * end_weight * ipow(sigma, detail::flats<T>(walk));
    }
    detail::normalize(law);
    return law;
}

/// The same law from the i.i.d. walk (steps +-1 w.p. 1/(2+sigma), 0 w.p.
/// sigma/(2+sigma)) reweighted by (rho0 rho1)^{-min S} rho1^{S_L} and
/// self-normalized.
template <class T>
IncrementLaw<T> increment_law_from_walk(int L, const T& sigma, const T& rho0, const T& rho1) {
    if (!(rho0 * rho1 < 1)) fail(ErrorCode::InvalidParams, "rho0 * rho1 must be below 1");
    IncrementLaw<T> law;
    const T denom = T(2) + sigma;
    for (const auto& walk : enumerate_walks(L)) {
        const int f = detail::flats<T>(walk);
        const T prob = ipow<T>(sigma / denom, f) * ipow<T>(T(1) / denom, L - f);
        const int lowest = *std::min_element(walk.begin(), walk.end());
        const int end = walk.back();
        T rn = ipow<T>(rho0 * rho1, -lowest);
        rn *= end >= 0 ? ipow(rho1, end) : T(1) / ipow(rho1, -end);
        law[walk] = prob * rn;
    }
    detail::normalize(law);
    return law;
}

}  // namespace motzkin::sampler
