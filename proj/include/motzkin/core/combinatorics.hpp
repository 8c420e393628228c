#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "motzkin/core/errors.hpp"
#include "motzkin/core/path.hpp"
#include "motzkin/core/weights.hpp"

namespace motzkin {

inline constexpr int kDefaultEnumerationCap = 12;

/// All paths of length L from altitude i to altitude j, in ascending
/// lexicographic order of their altitude sequences. Throws CapExceeded when
/// L > cap.
std::vector<MotzkinPath> enumerate_paths(int L, int i, int j, int cap = kDefaultEnumerationCap);

/// Every step sequence in {-1,0,+1}^L as a walk S_0 = 0, ..., S_L (3^L of
/// them, lexicographic in the steps). Throws CapExceeded when L > cap.
std::vector<std::vector<int>> enumerate_walks(int L, int cap = kDefaultEnumerationCap);

/// Product of edge weights along the path; boundary weights are not included.
template <class T>
T path_weight(const MotzkinPath& path, const WeightModel<T>& w) {
    T weight(1);
    for (std::size_t k = 1; k <= path.length(); ++k) {
        const int from = path[k - 1];
        switch (path.step(k)) {
            case Step::Up: weight *= w.a(from); break;
            case Step::Flat: weight *= w.b(from); break;
            case Step::Down: weight *= w.c(from); break;
        }
    }
    return weight;
}

/// Total edge weight W_{i,j}^{(L)} of paths from i to j, by a forward sweep
/// over altitudes 0..i+L. Exact when T is Rational.
template <class T>
T transfer_count(int L, int i, int j, const WeightModel<T>& w) {
    if (L < 0 || i < 0 || j < 0) fail(ErrorCode::InvalidParams, "negative length or altitude");
    if (std::abs(i - j) > L) return T(0);
    const int top = i + L;
    std::vector<T> current(top + 2, T(0));
    std::vector<T> next(top + 2, T(0));
    current[i] = T(1);
    for (int k = 0; k < L; ++k) {
        std::fill(next.begin(), next.end(), T(0));
        const int reach = std::min(top, i + k);
        for (int n = std::max(0, i - k); n <= reach; ++n) {
            if (current[n] == 0) continue;
            next[n + 1] += w.a(n) * current[n];
            next[n] += w.b(n) * current[n];
            if (n > 0) next[n - 1] += w.c(n) * current[n];
        }
        std::swap(current, next);
    }
    return current[j];
}

/// Number of Motzkin paths of length L from 0 to 0.
Rational motzkin_number(int L);

}  // namespace motzkin
