#include <cstdlib>
#include <string>

#include "motzkin/core/combinatorics.hpp"

namespace motzkin {

namespace {

void check_cap(int L, int cap) {
    if (L < 0) fail(ErrorCode::InvalidParams, "length must be nonnegative");
    if (L > cap)
        fail(ErrorCode::CapExceeded,
             "enumeration of length " + std::to_string(L) + " exceeds cap " + std::to_string(cap));
}

// Depth-first extension in step order -1, 0, +1, which yields altitude
// sequences in ascending lexicographic order.
void extend(std::vector<int>& prefix, int remaining, int target, std::vector<MotzkinPath>& out) {
    const int here = prefix.back();
    if (remaining == 0) {
        if (here == target) out.push_back(validate_path(prefix));
        return;
    }
    for (int step = -1; step <= 1; ++step) {
        const int next = here + step;
        if (next < 0 || std::abs(next - target) > remaining - 1) continue;
        prefix.push_back(next);
        extend(prefix, remaining - 1, target, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MotzkinPath> enumerate_paths(int L, int i, int j, int cap) {
    check_cap(L, cap);
    if (i < 0 || j < 0) fail(ErrorCode::NegativeAltitude, "endpoints must be nonnegative");
    std::vector<MotzkinPath> out;
    if (std::abs(i - j) > L) return out;
    std::vector<int> prefix{i};
    prefix.reserve(L + 1);
    extend(prefix, L, j, out);
    return out;
}

std::vector<std::vector<int>> enumerate_walks(int L, int cap) {
    check_cap(L, cap);
    std::vector<std::vector<int>> walks{{0}};
    for (int k = 0; k < L; ++k) {
        std::vector<std::vector<int>> grown;
        grown.reserve(walks.size() * 3);
        for (const auto& w : walks) {
            for (int step = -1; step <= 1; ++step) {
                auto next = w;
                next.push_back(w.back() + step);
                grown.push_back(std::move(next));
            }
        }
        walks = std::move(grown);
    }
    return walks;
}

Rational motzkin_number(int L) {
    return transfer_count<Rational>(L, 0, 0, WeightModel<Rational>::unit());
}

}  // namespace motzkin
