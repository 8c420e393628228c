#include <algorithm>

#include "motzkin/core/errors.hpp"
#include "motzkin/sampler/sampler.hpp"

namespace motzkin::sampler {

MotzkinPath sample_path(const BackwardTable& table, Rng& rng) {
    const auto cdf = table.start_cdf();
    const double u0 = rng.uniform();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u0);
    if (it == cdf.end()) --it;
    int n = static_cast<int>(it - cdf.begin());

    const int L = table.length();
    const int top = table.n_max();
    const double sigma = table.model().sigma;
    std::vector<int> altitudes;
    altitudes.reserve(L + 1);
    altitudes.push_back(n);
    for (int k = 1; k <= L; ++k) {
        const auto row = table.scaled(k);
        const double up = n < top ? row[n + 1] : 0.0;
        const double flat = sigma * row[n];
        const double down = n > 0 ? row[n - 1] : 0.0;
        const double u = rng.uniform() * (up + flat + down);
        if (u < up) ++n;
        else if (u >= up + flat && down > 0.0) --n;
        altitudes.push_back(n);
    }
    return validate_path(std::move(altitudes));
}

MotzkinPath sample_path(const BackwardTable& table, std::uint64_t seed) {
    Rng rng(seed);
    return sample_path(table, rng);
}

std::vector<MotzkinPath> sample_paths(const BackwardTable& table, std::size_t count,
                                      std::uint64_t seed, int workers) {
    std::vector<std::vector<int>> raw(count);
    for_each_chunk(count, seed, workers, [&](std::size_t, Rng& rng, std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) {
            const MotzkinPath p = sample_path(table, rng);
            raw[i].assign(p.altitudes().begin(), p.altitudes().end());
        }
    });
    std::vector<MotzkinPath> out;
    out.reserve(count);
    for (auto& r : raw) out.push_back(validate_path(std::move(r)));
    return out;
}

}  // namespace motzkin::sampler
