#include "motzkin/sampler/rng.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace motzkin::sampler {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{splitmix64(seed), splitmix64(seed ^ splitmix64(stream + 1)),
                      splitmix64(stream)};
    engine_.seed(seq);
}

void for_each_chunk(std::size_t count, std::uint64_t seed, int workers,
                    const std::function<void(std::size_t, Rng&, std::size_t, std::size_t)>& body) {
    const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
    auto run_chunk = [&](std::size_t c) {
        Rng rng(seed, c);
        const std::size_t first = c * kChunkSize;
        body(c, rng, first, std::min(count, first + kChunkSize));
    };
    const auto threads = static_cast<std::size_t>(std::max(1, workers));
    if (threads == 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(threads, chunks); ++w) {
        pool.emplace_back([&] {
            for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
                try {
                    run_chunk(c);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace motzkin::sampler
