#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace motzkin::sampler {

/// One deterministic random stream. Streams are addressed by (seed, index):
/// the engine for stream i is seeded from a SplitMix64 hash of both, so
/// parallel workers draw non-overlapping sequences regardless of how work
/// is scheduled.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double normal() { return normal_(engine_); }
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

/// Samples are processed in fixed-size chunks; chunk c uses Rng(seed, c).
inline constexpr std::size_t kChunkSize = 512;

/// Runs body(chunk_index, rng, first, last) for every chunk covering
/// [0, count) on `workers` threads. The per-chunk stream makes results
/// independent of the worker count and of thread scheduling.
void for_each_chunk(std::size_t count, std::uint64_t seed, int workers,
                    const std::function<void(std::size_t chunk, Rng& rng, std::size_t first,
                                             std::size_t last)>& body);

}  // namespace motzkin::sampler
