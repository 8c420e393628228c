#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "motzkin/core/params.hpp"
#include "motzkin/core/path.hpp"

namespace motzkin::sampler {

inline constexpr int kSampleSchemaVersion = 1;

/// Provenance carried by every serialized sample batch.
struct SampleMetadata {
    ModelParams params;
    double rho0 = 0.0;
    double rho1 = 0.0;
    std::uint64_t seed = 0;
    int workers = 1;
    double tail_eps = 0.0;
    int n_max = 0;
    std::string config_hash;
};

nlohmann::json to_json(const SampleMetadata& meta);

/// '#'-prefixed provenance lines, a header row g0,...,gL, then one path per row.
void write_paths_csv(std::ostream& out, const std::vector<MotzkinPath>& paths, const SampleMetadata& meta);

/// {"schema_version", "kind": "paths", "metadata", "paths": [[...], ...]}.
void write_paths_json(std::ostream& out, const std::vector<MotzkinPath>& paths, const SampleMetadata& meta);

/// Reads the rows written by write_paths_csv, validating every path.
std::vector<MotzkinPath> read_paths_csv(std::istream& in);

}  // namespace motzkin::sampler
