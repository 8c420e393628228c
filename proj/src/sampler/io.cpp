#include "motzkin/sampler/io.hpp"

#include <istream>
#include <sstream>

namespace motzkin::sampler {

nlohmann::json to_json(const SampleMetadata& meta) {
    return {
        {"version", MOTZKIN_VERSION},
        {"sigma", meta.params.sigma},
        {"length", meta.params.length},
        {"a", meta.params.a},
        {"c", meta.params.c},
        {"boundary", to_string(meta.params.form)},
        {"rho0", meta.rho0},
        {"rho1", meta.rho1},
        {"seed", meta.seed},
        {"workers", meta.workers},
        {"tail_eps", meta.tail_eps},
        {"n_max", meta.n_max},
        {"config_hash", meta.config_hash},
    };
}

void write_paths_csv(std::ostream& out, const std::vector<MotzkinPath>& paths, const SampleMetadata& meta) {
    out << "# motzkin-paths schema_version=" << kSampleSchemaVersion << '\n';
    const nlohmann::json fields = to_json(meta);
    for (const auto& [key, value] : fields.items()) out << "# " << key << '=' << value.dump() << '\n';
    const int L = meta.params.length;
    for (int k = 0; k <= L; ++k) out << (k ? "," : "") << 'g' << k;
    out << '\n';
    for (const MotzkinPath& p : paths) {
        bool first = true;
        for (int v : p.altitudes()) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << '\n';
    }
}

void write_paths_json(std::ostream& out, const std::vector<MotzkinPath>& paths, const SampleMetadata& meta) {
    nlohmann::json doc;
    doc["schema_version"] = kSampleSchemaVersion;
    doc["kind"] = "paths";
    doc["metadata"] = to_json(meta);
    auto& rows = doc["paths"] = nlohmann::json::array();
    for (const MotzkinPath& p : paths) rows.push_back(std::vector<int>(p.altitudes().begin(), p.altitudes().end()));
    out << doc.dump() << '\n';
}

std::vector<MotzkinPath> read_paths_csv(std::istream& in) {
    std::vector<MotzkinPath> paths;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<int> altitudes;
        std::stringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');) altitudes.push_back(std::stoi(cell));
        paths.push_back(validate_path(std::move(altitudes)));
    }
    return paths;
}

}  // namespace motzkin::sampler
