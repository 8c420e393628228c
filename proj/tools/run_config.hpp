#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motzkin/core/params.hpp"

namespace motzkin::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kIoError = 3 };

/// Everything a subcommand reads. Every field is settable by name through
/// set_key, which is the single parser for both flags and config files.
struct RunConfig {
    std::string command;
    std::string suite;

    double sigma = 1.0;
    double a = 1.0;
    double c = 1.0;
    int len = 100;
    BoundaryForm boundary = BoundaryForm::Linear;
    std::optional<double> rho0;
    std::optional<double> rho1;

    double eps = 1e-12;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    double k = 3.0;
    double quad_tol = 1e-4;

    std::string out;
    std::string format;
    std::string gnuplot;
    std::string plot_stat;

    // enumerate
    int from = 0;
    int to = 0;
    std::string weights = "unit";
    // partition
    std::string method = "all";
    // sample
    bool summary = false;
    // kernel
    std::string name = "killed_bm";
    double t = 1.0;
    double s = 0.0;
    double lo = 0.0;
    double hi = 4.0;
    int points = 101;
    // verify
    std::vector<double> grid{0.0, 0.5, 1.0};
    std::vector<double> cs{0.25, 0.5, 1.0};
    std::vector<double> thetas{0.5, 1.0};
    std::vector<std::string> stats{"laplace", "moments"};
    std::vector<int> lens{50, 100, 200, 400, 800};
    std::vector<int> meshes{256, 1024, 4096};
    int mesh = 4096;
    std::map<std::string, double> tol;

    /// ModelParams from sigma, a, c, len and boundary.
    ModelParams model_params() const;
    /// The geometric model at `len`: rho0/rho1 when both are given, else
    /// the boundary form. Throws InvalidParams when only one is given.
    GeometricModel geometric() const;
    bool explicit_rhos() const { return rho0.has_value() || rho1.has_value(); }

    /// Canonical form; keys sorted, used for provenance and the hash.
    nlohmann::json to_json() const;
};

/// Keys accepted by set_key, also the long flag names.
const std::vector<std::string>& config_keys();

/// Parses `value` into the field named `key`. Lists are comma separated;
/// `tol` takes name:value pairs. Throws InvalidParams on an unknown key or a
/// malformed value.
void set_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// key=value lines; blank lines and lines starting with '#' are skipped.
/// Throws InvalidParams on a malformed line.
std::map<std::string, std::string> parse_config_file(std::istream& in);

/// Defaults, then the config file entries, then the flags; MOTZKIN_SEED
/// (when set) replaces the seed last.
RunConfig resolve(const std::map<std::string, std::string>& file, const std::map<std::string, std::string>& flags,
                  const char* env_seed);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace motzkin::cli
