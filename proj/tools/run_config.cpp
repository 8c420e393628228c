#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "motzkin/core/errors.hpp"

namespace motzkin::cli {

namespace {

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& expected) {
    fail(ErrorCode::InvalidParams, "--" + key + ": '" + value + "' is not " + expected);
}

double to_double(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x)) bad_value(key, value, "a finite number");
    return x;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    Int x{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) bad_value(key, value, "an integer");
    return x;
}

std::vector<std::string> split(const std::string& value, char sep = ',') {
    std::vector<std::string> parts;
    std::stringstream in(value);
    for (std::string part; std::getline(in, part, sep);) parts.push_back(trim(part));
    return parts;
}

std::vector<double> to_doubles(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& p : split(value)) out.push_back(to_double(key, p));
    return out;
}

std::vector<int> to_ints(const std::string& key, const std::string& value) {
    std::vector<int> out;
    for (const std::string& p : split(value)) out.push_back(to_integer<int>(key, p));
    return out;
}

bool to_bool(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    bad_value(key, value, "a boolean");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table{
        {"sigma", [](RunConfig& c, auto& k, auto& v) { c.sigma = to_double(k, v); }},
        {"a", [](RunConfig& c, auto& k, auto& v) { c.a = to_double(k, v); }},
        {"c", [](RunConfig& c, auto& k, auto& v) { c.c = to_double(k, v); }},
        {"len", [](RunConfig& c, auto& k, auto& v) { c.len = to_integer<int>(k, v); }},
        {"boundary", [](RunConfig& c, auto&, auto& v) { c.boundary = parse_boundary_form(trim(v)); }},
        {"rho0", [](RunConfig& c, auto& k, auto& v) { c.rho0 = to_double(k, v); }},
        {"rho1", [](RunConfig& c, auto& k, auto& v) { c.rho1 = to_double(k, v); }},
        {"eps", [](RunConfig& c, auto& k, auto& v) { c.eps = to_double(k, v); }},
        {"samples", [](RunConfig& c, auto& k, auto& v) { c.samples = to_integer<std::size_t>(k, v); }},
        {"seed", [](RunConfig& c, auto& k, auto& v) { c.seed = to_integer<std::uint64_t>(k, v); }},
        {"workers", [](RunConfig& c, auto& k, auto& v) { c.workers = to_integer<int>(k, v); }},
        {"k", [](RunConfig& c, auto& k, auto& v) { c.k = to_double(k, v); }},
        {"quad-tol", [](RunConfig& c, auto& k, auto& v) { c.quad_tol = to_double(k, v); }},
        {"out", [](RunConfig& c, auto&, auto& v) { c.out = trim(v); }},
        {"format",
         [](RunConfig& c, auto& k, auto& v) {
             const std::string f = trim(v);
             if (f != "csv" && f != "json") bad_value(k, v, "csv or json");
             c.format = f;
         }},
        {"gnuplot", [](RunConfig& c, auto&, auto& v) { c.gnuplot = trim(v); }},
        {"plot-stat", [](RunConfig& c, auto&, auto& v) { c.plot_stat = trim(v); }},
        {"from", [](RunConfig& c, auto& k, auto& v) { c.from = to_integer<int>(k, v); }},
        {"to", [](RunConfig& c, auto& k, auto& v) { c.to = to_integer<int>(k, v); }},
        {"weights",
         [](RunConfig& c, auto& k, auto& v) {
             const std::string w = trim(v);
             if (w != "unit" && w != "sigma") bad_value(k, v, "unit or sigma");
             c.weights = w;
         }},
        {"method",
         [](RunConfig& c, auto& k, auto& v) {
             const std::string m = trim(v);
             if (m != "dp" && m != "integral" && m != "asymptotic" && m != "all")
                 bad_value(k, v, "dp, integral, asymptotic or all");
             c.method = m;
         }},
        {"summary", [](RunConfig& c, auto& k, auto& v) { c.summary = to_bool(k, v); }},
        {"name", [](RunConfig& c, auto&, auto& v) { c.name = trim(v); }},
        {"t", [](RunConfig& c, auto& k, auto& v) { c.t = to_double(k, v); }},
        {"s", [](RunConfig& c, auto& k, auto& v) { c.s = to_double(k, v); }},
        {"lo", [](RunConfig& c, auto& k, auto& v) { c.lo = to_double(k, v); }},
        {"hi", [](RunConfig& c, auto& k, auto& v) { c.hi = to_double(k, v); }},
        {"points", [](RunConfig& c, auto& k, auto& v) { c.points = to_integer<int>(k, v); }},
        {"grid", [](RunConfig& c, auto& k, auto& v) { c.grid = to_doubles(k, v); }},
        {"cs", [](RunConfig& c, auto& k, auto& v) { c.cs = to_doubles(k, v); }},
        {"thetas", [](RunConfig& c, auto& k, auto& v) { c.thetas = to_doubles(k, v); }},
        {"stats", [](RunConfig& c, auto&, auto& v) { c.stats = split(v); }},
        {"lens", [](RunConfig& c, auto& k, auto& v) { c.lens = to_ints(k, v); }},
        {"meshes", [](RunConfig& c, auto& k, auto& v) { c.meshes = to_ints(k, v); }},
        {"mesh", [](RunConfig& c, auto& k, auto& v) { c.mesh = to_integer<int>(k, v); }},
        {"tol",
         [](RunConfig& c, auto& k, auto& v) {
             for (const std::string& pair : split(v)) {
                 const auto colon = pair.find(':');
                 if (colon == std::string::npos) bad_value(k, v, "a list of name:value pairs");
                 c.tol[trim(pair.substr(0, colon))] = to_double(k, pair.substr(colon + 1));
             }
         }},
    };
    return table;
}

}  // namespace

ModelParams RunConfig::model_params() const {
    ModelParams p;
    p.sigma = sigma;
    p.a = a;
    p.c = c;
    p.length = len;
    p.form = boundary;
    return p;
}

GeometricModel RunConfig::geometric() const {
    if (rho0.has_value() != rho1.has_value()) fail(ErrorCode::InvalidParams, "give both --rho0 and --rho1 or neither");
    if (rho0) {
        const GeometricModel m{sigma, *rho0, *rho1};
        m.validate();
        return m;
    }
    return model_params().geometric();
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json tolerances = nlohmann::json::object();
    for (const auto& [key, value] : tol) tolerances[key] = value;
    return {{"command", command},
            {"suite", suite},
            {"sigma", sigma},
            {"a", a},
            {"c", c},
            {"len", len},
            {"boundary", motzkin::to_string(boundary)},
            {"rho0", rho0 ? nlohmann::json(*rho0) : nlohmann::json(nullptr)},
            {"rho1", rho1 ? nlohmann::json(*rho1) : nlohmann::json(nullptr)},
            {"eps", eps},
            {"samples", samples},
            {"seed", seed},
            {"workers", workers},
            {"k", k},
            {"quad_tol", quad_tol},
            {"format", format},
            {"from", from},
            {"to", to},
            {"weights", weights},
            {"method", method},
            {"summary", summary},
            {"name", name},
            {"t", t},
            {"s", s},
            {"lo", lo},
            {"hi", hi},
            {"points", points},
            {"grid", grid},
            {"cs", cs},
            {"thetas", thetas},
            {"stats", stats},
            {"lens", lens},
            {"meshes", meshes},
            {"mesh", mesh},
            {"tol", tolerances}};
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& entry : setters()) out.push_back(entry.first);
        return out;
    }();
    return keys;
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    const auto it = setters().find(key);
    if (it == setters().end()) fail(ErrorCode::InvalidParams, "unknown setting '" + key + "'");
    it->second(cfg, key, value);
}

std::map<std::string, std::string> parse_config_file(std::istream& in) {
    std::map<std::string, std::string> out;
    int number = 0;
    for (std::string line; std::getline(in, line);) {
        ++number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos || trim(text.substr(0, eq)).empty())
            fail(ErrorCode::InvalidParams, "config line " + std::to_string(number) + ": expected key=value");
        out[trim(text.substr(0, eq))] = trim(text.substr(eq + 1));
    }
    return out;
}

RunConfig resolve(const std::map<std::string, std::string>& file, const std::map<std::string, std::string>& flags,
                  const char* env_seed) {
    RunConfig cfg;
    for (const auto& [key, value] : file) set_key(cfg, key, value);
    for (const auto& [key, value] : flags) set_key(cfg, key, value);
    if (env_seed != nullptr && *env_seed != '\0') set_key(cfg, "seed", env_seed);
    if (cfg.workers < 1) fail(ErrorCode::InvalidParams, "--workers must be positive");
    return cfg;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace motzkin::cli
