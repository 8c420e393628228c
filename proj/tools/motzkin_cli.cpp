#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "motzkin/core/combinatorics.hpp"
#include "motzkin/core/errors.hpp"
#include "motzkin/core/partition.hpp"
#include "motzkin/harness/brownian_oracle.hpp"
#include "motzkin/harness/identity_suite.hpp"
#include "motzkin/harness/prop13.hpp"
#include "motzkin/harness/report.hpp"
#include "motzkin/harness/theorem1.hpp"
#include "motzkin/limits/partition_integral.hpp"
#include "motzkin/limits/tabulate.hpp"
#include "motzkin/sampler/backward_table.hpp"
#include "motzkin/sampler/io.hpp"
#include "motzkin/sampler/sampler.hpp"
#include "run_config.hpp"

using namespace motzkin;
using namespace motzkin::cli;
using harness::format_double;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Provenance {
    std::string command;
    std::uint64_t seed = 0;
    nlohmann::json config;
    std::string hash;

    explicit Provenance(const RunConfig& cfg)
        : command(cfg.suite.empty() ? cfg.command : cfg.command + " " + cfg.suite),
          seed(cfg.seed),
          config(cfg.to_json()),
          hash(fnv1a_hex(config.dump())) {}

    void csv(std::ostream& out) const {
        out << "# motzkin " << MOTZKIN_VERSION << " command=" << command << " seed=" << seed
            << " config_hash=" << hash << '\n'
            << "# config=" << config.dump() << '\n';
    }
    nlohmann::json json() const {
        return {{"version", MOTZKIN_VERSION}, {"command", command}, {"seed", seed}, {"config_hash", hash},
                {"config", config}};
    }
};

std::string format_of(const RunConfig& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

// The whole output is built in memory and written once.
void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text << std::flush;
        if (!std::cout) throw IoError("cannot write to stdout");
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw IoError("cannot open '" + cfg.out + "' for writing");
    file << text;
    file.close();
    if (!file) throw IoError("cannot write '" + cfg.out + "'");
}

int cmd_enumerate(const RunConfig& cfg) {
    const int L = cfg.len;
    const std::vector<MotzkinPath> paths = enumerate_paths(L, cfg.from, cfg.to);
    const WeightModel<double> w =
        cfg.weights == "sigma" ? WeightModel<double>::constant(cfg.sigma, 1.0, 1.0) : WeightModel<double>::constant(1.0, 1.0, 1.0);
    double total = 0.0;
    for (const MotzkinPath& p : paths) total += path_weight(p, w);
    const double transfer = transfer_count(L, cfg.from, cfg.to, w);

    const Provenance prov(cfg);
    std::ostringstream out;
    if (format_of(cfg, "csv") == "json") {
        nlohmann::json doc{{"provenance", prov.json()},
                           {"count", paths.size()},
                           {"total_weight", format_double(total)},
                           {"transfer_count", format_double(transfer)}};
        auto& rows = doc["paths"] = nlohmann::json::array();
        for (const MotzkinPath& p : paths) rows.push_back(std::vector<int>(p.altitudes().begin(), p.altitudes().end()));
        out << doc.dump(2) << '\n';
    } else {
        prov.csv(out);
        out << "# count=" << paths.size() << " total_weight=" << format_double(total)
            << " transfer_count=" << format_double(transfer) << '\n';
        for (int k = 0; k <= L; ++k) out << (k ? "," : "") << 'g' << k;
        out << '\n';
        for (const MotzkinPath& p : paths) {
            for (std::size_t k = 0; k <= p.length(); ++k) out << (k ? "," : "") << p[k];
            out << '\n';
        }
    }
    emit(cfg, out.str());
    return kOk;
}

int cmd_partition(const RunConfig& cfg) {
    const GeometricModel model = cfg.geometric();
    const int L = cfg.len;
    const bool asymptotic_ok = !cfg.explicit_rhos();
    if (cfg.method == "asymptotic" && !asymptotic_ok)
        fail(ErrorCode::InvalidParams, "the asymptotic form needs a, c and the boundary form, not explicit rho's");

    std::vector<std::pair<std::string, double>> logs;
    const bool all = cfg.method == "all";
    if (all || cfg.method == "dp") logs.emplace_back("dp", partition_function(model, L, cfg.eps).log_value);
    if (all || cfg.method == "integral") logs.emplace_back("integral", limits::log_partition_integral(model, L));
    if ((all && asymptotic_ok) || cfg.method == "asymptotic")
        logs.emplace_back("asymptotic", limits::log_partition_asymptotic(cfg.model_params()));

    std::vector<std::pair<std::string, double>> gaps;
    for (std::size_t i = 0; i < logs.size(); ++i)
        for (std::size_t j = i + 1; j < logs.size(); ++j)
            gaps.emplace_back(logs[i].first + "/" + logs[j].first, std::abs(std::expm1(logs[i].second - logs[j].second)));

    const Provenance prov(cfg);
    std::ostringstream out;
    if (format_of(cfg, "csv") == "json") {
        nlohmann::json doc{{"provenance", prov.json()}, {"length", L}, {"rho0", model.rho0}, {"rho1", model.rho1}};
        for (const auto& [name, lv] : logs)
            doc["values"][name] = {{"log_value", format_double(lv)}, {"value", format_double(std::exp(lv))}};
        for (const auto& [name, gap] : gaps) doc["relative_gaps"][name] = format_double(gap);
        out << doc.dump(2) << '\n';
    } else {
        prov.csv(out);
        out << "quantity,method,log_value,value,relative_gap\n";
        for (const auto& [name, lv] : logs)
            out << "value," << name << ',' << format_double(lv) << ',' << format_double(std::exp(lv)) << ",\n";
        for (const auto& [name, gap] : gaps) out << "gap," << name << ",,," << format_double(gap) << '\n';
    }
    emit(cfg, out.str());
    return kOk;
}

std::string report_text(const harness::ConvergenceReport& report, const Provenance& prov, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        nlohmann::json doc = harness::to_json(report);
        doc["provenance"] = prov.json();
        out << doc.dump(2) << '\n';
    } else {
        prov.csv(out);
        harness::write_csv(out, report);
    }
    return out.str();
}

int cmd_sample(const RunConfig& cfg) {
    const GeometricModel model = cfg.geometric();
    const sampler::BackwardTable table = sampler::BackwardTable::build(model, cfg.len, cfg.eps);
    const std::vector<MotzkinPath> paths = sampler::sample_paths(table, cfg.samples, cfg.seed, cfg.workers);
    const Provenance prov(cfg);

    if (cfg.summary) {
        emit(cfg, report_text(harness::summarize_sample(paths, cfg.sigma), prov, format_of(cfg, "csv")));
        return kOk;
    }
    sampler::SampleMetadata meta;
    meta.params = cfg.model_params();
    meta.rho0 = model.rho0;
    meta.rho1 = model.rho1;
    meta.seed = cfg.seed;
    meta.workers = cfg.workers;
    meta.tail_eps = table.tail_eps();
    meta.n_max = table.n_max();
    meta.config_hash = prov.hash;
    std::ostringstream out;
    if (format_of(cfg, "csv") == "json") {
        std::ostringstream body;
        sampler::write_paths_json(body, paths, meta);
        nlohmann::json doc = nlohmann::json::parse(body.str());
        doc["provenance"] = prov.json();
        out << doc.dump() << '\n';
    } else {
        prov.csv(out);
        sampler::write_paths_csv(out, paths, meta);
    }
    emit(cfg, out.str());
    return kOk;
}

int cmd_kernel(const RunConfig& cfg) {
    limits::KernelParams kp;
    kp.a = cfg.a;
    kp.c = cfg.c;
    kp.sigma = cfg.sigma;
    kp.t = cfg.t;
    kp.s = cfg.s;
    const limits::KernelTable table = limits::tabulate_kernel(cfg.name, kp, cfg.lo, cfg.hi, cfg.points);
    const Provenance prov(cfg);
    std::ostringstream out;
    if (format_of(cfg, "csv") == "json") {
        nlohmann::json doc{{"provenance", prov.json()}, {"name", table.name}};
        auto& rows = doc["rows"] = nlohmann::json::array();
        for (const auto& [y, v] : table.rows) rows.push_back({format_double(y), format_double(v)});
        out << doc.dump(2) << '\n';
    } else {
        prov.csv(out);
        limits::write_table_csv(out, table);
    }
    emit(cfg, out.str());
    return kOk;
}

harness::ConvergenceReport run_suite(const RunConfig& cfg) {
    if (cfg.suite == "identities") return harness::run_identity_suite(harness::IdentityTolerances::with_overrides(cfg.tol));
    if (cfg.suite == "theorem1") {
        harness::ExperimentSpec spec;
        spec.params = cfg.model_params();
        spec.M = cfg.samples;
        spec.grid = cfg.grid;
        spec.statistics.clear();
        for (const std::string& s : cfg.stats) spec.statistics.push_back(harness::parse_statistic(s));
        spec.cs = cfg.cs;
        spec.thetas = cfg.thetas;
        spec.seed = cfg.seed;
        spec.workers = cfg.workers;
        spec.k = cfg.k;
        spec.quad_tol = cfg.quad_tol;
        spec.table_eps = cfg.eps;
        return harness::run_theorem1_experiment(spec);
    }
    if (cfg.suite == "prop13") {
        harness::Prop13Spec spec;
        spec.params = cfg.model_params();
        spec.Ls = cfg.lens;
        spec.M = cfg.samples;
        spec.seed = cfg.seed;
        spec.workers = cfg.workers;
        spec.k = cfg.k;
        spec.mesh = cfg.mesh;
        return harness::run_prop13_experiment(spec);
    }
    limits::KernelParams kp;
    kp.a = cfg.a;
    kp.c = cfg.c;
    if (cfg.suite == "oracle") {
        harness::OracleOptions opt;
        opt.mesh = cfg.mesh;
        opt.workers = cfg.workers;
        return harness::run_oracle_check(kp, cfg.samples, cfg.seed, opt, cfg.k);
    }
    if (cfg.suite == "oracle-mesh") return harness::run_oracle_mesh_study(kp, cfg.meshes, cfg.samples, cfg.seed, cfg.workers);
    fail(ErrorCode::InvalidParams, "unknown suite '" + cfg.suite + "'");
}

int cmd_verify(const RunConfig& cfg) {
    const harness::ConvergenceReport report = run_suite(cfg);
    const Provenance prov(cfg);
    emit(cfg, report_text(report, prov, format_of(cfg, "json")));
    if (!cfg.gnuplot.empty()) {
        if (cfg.plot_stat.empty()) fail(ErrorCode::InvalidParams, "--gnuplot needs --plot-stat");
        std::ostringstream plot;
        plot << "# motzkin " << MOTZKIN_VERSION << " command=" << prov.command << " seed=" << prov.seed
             << " config_hash=" << prov.hash << " statistic=" << cfg.plot_stat << '\n';
        harness::write_gnuplot(plot, report, cfg.plot_stat);
        RunConfig target = cfg;
        target.out = cfg.gnuplot;
        emit(target, plot.str());
    }
    if (!report.passed()) {
        std::cerr << "verify " << cfg.suite << ": " << report.count("pass") << " of " << report.rows.size()
                  << " rows pass\n";
        return kVerificationFailed;
    }
    return kOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::QuadratureNotConverged:
        case ErrorCode::TruncationInsufficient: return kVerificationFailed;
        default: return kInvalidInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Motzkin paths: enumeration, partition functions, sampling, limit kernels and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(MOTZKIN_VERSION));

    std::map<std::string, std::string> flags;
    const auto option = [&](const std::string& names, const std::string& key, const std::string& help) {
        return app.add_option_function<std::string>(names, [&flags, key](const std::string& v) { flags[key] = v; }, help);
    };
    option("--sigma", "sigma", "horizontal step weight");
    option("--a", "a", "right boundary parameter");
    option("--c", "c", "left boundary parameter");
    option("--len,--L", "len", "path length L");
    option("--boundary", "boundary", "linear or exponential");
    option("--rho0", "rho0", "explicit left boundary ratio (with --rho1)");
    option("--rho1", "rho1", "explicit right boundary ratio (with --rho0)");
    option("--eps", "eps", "relative truncation tolerance of the partition sweep");
    option("--samples,--M", "samples", "number of samples");
    option("--seed", "seed", "random seed (MOTZKIN_SEED overrides)");
    option("--workers", "workers", "worker threads");
    option("--k", "k", "stderr multiple in Monte Carlo verdicts");
    option("--quad-tol", "quad-tol", "quadrature tolerance added to Monte Carlo budgets");
    option("--out", "out", "output file (default stdout)");
    option("--format", "format", "csv or json");
    option("--gnuplot", "gnuplot", "also write (L, |gap|) data for --plot-stat");
    option("--plot-stat", "plot-stat", "statistic for --gnuplot");
    option("--from", "from", "start altitude (enumerate)");
    option("--to", "to", "end altitude (enumerate)");
    option("--weights", "weights", "unit or sigma (enumerate)");
    option("--method", "method", "dp, integral, asymptotic or all (partition)");
    option("--name", "name", "kernel name (kernel)");
    option("--t", "t", "kernel time");
    option("--s", "s", "kernel start point or time");
    option("--lo", "lo", "first tabulation point");
    option("--hi", "hi", "last tabulation point");
    option("--points", "points", "number of tabulation points");
    option("--grid", "grid", "comma-separated evaluation points (theorem1)");
    option("--cs", "cs", "comma-separated Laplace arguments (theorem1)");
    option("--thetas", "thetas", "comma-separated horizontal Laplace arguments (theorem1)");
    option("--stats", "stats", "comma-separated statistics: laplace, moments, cdf (theorem1)");
    option("--lens", "lens", "comma-separated lengths (prop13)");
    option("--meshes", "meshes", "comma-separated meshes (oracle-mesh)");
    option("--mesh", "mesh", "Brownian mesh (oracle, prop13)");
    option("--tol", "tol", "name:value tolerance overrides (identities)");
    app.add_flag_function("--summary", [&flags](std::int64_t) { flags["summary"] = "true"; },
                          "print step-fraction summaries instead of paths (sample)");
    std::string config_path;
    app.add_option("--config", config_path, "key=value settings file; flags take precedence");

    app.add_subcommand("enumerate", "list the paths of length L from --from to --to");
    app.add_subcommand("partition", "partition function by transfer matrix, spectral integral and asymptotics");
    app.add_subcommand("sample", "exact samples from the path measure");
    app.add_subcommand("kernel", "tabulate a limit kernel")->footer("kernels: killed_bm, biane, semicircle, stationary_u, mp, norm_const");
    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite; exit 1 on any failed row");
    verify->add_option("suite", suite, "identities, theorem1, prop13, oracle or oracle-mesh")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    RunConfig cfg;
    try {
        std::map<std::string, std::string> file;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot read config file '" << config_path << "'\n";
                return kIoError;
            }
            file = parse_config_file(in);
        }
        cfg = resolve(file, flags, std::getenv("MOTZKIN_SEED"));
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.suite = suite;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (cfg.command == "enumerate") return cmd_enumerate(cfg);
        if (cfg.command == "partition") return cmd_partition(cfg);
        if (cfg.command == "sample") return cmd_sample(cfg);
        if (cfg.command == "kernel") return cmd_kernel(cfg);
        return cmd_verify(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kVerificationFailed;
    }
}
