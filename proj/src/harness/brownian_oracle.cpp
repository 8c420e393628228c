#include "motzkin/harness/brownian_oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <string>

#include "motzkin/core/errors.hpp"
#include "motzkin/limits/laplace.hpp"
#include "motzkin/limits/special.hpp"
#include "motzkin/sampler/rng.hpp"

namespace motzkin::harness {

std::vector<OraclePath> run_brownian_oracle(const limits::KernelParams& kp, const std::vector<double>& grid,
                                            std::size_t M, std::uint64_t seed, const OracleOptions& opt) {
    if (!(kp.a + kp.c > 0.0)) fail(ErrorCode::InvalidParams, "the oracle needs a + c > 0");
    if (opt.mesh < 1) fail(ErrorCode::InvalidParams, "mesh must be positive");
    std::vector<int> marks;
    for (double x : grid) {
        if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::InvalidGrid, "oracle grid points must lie in [0, 1]");
        marks.push_back(static_cast<int>(std::lround(x * opt.mesh)));
    }
    const double log_norm = std::log(std::numbers::sqrt2 / ((kp.a + kp.c) * limits::norm_const_ac(kp.a, kp.c)));
    // variance 1/2 per unit time
    const double step_var = 0.5 / opt.mesh;
    const double step_sd = std::sqrt(step_var);

    std::vector<OraclePath> out(M);
    sampler::for_each_chunk(M, seed, opt.workers, [&](std::size_t, sampler::Rng& rng, std::size_t first, std::size_t last) {
        std::vector<double> at(opt.mesh + 1);
        for (std::size_t i = first; i < last; ++i) {
            double b = 0.0, low = 0.0, low_mesh = 0.0;
            at[0] = 0.0;
            for (int j = 1; j <= opt.mesh; ++j) {
                const double next = b + step_sd * rng.normal();
                if (opt.min_mode == MinMode::Bridge) {
                    // minimum of a Brownian bridge from b to next over one step
                    const double u = 1.0 - rng.uniform();
                    const double d = next - b;
                    low = std::min(low, 0.5 * (b + next - std::sqrt(d * d - 2.0 * step_var * std::log(u))));
                }
                b = next;
                at[j] = b;
                low_mesh = std::min(low_mesh, b);
            }
            if (opt.min_mode == MinMode::MeshPoints) low = low_mesh;
            OraclePath& p = out[i];
            p.eta.resize(marks.size());
            for (std::size_t g = 0; g < marks.size(); ++g) p.eta[g] = std::numbers::sqrt2 * at[marks[g]];
            p.eta_min = std::numbers::sqrt2 * low;
            p.eta_min_mesh = std::numbers::sqrt2 * low_mesh;
            p.weight = std::exp(log_norm + (kp.a + kp.c) * low - kp.a * b);
        }
    });
    return out;
}

ConvergenceReport run_oracle_check(const limits::KernelParams& kp, std::size_t M, std::uint64_t seed,
                                   const OracleOptions& opt, double k) {
    ConvergenceReport report;
    report.experiment = "oracle";
    report.config = {{"a", kp.a},       {"c", kp.c},          {"M", M},
                     {"seed", seed},    {"mesh", opt.mesh},   {"workers", opt.workers},
                     {"k", k},          {"min_mode", opt.min_mode == MinMode::Bridge ? "bridge" : "mesh"}};
    report.k = k;
    if (M == 0) return report;
    limits::QuadOptions quad;
    quad.rel_tol = 1e-9;
    // E eta_1 vanishes when a = c
    quad.abs_tol = 1e-10;

    struct Functional {
        std::string name;
        double x;  // 0.5 or 1, the oracle marks
        std::function<double(double)> of_eta;
    };
    const Functional functionals[] = {
        {"mean_eta[x=1]", 1.0, [](double e) { return e; }},
        {"second_moment_eta[x=1]", 1.0, [](double e) { return e * e; }},
        {"laplace_eta[x=1]", 1.0, [](double e) { return std::exp(-e); }},
        {"laplace_eta[x=0.5]", 0.5, [](double e) { return std::exp(-e); }},
    };
    const auto paths = run_brownian_oracle(kp, {0.5, 1.0}, M, seed, opt);

    MeanAccumulator mass;
    for (const OraclePath& p : paths) mass.add(p.weight);
    ReportRow m;
    m.statistic = "oracle_mass";
    m.empirical = mass.mean;
    m.stderr_ = mass.stderr_();
    m.limit = 1.0;
    m.note = "mean Radon-Nikodym weight";
    report.add(m);

    for (const Functional& f : functionals) {
        const std::size_t mark = f.x == 1.0 ? 1 : 0;
        MeanAccumulator acc;
        for (const OraclePath& p : paths) acc.add(p.weight * f.of_eta(p.eta[mark]));
        try {
            // eta_x = eta~_x - eta~_0, the second grid point being x
            const std::vector<double> grid = f.x == 1.0 ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, f.x, 1.0};
            const double limit = limits::eta_expectation(
                grid, [&](std::span<const double> y) { return f.of_eta(y[1] - y[0]); }, kp.a, kp.c, quad);
            ReportRow r;
            r.statistic = f.name;
            r.empirical = acc.mean;
            r.stderr_ = acc.stderr_();
            r.limit = limit;
            r.tolerance = 1e-7 * std::abs(limit) + 1e-9;
            r.note = "weighted Brownian mean vs quadrature of the fdd density";
            report.add(r);
        } catch (const Error& e) {
            report.add_error(0, f.name, std::string(to_string(e.code())), e.what());
        }
    }

    try {
        const double quadrature = limits::eta_expectation(
            {0.0, 1.0}, [](std::span<const double> y) { return std::exp(-(y[1] - y[0])); }, kp.a, kp.c, quad);
        const double closed = limits::norm_const_ac(kp.a + std::numbers::sqrt2, kp.c - std::numbers::sqrt2) /
                              limits::norm_const_ac(kp.a, kp.c);
        ReportRow r;
        r.statistic = "laplace_eta_closed_form[x=1]";
        r.kind = RowKind::Deterministic;
        r.empirical = quadrature;
        r.limit = closed;
        r.tolerance = 1e-7;
        r.relative = true;
        r.note = "quadrature vs ratio of normalizing constants";
        report.add(r);
    } catch (const Error& e) {
        report.add_error(0, "laplace_eta_closed_form[x=1]", std::string(to_string(e.code())), e.what());
    }
    return report;
}

ConvergenceReport run_oracle_mesh_study(const limits::KernelParams& kp, const std::vector<int>& meshes,
                                        std::size_t M, std::uint64_t seed, int workers) {
    ConvergenceReport report;
    report.experiment = "oracle_mesh_study";
    report.config = {{"a", kp.a}, {"c", kp.c}, {"meshes", meshes}, {"M", M}, {"seed", seed}, {"workers", workers}};
    std::vector<double> biases;
    for (int mesh : meshes) {
        OracleOptions opt;
        opt.mesh = mesh;
        opt.workers = workers;
        const auto paths = run_brownian_oracle(kp, {1.0}, M, seed, opt);
        MeanAccumulator bias, mass;
        for (const OraclePath& p : paths) {
            bias.add(p.eta_min_mesh - p.eta_min);
            mass.add(p.weight);
        }
        ReportRow b;
        b.L = mesh;
        b.statistic = "mesh_min_bias";
        b.kind = RowKind::Info;
        b.empirical = bias.mean;
        b.stderr_ = bias.stderr_();
        b.note = "mean of (mesh-point min - bridge min) of eta";
        report.add(b);
        if (M > 1) {
            ReportRow m;
            m.L = mesh;
            m.statistic = "weighted_mass";
            m.empirical = mass.mean;
            m.stderr_ = mass.stderr_();
            m.limit = 1.0;
            report.add(m);
        }
        biases.push_back(bias.mean);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < biases.size(); ++i) monotone = monotone && biases[i] < biases[i - 1];
    ReportRow trend;
    trend.statistic = "mesh_min_bias_decreasing";
    trend.kind = RowKind::Deterministic;
    trend.empirical = monotone ? 0.0 : 1.0;
    trend.note = "1 when some refinement failed to reduce the bias";
    report.add(trend);
    return report;
}

}  // namespace motzkin::harness
