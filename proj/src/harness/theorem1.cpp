#include "motzkin/harness/theorem1.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "motzkin/core/errors.hpp"
#include "motzkin/core/partition.hpp"
#include "motzkin/limits/laplace.hpp"
#include "motzkin/sampler/backward_table.hpp"
#include "motzkin/sampler/sampler.hpp"

namespace motzkin::harness {

namespace {

struct Summary {
    std::vector<double> gamma;  // sqrt((2+s)/2L) gamma_{[Lx]} on the grid
    std::vector<double> horiz;  // (H_L(x) - s/(2+s) [Lx]) / sqrt(L) on the grid
    double up = 0.0, flat = 0.0, down = 0.0;
};

struct Probe {
    std::string name;
    RowKind kind = RowKind::MonteCarlo;
    double limit = 0.0;
    double tolerance = 0.0;
    std::string note;
    std::function<double(const Summary&)> f;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

// the grid a single eta~ marginal at x is integrated on
std::vector<double> marginal_grid(double x) {
    if (x <= 0.0 || x >= 1.0) return {0.0, 1.0};
    return {0.0, x, 1.0};
}

// position of x in marginal_grid(x)
std::size_t marginal_index(double x) { return x <= 0.0 ? 0 : 1; }

double exact_log_partition(const GeometricModel& m, int L) { return partition_function(m, L).log_value; }

}  // namespace

std::string to_string(Statistic s) {
    switch (s) {
        case Statistic::Laplace: return "laplace";
        case Statistic::Moments: return "moments";
        case Statistic::Cdf: return "cdf";
    }
    return "unknown";
}

Statistic parse_statistic(const std::string& text) {
    if (text == "laplace") return Statistic::Laplace;
    if (text == "moments") return Statistic::Moments;
    if (text == "cdf" || text == "cdf-distance") return Statistic::Cdf;
    fail(ErrorCode::InvalidParams, "unknown statistic '" + text + "'");
}

void ExperimentSpec::validate() const {
    params.validate();
    if (workers < 1) fail(ErrorCode::InvalidParams, "workers must be positive");
    if (!(k > 0.0)) fail(ErrorCode::InvalidParams, "k must be positive");
    if (grid.empty()) fail(ErrorCode::InvalidGrid, "grid is empty");
    for (double x : grid)
        if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::InvalidGrid, "grid points must lie in [0, 1]");
    if (std::find(grid.begin(), grid.end(), 0.0) == grid.end() || std::find(grid.begin(), grid.end(), 1.0) == grid.end())
        fail(ErrorCode::InvalidGrid, "grid must contain 0 and 1");
    if (std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<>()) != grid.end())
        fail(ErrorCode::InvalidGrid, "grid must be strictly increasing");
    for (double c : cs)
        if (!(c >= 0.0)) fail(ErrorCode::InvalidParams, "Laplace arguments c must be nonnegative");
}

nlohmann::json ExperimentSpec::to_json() const {
    std::vector<std::string> stats;
    for (Statistic s : statistics) stats.push_back(to_string(s));
    return {{"sigma", params.sigma},   {"a", params.a},          {"c", params.c},
            {"L", params.length},      {"boundary", motzkin::to_string(params.form)},
            {"M", M},                  {"grid", grid},           {"statistics", stats},
            {"cs", cs},                {"thetas", thetas},       {"cdf_points", cdf_points},
            {"seed", seed},            {"workers", workers},     {"k", k},
            {"quad_tol", quad_tol},    {"table_eps", table_eps}};
}

ConvergenceReport run_theorem1_experiment(const ExperimentSpec& spec) {
    spec.validate();
    ConvergenceReport report;
    report.experiment = "theorem1";
    report.config = spec.to_json();
    report.k = spec.k;
    if (spec.M == 0) return report;

    const ModelParams& p = spec.params;
    const int L = p.length;
    const double s = p.sigma;
    const double top = 2.0 + s;
    const double scale = std::sqrt(top / (2.0 * L));
    const double a1 = p.a_prime(), c1 = p.c_prime();
    const GeometricModel model = p.geometric();
    const auto has = [&](Statistic st) {
        return std::find(spec.statistics.begin(), spec.statistics.end(), st) != spec.statistics.end();
    };
    const auto grid_index = [&](double x) {
        return static_cast<std::size_t>(std::find(spec.grid.begin(), spec.grid.end(), x) - spec.grid.begin());
    };
    const std::size_t end_index = grid_index(1.0);

    std::vector<Probe> probes;
    // a probe whose reference needs quadrature becomes an error row if that fails
    // limit values need only sit well inside quad_tol
    limits::QuadOptions quad;
    quad.rel_tol = std::min(1e-8, 0.01 * spec.quad_tol);
    const auto guarded = [&](const std::string& name, const std::function<void()>& build) {
        try {
            build();
        } catch (const Error& e) {
            report.add_error(L, name, std::string(to_string(e.code())), e.what());
        }
    };

    probes.push_back({"frac_up", RowKind::MonteCarlo, 1.0 / top, 0.0, "U_L / L",
                      [](const Summary& m) { return m.up; }});
    probes.push_back({"frac_horiz", RowKind::MonteCarlo, s / top, 0.0, "H_L / L",
                      [](const Summary& m) { return m.flat; }});
    probes.push_back({"frac_down", RowKind::MonteCarlo, 1.0 / top, 0.0, "D_L / L",
                      [](const Summary& m) { return m.down; }});
    {
        // E[H_L] / L = sigma d/dsigma log C_L / L
        const double h = 1e-4 * s;
        GeometricModel lo = model, hi = model;
        lo.sigma -= h;
        hi.sigma += h;
        const double exact = s * (exact_log_partition(hi, L) - exact_log_partition(lo, L)) / (2.0 * h) / L;
        probes.push_back({"frac_horiz_exact_L", RowKind::MonteCarlo, exact, 1e-8, "finite-L value by the sigma derivative",
                          [](const Summary& m) { return m.flat; }});
    }

    if (has(Statistic::Laplace)) {
        const double log_c = exact_log_partition(model, L);
        for (double x : spec.grid) {
            const std::size_t g = grid_index(x);
            for (double c : spec.cs) {
                const std::string tag = "[x=" + fmt(x) + ",c=" + fmt(c) + "]";
                const auto f = [g, c](const Summary& m) { return std::exp(-c * m.gamma[g]); };
                double eta_side = std::nan("");
                guarded("laplace_gamma" + tag, [&] {
                    const std::size_t j = marginal_index(x);
                    eta_side = limits::eta_expectation(
                        marginal_grid(x), [&](std::span<const double> y) { return std::exp(-c * y[j]); }, a1, c1, quad);
                    probes.push_back({"laplace_gamma" + tag, RowKind::MonteCarlo, eta_side, spec.quad_tol,
                                      "E exp(-c eta~_x) by quadrature of the fdd density", f});
                });
                if (!std::isnan(eta_side)) {
                    guarded("limit_routes" + tag, [&] {
                        // E exp(-c eta~_x) once more through the Biane-kernel integral
                        limits::LaplaceInput in;
                        in.sigma = s;
                        in.a = p.a;
                        in.c = p.c;
                        in.grid = marginal_grid(x);
                        in.cs.assign(in.grid.size(), 0.0);
                        in.cs[marginal_index(x)] = c * std::sqrt(top / 2.0);
                        const double kernel_side = limits::limit_laplace(in, quad).psi_kernel;
                        report.add({L, "limit_routes" + tag, kernel_side, 0.0, eta_side, 1e-5, RowKind::Deterministic,
                                    true, "", "kernel route vs fdd-density route of the same limit"});
                    });
                }
                if (x == 0.0 || x == 1.0) {
                    // E_L exp(-lambda gamma) tilts one boundary weight
                    const double lambda = c * scale;
                    GeometricModel tilted = model;
                    (x == 0.0 ? tilted.rho0 : tilted.rho1) *= std::exp(-lambda);
                    const double exact = std::exp(exact_log_partition(tilted, L) - log_c);
                    probes.push_back({"laplace_gamma_exact_L" + tag, RowKind::MonteCarlo, exact, 1e-10,
                                      "finite-L value by the tilted partition function", f});
                }
            }
            for (double theta : spec.thetas) {
                const std::string tag = "[x=" + fmt(x) + ",theta=" + fmt(theta) + "]";
                if (x == 0.0) continue;
                guarded("laplace_horiz" + tag, [&] {
                    limits::LaplaceInput in;
                    in.sigma = s;
                    in.a = p.a;
                    in.c = p.c;
                    in.grid = marginal_grid(x);
                    in.cs.assign(in.grid.size(), 0.0);
                    in.thetas.assign(in.grid.size() - 1, 0.0);
                    in.thetas[0] = theta;
                    const double limit = limits::limit_laplace(in, quad).value();
                    probes.push_back({"laplace_horiz" + tag, RowKind::MonteCarlo, limit, spec.quad_tol,
                                      "Gaussian factor of the limit",
                                      [g, theta](const Summary& m) { return std::exp(theta * m.horiz[g]); }});
                });
            }
        }
        for (double c : spec.cs) {
            for (double theta : spec.thetas) {
                const std::string tag = "[x=1,c=" + fmt(c) + ",theta=" + fmt(theta) + "]";
                guarded("laplace_joint" + tag, [&] {
                    limits::LaplaceInput in;
                    in.sigma = s;
                    in.a = p.a;
                    in.c = p.c;
                    in.grid = {0.0, 1.0};
                    in.cs = {0.0, c * std::sqrt(top / 2.0)};
                    in.thetas = {theta};
                    const double limit = limits::limit_laplace(in, quad).value();
                    probes.push_back({"laplace_joint" + tag, RowKind::MonteCarlo, limit, spec.quad_tol,
                                      "joint transform of the altitude and the horizontal fluctuation",
                                      [e = end_index, c, theta](const Summary& m) {
                                          return std::exp(-c * m.gamma[e] + theta * m.horiz[e]);
                                      }});
                });
            }
        }
    }

    if (has(Statistic::Moments)) {
        for (double x : spec.grid) {
            const std::size_t g = grid_index(x);
            const std::string tag = "[x=" + fmt(x) + "]";
            guarded("mean_gamma" + tag, [&] {
                const std::size_t j = marginal_index(x);
                const double limit =
                    limits::eta_expectation(marginal_grid(x), [&](std::span<const double> y) { return y[j]; }, a1, c1, quad);
                probes.push_back({"mean_gamma" + tag, RowKind::MonteCarlo, limit, spec.quad_tol, "E eta~_x",
                                  [g](const Summary& m) { return m.gamma[g]; }});
            });
            if (x > 0.0)
                probes.push_back({"mean_horiz" + tag, RowKind::MonteCarlo, 0.0, 0.0, "centred horizontal count",
                                  [g](const Summary& m) { return m.horiz[g]; }});
        }
    }

    if (has(Statistic::Cdf)) {
        for (double t : spec.cdf_points) {
            const std::string tag = "[x=1,t=" + fmt(t) + "]";
            guarded("cdf_gamma" + tag, [&] {
                const double limit = limits::eta_expectation(
                    {0.0, 1.0}, [t](std::span<const double> y) { return y[1] <= t ? 1.0 : 0.0; }, a1, c1, quad, {t});
                probes.push_back({"cdf_gamma" + tag, RowKind::MonteCarlo, limit, spec.quad_tol,
                                  "P(eta~_1 <= t)",
                                  [e = end_index, t](const Summary& m) { return m.gamma[e] <= t ? 1.0 : 0.0; }});
            });
        }
    }

    const sampler::BackwardTable table = sampler::BackwardTable::build(model, L, spec.table_eps);
    std::vector<std::size_t> marks;
    for (double x : spec.grid) marks.push_back(static_cast<std::size_t>(std::floor(L * x + 1e-9)));
    const std::size_t chunks = (spec.M + sampler::kChunkSize - 1) / sampler::kChunkSize;
    std::vector<std::vector<MeanAccumulator>> partial(chunks, std::vector<MeanAccumulator>(probes.size()));

    sampler::for_each_chunk(spec.M, spec.seed, spec.workers,
                            [&](std::size_t chunk, sampler::Rng& rng, std::size_t first, std::size_t last) {
        Summary m;
        m.gamma.resize(marks.size());
        m.horiz.resize(marks.size());
        std::vector<int> flats(L + 1);
        for (std::size_t i = first; i < last; ++i) {
            const MotzkinPath path = sampler::sample_path(table, rng);
            int up = 0, flat = 0, down = 0;
            flats[0] = 0;
            for (int k = 1; k <= L; ++k) {
                up += path.up(k);
                flat += path.flat(k);
                down += path.down(k);
                flats[k] = flat;
            }
            if (up + flat + down != L || up - down != path.end() - path.start())
                throw std::logic_error("step counts violate U + H + D = L or U - D = gamma_L - gamma_0");
            for (std::size_t g = 0; g < marks.size(); ++g) {
                m.gamma[g] = scale * path[marks[g]];
                m.horiz[g] = (flats[marks[g]] - s / top * static_cast<double>(marks[g])) / std::sqrt(double(L));
            }
            m.up = double(up) / L;
            m.flat = double(flat) / L;
            m.down = double(down) / L;
            for (std::size_t j = 0; j < probes.size(); ++j) partial[chunk][j].add(probes[j].f(m));
        }
    });

    for (std::size_t j = 0; j < probes.size(); ++j) {
        MeanAccumulator total;
        for (const auto& chunk : partial) total.merge(chunk[j]);
        ReportRow row;
        row.L = L;
        row.statistic = probes[j].name;
        row.kind = probes[j].kind;
        row.empirical = total.mean;
        row.stderr_ = total.stderr_();
        row.limit = probes[j].limit;
        row.tolerance = probes[j].tolerance;
        row.note = probes[j].note;
        // a statistic that is constant on every sample (e.g. at x = 0 for H) has no spread
        if (row.kind == RowKind::MonteCarlo && !(row.stderr_ > 0.0)) {
            row.kind = RowKind::Deterministic;
            row.tolerance = std::max(row.tolerance, 1e-12);
            row.relative = true;
        }
        report.add(row);
    }
    return report;
}

ConvergenceReport summarize_sample(const std::vector<MotzkinPath>& paths, double sigma) {
    ConvergenceReport report;
    report.experiment = "sample_summary";
    report.config = {{"sigma", sigma}, {"M", paths.size()}};
    if (paths.empty()) return report;
    const double top = 2.0 + sigma;
    MeanAccumulator up, flat, down, start, end;
    for (const MotzkinPath& p : paths) {
        const double L = static_cast<double>(p.length());
        int u = 0, h = 0;
        for (std::size_t k = 1; k <= p.length(); ++k) {
            u += p.up(k);
            h += p.flat(k);
        }
        up.add(u / L);
        flat.add(h / L);
        down.add((L - u - h) / L);
        start.add(p.start());
        end.add(p.end());
    }
    const int L = static_cast<int>(paths.front().length());
    const auto info = [&](const std::string& name, const MeanAccumulator& acc, double reference, const std::string& note) {
        ReportRow r;
        r.L = L;
        r.statistic = name;
        r.kind = RowKind::Info;
        r.empirical = acc.mean;
        r.stderr_ = acc.stderr_();
        r.limit = reference;
        r.note = note;
        report.add(r);
    };
    info("frac_up", up, 1.0 / top, "limit 1/(2+sigma)");
    info("frac_horiz", flat, sigma / top, "limit sigma/(2+sigma)");
    info("frac_down", down, 1.0 / top, "limit 1/(2+sigma)");
    info("mean_start", start, 0.0, "gamma_0");
    info("mean_end", end, 0.0, "gamma_L");
    return report;
}

}  // namespace motzkin::harness
