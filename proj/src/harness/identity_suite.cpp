#include "motzkin/harness/identity_suite.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "motzkin/core/errors.hpp"
#include "motzkin/core/partition.hpp"
#include "motzkin/limits/identities.hpp"
#include "motzkin/limits/kernels.hpp"
#include "motzkin/limits/laplace.hpp"
#include "motzkin/limits/markov_rep.hpp"
#include "motzkin/limits/measures.hpp"
#include "motzkin/limits/partition_integral.hpp"
#include "motzkin/limits/special.hpp"

namespace motzkin::harness {

namespace {

using limits::QuadOptions;

std::string tag(std::initializer_list<std::pair<const char*, double>> items) {
    std::string out = "[";
    for (const auto& [name, value] : items) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%s%s=%g", out.size() > 1 ? "," : "", name, value);
        out += buf;
    }
    return out + "]";
}

double norm_const_by_quadrature(double a, double c, const QuadOptions& opt) {
    const auto levels = limits::nested_levels(opt, 2);
    const auto outer = [&](double x) {
        const auto inner = [&](double y) {
            const double k = limits::killed_bm_kernel(1.0, x, y);
            return k == 0.0 ? 0.0 : std::exp(-(c * x + a * y) / std::numbers::sqrt2) * k;
        };
        const double breaks[] = {x - 10.0, x - 6.0, x - 3.0, x, x + 3.0, x + 6.0, x + 10.0};
        return limits::integrate_half_line(inner, 0.0, breaks, levels[1]).value;
    };
    const double breaks[] = {1.0, 4.0, 16.0};
    return limits::integrate_half_line(outer, 0.0, breaks, levels[0]).value;
}

}  // namespace

IdentityTolerances IdentityTolerances::with_overrides(const std::map<std::string, double>& overrides) {
    IdentityTolerances t;
    const std::map<std::string, double*> fields{
        {"quadrature", &t.quadrature}, {"partition", &t.partition},     {"asymptotic_1e3", &t.asymptotic_1e3},
        {"asymptotic_1e4", &t.asymptotic_1e4}, {"norm_const", &t.norm_const}, {"gaussian", &t.gaussian},
        {"markov", &t.markov},         {"duality", &t.duality},         {"laplace", &t.laplace},
        {"kernels", &t.kernels}};
    for (const auto& [name, value] : overrides) {
        const auto it = fields.find(name);
        if (it == fields.end()) fail(ErrorCode::InvalidParams, "unknown tolerance '" + name + "'");
        if (!(value > 0.0)) fail(ErrorCode::InvalidParams, "tolerance '" + name + "' must be positive");
        *it->second = value;
    }
    return t;
}

nlohmann::json IdentityTolerances::to_json() const {
    return {{"quadrature", quadrature}, {"partition", partition}, {"asymptotic_1e3", asymptotic_1e3},
            {"asymptotic_1e4", asymptotic_1e4}, {"norm_const", norm_const}, {"gaussian", gaussian},
            {"markov", markov}, {"duality", duality}, {"laplace", laplace}, {"kernels", kernels}};
}

ConvergenceReport run_identity_suite(const IdentityTolerances& tol) {
    ConvergenceReport report;
    report.experiment = "identities";
    report.config = {{"tolerances", tol.to_json()}};
    QuadOptions q;
    q.rel_tol = tol.quadrature;

    // evaluate() returns (lhs, rhs); failures become error rows
    const auto row = [&](int L, const std::string& name, double tolerance, bool relative,
                         const std::function<std::pair<double, double>()>& evaluate, const std::string& note = "") {
        try {
            const auto [lhs, rhs] = evaluate();
            ReportRow r;
            r.L = L;
            r.statistic = name;
            r.kind = RowKind::Deterministic;
            r.empirical = lhs;
            r.limit = rhs;
            r.tolerance = tolerance;
            r.relative = relative;
            r.note = note;
            report.add(r);
        } catch (const Error& e) {
            report.add_error(L, name, std::string(to_string(e.code())), e.what());
        }
    };
    const auto pair_of = [](const limits::IdentityValue& v) { return std::pair{v.lhs, v.rhs}; };

    for (auto [a, c] : {std::pair{1.0, 2.0}, std::pair{0.5, 0.5}, std::pair{-0.3, 1.0}, std::pair{3.0, 0.2},
                        std::pair{1.4, -0.9}}) {
        row(0, "norm_const" + tag({{"a", a}, {"c", c}}), tol.norm_const, true,
            [&] { return std::pair{limits::norm_const_ac(a, c), norm_const_by_quadrature(a, c, q)}; },
            "closed form vs double integral");
    }

    for (auto [a, c, tau] : {std::tuple{1.0, 2.0, 1.0}, std::tuple{1.0, 2.0, 0.5}, std::tuple{1.0, 2.0, 2.0},
                             std::tuple{0.7, 0.7, 1.0}, std::tuple{-0.4, 1.5, 1.0}}) {
        row(0, "gaussian_identity" + tag({{"a", a}, {"c", c}, {"tau", tau}}), tol.gaussian, true,
            [&] { return pair_of(limits::gaussian_integral_identity(a, c, tau, q)); });
    }

    row(1, "partition" + tag({{"rho0", 0.5}, {"rho1", 0.5}, {"sigma", 1.0}}), tol.partition, false,
        [&] { return std::pair{std::exp(limits::log_partition_integral(GeometricModel{1.0, 0.5, 0.5}, 1, q)), 8.0 / 3.0}; },
        "L = 1 against 8/3");
    for (double r0 : {0.3, 0.6, 0.9}) {
        for (double r1 : {0.5, 0.95, 1.05}) {
            for (double s : {0.5, 1.0, 2.0}) {
                const GeometricModel m{s, r0, r1};
                row(20, "partition" + tag({{"rho0", r0}, {"rho1", r1}, {"sigma", s}}), tol.partition, false,
                    [&] {
                        return std::pair{partition_function(m, 20).log_value, limits::log_partition_integral(m, 20, q)};
                    },
                    "log values: transfer matrix vs spectral integral");
            }
        }
    }

    for (auto [a, c, s] : {std::tuple{1.0, 1.0, 1.0}, std::tuple{-0.5, 1.5, 1.0}, std::tuple{1.0, 2.0, 0.5}}) {
        for (int L : {1000, 10000}) {
            ModelParams p;
            p.sigma = s;
            p.a = a;
            p.c = c;
            p.length = L;
            row(L, "asymptotic" + tag({{"a", a}, {"c", c}, {"sigma", s}}),
                L == 1000 ? tol.asymptotic_1e3 : tol.asymptotic_1e4, false,
                [&] { return std::pair{limits::log_partition_integral(p, q), limits::log_partition_asymptotic(p)}; },
                "log values: spectral integral vs asymptotic form");
        }
    }

    const GeometricModel mk{1.0, 0.5, 0.7};
    const limits::MarkovRepInput markov_cases[] = {
        {{1.4}, {0.7}, 0.8, 1.1},
        {{1.6, 0.9}, {1.2, 0.5}, 0.6, 0.9},
        {{2.0, 1.5, 0.8}, {0.9, 1.3, 0.6}, 0.7, -0.5},
    };
    for (const auto& in : markov_cases) {
        const int L = static_cast<int>(in.t.size());
        row(L, "markov_rep" + tag({{"z0", in.z0}, {"z1", in.z1}}), tol.markov, true,
            [&] { return pair_of(limits::markov_rep_evaluate(in, mk, q)); }, "enumeration vs semicircle process");
    }
    row(3, "markov_rep_simplified" + tag({{"z0", 0.9}}), tol.markov, true,
        [&] { return pair_of(limits::markov_rep_simplified({0.6, 0.8, 1.1}, 0.9, mk, q)); });

    {
        limits::DualityInput in;
        in.a = 1.0;
        in.c = 1.0;
        in.c0 = 0.3;
        in.cd = 0.2;
        in.grid = {0.0, 0.4, 1.0};
        for (auto [tau, c1] : {std::pair{1.0 / 3.0, 0.8}, std::pair{2.0 / 3.0, 0.8}, std::pair{0.5, 2.5}}) {
            in.tau = tau;
            in.cs = {c1};
            row(2, "duality" + tag({{"tau", tau}, {"c1", c1}}), tol.duality, true,
                [&] { return pair_of(limits::duality_evaluate(in, q)); });
        }
        in.tau = 0.5;
        in.cs = {0.6, 1.1};
        in.grid = {0.0, 0.3, 0.7, 1.0};
        row(3, "duality" + tag({{"tau", 0.5}, {"c1", 0.6}, {"c2", 1.1}}), tol.duality, true,
            [&] { return pair_of(limits::duality_evaluate(in, q)); });
    }

    {
        limits::LaplaceInput in;
        in.sigma = 1.0;
        const auto routes = [&] {
            const limits::LaplaceResult r = limits::limit_laplace(in, q);
            return std::pair{r.psi_kernel, *r.psi_eta};
        };
        in.a = 0.8;
        in.c = 1.3;
        in.grid = {0.0, 1.0};
        in.cs = {0.3, 0.5};
        row(1, "laplace_routes" + tag({{"c0", 0.3}, {"c1", 0.5}}), tol.laplace, true, routes,
            "Biane-kernel integral vs fdd-density expectation");
        in.a = 1.0;
        in.c = 1.0;
        in.cs = {0.1, 0.1};
        row(1, "laplace_routes" + tag({{"c0", 0.1}, {"c1", 0.1}}), tol.laplace, true, routes);
        in.c = 0.6;
        in.grid = {0.0, 0.45, 1.0};
        in.cs = {0.2, 0.7, 0.4};
        row(2, "laplace_routes" + tag({{"c0", 0.2}, {"c1", 0.7}, {"c2", 0.4}}), tol.laplace, true, routes);
        const double s = std::sqrt(3.0);
        in.c = 1.3;
        in.a = 0.8;
        in.grid = {0.0, 1.0};
        in.cs = {0.3, 0.5};
        row(1, "laplace_closed_form" + tag({{"c0", 0.3}, {"c1", 0.5}}), tol.laplace, true, [&] {
            const double closed = limits::norm_const_ac(2 * (0.8 + 0.5) / s, 2 * (1.3 + 0.3) / s) /
                                  limits::norm_const_ac(2 * 0.8 / s, 2 * 1.3 / s);
            return std::pair{limits::limit_laplace(in, q).psi_kernel, closed};
        });
    }

    row(0, "semicircle_mass" + tag({{"t", 1.0}}), tol.kernels, false, [&] {
        return std::pair{limits::integrate([](double y) { return limits::semicircle_density(1.0, y); }, -2.0, 2.0, q).value, 1.0};
    });
    row(0, "stationary_u_mass" + tag({{"delta", 0.5}, {"y", 0.3}}), tol.kernels, false, [&] {
        const auto f = [](double y) { return limits::stationary_u_transition(0.5, 0.3, y); };
        return std::pair{limits::integrate(f, -2.0, 2.0, q).value, 1.0};
    });
    row(0, "biane_mass" + tag({{"t", 1.0}, {"x", 1.0}}), tol.kernels, false, [&] {
        const auto f = [](double y) { return limits::biane_kernel(1.0, 1.0, y); };
        return std::pair{limits::integrate_half_line(f, 0.0, {}, q).value, 1.0};
    });
    row(0, "killed_bm_mass" + tag({{"t", 1.0}, {"x", 1.0}}), tol.kernels, false, [&] {
        const auto f = [](double y) { return limits::killed_bm_kernel(1.0, 1.0, y); };
        const double breaks[] = {1.0, 4.0};
        return std::pair{limits::integrate_half_line(f, 0.0, breaks, q).value, std::erf(1.0 / std::numbers::sqrt2)};
    });
    for (double rho : {0.5, 2.0}) {
        row(0, "mp_mass" + tag({{"rho", rho}}), tol.kernels, false,
            [&] { return std::pair{limits::mp_measure(rho).total_mass(), 1.0}; });
    }
    row(0, "chebyshev_series" + tag({{"x", 1.0}, {"z", 0.3}}), 1e-10, true,
        [&] { return std::pair{limits::chebyshev_series(1.0, 0.3, 50), limits::chebyshev_generating(1.0, 0.3)}; });
    return report;
}

}  // namespace motzkin::harness
