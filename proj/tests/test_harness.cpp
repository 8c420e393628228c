#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "motzkin/core/errors.hpp"
#include "motzkin/harness/brownian_oracle.hpp"
#include "motzkin/harness/identity_suite.hpp"
#include "motzkin/harness/prop13.hpp"
#include "motzkin/harness/report.hpp"
#include "motzkin/harness/theorem1.hpp"
#include "motzkin/limits/special.hpp"

using namespace motzkin;
using namespace motzkin::harness;

namespace {

ReportRow mc_row(double empirical, double stderr_, double limit, double tolerance = 0.0) {
    ReportRow r;
    r.statistic = "x";
    r.empirical = empirical;
    r.stderr_ = stderr_;
    r.limit = limit;
    r.tolerance = tolerance;
    return r;
}

std::string json_text(const ConvergenceReport& r) {
    std::ostringstream out;
    write_json(out, r);
    return out.str();
}

std::string csv_text(const ConvergenceReport& r) {
    std::ostringstream out;
    write_csv(out, r);
    return out.str();
}

const ReportRow* find_row(const ConvergenceReport& r, const std::string& statistic, int L = -1) {
    for (const ReportRow& row : r.rows)
        if (row.statistic == statistic && (L < 0 || row.L == L)) return &row;
    return nullptr;
}

ExperimentSpec small_theorem1() {
    ExperimentSpec s;
    s.params.length = 40;
    s.M = 3000;
    s.seed = 11;
    s.statistics = {Statistic::Laplace, Statistic::Moments, Statistic::Cdf};
    return s;
}

}  // namespace

TEST_CASE("report verdicts") {
    ConvergenceReport r;
    r.add(mc_row(1.02, 0.01, 1.0));
    r.add(mc_row(1.04, 0.01, 1.0));
    r.add(mc_row(1.04, 0.01, 1.0, 0.011));
    CHECK(r.rows[0].verdict == "pass");
    CHECK(r.rows[1].verdict == "fail");
    CHECK(r.rows[2].verdict == "pass");
    CHECK(r.rows[1].z() == doctest::Approx(4.0));
    CHECK_THROWS_AS(r.add(mc_row(1.0, 0.0, 1.0)), Error);

    ReportRow det;
    det.kind = RowKind::Deterministic;
    det.empirical = 100.0;
    det.limit = 100.0 + 1e-7;
    det.tolerance = 1e-8;
    det.relative = true;
    r.add(det);
    CHECK(r.rows.back().verdict == "pass");
    CHECK(r.rows.back().stderr_ == 1e-8);
    det.relative = false;
    r.add(det);
    CHECK(r.rows.back().verdict == "fail");

    ReportRow info = mc_row(5.0, 0.0, 0.0);
    info.kind = RowKind::Info;
    r.add(info);
    CHECK(r.rows.back().verdict == "info");
    r.add(mc_row(std::nan(""), 1.0, 0.0));
    CHECK(r.rows.back().verdict == "fail");

    r.add_error(7, "y", "QuadratureNotConverged", "nope");
    CHECK(r.rows.back().verdict == "QuadratureNotConverged");
    CHECK(r.count("pass") == 3);
    CHECK(r.count("fail") == 3);
    CHECK_FALSE(r.passed());

    ConvergenceReport ok;
    ok.add(mc_row(1.0, 0.1, 1.0));
    ok.add(info);
    CHECK(ok.passed());
}

TEST_CASE("report serialization") {
    ConvergenceReport r;
    r.experiment = "demo";
    r.config = {{"seed", 3}};
    r.add(mc_row(0.1, 0.25, 1.0 / 3.0));
    ReportRow extra = mc_row(0.5, 0.1, 0.5);
    extra.statistic = "y";
    extra.L = 20;
    r.add(extra);

    const nlohmann::json j = to_json(r);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["experiment"] == "demo");
    CHECK(j["config"]["seed"] == 3);
    CHECK(j["rows"].size() == 2);
    // doubles survive a text round trip exactly
    CHECK(std::stod(j["rows"][0]["limit"].get<std::string>()) == 1.0 / 3.0);
    CHECK(json_text(r) == json_text(r));

    const std::string csv = csv_text(r);
    CHECK(csv.rfind("# motzkin-report schema_version=1", 0) == 0);
    CHECK(csv.find("\n# config={\"seed\":3}\n") != std::string::npos);
    CHECK(csv.find("L,statistic,kind,empirical,stderr,limit,gap,gap_over_stderr,tolerance,verdict") != std::string::npos);

    std::ostringstream plot;
    write_gnuplot(plot, r, "y");
    CHECK(plot.str().find("20 0\n") != std::string::npos);
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("accumulators") {
    MeanAccumulator all, left, right;
    RatioAccumulator ratio;
    double sw = 0.0, swf = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = std::sin(i * 1.7) + 0.01 * i;
        all.add(x);
        (i < 37 ? left : right).add(x);
        const double w = 1.0 + 0.5 * std::cos(i);
        ratio.add(w, x);
        sw += w;
        swf += w * x;
    }
    left.merge(right);
    CHECK(left.n == all.n);
    CHECK(left.mean == doctest::Approx(all.mean).epsilon(1e-14));
    CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
    CHECK(all.stderr_() == doctest::Approx(std::sqrt(all.variance() / 100.0)));
    CHECK(ratio.value() == doctest::Approx(swf / sw).epsilon(1e-14));
    CHECK(ratio.stderr_() > 0.0);

    // constant weights reduce the ratio estimator to the plain mean
    RatioAccumulator flat;
    MeanAccumulator plain;
    for (int i = 0; i < 50; ++i) {
        flat.add(2.0, i * 0.1);
        plain.add(i * 0.1);
    }
    CHECK(flat.value() == doctest::Approx(plain.mean));
    CHECK(flat.stderr_() == doctest::Approx(plain.stderr_()).epsilon(1e-12));
}

TEST_CASE("identity suite") {
    const ConvergenceReport r = run_identity_suite();
    CHECK(r.rows.size() >= 30);
    CHECK(r.count("fail") == 0);
    CHECK(r.passed());
    for (const ReportRow& row : r.rows) CHECK(row.kind == RowKind::Deterministic);

    const ConvergenceReport strict = run_identity_suite(IdentityTolerances::with_overrides({{"quadrature", 1e-16}}));
    CHECK(strict.rows.size() == r.rows.size());
    CHECK(strict.count("QuadratureNotConverged") > 0);
    CHECK_FALSE(strict.passed());

    CHECK(IdentityTolerances::with_overrides({}).to_json() == IdentityTolerances{}.to_json());
    CHECK(IdentityTolerances::with_overrides({{"duality", 1e-3}}).duality == 1e-3);
    CHECK_THROWS_AS(IdentityTolerances::with_overrides({{"nonsense", 1.0}}), Error);
    CHECK_THROWS_AS(IdentityTolerances::with_overrides({{"markov", -1.0}}), Error);
}

TEST_CASE("theorem1 experiment") {
    ExperimentSpec empty;
    CHECK(run_theorem1_experiment(empty).rows.empty());

    ExperimentSpec bad;
    bad.grid = {0.2, 1.0};
    CHECK_THROWS_AS(bad.validate(), Error);
    bad.grid = {0.0, 0.7, 0.3, 1.0};
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK(parse_statistic("cdf-distance") == Statistic::Cdf);
    CHECK_THROWS_AS(parse_statistic("median"), Error);

    ExperimentSpec s = small_theorem1();
    const ConvergenceReport r = run_theorem1_experiment(s);
    CHECK(r.rows.size() > 20);
    // rows against exact finite-L values test the sampler itself
    int exact = 0;
    for (const ReportRow& row : r.rows) {
        if (row.statistic.find("_exact_L") == std::string::npos) continue;
        ++exact;
        CHECK_MESSAGE(row.verdict == "pass", row.statistic);
    }
    CHECK(exact >= 3);
    for (const ReportRow& row : r.rows)
        if (row.statistic.rfind("limit_routes", 0) == 0) CHECK_MESSAGE(row.verdict == "pass", row.statistic);

}

TEST_CASE("theorem1 determinism") {
    ExperimentSpec s = small_theorem1();
    s.grid = {0.0, 1.0};
    s.statistics = {Statistic::Moments};
    const ConvergenceReport r = run_theorem1_experiment(s);
    const std::string once = json_text(r);
    CHECK(json_text(run_theorem1_experiment(s)) == once);
    s.workers = 3;
    const ConvergenceReport threaded = run_theorem1_experiment(s);
    // the config records the worker count; the rows do not depend on it
    CHECK(to_json(threaded)["rows"] == to_json(r)["rows"]);
    CHECK(json_text(threaded) != once);
    s.seed = 12;
    CHECK(to_json(run_theorem1_experiment(s))["rows"] != to_json(r)["rows"]);
}

TEST_CASE("Brownian oracle") {
    limits::KernelParams kp;
    kp.a = 1.0;
    kp.c = 1.0;
    OracleOptions opt;
    opt.mesh = 512;
    const std::size_t M = 20000;
    const auto paths = run_brownian_oracle(kp, {0.5, 1.0}, M, 5, opt);
    REQUIRE(paths.size() == M);

    MeanAccumulator mass, laplace;
    for (const OraclePath& p : paths) {
        CHECK(p.eta_min <= p.eta_min_mesh);
        CHECK(p.eta_min <= std::min(0.0, std::min(p.eta[0], p.eta[1])));
        mass.add(p.weight);
        laplace.add(p.weight * std::exp(-p.eta[1]));
    }
    CHECK(std::abs(mass.mean - 1.0) <= 3 * mass.stderr_());
    // E exp(-eta_1) = C_{a+sqrt2, c-sqrt2} / C_{a,c}
    const double s2 = std::numbers::sqrt2;
    const double closed = limits::norm_const_ac(1.0 + s2, 1.0 - s2) / limits::norm_const_ac(1.0, 1.0);
    CHECK(std::abs(laplace.mean - closed) <= 3 * laplace.stderr_());

    opt.workers = 4;
    const auto threaded = run_brownian_oracle(kp, {0.5, 1.0}, 300, 5, opt);
    opt.workers = 1;
    const auto serial = run_brownian_oracle(kp, {0.5, 1.0}, 300, 5, opt);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(threaded[i].weight == serial[i].weight);
        CHECK(threaded[i].eta == serial[i].eta);
    }
    CHECK_THROWS_AS(run_brownian_oracle(kp, {1.5}, 10, 1, opt), Error);
    limits::KernelParams degenerate;
    degenerate.a = 1.0;
    degenerate.c = -1.0;
    CHECK_THROWS_AS(run_brownian_oracle(degenerate, {1.0}, 10, 1, opt), Error);
}

TEST_CASE("oracle mesh study") {
    limits::KernelParams kp;
    const ConvergenceReport r = run_oracle_mesh_study(kp, {16, 64, 256}, 4000, 9);
    const ReportRow* trend = find_row(r, "mesh_min_bias_decreasing");
    REQUIRE(trend != nullptr);
    CHECK(trend->verdict == "pass");
    const ReportRow* coarse = find_row(r, "mesh_min_bias", 16);
    const ReportRow* fine = find_row(r, "mesh_min_bias", 256);
    REQUIRE(coarse != nullptr);
    REQUIRE(fine != nullptr);
    // the mesh-point minimum sits above the true one
    CHECK(fine->empirical > 0.0);
    CHECK(coarse->empirical > 2.0 * fine->empirical);
}

TEST_CASE("prop13 experiment") {
    Prop13Spec s;
    s.params.form = BoundaryForm::Exponential;
    s.Ls = {20, 40, 80};
    s.M = 3000;
    s.mesh = 256;
    s.rn_exact_max_L = 5;
    const ConvergenceReport r = run_prop13_experiment(s);
    for (int L = 1; L <= 5; ++L) {
        const ReportRow* row = find_row(r, "rn_exact_law", L);
        REQUIRE(row != nullptr);
        CHECK(row->verdict == "pass");
    }
    int compared = 0;
    for (const ReportRow& row : r.rows) {
        if (row.statistic.rfind("direct_vs_reweighted", 0) != 0) continue;
        ++compared;
        CHECK_MESSAGE(row.verdict == "pass", row.statistic, " L=", row.L);
    }
    CHECK(compared == 15);
    CHECK(find_row(r, "oracle_mass") != nullptr);
    CHECK(find_row(r, "limit_gap_trend[atan_end]") != nullptr);
    CHECK(json_text(run_prop13_experiment(s)) == json_text(r));

    s.M = 0;
    CHECK(run_prop13_experiment(s).rows.size() == 5);
    s.params.form = BoundaryForm::Linear;
    CHECK_THROWS_AS(run_prop13_experiment(s), Error);
}
