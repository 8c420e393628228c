// Acceptance checks, one line per criterion:
//   acceptance            run all
//   acceptance 3 9        run the listed criteria
// Exit status is 0 when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "motzkin/core/combinatorics.hpp"
#include "motzkin/core/errors.hpp"
#include "motzkin/core/partition.hpp"
#include "motzkin/harness/brownian_oracle.hpp"
#include "motzkin/harness/identity_suite.hpp"
#include "motzkin/harness/prop13.hpp"
#include "motzkin/harness/report.hpp"
#include "motzkin/harness/theorem1.hpp"
#include "motzkin/limits/identities.hpp"
#include "motzkin/limits/kernels.hpp"
#include "motzkin/limits/laplace.hpp"
#include "motzkin/limits/markov_rep.hpp"
#include "motzkin/limits/measures.hpp"
#include "motzkin/limits/partition_integral.hpp"
#include "motzkin/limits/special.hpp"
#include "motzkin/sampler/backward_table.hpp"
#include "motzkin/sampler/increment_law.hpp"
#include "motzkin/sampler/io.hpp"
#include "motzkin/sampler/sampler.hpp"

using namespace motzkin;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Tracks the worst observed gap against a bound.
class Worst {
public:
    explicit Worst(double bound) : bound_(bound) {}
    void see(double gap, const std::string& where) {
        if (!(gap <= bound_)) ok_ = false;
        if (!(gap <= worst_)) {
            worst_ = gap;
            where_ = where;
        }
        ++count_;
    }
    bool ok() const { return ok_; }
    std::string text(const std::string& what) const {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%d %s, worst %.3g at %s (bound %.3g)", count_, what.c_str(), worst_,
                      where_.c_str(), bound_);
        return buf;
    }

private:
    double bound_;
    double worst_ = 0.0;
    std::string where_ = "-";
    int count_ = 0;
    bool ok_ = true;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

double rel_gap(double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }

template <class F>
double de_half_line(F f) {
    boost::math::quadrature::exp_sinh<double> rule;
    return rule.integrate([&](double x) { return x > 1e3 ? 0.0 : f(x); }, 1e-13);
}

// No cutoff, for the y^{-3/2} tail of the Biane kernel.
template <class F>
double de_heavy_tail(F f) {
    boost::math::quadrature::exp_sinh<double> rule;
    return rule.integrate(f, 1e-13);
}

template <class F>
double de_interval(F f, double a, double b) {
    boost::math::quadrature::tanh_sinh<double> rule;
    return rule.integrate(f, a, b, 1e-13);
}

int workers() { return static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 8u)); }

// 1. W_{i,j}^{(L)} by the transfer sweep against a walk over {-1,0,1}^L.
Outcome combinatorial_exactness() {
    WeightModel<Rational> altitude;
    const auto q = [](long num, long den) {
        Rational r(num, den);
        r.canonicalize();
        return r;
    };
    altitude.a = [q](int n) { return q(n + 2, n + 1); };
    altitude.b = [q](int n) { return q(2 * n + 1, 3); };
    altitude.c = [q](int n) -> Rational { return q(1, n * n + 1) + q(1, 2); };
    const std::vector<std::pair<std::string, WeightModel<Rational>>> sets{
        {"unit", WeightModel<Rational>::constant(1, 1, 1)},
        {"sigma", WeightModel<Rational>::constant(Rational(3, 7), 1, 1)},
        {"altitude", altitude}};

    Outcome out;
    long checked = 0;
    for (int L = 0; L <= 10; ++L) {
        for (int i = 0; i <= L; ++i) {
            for (const auto& [name, w] : sets) {
                // every step sequence in {-1,0,1}^L, pruned once it goes negative
                std::vector<Rational> brute(i + L + 1, Rational(0));
                const std::function<void(int, int, const Rational&)> walk = [&](int k, int h, const Rational& weight) {
                    if (k == L) {
                        brute[h] += weight;
                        return;
                    }
                    walk(k + 1, h + 1, weight * w.a(h));
                    walk(k + 1, h, weight * w.b(h));
                    if (h > 0) walk(k + 1, h - 1, weight * w.c(h));
                };
                walk(0, i, Rational(1));
                for (int j = 0; j <= L; ++j) {
                    ++checked;
                    const Rational expected = j < static_cast<int>(brute.size()) ? brute[j] : Rational(0);
                    if (transfer_count(L, i, j, w) != expected) {
                        out.pass = false;
                        out.detail = name + " weights differ at L=" + std::to_string(L) + " i=" + std::to_string(i) +
                                     " j=" + std::to_string(j);
                        return out;
                    }
                }
            }
            // the path enumerator agrees with the brute force on unit weights
            for (int j = 0; j <= L; ++j) {
                Rational total(0);
                for (const MotzkinPath& p : enumerate_paths(L, i, j)) total += path_weight(p, sets[0].second);
                if (total != transfer_count(L, i, j, sets[0].second)) {
                    out.pass = false;
                    out.detail = "enumerate_paths differs at L=" + std::to_string(L);
                    return out;
                }
            }
        }
    }
    out.detail = std::to_string(checked) + " (L,i,j,weights) cells equal as rationals";
    return out;
}

// 2. Motzkin numbers by the convolution recurrence.
Outcome motzkin_numbers() {
    const long listed[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835};
    std::vector<long> m{1, 1};
    for (int n = 2; n < 10; ++n) {
        long next = m[n - 1];
        for (int k = 0; k <= n - 2; ++k) next += m[k] * m[n - 2 - k];
        m.push_back(next);
    }
    Outcome out;
    for (int L = 0; L < 10; ++L) {
        const Rational dp = transfer_count(L, 0, 0, WeightModel<Rational>::unit());
        if (m[L] != listed[L] || dp != listed[L] || motzkin_number(L) != listed[L]) {
            out.pass = false;
            out.detail = "mismatch at L=" + std::to_string(L);
            return out;
        }
    }
    out.detail = "1,1,2,4,9,21,51,127,323,835 by the DP, motzkin_number and the recurrence";
    return out;
}

// 3. Transfer matrix against the spectral integral.
Outcome partition_identities() {
    Worst worst(1e-8);
    for (int L : {1, 2, 5, 10, 20})
        for (double r0 : {0.3, 0.6, 0.9})
            for (double r1 : {0.5, 0.95, 1.05})
                for (double s : {0.5, 1.0, 2.0}) {
                    const GeometricModel m{s, r0, r1};
                    const double gap = std::abs(
                        std::expm1(partition_function(m, L).log_value - limits::log_partition_integral(m, L)));
                    worst.see(gap, "L=" + std::to_string(L) + " rho0=" + fmt(r0) + " rho1=" + fmt(r1) + " sigma=" + fmt(s));
                }
    return {worst.ok(), worst.text("relative gaps")};
}

// 4. Spectral integral against the asymptotic form, |log ratio|.
Outcome asymptotics() {
    Outcome out;
    std::ostringstream detail;
    for (auto [a, c, s] : {std::tuple{1.0, 1.0, 1.0}, std::tuple{-0.5, 1.5, 1.0}, std::tuple{1.0, 2.0, 0.5}}) {
        for (auto [L, bound] : {std::pair{1000, 0.05}, std::pair{10000, 0.02}}) {
            ModelParams p;
            p.sigma = s;
            p.a = a;
            p.c = c;
            p.length = L;
            const double gap = std::abs(limits::log_partition_integral(p) - limits::log_partition_asymptotic(p));
            if (!(gap <= bound)) out.pass = false;
            detail << (detail.tellp() ? " " : "") << "(" << fmt(a) << "," << fmt(c) << "," << fmt(s) << ")L=" << L
                   << ":" << fmt(gap);
        }
    }
    out.detail = "|log ratio| " + detail.str() + " (bounds 0.05 at 1e3, 0.02 at 1e4)";
    return out;
}

// 5. Closed-form normalizer against a double-exponential double integral.
Outcome closed_forms() {
    Worst norm(1e-6);
    for (auto [a, c] : {std::pair{1.0, 2.0}, std::pair{0.7, 0.7}, std::pair{-0.3, 1.0}, std::pair{3.0, 0.2},
                        std::pair{1.4, -0.9}}) {
        const double quad = de_half_line([&](double x) {
            return de_half_line([&](double y) {
                const double k = limits::killed_bm_kernel(1.0, x, y);
                return k == 0.0 ? 0.0 : std::exp(-(c * x + a * y) / std::numbers::sqrt2) * k;
            });
        });
        norm.see(rel_gap(limits::norm_const_ac(a, c), quad), "a=" + fmt(a) + " c=" + fmt(c));
    }
    Worst gauss(1e-8);
    for (auto [a, c, tau] : {std::tuple{1.0, 2.0, 1.0}, std::tuple{0.7, 0.7, 0.5}, std::tuple{-0.4, 1.5, 2.0}}) {
        const limits::IdentityValue v = limits::gaussian_integral_identity(a, c, tau);
        gauss.see(v.rel_gap(), "a=" + fmt(a) + " c=" + fmt(c) + " tau=" + fmt(tau));
    }
    return {norm.ok() && gauss.ok(), "norm_const: " + norm.text("points") + "; gaussian: " + gauss.text("points")};
}

// 6. Enumeration side against the semicircle-process side.
Outcome markov_representation() {
    const GeometricModel mk{1.0, 0.5, 0.7};
    const limits::MarkovRepInput cases[] = {
        {{1.4}, {0.7}, 0.8, 1.1},
        {{1.6, 0.9}, {1.2, 0.5}, 0.6, 0.9},
        {{2.0, 1.5, 0.8}, {0.9, 1.3, 0.6}, 0.7, -0.5},
    };
    Worst worst(1e-6);
    for (const auto& in : cases)
        worst.see(limits::markov_rep_evaluate(in, mk).rel_gap(), "L=" + std::to_string(in.t.size()));
    return {worst.ok(), worst.text("cases")};
}

// 7. Duality at d = 2, and two routes to the d = 1 Laplace transform.
Outcome duality() {
    Worst dual(1e-6);
    limits::DualityInput in;
    in.a = 1.0;
    in.c = 1.0;
    in.c0 = 0.3;
    in.cd = 0.2;
    in.grid = {0.0, 0.4, 1.0};
    for (auto [tau, c1] : {std::pair{1.0 / 3.0, 0.8}, std::pair{2.0 / 3.0, 0.8}, std::pair{0.5, 2.5}}) {
        in.tau = tau;
        in.cs = {c1};
        dual.see(limits::duality_evaluate(in).rel_gap(), "tau=" + fmt(tau) + " c1=" + fmt(c1));
    }
    Worst routes(1e-5);
    for (auto [a, c, c0, c1] : {std::tuple{0.8, 1.3, 0.3, 0.5}, std::tuple{1.0, 1.0, 0.1, 0.1}, std::tuple{1.5, 0.6, 0.7, 0.2}}) {
        limits::LaplaceInput lp;
        lp.sigma = 1.0;
        lp.a = a;
        lp.c = c;
        lp.grid = {0.0, 1.0};
        lp.cs = {c0, c1};
        const limits::LaplaceResult r = limits::limit_laplace(lp);
        routes.see(rel_gap(r.psi_kernel, *r.psi_eta), "a=" + fmt(a) + " c=" + fmt(c));
    }
    return {dual.ok() && routes.ok(), "d=2: " + dual.text("points") + "; d=1: " + routes.text("points")};
}

// 8. Increment law of the reweighted walk against enumeration, exactly.
Outcome rn_exactness() {
    const Rational sigma(3, 2), r0(2, 3), r1(5, 4);
    const Rational sigma2(1), s0(1, 2), s1(1, 2);
    for (int L = 1; L <= 8; ++L) {
        if (sampler::increment_law_from_paths(L, sigma, r0, r1) != sampler::increment_law_from_walk(L, sigma, r0, r1) ||
            sampler::increment_law_from_paths(L, sigma2, s0, s1) != sampler::increment_law_from_walk(L, sigma2, s0, s1))
            return {false, "laws differ at L=" + std::to_string(L)};
    }
    return {true, "L=1..8 at (sigma,rho0,rho1) = (3/2,2/3,5/4) and (1,1/2,1/2), equal as rationals"};
}

// 9. Laplace transform of the scaled end altitude and the horizontal fraction.
Outcome theorem_at_desk_scale() {
    harness::ExperimentSpec spec;
    spec.params.sigma = 1.0;
    spec.params.a = 1.0;
    spec.params.c = 1.0;
    spec.params.length = 400;
    spec.M = 100000;
    spec.grid = {0.0, 1.0};
    spec.statistics = {harness::Statistic::Laplace};
    spec.cs = {0.25, 0.5, 1.0};
    spec.thetas = {};
    spec.seed = 1;
    spec.workers = workers();
    spec.k = 3.0;
    spec.quad_tol = 1e-4;
    const harness::ConvergenceReport report = harness::run_theorem1_experiment(spec);

    Outcome out;
    std::ostringstream detail, exact;
    for (const harness::ReportRow& row : report.rows) {
        const bool target = row.statistic.rfind("laplace_gamma[x=1,", 0) == 0 || row.statistic == "frac_horiz";
        const bool finite_l = row.statistic.rfind("laplace_gamma_exact_L[x=1,", 0) == 0 ||
                              row.statistic == "frac_horiz_exact_L";
        if (target) {
            if (row.verdict != "pass") out.pass = false;
            detail << (detail.tellp() ? " " : "") << row.statistic << ":" << row.verdict << "(gap " << fmt(row.gap())
                   << ", " << fmt(row.z()) << " se)";
        } else if (finite_l) {
            exact << (exact.tellp() ? " " : "") << row.statistic << ":" << row.verdict;
        }
    }
    out.detail = detail.str() + "; finite-L references: " + exact.str();
    return out;
}

// 10. Brownian reweighting against fdd-density quadrature.
Outcome oracle_cross_validation() {
    limits::KernelParams kp;
    kp.a = 1.0;
    kp.c = 1.0;
    harness::OracleOptions opt;
    opt.mesh = 4096;
    opt.workers = workers();
    const harness::ConvergenceReport report = harness::run_oracle_check(kp, 100000, 1, opt, 3.0);
    Outcome out;
    std::ostringstream detail;
    for (const harness::ReportRow& row : report.rows) {
        if (row.verdict != "pass") out.pass = false;
        detail << (detail.tellp() ? " " : "") << row.statistic << ":" << row.verdict << "(" << fmt(row.z()) << " se)";
    }
    out.detail = detail.str();
    return out;
}

// 11. Chapman-Kolmogorov, normalizations and scaling of the kernel families.
Outcome kernel_properties() {
    using namespace limits;
    Worst ck(1e-6);
    const double s = 0.4, t = 0.9;
    for (auto [x, y] : {std::pair{0.5, 1.2}, std::pair{1.0, 1.0}, std::pair{2.0, 0.3}}) {
        const std::string at = "x=" + fmt(x) + " y=" + fmt(y);
        ck.see(rel_gap(de_half_line([&](double z) { return killed_bm_kernel(s, x, z) * killed_bm_kernel(t, z, y); }),
                       killed_bm_kernel(s + t, x, y)),
               "g " + at);
        // the Biane kernel has a t^2-wide peak near x; split there
        const auto p_chain = [&](double z) { return biane_kernel(s, x, z) * biane_kernel(t, z, y); };
        const double lo = std::min(x, y), hi = std::max(x, y);
        const double p = de_interval(p_chain, 0.0, lo) + de_interval(p_chain, lo, hi) +
                         de_heavy_tail([&](double z) { return p_chain(hi + z); });
        ck.see(rel_gap(p, biane_kernel(s + t, x, y)), "p " + at);
    }
    const double r = 1.3, u = 2.1;
    for (auto [x, y] : {std::pair{0.2, 1.0}, std::pair{-1.0, 2.5}, std::pair{1.1, -0.4}}) {
        const std::string at = "x=" + fmt(x) + " y=" + fmt(y);
        const double R = 2 * std::sqrt(r);
        ck.see(rel_gap(de_interval([&](double z) { return semicircle_transition(s, r, x, z) * semicircle_transition(r, u, z, y); },
                                   -R, R),
                       semicircle_transition(s, u, x, y)),
               "semicircle " + at);
        const double yu = y / 1.3;
        ck.see(rel_gap(de_interval([&](double z) { return stationary_u_transition(s, x, z) * stationary_u_transition(t, z, yu); },
                                   -2, 2),
                       stationary_u_transition(s + t, x, yu)),
               "U " + at);
    }

    Worst norm(1e-8);
    for (double x : {0.3, 1.0, 2.5}) {
        norm.see(std::abs(de_half_line([&](double y) { return killed_bm_kernel(0.8, x, y); }) - std::erf(x / std::sqrt(1.6))),
                 "g x=" + fmt(x));
        const auto pk = [&](double y) { return biane_kernel(0.8, x, y); };
        norm.see(std::abs(de_interval(pk, 0.0, x) + de_heavy_tail([&](double y) { return pk(x + y); }) - 1.0),
                 "p x=" + fmt(x));
    }
    for (double tt : {0.5, 1.0, 3.0}) {
        const double R = 2 * std::sqrt(tt);
        norm.see(std::abs(de_interval([&](double y) { return semicircle_density(tt, y); }, -R, R) - 1.0),
                 "semicircle t=" + fmt(tt));
        norm.see(std::abs(de_interval([&](double y) { return semicircle_transition(0.3, tt + 0.3, 0.5, y); },
                                      -2 * std::sqrt(tt + 0.3), 2 * std::sqrt(tt + 0.3)) -
                          1.0),
                 "semicircle transition t=" + fmt(tt));
    }
    norm.see(std::abs(de_interval(stationary_u_marginal, -2, 2) - 1.0), "U marginal");
    for (double delta : {0.1, 0.5, 2.0})
        for (double prev : {-1.5, 0.0, 1.9})
            norm.see(std::abs(de_interval([&](double y) { return stationary_u_transition(delta, prev, y); }, -2, 2) - 1.0),
                     "U delta=" + fmt(delta));
    for (double rho : {0.5, 2.0}) {
        const MixedMeasure m = mp_measure(rho);
        norm.see(std::abs(de_interval(m.density, -2, 2) + m.atom_mass - 1.0), "mp rho=" + fmt(rho));
    }
    {
        const std::vector<double> grid{0.0, 1.0};
        const double mass = de_half_line([&](double y0) {
            return de_half_line([&](double y1) {
                const double v[] = {y0, y1};
                return eta_fdd_pdf(grid, v, 1.0, 1.0);
            });
        });
        norm.see(std::abs(mass - 1.0), "eta fdd");
    }

    Worst scale(64 * std::numeric_limits<double>::epsilon());
    for (double lam : {0.3, 2.0, 4.0}) {
        const double rl = std::sqrt(lam);
        scale.see(rel_gap(lam * killed_bm_kernel(lam * lam * 0.8, lam * 0.4, lam * 1.3), killed_bm_kernel(0.8, 0.4, 1.3)),
                  "g lambda=" + fmt(lam));
        scale.see(rel_gap(lam * lam * biane_kernel(lam * 0.7, lam * lam * 0.6, lam * lam * 2.2), biane_kernel(0.7, 0.6, 2.2)),
                  "p lambda=" + fmt(lam));
        scale.see(rel_gap(rl * semicircle_density(lam * 1.2, rl * 0.9), semicircle_density(1.2, 0.9)),
                  "semicircle lambda=" + fmt(lam));
        scale.see(rel_gap(rl * semicircle_transition(lam * 0.5, lam * 1.5, rl * 0.4, rl * -1.1),
                          semicircle_transition(0.5, 1.5, 0.4, -1.1)),
                  "semicircle transition lambda=" + fmt(lam));
    }
    return {ck.ok() && norm.ok() && scale.ok(),
            "CK: " + ck.text("points") + "; mass: " + norm.text("points") + "; scaling: " + scale.text("points")};
}

// 12. Every experiment run twice with the same seed and workers.
Outcome determinism() {
    const auto bytes = [](const harness::ConvergenceReport& r) {
        std::ostringstream out;
        harness::write_json(out, r);
        harness::write_csv(out, r);
        return out.str();
    };
    std::vector<std::pair<std::string, std::function<std::string()>>> runs;
    runs.emplace_back("identities", [&] { return bytes(harness::run_identity_suite()); });
    runs.emplace_back("theorem1", [&] {
        harness::ExperimentSpec spec;
        spec.params.length = 60;
        spec.M = 4000;
        spec.grid = {0.0, 1.0};
        spec.seed = 7;
        spec.workers = 3;
        return bytes(harness::run_theorem1_experiment(spec));
    });
    runs.emplace_back("prop13", [&] {
        harness::Prop13Spec spec;
        spec.params.form = BoundaryForm::Exponential;
        spec.Ls = {20, 40};
        spec.M = 2000;
        spec.mesh = 256;
        spec.seed = 7;
        spec.workers = 3;
        spec.rn_exact_max_L = 3;
        return bytes(harness::run_prop13_experiment(spec));
    });
    runs.emplace_back("oracle", [&] {
        limits::KernelParams kp;
        harness::OracleOptions opt;
        opt.mesh = 256;
        opt.workers = 3;
        return bytes(harness::run_oracle_check(kp, 5000, 7, opt));
    });
    runs.emplace_back("sample", [&] {
        const sampler::BackwardTable table = sampler::BackwardTable::build(GeometricModel{1.0, 0.9, 0.95}, 50);
        sampler::SampleMetadata meta;
        meta.seed = 7;
        meta.workers = 3;
        std::ostringstream out;
        sampler::write_paths_csv(out, sampler::sample_paths(table, 5000, 7, 3), meta);
        return out.str();
    });
    Outcome out;
    for (const auto& [name, run] : runs) {
        const std::string first = run();
        const bool same = first == run();
        if (!same) out.pass = false;
        out.detail += (out.detail.empty() ? "" : " ") + name + ":" + (same ? "identical" : "DIFFERENT") + "(" +
                      std::to_string(first.size()) + " bytes)";
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "combinatorial exactness", 10, combinatorial_exactness},
    {2, "Motzkin numbers", 1, motzkin_numbers},
    {3, "partition identities", 30, partition_identities},
    {4, "asymptotics", 10, asymptotics},
    {5, "closed form vs quadrature", 10, closed_forms},
    {6, "Markov representation", 60, markov_representation},
    {7, "duality", 60, duality},
    {8, "Radon-Nikodym exactness", 30, rn_exactness},
    {9, "scaled altitude at L=400", 300, theorem_at_desk_scale},
    {10, "Brownian oracle", 120, oracle_cross_validation},
    {11, "kernel properties", 30, kernel_properties},
    {12, "determinism", 0, determinism},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long id = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || id < 1 || id > 12) {
            std::fprintf(stderr, "usage: %s [criterion 1..12]...\n", argv[0]);
            return 2;
        }
        selected.push_back(static_cast<int>(id));
    }
    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt(std::round(secs * 100) / 100) + " s";
        if (c.budget_seconds > 0) {
            timing += " of " + fmt(c.budget_seconds) + " s";
            if (secs > c.budget_seconds) {
                out.pass = false;
                timing += " OVER BUDGET";
            }
        }
        all_pass = all_pass && out.pass;
        std::printf("%s %2d %s: %s [%s]\n", out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), timing.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
