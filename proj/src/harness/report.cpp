#include "motzkin/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "motzkin/core/errors.hpp"

namespace motzkin::harness {

namespace {

std::string kind_name(RowKind kind) {
    switch (kind) {
        case RowKind::MonteCarlo: return "monte_carlo";
        case RowKind::Deterministic: return "deterministic";
        case RowKind::Info: return "info";
    }
    return "unknown";
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double ReportRow::gap() const {
    const double diff = std::abs(empirical - limit);
    if (!relative) return diff;
    const double scale = std::max(std::abs(empirical), std::abs(limit));
    return scale > 0.0 ? diff / scale : 0.0;
}

double ReportRow::z() const { return stderr_ > 0.0 ? gap() / stderr_ : 0.0; }

void ConvergenceReport::add(ReportRow row) {
    switch (row.kind) {
        case RowKind::MonteCarlo:
            if (!(row.stderr_ > 0.0))
                fail(ErrorCode::InvalidParams, "Monte Carlo row '" + row.statistic + "' needs a positive stderr");
            row.verdict = row.gap() <= k * row.stderr_ + row.tolerance ? "pass" : "fail";
            break;
        case RowKind::Deterministic:
            row.stderr_ = row.tolerance;
            row.verdict = row.gap() <= row.tolerance ? "pass" : "fail";
            break;
        case RowKind::Info: row.verdict = "info"; break;
    }
    if (!std::isfinite(row.empirical) || !std::isfinite(row.limit))
        if (row.kind != RowKind::Info) row.verdict = "fail";
    rows.push_back(std::move(row));
}

void ConvergenceReport::add_error(int L, const std::string& statistic, const std::string& code,
                                  const std::string& what) {
    ReportRow row;
    row.L = L;
    row.statistic = statistic;
    row.kind = RowKind::Deterministic;
    row.empirical = std::nan("");
    row.limit = std::nan("");
    row.verdict = code;
    row.note = what;
    rows.push_back(std::move(row));
}

std::size_t ConvergenceReport::count(const std::string& verdict) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.verdict == verdict; }));
}

bool ConvergenceReport::passed() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ReportRow& r) { return r.verdict == "pass" || r.verdict == "info"; });
}

nlohmann::json to_json(const ConvergenceReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    // doubles go out as strings of 17 digits so NaN survives and bytes are stable
    for (const ReportRow& r : report.rows) {
        rows.push_back({{"L", r.L},
                        {"statistic", r.statistic},
                        {"kind", kind_name(r.kind)},
                        {"empirical", format_double(r.empirical)},
                        {"stderr", format_double(r.stderr_)},
                        {"limit", format_double(r.limit)},
                        {"gap", format_double(r.gap())},
                        {"gap_over_stderr", format_double(r.z())},
                        {"tolerance", format_double(r.tolerance)},
                        {"verdict", r.verdict},
                        {"note", r.note}});
    }
    nlohmann::json summary = {{"rows", report.rows.size()},
                              {"pass", report.count("pass")},
                              {"fail", report.count("fail")},
                              {"info", report.count("info")},
                              {"passed", report.passed()}};
    return {{"schema_version", kReportSchemaVersion},
            {"kind", "convergence_report"},
            {"experiment", report.experiment},
            {"version", MOTZKIN_VERSION},
            {"k", format_double(report.k)},
            {"config", report.config},
            {"rows", rows},
            {"summary", summary}};
}

void write_json(std::ostream& out, const ConvergenceReport& report) { out << to_json(report).dump(2) << '\n'; }

void write_csv(std::ostream& out, const ConvergenceReport& report) {
    out << "# motzkin-report schema_version=" << kReportSchemaVersion << " version=" << MOTZKIN_VERSION
        << " experiment=" << report.experiment << '\n';
    out << "# config=" << report.config.dump() << '\n';
    out << "L,statistic,kind,empirical,stderr,limit,gap,gap_over_stderr,tolerance,verdict\n";
    for (const ReportRow& r : report.rows) {
        out << r.L << ',' << r.statistic << ',' << kind_name(r.kind) << ',' << format_double(r.empirical) << ','
            << format_double(r.stderr_) << ',' << format_double(r.limit) << ',' << format_double(r.gap()) << ','
            << format_double(r.z()) << ',' << format_double(r.tolerance) << ',' << r.verdict << '\n';
    }
}

void write_gnuplot(std::ostream& out, const ConvergenceReport& report, const std::string& statistic) {
    out << "# " << report.experiment << ' ' << statistic << ": L |gap|\n";
    for (const ReportRow& r : report.rows)
        if (r.statistic == statistic) out << r.L << ' ' << format_double(r.gap()) << '\n';
}

void MeanAccumulator::add(double x) {
    n += 1.0;
    const double delta = x - mean;
    mean += delta / n;
    m2 += delta * (x - mean);
}

void MeanAccumulator::merge(const MeanAccumulator& other) {
    if (other.n == 0.0) return;
    if (n == 0.0) {
        *this = other;
        return;
    }
    const double total = n + other.n;
    const double delta = other.mean - mean;
    mean += delta * other.n / total;
    m2 += other.m2 + delta * delta * n * other.n / total;
    n = total;
}

double MeanAccumulator::variance() const { return n > 1.0 ? m2 / (n - 1.0) : 0.0; }

double MeanAccumulator::stderr_() const { return n > 1.0 ? std::sqrt(variance() / n) : 0.0; }

void RatioAccumulator::add(double w, double f) {
    n += 1.0;
    sw += w;
    swf += w * f;
    sww += w * w;
    swwf += w * w * f;
    swwff += w * w * f * f;
}

void RatioAccumulator::merge(const RatioAccumulator& o) {
    n += o.n;
    sw += o.sw;
    swf += o.swf;
    sww += o.sww;
    swwf += o.swwf;
    swwff += o.swwff;
}

double RatioAccumulator::value() const { return sw > 0.0 ? swf / sw : 0.0; }

double RatioAccumulator::stderr_() const {
    if (!(sw > 0.0) || n < 2.0) return 0.0;
    const double r = value();
    // sum w^2 (f - r)^2 / (sum w)^2
    const double spread = swwff - 2.0 * r * swwf + r * r * sww;
    return std::sqrt(std::max(spread, 0.0) * n / (n - 1.0)) / sw;
}

}  // namespace motzkin::harness
