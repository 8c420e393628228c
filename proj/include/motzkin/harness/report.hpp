#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace motzkin::harness {

inline constexpr int kReportSchemaVersion = 1;

enum class RowKind { MonteCarlo, Deterministic, Info };

/// One comparison of an estimate against a reference value.
///  - MonteCarlo: pass iff |gap| <= k * stderr + tolerance; stderr > 0.
///  - Deterministic: stderr holds the tolerance; pass iff |gap| <= tolerance.
///  - Info: recorded, never judged.
/// A row whose evaluation threw carries the error code name as its verdict.
struct ReportRow {
    int L = 0;
    std::string statistic;
    double empirical = 0.0;
    double stderr_ = 0.0;
    double limit = 0.0;
    double tolerance = 0.0;
    RowKind kind = RowKind::MonteCarlo;
    /// Deterministic rows: gap relative to max(|empirical|, |limit|).
    bool relative = false;
    std::string verdict;
    std::string note;

    double gap() const;
    /// |gap| / stderr, or 0 when stderr is 0.
    double z() const;
};

struct ConvergenceReport {
    std::string experiment;
    nlohmann::json config = nlohmann::json::object();
    double k = 3.0;
    std::vector<ReportRow> rows;

    /// Fills in the verdict and appends.
    void add(ReportRow row);
    /// Appends a row for a failed evaluation.
    void add_error(int L, const std::string& statistic, const std::string& code, const std::string& what);

    std::size_t count(const std::string& verdict) const;
    /// No row has a verdict other than pass or info.
    bool passed() const;
};

nlohmann::json to_json(const ConvergenceReport& report);
void write_json(std::ostream& out, const ConvergenceReport& report);
/// One comparison per row; doubles printed with 17 significant digits.
void write_csv(std::ostream& out, const ConvergenceReport& report);
/// Two columns (L, |gap|) for the rows whose statistic equals `statistic`.
void write_gnuplot(std::ostream& out, const ConvergenceReport& report, const std::string& statistic);

std::string format_double(double x);

/// Running mean and variance with a deterministic pairwise merge.
struct MeanAccumulator {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x);
    void merge(const MeanAccumulator& other);
    double variance() const;
    /// Standard error of the mean.
    double stderr_() const;
};

/// Ratio estimator sum(w f) / sum(w) with its delta-method standard error.
struct RatioAccumulator {
    double n = 0.0;
    double sw = 0.0, swf = 0.0, sww = 0.0, swwf = 0.0, swwff = 0.0;

    void add(double w, double f);
    void merge(const RatioAccumulator& other);
    double value() const;
    double stderr_() const;
};

}  // namespace motzkin::harness
