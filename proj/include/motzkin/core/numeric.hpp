#pragma once

#include <cmath>
#include <limits>

namespace motzkin {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log(exp(x) + exp(y)).
inline double log_add(double x, double y) {
    if (x == kNegInf) return y;
    if (y == kNegInf) return x;
    const double hi = x > y ? x : y;
    const double lo = x > y ? y : x;
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace motzkin
