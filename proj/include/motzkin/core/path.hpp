#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace motzkin {

enum class Step : signed char { Down = -1, Flat = 0, Up = 1 };

/// A lattice path gamma_0..gamma_L with nonnegative altitudes and steps in
/// {-1, 0, +1}. Instances only exist in validated form; build them through
/// validate_path().
class MotzkinPath {
public:
    /// Number of steps L (the path has L + 1 altitudes).
    std::size_t length() const noexcept { return altitudes_.size() - 1; }

    std::span<const int> altitudes() const noexcept { return altitudes_; }
    int operator[](std::size_t k) const { return altitudes_[k]; }
    int start() const noexcept { return altitudes_.front(); }
    int end() const noexcept { return altitudes_.back(); }

    /// Direction of the k-th step, k = 1..L.
    Step step(std::size_t k) const;
    bool up(std::size_t k) const { return step(k) == Step::Up; }
    bool flat(std::size_t k) const { return step(k) == Step::Flat; }
    bool down(std::size_t k) const { return step(k) == Step::Down; }

    friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
    friend auto operator<=>(const MotzkinPath& a, const MotzkinPath& b) {
        return a.altitudes_ <=> b.altitudes_;
    }

private:
    explicit MotzkinPath(std::vector<int> altitudes) : altitudes_(std::move(altitudes)) {}
    friend MotzkinPath validate_path(std::vector<int> altitudes);

    std::vector<int> altitudes_;
};

/// Throws Error{EmptyPath | NegativeAltitude | StepTooLarge}.
MotzkinPath validate_path(std::vector<int> altitudes);

/// Cumulative step counts U, H, D at every integer position 0..L.
class StepCounts {
public:
    explicit StepCounts(const MotzkinPath& path);

    std::size_t length() const noexcept { return up_.size() - 1; }

    int up_at(std::size_t k) const { return up_[k]; }
    int horiz_at(std::size_t k) const { return horiz_[k]; }
    int down_at(std::size_t k) const { return down_[k]; }

    /// Counts up to position floor(L x), x in [0, 1].
    int up(double x) const { return up_[index(x)]; }
    int horiz(double x) const { return horiz_[index(x)]; }
    int down(double x) const { return down_[index(x)]; }

    /// floor(L x), guarded against x*L landing a hair below an integer.
    std::size_t index(double x) const;

private:
    std::vector<int> up_, horiz_, down_;
};

StepCounts step_counts(const MotzkinPath& path);

}  // namespace motzkin
