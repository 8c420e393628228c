#include "motzkin/core/path.hpp"

#include <cmath>
#include <string>

#include "motzkin/core/errors.hpp"

namespace motzkin {

MotzkinPath validate_path(std::vector<int> altitudes) {
    if (altitudes.empty()) fail(ErrorCode::EmptyPath, "a path needs at least one altitude");
    for (std::size_t k = 0; k < altitudes.size(); ++k) {
        if (altitudes[k] < 0)
            fail(ErrorCode::NegativeAltitude, "altitude " + std::to_string(altitudes[k]) +
                                                  " at position " + std::to_string(k));
        if (k > 0 && std::abs(altitudes[k] - altitudes[k - 1]) > 1)
            fail(ErrorCode::StepTooLarge, "step " + std::to_string(k) + " jumps from " +
                                              std::to_string(altitudes[k - 1]) + " to " +
                                              std::to_string(altitudes[k]));
    }
    return MotzkinPath(std::move(altitudes));
}

Step MotzkinPath::step(std::size_t k) const {
    return static_cast<Step>(altitudes_[k] - altitudes_[k - 1]);
}

StepCounts::StepCounts(const MotzkinPath& path) {
    const std::size_t L = path.length();
    up_.assign(L + 1, 0);
    horiz_.assign(L + 1, 0);
    down_.assign(L + 1, 0);
    for (std::size_t k = 1; k <= L; ++k) {
        const Step s = path.step(k);
        up_[k] = up_[k - 1] + (s == Step::Up);
        horiz_[k] = horiz_[k - 1] + (s == Step::Flat);
        down_[k] = down_[k - 1] + (s == Step::Down);
    }
}

std::size_t StepCounts::index(double x) const {
    const double L = static_cast<double>(length());
    if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::InvalidGrid, "position must lie in [0, 1]");
    const auto k = static_cast<std::size_t>(std::floor(x * L + 1e-9));
    return k > length() ? length() : k;
}

StepCounts step_counts(const MotzkinPath& path) { return StepCounts(path); }

}  // namespace motzkin
