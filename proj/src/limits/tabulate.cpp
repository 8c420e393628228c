#include "motzkin/limits/tabulate.hpp"

#include <functional>
#include <iomanip>
#include <limits>
#include <map>

#include "motzkin/core/errors.hpp"
#include "motzkin/limits/measures.hpp"
#include "motzkin/limits/special.hpp"

namespace motzkin::limits {

namespace {

using Evaluator = std::function<double(const KernelParams&, double)>;

const std::map<std::string, Evaluator>& evaluators() {
    static const std::map<std::string, Evaluator> table{
        {"killed_bm", [](const KernelParams& kp, double y) { return killed_bm_kernel(kp.t, kp.s, y); }},
        {"biane", [](const KernelParams& kp, double y) { return biane_kernel(kp.t, kp.s, y); }},
        {"semicircle", [](const KernelParams& kp, double y) { return semicircle_density(kp.t, y); }},
        {"stationary_u", [](const KernelParams& kp, double y) { return stationary_u_transition(kp.t, kp.s, y); }},
        {"mp", [](const KernelParams& kp, double y) { return mp_measure(kp.a).density(y); }},
        {"norm_const", [](const KernelParams& kp, double y) { return norm_const_ac(y, kp.c); }},
    };
    return table;
}

}  // namespace

std::vector<std::string> kernel_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : evaluators()) names.push_back(name);
    return names;
}

KernelTable tabulate_kernel(const std::string& name, const KernelParams& kp, double from, double to, int points) {
    const auto it = evaluators().find(name);
    if (it == evaluators().end()) fail(ErrorCode::InvalidParams, "unknown kernel '" + name + "'");
    if (points < 2 || !(to > from)) fail(ErrorCode::InvalidParams, "need points >= 2 and to > from");
    KernelTable table{name, {}};
    for (int i = 0; i < points; ++i) {
        const double y = from + (to - from) * i / (points - 1);
        table.rows.emplace_back(y, it->second(kp, y));
    }
    return table;
}

void write_table_csv(std::ostream& out, const KernelTable& table) {
    out << "y,value\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto& [y, v] : table.rows) out << y << ',' << v << '\n';
}

}  // namespace motzkin::limits
