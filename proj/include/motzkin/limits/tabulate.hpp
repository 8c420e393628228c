#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/limits/kernels.hpp"

namespace motzkin::limits {

/// Names accepted by tabulate_kernel. Each tabulates a function of one
/// variable y with the remaining arguments taken from KernelParams:
///   killed_bm     g_t(x = s, y)
///   biane         p_t(x = s, y)
///   semicircle    p_t(y)
///   stationary_u  transition over lag t from s to y
///   mp            density of mp_measure(rho = a)
///   norm_const    C_{y, c} as a function of its first argument
std::vector<std::string> kernel_names();

struct KernelTable {
    std::string name;
    std::vector<std::pair<double, double>> rows;
};

/// `points` evenly spaced y in [from, to]. Throws InvalidParams on an unknown name.
KernelTable tabulate_kernel(const std::string& name, const KernelParams& kp, double from, double to, int points);

/// Header row "y,value" then one row per point.
void write_table_csv(std::ostream& out, const KernelTable& table);

}  // namespace motzkin::limits
