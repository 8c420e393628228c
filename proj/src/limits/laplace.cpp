#include "motzkin/limits/laplace.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <span>

#include "motzkin/core/errors.hpp"
#include "motzkin/limits/identities.hpp"
#include "motzkin/limits/kernels.hpp"
#include "motzkin/limits/special.hpp"

namespace motzkin::limits {

namespace {

void check_grid(const std::vector<double>& grid) {
    if (grid.size() < 2 || grid.front() != 0.0 || grid.back() != 1.0)
        fail(ErrorCode::InvalidGrid, "grid must run from 0 to 1");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1])) fail(ErrorCode::InvalidGrid, "grid must be strictly increasing");
}

}  // namespace

double eta_expectation(const std::vector<double>& grid, const std::function<double(std::span<const double>)>& f,
                       double a, double c, const QuadOptions& opt, const std::vector<double>& extra_breaks) {
    check_grid(grid);
    const std::size_t n = grid.size();
    if (n > 3) fail(ErrorCode::InvalidParams, "direct quadrature is limited to d <= 2");
    std::vector<double> y(n);
    const double norm = norm_const_ac(a, c);
    const std::vector<QuadOptions> levels = nested_levels(opt, static_cast<int>(n));

    // level(k): integral over y_k..y_{n-1} given y_0..y_{k-1}
    std::function<double(std::size_t)> level = [&](std::size_t k) -> double {
        if (k == n) {
            // eta_fdd_pdf without its per-call validation and normalization
            double density = std::exp(-(c * y.front() + a * y.back()) / std::numbers::sqrt2) / norm;
            for (std::size_t j = 1; j < n && density != 0.0; ++j)
                density *= killed_bm_kernel(grid[j] - grid[j - 1], y[j - 1], y[j]);
            return density == 0.0 ? 0.0 : density * f(y);
        }
        const auto integrand = [&](double v) {
            y[k] = v;
            return level(k + 1);
        };
        std::vector<double> breaks(extra_breaks);
        if (k == 0) {
            breaks.insert(breaks.end(), {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0});
        } else {
            // a transition panel must not reach past ~10 sd: GK21 on a mapped
            // tail panel can miss a narrow Gaussian edge entirely
            const double sd = std::sqrt(grid[k] - grid[k - 1]);
            const double prev = y[k - 1];
            breaks.push_back(prev);
            for (double m : {1.0, 3.0, 6.0, 10.0}) breaks.insert(breaks.end(), {prev - m * sd, prev + m * sd});
        }
        return integrate_half_line(integrand, 0.0, breaks, levels[k]).value;
    };
    return level(0);
}

double eta_laplace(const std::vector<double>& grid, const std::vector<double>& cs, double lambda, double a,
                   double c, const QuadOptions& opt) {
    if (cs.size() != grid.size()) fail(ErrorCode::InvalidParams, "need one c per grid point");
    const auto tilt = [&](std::span<const double> y) {
        double sum = 0.0;
        for (std::size_t j = 0; j < y.size(); ++j) sum += cs[j] * y[j];
        return std::exp(-lambda * sum);
    };
    return eta_expectation(grid, tilt, a, c, opt);
}

LaplaceResult limit_laplace(const LaplaceInput& in, const QuadOptions& opt) {
    check_grid(in.grid);
    const std::size_t d = in.grid.size() - 1;
    if (in.cs.size() != d + 1) fail(ErrorCode::InvalidParams, "need c_0..c_d");
    if (!in.thetas.empty() && in.thetas.size() != d) fail(ErrorCode::InvalidParams, "need theta_1..theta_d");
    if (!(in.sigma > 0.0)) fail(ErrorCode::InvalidParams, "sigma must be positive");
    for (double ck : in.cs)
        if (!(ck >= 0.0)) fail(ErrorCode::InvalidParams, "c_k must be nonnegative");
    const double F = in.c + in.cs.front();
    const double G = in.a + in.cs.back();
    if (!(F > 0.0) || !(G > 0.0)) fail(ErrorCode::InvalidParams, "need c + c_0 > 0 and a + c_d > 0");

    const double top = 2.0 + in.sigma;
    const double a_prime = 2.0 * in.a / std::sqrt(top);
    const double c_prime = 2.0 * in.c / std::sqrt(top);

    // merge u_k and u_{k+1} across every interior c_k = 0
    std::vector<double> weights{in.grid[1] - in.grid[0]};
    std::vector<double> times;
    for (std::size_t k = 1; k < d; ++k) {
        const double dx = in.grid[k + 1] - in.grid[k];
        if (in.cs[k] == 0.0) {
            weights.back() += dx;
        } else {
            times.push_back(in.cs[k]);
            weights.push_back(dx);
        }
    }
    if (weights.size() > 3) fail(ErrorCode::InvalidParams, "direct quadrature is limited to 3 variables");

    LaplaceResult out;
    const double prefactor = std::sqrt(top) / (std::numbers::sqrt2 * std::numbers::pi * norm_const_ac(a_prime, c_prime));
    out.psi_kernel = prefactor * detail::biane_chain_integral(1.0 / top, weights, times, F, G, opt);
    if (d <= 2) out.psi_eta = eta_laplace(in.grid, in.cs, std::sqrt(2.0 / top), a_prime, c_prime, opt);

    double exponent = 0.0;
    if (!in.thetas.empty()) {
        double tail = 0.0;
        for (std::size_t k = d; k >= 1; --k) {
            tail += in.thetas[k - 1];
            exponent += (in.grid[k] - in.grid[k - 1]) * tail * tail;
        }
    }
    out.gaussian_factor = std::exp(in.sigma / (top * top) * exponent);
    return out;
}

}  // namespace motzkin::limits
