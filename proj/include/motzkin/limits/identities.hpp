#pragma once

#include <vector>

#include "motzkin/limits/quadrature.hpp"

namespace motzkin::limits {

/// Two independently computed sides of an identity.
struct IdentityValue {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_gap() const;
    double rel_gap() const;
};

/// lhs: (1/2pi) int_0^inf exp(-tau v^2/2) 4v^2/((a^2+v^2)(c^2+v^2)) dv by quadrature;
/// rhs: sqrt(tau) C_{|a| sqrt(2 tau), |c| sqrt(2 tau)} in closed form.
/// Requires a + c > 0 and tau > 0.
IdentityValue gaussian_integral_identity(double a, double c, double tau, const QuadOptions& opt = {});

/// Inputs of the duality between the Biane-kernel chain and the
/// killed-Brownian chain, for f(u) = sqrt(u)/((c + c0)^2 + u) and
/// g(u) = 1/((a + cd)^2 + u).
struct DualityInput {
    double tau = 1.0;
    /// c_1, ..., c_{d-1}, all positive.
    std::vector<double> cs;
    /// 0 = x_0 < x_1 < ... < x_d <= 1.
    std::vector<double> grid;
    double a = 1.0;
    double c = 1.0;
    double c0 = 0.0;
    double cd = 0.0;
};

/// lhs: the d-fold integral over u in R_+^d of
/// exp(-tau sum dx_k u_k) f(u_1) prod p_{c_k}(u_k, u_{k+1}) g(u_d);
/// rhs: (4/pi) times the (d-1)-fold integral over z of
/// exp(-sum c_k z_k) fhat(z_1) prod g_{2 tau dx_k}(z_{k-1}, z_k) ghat(z_{d-1}),
/// with fhat, ghat their sine transforms evaluated by inner quadrature.
/// d = grid.size() - 1 must be 2 or 3.
IdentityValue duality_evaluate(const DualityInput& in, const QuadOptions& opt = {});

namespace detail {

/// int over u in R_+^n of exp(-tau sum w_k u_k) f(u_1) prod_{k<n} p_{times_k}(u_k, u_{k+1}) g(u_n)
/// with f(u) = sqrt(u)/(F^2 + u), g(u) = 1/(G^2 + u); times.size() == weights.size() - 1.
/// Integrated in v = sqrt(u), nested, with a break point at the previous variable.
double biane_chain_integral(double tau, const std::vector<double>& weights, const std::vector<double>& times,
                            double F, double G, const QuadOptions& opt);

/// int_0^inf u sin(u z) exp(-beta u^2) / (F^2 + u^2) du.
double sine_transform(double F, double beta, double z, const QuadOptions& opt);
/// The integral of u exp(-beta u^2) / (F^2 + u^2), within a factor 2.
double sine_envelope(double F, double beta);

}  // namespace detail

}  // namespace motzkin::limits
