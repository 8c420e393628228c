#pragma once

#include <functional>
#include <optional>
#include <type_traits>

#include <gmpxx.h>

namespace motzkin {

/// Exact scalar for the rational oracle mode.
using Rational = mpq_class;

template <class T>
T ipow(T base, int n) {
    T result(1);
    for (; n > 0; --n) result *= base;
    return result;
}

/// Upper bounds used to certify truncation of the infinite altitude range:
/// a_n <= edge_a, b_n <= edge_b, c_n <= edge_c, alpha_n <= alpha_rate^n and
/// beta_n <= beta_rate^n for every n.
struct TailBounds {
    double edge_a = 1.0;
    double edge_b = 1.0;
    double edge_c = 1.0;
    double alpha_rate = 1.0;
    double beta_rate = 1.0;
};

/// Edge weights a (up), b (flat), c (down) indexed by the altitude at the
/// left end of the step, and boundary weights alpha (start) and beta (end).
template <class T>
struct WeightModel {
    std::function<T(int)> a;
    std::function<T(int)> b;
    std::function<T(int)> c;
    std::function<T(int)> alpha;
    std::function<T(int)> beta;
    std::optional<TailBounds> bounds;

    /// a = c = 1, b = sigma, alpha_n = rho0^n, beta_n = rho1^n.
    static WeightModel constant(T sigma, T rho0, T rho1) {
        WeightModel w;
        w.a = [](int) { return T(1); };
        w.b = [sigma](int) { return sigma; };
        w.c = [](int) { return T(1); };
        w.alpha = [rho0](int n) { return ipow(rho0, n); };
        w.beta = [rho1](int n) { return ipow(rho1, n); };
        w.bounds = TailBounds{1.0, to_double(sigma), 1.0, to_double(rho0), to_double(rho1)};
        return w;
    }

    /// Unit edge weights with alpha = beta = delta_0: counts paths in M_{0,0}.
    static WeightModel unit() {
        WeightModel w;
        w.a = w.b = w.c = [](int) { return T(1); };
        w.alpha = w.beta = [](int n) { return n == 0 ? T(1) : T(0); };
        w.bounds = TailBounds{1.0, 1.0, 1.0, 0.0, 0.0};
        return w;
    }

private:
    static double to_double(const T& x) {
        if constexpr (std::is_same_v<T, Rational>) return x.get_d();
        else return static_cast<double>(x);
    }
};

}  // namespace motzkin
