// Test-side reference integrators, kept independent of the library's
// quadrature paths (the library uses Gauss-Legendre, tanh-sinh and closed
// forms; everything here is adaptive Simpson or dense sampling).
#ifndef PRODINT_TESTS_ORACLES_HPP
#define PRODINT_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double both = left + right;
    if (depth <= 0 || std::abs(both - whole) < 15.0 * tol)
        return both + (both - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson; integrand must be finite on the closed interval.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    if (b <= a)
        return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

/// Integrand with one integrable singularity at `sing` (an endpoint or an
/// interior point): power substitution t = sing +/- tau^p flattens the
/// singularity, then adaptive Simpson.
inline double integrate_singular(const std::function<double(double)>& f, double a, double b,
                                 double sing, double tol = 1e-12, int p = 8) {
    auto one_side = [&](double from, double to) { // singularity at `from`
        double len = std::abs(to - from);
        if (len == 0.0)
            return 0.0;
        double sgn = (to > from) ? 1.0 : -1.0;
        double upper = std::pow(len, 1.0 / p);
        auto g = [&](double tau) {
            if (tau == 0.0)
                return 0.0;
            double t = from + sgn * std::pow(tau, p);
            return f(t) * p * std::pow(tau, p - 1);
        };
        return sgn * integrate(g, 0.0, upper, tol);
    };
    // Works for sing inside, at an endpoint of, or outside [a,b].
    return one_side(sing, b) - one_side(sing, a);
}

/// Dense midpoint rule, for kinked integrands at modest accuracy.
inline double integrate_dense(const std::function<double(double)>& f, double a, double b,
                              int points = 1 << 20) {
    double sum = 0.0;
    double dx = (b - a) / points;
    for (int k = 0; k < points; ++k)
        sum += f(a + (k + 0.5) * dx);
    return sum * dx;
}

} // namespace oracle

#endif
