#include "prodint/kernel.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace prodint {

namespace {

// Absolutely continuous antiderivatives through the singularity. Each G is
// the integral from 0 of the corresponding integrand and vanishes at 0, so
// moment differences are exact for s inside, at an endpoint of, or outside
// the cell.

// integral of -log|u|
double log_g0(double x) {
    return x == 0.0 ? 0.0 : x - x * std::log(std::abs(x));
}

// integral of -u*log|u|
double log_g1(double x) {
    return x == 0.0 ? 0.0 : 0.25 * x * x - 0.5 * x * x * std::log(std::abs(x));
}

// integral of |u|^(-alpha)  (odd in x)
double pow_p0(double x, double alpha) {
    if (x == 0.0) return 0.0;
    double mag = std::pow(std::abs(x), 1.0 - alpha) / (1.0 - alpha);
    return x > 0.0 ? mag : -mag;
}

// integral of u*|u|^(-alpha)  (even in x)
double pow_p1(double x, double alpha) {
    if (x == 0.0) return 0.0;
    return std::pow(std::abs(x), 2.0 - alpha) / (2.0 - alpha);
}

QuadResult tanh_sinh_piece(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
    if (hi <= lo)
        return {0.0, 0.0, true};
    boost::math::quadrature::tanh_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    double value = integrator.integrate(f, lo, hi, tol, &error, &l1);
    // boost reports a relative error estimate against the L1 norm
    double abs_err = error * std::max(l1, 1.0);
    return {value, abs_err, error <= tol};
}

} // namespace

QuadResult singular_quad(const std::function<double(double)>& f, double lo, double hi,
                         std::optional<double> singular_point, double tol) {
    if (hi < lo)
        throw std::invalid_argument("singular_quad: empty interval");
    if (hi == lo)
        return {0.0, 0.0, true};
    if (singular_point && *singular_point > lo && *singular_point < hi) {
        QuadResult left = tanh_sinh_piece(f, lo, *singular_point, tol);
        QuadResult right = tanh_sinh_piece(f, *singular_point, hi, tol);
        return {left.value + right.value, left.error_estimate + right.error_estimate,
                left.converged && right.converged};
    }
    return tanh_sinh_piece(f, lo, hi, tol);
}

SingularFactor SingularFactor::log_distance() {
    SingularFactor h;
    h.kind_ = SingularKind::LogDistance;
    return h;
}

SingularFactor SingularFactor::power_distance(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("SingularFactor: power exponent must lie in (0,1)");
    SingularFactor h;
    h.kind_ = SingularKind::PowerDistance;
    h.alpha_ = alpha;
    return h;
}

SingularFactor SingularFactor::custom(Eval eval, std::optional<MomentFn> moments) {
    SingularFactor h;
    h.kind_ = SingularKind::Custom;
    h.eval_ = std::move(eval);
    h.moments_ = std::move(moments);
    return h;
}

double SingularFactor::operator()(double s, double t) const {
    switch (kind_) {
    case SingularKind::LogDistance:
        if (s == t)
            throw std::domain_error("SingularFactor: -log|s-t| evaluated on the diagonal");
        return -std::log(std::abs(s - t));
    case SingularKind::PowerDistance:
        if (s == t)
            throw std::domain_error("SingularFactor: |s-t|^(-alpha) evaluated on the diagonal");
        return std::pow(std::abs(s - t), -alpha_);
    case SingularKind::Custom:
        return eval_(s, t);
    }
    return 0.0; // unreachable
}

Moments moments(const SingularFactor& H, double s, double lo, double hi, double oracle_tol) {
    const double xl = lo - s, xh = hi - s;
    switch (H.kind_) {
    case SingularKind::LogDistance: {
        double m0 = log_g0(xh) - log_g0(xl);
        double m1 = (log_g1(xh) - log_g1(xl)) + s * m0;
        return {m0, m1};
    }
    case SingularKind::PowerDistance: {
        double m0 = pow_p0(xh, H.alpha_) - pow_p0(xl, H.alpha_);
        double m1 = (pow_p1(xh, H.alpha_) - pow_p1(xl, H.alpha_)) + s * m0;
        return {m0, m1};
    }
    case SingularKind::Custom: {
        if (H.moments_)
            return (*H.moments_)(s, lo, hi);
        std::optional<double> sing;
        if (s >= lo && s <= hi)
            sing = s;
        QuadResult m0 = singular_quad([&](double t) { return H.eval_(s, t); }, lo, hi, sing,
                                      oracle_tol);
        QuadResult m1 = singular_quad([&](double t) { return H.eval_(s, t) * t; }, lo, hi, sing,
                                      oracle_tol);
        return {m0.value, m1.value};
    }
    }
    return {0.0, 0.0}; // unreachable
}

SmoothFactor SmoothFactor::constant_one() {
    SmoothFactor l;
    l.constant_one_ = true;
    return l;
}

SmoothFactor SmoothFactor::from(Eval f) {
    SmoothFactor l;
    l.f_ = std::move(f);
    return l;
}

double SmoothFactor::max_abs(double a, double b, int samples) const {
    if (constant_one_)
        return 1.0;
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        double s = a + (b - a) * i / (samples - 1);
        for (int j = 0; j < samples; ++j) {
            double t = a + (b - a) * j / (samples - 1);
            best = std::max(best, std::abs(f_(s, t)));
        }
    }
    return best;
}

double interp_L(const SmoothFactor& L, const UniformGrid& g, double s, double t) {
    if (L.is_constant_one())
        return 1.0;
    int i = g.cell_index(t); // throws outside [a,b]
    auto [t0, t1] = g.cell(i);
    return ((t1 - t) * L(s, t0) + (t - t0) * L(s, t1)) / g.h;
}

Nonlinearity::Nonlinearity(std::string name, Fn value, Fn deriv, Fn second_deriv,
                           double bracket_lo, double bracket_hi, double check_tol,
                           int check_points)
    : name_(std::move(name)), value_(std::move(value)), deriv_(std::move(deriv)),
      second_(std::move(second_deriv)) {
    // Central-difference check of each supplied derivative on the bracket.
    const double step = 1e-5 * std::max(1.0, std::abs(bracket_hi - bracket_lo));
    for (int k = 0; k < check_points; ++k) {
        double u = bracket_lo + (bracket_hi - bracket_lo) * (k + 0.5) / check_points;
        double fd1 = (value_(u + step) - value_(u - step)) / (2.0 * step);
        double fd2 = (deriv_(u + step) - deriv_(u - step)) / (2.0 * step);
        if (std::abs(fd1 - deriv_(u)) > check_tol * (1.0 + std::abs(deriv_(u))))
            throw std::invalid_argument("Nonlinearity '" + name_ +
                                        "': N' disagrees with finite differences of N near u=" +
                                        std::to_string(u));
        if (std::abs(fd2 - second_(u)) > check_tol * (1.0 + std::abs(second_(u))))
            throw std::invalid_argument("Nonlinearity '" + name_ +
                                        "': N'' disagrees with finite differences of N' near u=" +
                                        std::to_string(u));
    }
}

Nonlinearity Nonlinearity::sin_pi() {
    return Nonlinearity(
        "sin(pi u)", [](double u) { return std::sin(M_PI * u); },
        [](double u) { return M_PI * std::cos(M_PI * u); },
        [](double u) { return -M_PI * M_PI * std::sin(M_PI * u); });
}

Nonlinearity Nonlinearity::sin_two_pi() {
    return Nonlinearity(
        "sin(2 pi u)", [](double u) { return std::sin(2.0 * M_PI * u); },
        [](double u) { return 2.0 * M_PI * std::cos(2.0 * M_PI * u); },
        [](double u) { return -4.0 * M_PI * M_PI * std::sin(2.0 * M_PI * u); });
}

Nonlinearity Nonlinearity::identity() {
    return Nonlinearity(
        "u", [](double u) { return u; }, [](double) { return 1.0; },
        [](double) { return 0.0; });
}

Nonlinearity Nonlinearity::square() {
    return Nonlinearity(
        "u^2", [](double u) { return u * u; }, [](double u) { return 2.0 * u; },
        [](double) { return 2.0; });
}

Eigen::VectorXd Nonlinearity::map(const Eigen::VectorXd& u) const {
    Eigen::VectorXd out(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i)
        out[i] = value_(u[i]);
    return out;
}

Eigen::VectorXd Nonlinearity::map_deriv(const Eigen::VectorXd& u) const {
    Eigen::VectorXd out(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i)
        out[i] = deriv_(u[i]);
    return out;
}

} // namespace prodint
