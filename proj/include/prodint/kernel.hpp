#ifndef PRODINT_KERNEL_HPP
#define PRODINT_KERNEL_HPP

#include "prodint/grid.hpp"

#include <functional>
#include <optional>
#include <string>

namespace prodint {

/*
 * The kernel of the integral operator is factored as H(s,t) * L(s,t) * N(x(t)):
 * a weakly singular factor H carrying the diagonal singularity, a continuous
 * factor L that gets piecewise-linear interpolation in t, and a nonlinearity N
 * applied to the unknown. Product integration hinges on integrating H against
 * the interpolant of L exactly, which reduces to the two singular moments
 *
 *     m0(s; c,d) = integral over [c,d] of H(s,t) dt
 *     m1(s; c,d) = integral over [c,d] of H(s,t) * t dt
 *
 * available in closed form for the built-in factors.
 */

struct Moments {
    double m0;
    double m1;
};

struct QuadResult {
    double value;
    double error_estimate;
    bool converged; // error_estimate <= requested tolerance
};

/// Adaptive quadrature for integrands with at most one integrable singularity
/// at a declared point: splits there and applies a tanh-sinh variable
/// substitution on each side. Never throws on slow convergence; the achieved
/// error estimate is reported instead.
QuadResult singular_quad(const std::function<double(double)>& f, double lo, double hi,
                         std::optional<double> singular_point, double tol = 1e-12);

enum class SingularKind { LogDistance, PowerDistance, Custom };

/// Weakly singular kernel factor H(s,t). LogDistance is -log|s-t|,
/// PowerDistance(alpha) is |s-t|^(-alpha) with 0 < alpha < 1. Both carry
/// closed-form moments; a Custom factor may supply its own moment contract,
/// and is otherwise served by the quadrature oracle (flagged in reports).
class SingularFactor {
public:
    using Eval = std::function<double(double, double)>;
    using MomentFn = std::function<Moments(double s, double lo, double hi)>;

    static SingularFactor log_distance();
    static SingularFactor power_distance(double alpha);
    static SingularFactor custom(Eval eval, std::optional<MomentFn> moments = std::nullopt);

    SingularKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    bool has_exact_moments() const { return kind_ != SingularKind::Custom || bool(moments_); }

    /// Pointwise value for s != t. The built-in factors are undefined on the
    /// diagonal and throw std::domain_error there; moments never evaluate
    /// on the diagonal (the singularity is only ever integrated).
    double operator()(double s, double t) const;

    friend Moments moments(const SingularFactor& H, double s, double lo, double hi,
                           double oracle_tol);

private:
    SingularFactor() = default;
    SingularKind kind_ = SingularKind::Custom;
    double alpha_ = 0.0;
    Eval eval_;
    std::optional<MomentFn> moments_;
};

/// Exact (m0, m1) over [lo,hi] at outer point s, valid for s inside, at an
/// endpoint of, or outside the cell. Custom factors without a moment contract
/// fall back to singular_quad at `oracle_tol`.
Moments moments(const SingularFactor& H, double s, double lo, double hi,
                double oracle_tol = 1e-12);

/// Continuous kernel factor L(s,t) on [a,b]^2, with a flag for the L == 1
/// fast path used by the convolution-kernel examples.
class SmoothFactor {
public:
    using Eval = std::function<double(double, double)>;

    static SmoothFactor constant_one();
    static SmoothFactor from(Eval f);

    bool is_constant_one() const { return constant_one_; }
    double operator()(double s, double t) const { return constant_one_ ? 1.0 : f_(s, t); }

    /// Sampled estimate of max |L| on [a,b]^2.
    double max_abs(double a, double b, int samples = 64) const;

private:
    bool constant_one_ = false;
    Eval f_;
};

/// Piecewise-linear interpolant [L(s,t)]_n in the second argument:
///   (1/h) * [(t_i - t) L(s, t_{i-1}) + (t - t_{i-1}) L(s, t_i)]
/// on the cell containing t. Continuous in t; reproduces functions linear in t.
double interp_L(const SmoothFactor& L, const UniformGrid& g, double s, double t);

/// Twice-differentiable nonlinearity N with user-supplied derivatives.
/// Registration runs a finite-difference self-check of N' against N and N''
/// against N' on sample points in the given bracket (catches derivative
/// mistakes that would silently destroy Newton's quadratic convergence).
class Nonlinearity {
public:
    using Fn = std::function<double(double)>;

    Nonlinearity(std::string name, Fn value, Fn deriv, Fn second_deriv,
                 double bracket_lo = -3.0, double bracket_hi = 3.0,
                 double check_tol = 1e-6, int check_points = 32);

    static Nonlinearity sin_pi();     // sin(pi*u)
    static Nonlinearity sin_two_pi(); // sin(2*pi*u)
    static Nonlinearity identity();   // u
    static Nonlinearity square();     // u^2

    const std::string& name() const { return name_; }
    double operator()(double u) const { return value_(u); }
    double deriv(double u) const { return deriv_(u); }
    double second_deriv(double u) const { return second_(u); }

    /// Entrywise N applied to a vector.
    Eigen::VectorXd map(const Eigen::VectorXd& u) const;
    Eigen::VectorXd map_deriv(const Eigen::VectorXd& u) const;

private:
    std::string name_;
    Fn value_, deriv_, second_;
};

} // namespace prodint

#endif
