#ifndef PRODINT_GRID_HPP
#define PRODINT_GRID_HPP

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace prodint {

/// Uniform mesh t_i = a + i*h, i = 0..n, with cell width h = (b-a)/n.
/// Cells are 1-based: cell i is [t_{i-1}, t_i].
struct UniformGrid {
    double a;
    double b;
    int n;
    double h;

    UniformGrid(double a_, double b_, int n_);

    double node(int i) const { return (i == n) ? b : a + i * h; }
    double center(int i) const { return a + (i - 0.5) * h; }
    std::pair<double, double> cell(int i) const { return {node(i - 1), node(i)}; }

    /// 1-based index of the cell containing t; interior nodes resolve to the
    /// cell on their right, t = b to cell n. Throws std::domain_error outside [a,b].
    int cell_index(double t) const;

    bool operator==(const UniformGrid& o) const { return a == o.a && b == o.b && n == o.n; }
};

/// Piecewise-constant element of L1: one value per grid cell (the cell means
/// c_1..c_n). This is the discrete unknown of the whole scheme.
struct CellVector {
    UniformGrid grid;
    Eigen::VectorXd values; // size grid.n, cell i at values[i-1]

    CellVector(UniformGrid g, Eigen::VectorXd v);
    static CellVector zeros(const UniformGrid& g);
    static CellVector constant(const UniformGrid& g, double c);

    /// L1 norm, exact for piecewise constants: h * sum |c_i|.
    double norm1() const;

    /// Value of the piecewise-constant extension at t in [a,b].
    double operator()(double t) const { return values[grid.cell_index(t) - 1]; }
};

/// An integrable function on a fixed interval [a,b]: a pointwise evaluator,
/// the finitely many declared jump points (so quadrature never averages
/// across a discontinuity), and optionally a closed-form mean over a
/// subinterval. Evaluation outside [a,b] is the zero extension.
class Integrable1D {
public:
    using Eval = std::function<double(double)>;
    using MeanFn = std::function<double(double, double)>; // mean over [lo,hi] subset of [a,b]

    Integrable1D(double a, double b, Eval f, std::vector<double> jumps = {});

    static Integrable1D constant(double a, double b, double value);
    /// Piecewise-constant data: value `left` on [a,at], `right` on [at,b].
    static Integrable1D step(double a, double b, double at, double left, double right);
    static Integrable1D with_exact_mean(double a, double b, Eval f, MeanFn mean,
                                        std::vector<double> jumps = {});

    double a() const { return a_; }
    double b() const { return b_; }
    double operator()(double s) const { return f_(s); }
    /// Zero-extended evaluation on the whole line.
    double extended(double s) const { return (s < a_ || s > b_) ? 0.0 : f_(s); }

    const std::vector<double>& jumps() const { return jumps_; }
    bool has_exact_mean() const { return static_cast<bool>(mean_); }
    double exact_mean(double lo, double hi) const { return mean_(lo, hi); }

private:
    double a_, b_;
    Eval f_;
    MeanFn mean_;
    std::vector<double> jumps_; // sorted, strictly inside (a,b)
};

/// Cell means c_i = (1/h) * integral of f over cell i (the projection pi_n).
/// Uses the exact-mean contract when f carries one; otherwise Gauss-Legendre
/// per subinterval between declared jumps. Throws std::runtime_error naming
/// the cell if f evaluates non-finite inside it.
CellVector cell_means(const Integrable1D& f, const UniformGrid& g, int gauss_points = 8);

/// L1 oscillation of the zero extension of f under shifts up to h:
///   w1(f,h) = sup_{0<=u<=h} integral |f~(v+u) - f~(v)| dv,
/// the integral running over the whole line (both boundary strips count).
/// Approximated by maximizing over `shift_samples` equispaced u including the
/// endpoints, with per-u quadrature split at declared jumps and at shifted
/// interval endpoints. Diagnostic quantity; never feeds the solver.
double w1_oscillation(const Integrable1D& f, double h, int shift_samples = 64,
                      int gauss_points = 8);

/// Uniform modulus of continuity of a continuous f on [a,b]^2:
///   w2(f,h) = sup |f(u)-f(v)| over pairs with max-norm distance <= h,
/// approximated on a base_points^2 lattice with `directions` displacement
/// directions on the max-norm sphere of radius h (corners included).
double w2_modulus(const std::function<double(double, double)>& f, double a, double b,
                  double h, int base_points = 64, int directions = 16);

} // namespace prodint

#endif
