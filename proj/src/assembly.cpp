#include "prodint/assembly.hpp"
#include "prodint/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace prodint {

namespace {

// Second antiderivative of -log|u| through the singularity:
// g0i(x) = integral from 0 to x of (u - u log|u|) du. Even, g0i(0) = 0.
// With it the double integral of -log|s-t| over cell_i x cell_j is a plain
// second difference, which keeps the convolution structure exact.
double log_g0i(double x) {
    return x == 0.0 ? 0.0 : 0.75 * x * x - 0.5 * x * x * std::log(std::abs(x));
}

bool is_log_convolution(const ProblemSpec& p) {
    return p.H.kind() == SingularKind::LogDistance && p.L.is_constant_one();
}

} // namespace

ProblemSpec::ProblemSpec(double a_, double b_, SingularFactor H_, SmoothFactor L_,
                         Nonlinearity N_, Integrable1D y_,
                         std::optional<Integrable1D> phi_ref_)
    : a(a_), b(b_), H(std::move(H_)), L(std::move(L_)), N(std::move(N_)), y(std::move(y_)),
      phi_ref(std::move(phi_ref_)) {
    if (!(b > a))
        throw std::invalid_argument("ProblemSpec: need b > a");
    if (y.a() != a || y.b() != b)
        throw std::invalid_argument("ProblemSpec: y is not defined on the problem domain");
    if (phi_ref && (phi_ref->a() != a || phi_ref->b() != b))
        throw std::invalid_argument("ProblemSpec: phi_ref is not defined on the problem domain");
}

double weight(const SingularFactor& H, const SmoothFactor& L, const UniformGrid& g, int j,
              double s, double oracle_tol) {
    if (j < 1 || j > g.n)
        throw std::invalid_argument("weight: cell index out of range");
    auto [t0, t1] = g.cell(j);
    Moments m = moments(H, s, t0, t1, oracle_tol);
    if (L.is_constant_one())
        return m.m0;
    double l0 = L(s, t0), l1 = L(s, t1);
    return (l0 * (t1 * m.m0 - m.m1) + l1 * (m.m1 - t0 * m.m0)) / g.h;
}

double weight_oracle(const SingularFactor& H, const SmoothFactor& L, const UniformGrid& g,
                     int j, double s, double tol) {
    auto [t0, t1] = g.cell(j);
    std::optional<double> sing;
    if (s >= t0 && s <= t1)
        sing = s;
    auto f = [&](double t) { return H(s, t) * interp_L(L, g, s, t); };
    return singular_quad(f, t0, t1, sing, tol).value;
}

DiscreteSystem assemble(std::shared_ptr<const ProblemSpec> p, const UniformGrid& g,
                        const AssemblyOptions& opts) {
    if (!p)
        throw std::invalid_argument("assemble: null problem");
    if (g.a != p->a || g.b != p->b)
        throw std::invalid_argument("assemble: grid does not cover the problem domain");

    const int n = g.n;
    const double h = g.h;
    Eigen::MatrixXd A(n, n);

    const bool oracle_inner =
        opts.path == AssemblyPath::InnerOracle || !p->H.has_exact_moments();
    const bool closed_form = opts.path == AssemblyPath::Auto && is_log_convolution(*p) &&
                             !oracle_inner;

    if (closed_form) {
        // Entries depend only on the cell offset: A(i,j) = phi(|i-j|) with
        // phi(k) = (1/h) * [g0i((k+1)h) - 2 g0i(kh) + g0i((k-1)h)].
        std::vector<double> by_offset(n);
        for (int k = 0; k < n; ++k)
            by_offset[k] =
                (log_g0i((k + 1) * h) - 2.0 * log_g0i(k * h) + log_g0i((k - 1) * h)) / h;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                A(i, j) = by_offset[std::abs(i - j)];
    } else {
        GaussLegendre outer(opts.outer_gauss);
        for (int i = 1; i <= n; ++i) {
            auto [lo, hi] = g.cell(i);
            for (int j = 1; j <= n; ++j) {
                auto w = [&](double s) {
                    return oracle_inner ? weight_oracle(p->H, p->L, g, j, s, opts.oracle_tol)
                                        : weight(p->H, p->L, g, j, s, opts.oracle_tol);
                };
                double integral;
                if (std::abs(i - j) > 1) {
                    integral = outer.integrate(w, lo, hi);
                } else if (i == j) {
                    // w_j has unbounded derivative at both cell endpoints:
                    // grade each half toward its end.
                    double mid = 0.5 * (lo + hi);
                    int half = std::max(1, opts.band_subdivisions / 2);
                    auto left = graded_breakpoints(lo, mid, lo, half, opts.band_grading);
                    auto right = graded_breakpoints(mid, hi, hi, half, opts.band_grading);
                    integral = 0.0;
                    for (std::size_t k = 0; k + 1 < left.size(); ++k)
                        integral += outer.integrate(w, left[k], left[k + 1]);
                    for (std::size_t k = 0; k + 1 < right.size(); ++k)
                        integral += outer.integrate(w, right[k], right[k + 1]);
                } else {
                    // adjacent cell: grade toward the shared node
                    double shared = (j == i + 1) ? hi : lo;
                    auto pts = graded_breakpoints(lo, hi, shared, opts.band_subdivisions,
                                                  opts.band_grading);
                    integral = 0.0;
                    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
                        integral += outer.integrate(w, pts[k], pts[k + 1]);
                }
                if (!std::isfinite(integral))
                    throw std::runtime_error("assemble: non-finite entry at (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
                A(i - 1, j - 1) = integral / h;
            }
        }
    }

    CellVector ybar = cell_means(p->y, g, opts.ymeans_gauss);
    return DiscreteSystem{g, std::move(A), std::move(ybar.values), std::move(p),
                          oracle_inner ? MomentPath::QuadratureOracle
                                       : MomentPath::ExactMoments};
}

Eigen::VectorXd residual(const DiscreteSystem& sys, const CellVector& X) {
    if (!(X.grid == sys.grid))
        throw std::invalid_argument("residual: vector lives on a different grid");
    return sys.A * sys.problem->N.map(X.values) - X.values - sys.Y;
}

void dump_system(const DiscreteSystem& sys, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("dump_system: cannot open " + path.string());
    char buf[32];
    auto emit = [&](double v, bool last) {
        std::snprintf(buf, sizeof buf, "%.17e", v);
        out << buf << (last ? "\n" : " ");
    };
    for (Eigen::Index i = 0; i < sys.A.rows(); ++i)
        for (Eigen::Index j = 0; j < sys.A.cols(); ++j)
            emit(sys.A(i, j), j + 1 == sys.A.cols());
    for (Eigen::Index i = 0; i < sys.Y.size(); ++i)
        emit(sys.Y[i], i + 1 == sys.Y.size());
}

} // namespace prodint
