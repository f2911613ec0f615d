#ifndef PRODINT_ASSEMBLY_HPP
#define PRODINT_ASSEMBLY_HPP

#include "prodint/grid.hpp"
#include "prodint/kernel.hpp"

#include <Eigen/Core>
#include <filesystem>
#include <memory>
#include <optional>

namespace prodint {

/*
 * Discretizing the fixed-point equation  K(phi) - y = phi  by cell-mean
 * projection of the unknown and linear interpolation of the smooth kernel
 * factor leads to the dense nonlinear system
 *
 *     A N(C) - C = Y,          F(X) := A N(X) - X - Y,
 *
 * with the pointwise weights and entries
 *
 *     w_j(s)  = integral over cell_j of H(s,t) [L(s,t)]_n dt
 *     A(i,j)  = (1/h) * integral over cell_i of w_j(s) ds
 *     Y(i)    = cell mean of y over cell_i.
 *
 * Since [L]_n is affine in t on each cell, w_j(s) reduces to the two exact
 * singular moments of H over cell_j; the outer integral in s is smooth away
 * from cell_j and is done by Gauss-Legendre, graded toward the singular
 * cell's endpoints on the band |i-j| <= 1 where w_j has unbounded derivative.
 */

/// The continuous problem: domain, kernel factorization H*L*N, data y, and
/// optionally a reference solution for convergence studies.
struct ProblemSpec {
    double a;
    double b;
    SingularFactor H;
    SmoothFactor L;
    Nonlinearity N;
    Integrable1D y;
    std::optional<Integrable1D> phi_ref;

    ProblemSpec(double a_, double b_, SingularFactor H_, SmoothFactor L_, Nonlinearity N_,
                Integrable1D y_, std::optional<Integrable1D> phi_ref_ = std::nullopt);
};

enum class MomentPath { ExactMoments, QuadratureOracle };

enum class AssemblyPath {
    Auto,            ///< closed-form double integral when available, else OuterQuadrature
    OuterQuadrature, ///< Gauss-Legendre in s over exact inner moments
    InnerOracle      ///< Gauss-Legendre in s over singular_quad inner weights
};

struct AssemblyOptions {
    int outer_gauss = 12;        ///< GL points per outer (sub)interval
    int band_subdivisions = 8;   ///< graded pieces on the band |i-j| <= 1
    double band_grading = 0.15;  ///< geometric ratio of the grading
    AssemblyPath path = AssemblyPath::Auto;
    double oracle_tol = 1e-12;   ///< tolerance for quadrature-oracle weights
    int ymeans_gauss = 8;        ///< GL points for the cell means of y
};

/// The assembled dense system. Immutable after construction.
struct DiscreteSystem {
    UniformGrid grid;
    Eigen::MatrixXd A;
    Eigen::VectorXd Y;
    std::shared_ptr<const ProblemSpec> problem;
    MomentPath provenance; ///< whether A used exact moments or the quadrature oracle
};

/// Pointwise weight w_j(s): the integral of H(s,t)[L(s,t)]_n over cell j,
/// expanded through the singular moments (m0, m1) of H:
///   w = (1/h) * [L(s,t_{j-1}) (t_j m0 - m1) + L(s,t_j) (m1 - t_{j-1} m0)].
double weight(const SingularFactor& H, const SmoothFactor& L, const UniformGrid& g, int j,
              double s, double oracle_tol = 1e-12);

/// Same weight computed entirely by the quadrature oracle (no moment
/// formulas); reference path for accuracy tests.
double weight_oracle(const SingularFactor& H, const SmoothFactor& L, const UniformGrid& g,
                     int j, double s, double tol = 1e-12);

/// Assemble A and Y for the problem on the given grid. Throws
/// std::runtime_error naming the entry if any quadrature produces a
/// non-finite value.
DiscreteSystem assemble(std::shared_ptr<const ProblemSpec> p, const UniformGrid& g,
                        const AssemblyOptions& opts = {});

/// F(X) = A N(X) - X - Y with N applied entrywise.
Eigen::VectorXd residual(const DiscreteSystem& sys, const CellVector& X);

/// Plain-text dump of the system: n rows of A then one row Y, full-precision
/// scientific notation, space separated.
void dump_system(const DiscreteSystem& sys, const std::filesystem::path& path);

} // namespace prodint

#endif
