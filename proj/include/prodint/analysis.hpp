#ifndef PRODINT_ANALYSIS_HPP
#define PRODINT_ANALYSIS_HPP

#include "prodint/solver.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace prodint {

/// Natural (Nystrom-type) extension of a converged discrete solution:
///   phi_n(s) = sum_j w_j(s) N(c_j) - y(s).
/// Integrating this over a cell and dividing by h recovers the defining
/// system, so its cell means reproduce C to solver tolerance.
double reconstruct(const DiscreteSystem& sys, const CellVector& C, double s);

/// User-supplied bound constants: m0 bounds the projected-operator mass,
/// M1 and M2 the first and second derivative of the integral operator on the
/// ball where the solution lives. Inputs to the diagnostic bound only; no
/// attempt is made to certify them.
struct BoundInputs {
    double m0;
    double M1;
    double M2;

    BoundInputs(double m0_, double M1_, double M2_);
};

/// Computable part of the a-priori discretization-error estimate,
///   2 w2(L, h) m0 + 2 M1 w1(phi_ref, h) + 2 M2 w1(phi_ref, h)^2,
/// reported up to the unknown multiplicative constant. O(h) for smooth data.
double error_bound_terms(const SmoothFactor& L, const Integrable1D& phi_ref,
                         const UniformGrid& g, const BoundInputs& inputs);

/// Slow-path error measure: L1 distance between the reconstructed solution
/// and phi_ref, by per-cell quadrature split at the kernel-induced kinks
/// (cell boundaries) and declared jumps of phi_ref.
double continuous_error(const DiscreteSystem& sys, const CellVector& C,
                        const Integrable1D& phi_ref, int gauss_points = 8);

struct StudyRow {
    int n;
    double h;
    double error;      ///< || pi_n phi_ref - C_n ||_1 (h-scaled)
    double bound;      ///< error_bound_terms, NaN when no BoundInputs given
    int iterations;
    bool converged;
    double order_so_far; ///< LS slope of log error vs log h over rows up to here
};

struct StudyResult {
    std::vector<StudyRow> rows;
    double estimated_order; ///< over all converged rows; NaN if fewer than two
};

/// Mesh-refinement study: assemble and solve at each n, measure the discrete
/// L1 error against phi_ref, and fit the convergence order. Non-converged
/// rows are kept (marked) but excluded from the fit. A guess provider, when
/// given, supplies the initial iterate per grid (overriding cfg.guess).
using GuessProvider = std::function<Eigen::VectorXd(const DiscreteSystem&)>;
StudyResult convergence_study(std::shared_ptr<const ProblemSpec> p, const std::vector<int>& ns,
                              const NewtonConfig& cfg,
                              const std::optional<BoundInputs>& bound = std::nullopt,
                              const AssemblyOptions& opts = {},
                              const GuessProvider& guess_provider = nullptr);

/// CSV with columns n, h, error, bound, iterations, order-so-far
/// (full-precision scientific notation).
void write_study_csv(const StudyResult& study, std::ostream& out);

} // namespace prodint

#endif
