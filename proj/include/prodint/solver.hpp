#ifndef PRODINT_SOLVER_HPP
#define PRODINT_SOLVER_HPP

#include "prodint/assembly.hpp"

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace prodint {

/// Newton configuration. The discretization fixes everything except the
/// start and the stop: initial guess (a named policy or a user vector),
/// combined step-and-residual tolerance, iteration cap, and an optional
/// damping line search (off by default; plain Newton is the baseline).
struct NewtonConfig {
    enum class GuessPolicy { Zeros, YMeans, User };

    GuessPolicy guess = GuessPolicy::Zeros;
    std::optional<Eigen::VectorXd> user_guess; ///< required when guess == User
    double tol = 1e-14;
    int max_iter = 50;
    bool damping = false; ///< try step factors 1, 1/2, 1/4, 1/8

    NewtonConfig with_guess(Eigen::VectorXd g) const {
        NewtonConfig c = *this;
        c.guess = GuessPolicy::User;
        c.user_guess = std::move(g);
        return c;
    }
};

/// Everything the run produced, iterate by iterate. Non-convergence is data,
/// not an error: stagnation within max_iter leaves converged == false with
/// the full history intact.
struct NewtonReport {
    std::vector<CellVector> iterates;        ///< C^(0) (the guess) .. C^(K)
    std::vector<double> residual_norms;      ///< h-scaled 1-norm of F at each iterate
    std::optional<std::vector<double>> relative_errors; ///< vs the reference solution
    bool converged = false;
    int iterations = 0; ///< Newton steps taken (iterates.size() - 1)
    double jacobian_condition_estimate = 0.0; ///< 1-norm estimate at the final iterate
    std::string failure_reason;               ///< empty when converged

    const CellVector& solution() const { return iterates.back(); }
};

/// F'(X) = A diag(N'(X)) - I.
Eigen::MatrixXd jacobian(const DiscreteSystem& sys, const CellVector& X);

/// Dense LU with partial pivoting. Throws std::runtime_error if a pivot
/// falls below 1e-300.
Eigen::VectorXd solve_linear(const Eigen::MatrixXd& J, const Eigen::VectorXd& r);

/// Newton's method on F(C) = A N(C) - C - Y = 0. Stops when both the scaled
/// step norm and the residual norm fall below tol * (1 + scale), or at
/// max_iter. Deterministic: identical configs produce identical histories.
NewtonReport newton_solve(const DiscreteSystem& sys, const NewtonConfig& cfg,
                          const std::optional<CellVector>& c_ref = std::nullopt);

} // namespace prodint

#endif
