#include "prodint/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace prodint {

namespace {

double norm1h(const Eigen::VectorXd& v, double h) {
    return h * v.cwiseAbs().sum();
}

double cond1_estimate(const Eigen::MatrixXd& J) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(J);
    double pivot_min = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (pivot_min < 1e-300)
        return std::numeric_limits<double>::infinity();
    double norm_j = J.cwiseAbs().colwise().sum().maxCoeff();
    double norm_inv = lu.inverse().cwiseAbs().colwise().sum().maxCoeff();
    return norm_j * norm_inv;
}

} // namespace

Eigen::MatrixXd jacobian(const DiscreteSystem& sys, const CellVector& X) {
    if (!(X.grid == sys.grid))
        throw std::invalid_argument("jacobian: vector lives on a different grid");
    Eigen::VectorXd nprime = sys.problem->N.map_deriv(X.values);
    Eigen::MatrixXd J = sys.A * nprime.asDiagonal();
    J.diagonal().array() -= 1.0;
    return J;
}

Eigen::VectorXd solve_linear(const Eigen::MatrixXd& J, const Eigen::VectorXd& r) {
    if (J.rows() != J.cols() || J.rows() != r.size())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(J);
    if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() < 1e-300)
        throw std::runtime_error("solve_linear: singular matrix (pivot below 1e-300)");
    return lu.solve(r);
}

NewtonReport newton_solve(const DiscreteSystem& sys, const NewtonConfig& cfg,
                          const std::optional<CellVector>& c_ref) {
    if (cfg.tol <= 0.0)
        throw std::invalid_argument("newton_solve: tol must be positive");
    if (cfg.max_iter < 1)
        throw std::invalid_argument("newton_solve: max_iter must be >= 1");

    const UniformGrid& g = sys.grid;
    Eigen::VectorXd C;
    switch (cfg.guess) {
    case NewtonConfig::GuessPolicy::Zeros:
        C = Eigen::VectorXd::Zero(g.n);
        break;
    case NewtonConfig::GuessPolicy::YMeans:
        C = -sys.Y;
        break;
    case NewtonConfig::GuessPolicy::User:
        if (!cfg.user_guess || cfg.user_guess->size() != g.n)
            throw std::invalid_argument("newton_solve: user guess missing or wrong size");
        C = *cfg.user_guess;
        break;
    }

    NewtonReport rep;
    const double y_scale = 1.0 + norm1h(sys.Y, g.h);
    double ref_norm = 0.0;
    if (c_ref) {
        if (!(c_ref->grid == g))
            throw std::invalid_argument("newton_solve: reference lives on a different grid");
        ref_norm = c_ref->norm1();
        rep.relative_errors.emplace();
    }

    auto record = [&](const Eigen::VectorXd& x, double res_norm) {
        rep.iterates.emplace_back(g, x);
        rep.residual_norms.push_back(res_norm);
        if (c_ref)
            rep.relative_errors->push_back(norm1h(x - c_ref->values, g.h) / ref_norm);
    };

    Eigen::VectorXd F = sys.A * sys.problem->N.map(C) - C - sys.Y;
    record(C, norm1h(F, g.h));

    for (int k = 0; k < cfg.max_iter; ++k) {
        Eigen::VectorXd nprime = sys.problem->N.map_deriv(C);
        Eigen::MatrixXd J = sys.A * nprime.asDiagonal();
        J.diagonal().array() -= 1.0;

        Eigen::VectorXd step;
        try {
            step = solve_linear(J, F);
        } catch (const std::runtime_error& e) {
            rep.failure_reason = e.what();
            rep.iterations = k;
            rep.jacobian_condition_estimate = cond1_estimate(J);
            return rep;
        }

        double factor = 1.0;
        Eigen::VectorXd C_next = C - step;
        Eigen::VectorXd F_next = sys.A * sys.problem->N.map(C_next) - C_next - sys.Y;
        if (cfg.damping) {
            const double current = norm1h(F, g.h);
            for (double trial : {1.0, 0.5, 0.25, 0.125}) {
                Eigen::VectorXd Ct = C - trial * step;
                Eigen::VectorXd Ft = sys.A * sys.problem->N.map(Ct) - Ct - sys.Y;
                if (norm1h(Ft, g.h) < current) {
                    factor = trial;
                    C_next = std::move(Ct);
                    F_next = std::move(Ft);
                    break;
                }
            }
        }

        C = std::move(C_next);
        F = std::move(F_next);
        rep.iterations = k + 1;
        double res_norm = norm1h(F, g.h);
        record(C, res_norm);

        double step_norm = factor * norm1h(step, g.h);
        if (step_norm <= cfg.tol * (1.0 + norm1h(C, g.h)) && res_norm <= cfg.tol * y_scale) {
            rep.converged = true;
            break;
        }
    }

    if (!rep.converged && rep.failure_reason.empty())
        rep.failure_reason = "no convergence within " + std::to_string(cfg.max_iter) +
                             " iterations (residual " + std::to_string(rep.residual_norms.back()) +
                             ")";
    rep.jacobian_condition_estimate = cond1_estimate(jacobian(sys, rep.iterates.back()));
    return rep;
}

} // namespace prodint
