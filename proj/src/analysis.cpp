#include "prodint/analysis.hpp"
#include "prodint/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace prodint {

double reconstruct(const DiscreteSystem& sys, const CellVector& C, double s) {
    if (s < sys.grid.a || s > sys.grid.b)
        throw std::domain_error("reconstruct: point outside the domain");
    if (!(C.grid == sys.grid))
        throw std::invalid_argument("reconstruct: vector lives on a different grid");
    const ProblemSpec& p = *sys.problem;
    Eigen::VectorXd nc = p.N.map(C.values);
    double acc = 0.0;
    for (int j = 1; j <= sys.grid.n; ++j)
        acc += weight(p.H, p.L, sys.grid, j, s) * nc[j - 1];
    return acc - p.y(s);
}

BoundInputs::BoundInputs(double m0_, double M1_, double M2_) : m0(m0_), M1(M1_), M2(M2_) {
    if (!(m0 > 0.0 && M1 > 0.0 && M2 > 0.0))
        throw std::invalid_argument("BoundInputs: constants must be positive");
}

double error_bound_terms(const SmoothFactor& L, const Integrable1D& phi_ref,
                         const UniformGrid& g, const BoundInputs& inputs) {
    double w2 = L.is_constant_one()
                    ? 0.0
                    : w2_modulus([&](double s, double t) { return L(s, t); }, g.a, g.b, g.h);
    double w1 = w1_oscillation(phi_ref, g.h);
    return 2.0 * w2 * inputs.m0 + 2.0 * inputs.M1 * w1 + 2.0 * inputs.M2 * w1 * w1;
}

double continuous_error(const DiscreteSystem& sys, const CellVector& C,
                        const Integrable1D& phi_ref, int gauss_points) {
    GaussLegendre rule(gauss_points);
    double acc = 0.0;
    for (int i = 1; i <= sys.grid.n; ++i) {
        auto [lo, hi] = sys.grid.cell(i);
        auto f = [&](double s) { return std::abs(reconstruct(sys, C, s) - phi_ref(s)); };
        acc += rule.integrate_split(f, lo, hi, phi_ref.jumps());
    }
    return acc;
}

namespace {

// Least-squares slope of log(error) against log(h).
double fit_order(const std::vector<std::pair<double, double>>& h_err) {
    if (h_err.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [h, e] : h_err) {
        double x = std::log(h), y = std::log(std::max(e, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = static_cast<double>(h_err.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace

StudyResult convergence_study(std::shared_ptr<const ProblemSpec> p, const std::vector<int>& ns,
                              const NewtonConfig& cfg, const std::optional<BoundInputs>& bound,
                              const AssemblyOptions& opts, const GuessProvider& guess_provider) {
    if (!p->phi_ref)
        throw std::invalid_argument("convergence_study: problem has no reference solution");
    for (std::size_t k = 0; k + 1 < ns.size(); ++k)
        if (ns[k] >= ns[k + 1])
            throw std::invalid_argument("convergence_study: ns must be strictly increasing");

    StudyResult out;
    std::vector<std::pair<double, double>> fit_points;
    out.estimated_order = std::numeric_limits<double>::quiet_NaN();
    for (int n : ns) {
        UniformGrid g(p->a, p->b, n);
        DiscreteSystem sys = assemble(p, g, opts);
        CellVector projected = cell_means(*p->phi_ref, g);
        NewtonConfig row_cfg = guess_provider ? cfg.with_guess(guess_provider(sys)) : cfg;
        NewtonReport rep = newton_solve(sys, row_cfg, projected);
        double err = (projected.values - rep.solution().values).cwiseAbs().sum() * g.h;
        double b = std::numeric_limits<double>::quiet_NaN();
        if (bound)
            b = error_bound_terms(p->L, *p->phi_ref, g, *bound);
        if (rep.converged)
            fit_points.emplace_back(g.h, err);
        out.rows.push_back({n, g.h, err, b, rep.iterations, rep.converged,
                            fit_order(fit_points)});
    }
    out.estimated_order = fit_order(fit_points);
    return out;
}

void write_study_csv(const StudyResult& study, std::ostream& out) {
    out << "n,h,error,bound,iterations,order_so_far\n";
    char buf[128];
    for (const StudyRow& r : study.rows) {
        std::snprintf(buf, sizeof buf, "%d,%.17e,%.17e,%.17e,%d,%.17e\n", r.n, r.h, r.error,
                      r.bound, r.iterations, r.order_so_far);
        out << buf;
    }
}

} // namespace prodint
