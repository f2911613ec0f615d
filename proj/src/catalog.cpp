#include "prodint/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace prodint {

namespace {

// Benchmark domain for every catalog problem.
constexpr double kA = 0.0;
constexpr double kB = 1.0;

std::shared_ptr<const ProblemSpec> make_example1(Nonlinearity n) {
    return std::make_shared<ProblemSpec>(
        kA, kB, SingularFactor::log_distance(), SmoothFactor::constant_one(), std::move(n),
        Integrable1D::constant(kA, kB, -1.0), Integrable1D::constant(kA, kB, 1.0));
}

std::shared_ptr<const ProblemSpec> make_example2() {
    return std::make_shared<ProblemSpec>(
        kA, kB, SingularFactor::log_distance(), SmoothFactor::constant_one(),
        Nonlinearity::sin_pi(), Integrable1D::step(kA, kB, 0.5, -1.0, -2.0),
        Integrable1D::step(kA, kB, 0.5, 1.0, 2.0));
}

// phi(s) = s with N(u) = u^2 gives K(phi)(s) = integral of -log|s-t| t^2 dt,
// so y = K(phi) - phi is computed on demand by the singular-quadrature
// oracle. Nontrivial discretization error, used for order measurements.
std::shared_ptr<const ProblemSpec> make_manufactured() {
    auto y = Integrable1D(kA, kB, [](double s) {
        auto f = [s](double t) { return -std::log(std::abs(s - t)) * t * t; };
        return singular_quad(f, kA, kB, s, 1e-12).value - s;
    });
    auto phi = Integrable1D::with_exact_mean(
        kA, kB, [](double s) { return s; },
        [](double lo, double hi) { return 0.5 * (lo + hi); });
    return std::make_shared<ProblemSpec>(kA, kB, SingularFactor::log_distance(),
                                         SmoothFactor::constant_one(), Nonlinearity::square(),
                                         std::move(y), std::move(phi));
}

std::optional<CellVector> ones_root(const UniformGrid& g) {
    return CellVector::constant(g, 1.0);
}

// Cell means of the step reference solution: exact discrete root only when
// the jump at 0.5 falls on a grid node (even n).
std::optional<CellVector> step_root(const UniformGrid& g) {
    if (g.n % 2 != 0)
        return std::nullopt;
    Eigen::VectorXd v(g.n);
    v.head(g.n / 2).setConstant(1.0);
    v.tail(g.n / 2).setConstant(2.0);
    return CellVector(g, v);
}

Eigen::VectorXd constant_guess(const DiscreteSystem& sys, double value) {
    return Eigen::VectorXd::Constant(sys.grid.n, value);
}

Eigen::VectorXd scaled_ymeans_guess(const DiscreteSystem& sys, double scale) {
    return -scale * sys.Y;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    entries.push_back(
        {"example1-sinpi",
         "log kernel, N(u) = sin(pi u), y = -1; exact solution 1",
         make_example1(Nonlinearity::sin_pi()), ones_root,
         [](const DiscreteSystem& sys) { return constant_guess(sys, 0.65); }});

    entries.push_back(
        {"example1-sin2pi",
         "log kernel, N(u) = sin(2 pi u), y = -1; exact solution 1",
         make_example1(Nonlinearity::sin_two_pi()), ones_root,
         [](const DiscreteSystem& sys) { return constant_guess(sys, 0.65); }});

    entries.push_back({"example2",
                       "log kernel, N(u) = sin(pi u), piecewise-constant y; step solution",
                       make_example2(), step_root, [](const DiscreteSystem& sys) {
                           return scaled_ymeans_guess(sys, 1.05);
                       }});

    entries.push_back({"manufactured",
                       "log kernel, N(u) = u^2, phi(s) = s; for convergence studies",
                       make_manufactured(),
                       [](const UniformGrid&) -> std::optional<CellVector> {
                           return std::nullopt;
                       },
                       [](const DiscreteSystem& sys) {
                           return Eigen::VectorXd::Zero(sys.grid.n).eval();
                       }});

    return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& find_problem(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id)
            return e;
    std::string known;
    for (const CatalogEntry& e : catalog())
        known += (known.empty() ? "" : ", ") + e.id;
    throw std::invalid_argument("unknown problem '" + id + "' (known: " + known + ")");
}

} // namespace prodint
