#include "prodint/grid.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace prodint;

namespace {

Integrable1D example2_phi() {
    return Integrable1D::step(0.0, 1.0, 0.5, 1.0, 2.0);
}

// Piecewise-constant extension of a CellVector, with the exact-mean contract
// (overlap-weighted average of cell values).
Integrable1D as_integrable(const CellVector& x) {
    const UniformGrid g = x.grid;
    Eigen::VectorXd v = x.values;
    std::vector<double> jumps;
    for (int i = 1; i < g.n; ++i)
        jumps.push_back(g.node(i));
    auto eval = [g, v](double t) { return v[g.cell_index(t) - 1]; };
    auto mean = [g, v](double lo, double hi) {
        double acc = 0.0;
        for (int i = 1; i <= g.n; ++i) {
            auto [cl, ch] = g.cell(i);
            double overlap = std::min(hi, ch) - std::max(lo, cl);
            if (overlap > 0.0)
                acc += overlap * v[i - 1];
        }
        return acc / (hi - lo);
    };
    return Integrable1D::with_exact_mean(g.a, g.b, eval, mean, jumps);
}

} // namespace

TEST_CASE("uniform grid invariants") {
    UniformGrid g(0.0, 1.0, 7);
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(7) == 1.0);
    for (int i = 1; i <= 7; ++i) // spacing exact to rounding at node magnitude
        CHECK(std::abs((g.node(i) - g.node(i - 1)) - g.h) <= std::ldexp(1.0, -51));

    CHECK_THROWS_AS(UniformGrid(1.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(UniformGrid(0.0, 1.0, 0), std::invalid_argument);

    CHECK(g.cell_index(0.0) == 1);
    CHECK(g.cell_index(1.0) == 7);
    CHECK_THROWS_AS(g.cell_index(-0.1), std::domain_error);
    CHECK_THROWS_AS(g.cell_index(1.1), std::domain_error);

    UniformGrid u(0.0, 1.0, 4);
    CHECK(u.cell_index(0.25) == 2); // interior node resolves right
}

TEST_CASE("cell means of constants and linears are exact") {
    UniformGrid g4(0.0, 1.0, 4);
    CellVector ones = cell_means(Integrable1D::constant(0.0, 1.0, 1.0), g4);
    for (int i = 0; i < 4; ++i)
        CHECK(ones.values[i] == 1.0);

    UniformGrid g2(0.0, 1.0, 2);
    Integrable1D lin(0.0, 1.0, [](double s) { return s; });
    CellVector c = cell_means(lin, g2);
    CHECK(c.values[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(c.values[1] == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("cell means of the step data split at the declared jump") {
    UniformGrid g(0.0, 1.0, 10);
    CellVector c = cell_means(example2_phi(), g);
    for (int i = 0; i < 5; ++i)
        CHECK(c.values[i] == 1.0);
    for (int i = 5; i < 10; ++i)
        CHECK(c.values[i] == 2.0);

    // same data without the exact-mean contract: quadrature must split at the
    // declared jump, here landing inside cell 1 of a one-cell grid
    Integrable1D raw(0.0, 1.0, [](double s) { return s < 0.3 ? 5.0 : 1.0; }, {0.3});
    CellVector m = cell_means(raw, UniformGrid(0.0, 1.0, 1));
    CHECK(m.values[0] == doctest::Approx(0.3 * 5.0 + 0.7 * 1.0).epsilon(1e-14));
}

TEST_CASE("cell means reject non-finite data, naming the cell") {
    UniformGrid g(0.0, 1.0, 4);
    Integrable1D bad(0.0, 1.0,
                     [](double s) { return s < 0.25 ? 1.0 : std::nan(""); });
    CHECK_THROWS_WITH_AS(cell_means(bad, g), doctest::Contains("cell 2"),
                         std::runtime_error);
}

TEST_CASE("projection is idempotent on piecewise constants") {
    UniformGrid g(0.0, 1.0, 8);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Eigen::VectorXd v(8);
    for (int i = 0; i < 8; ++i)
        v[i] = dist(rng);
    CellVector x(g, v);

    CellVector again = cell_means(as_integrable(x), g);
    for (int i = 0; i < 8; ++i)
        CHECK(again.values[i] == x.values[i]);

    // quadrature path (no exact-mean contract): exact up to rounding
    std::vector<double> jumps;
    for (int i = 1; i < g.n; ++i)
        jumps.push_back(g.node(i));
    Integrable1D raw(0.0, 1.0, [x](double t) { return x(t); }, jumps);
    CellVector approx = cell_means(raw, g);
    for (int i = 0; i < 8; ++i)
        CHECK(approx.values[i] == doctest::Approx(x.values[i]).epsilon(1e-14));
}

TEST_CASE("projection contracts the L1 norm") {
    UniformGrid g(0.0, 1.0, 13);
    auto check_contraction = [&](const Integrable1D& f) {
        double norm_f = oracle::integrate([&](double s) { return std::abs(f(s)); }, 0.0, 1.0,
                                          1e-12);
        CHECK(cell_means(f, g).norm1() <= norm_f + 1e-10);
    };
    check_contraction(Integrable1D(0.0, 1.0, [](double s) { return s - 0.4; }));
    check_contraction(Integrable1D(0.0, 1.0, [](double s) { return std::sin(7.0 * s); }));
    check_contraction(example2_phi());
}

TEST_CASE("w1 oscillation matches the derived closed forms") {
    Integrable1D one = Integrable1D::constant(0.0, 1.0, 1.0);
    Integrable1D phi = example2_phi();
    Integrable1D lin(0.0, 1.0, [](double s) { return s; });

    // two boundary strips of height 1 -> 2h; step adds an interior jump and a
    // height-2 strip -> 4h; f(s)=s -> 2h - h^2
    CHECK(w1_oscillation(one, 0.01) == doctest::Approx(0.02).epsilon(1e-10));
    CHECK(w1_oscillation(phi, 0.01) == doctest::Approx(0.04).epsilon(1e-10));
    CHECK(w1_oscillation(lin, 0.1) == doctest::Approx(0.2 - 0.01).epsilon(1e-10));

    // dense-quadrature confirmation of the frozen values at u = h
    auto shift_integral = [](const Integrable1D& f, double u) {
        return oracle::integrate_dense(
            [&](double v) { return std::abs(f.extended(v + u) - f.extended(v)); }, -0.1, 1.1);
    };
    CHECK(shift_integral(one, 0.01) == doctest::Approx(0.02).epsilon(1e-4));
    CHECK(shift_integral(phi, 0.01) == doctest::Approx(0.04).epsilon(1e-4));

    CHECK(w1_oscillation(one, 0.0) == 0.0);
    CHECK_THROWS_AS(w1_oscillation(one, -0.1), std::domain_error);

    // monotone nondecreasing in h
    double prev = 0.0;
    for (double h : {0.001, 0.01, 0.05, 0.1, 0.3}) {
        double w = w1_oscillation(phi, h);
        CHECK(w >= prev);
        prev = w;
    }

    Integrable1D zero = Integrable1D::constant(0.0, 1.0, 0.0);
    CHECK(w1_oscillation(zero, 0.5) == 0.0);
}

TEST_CASE("w2 modulus matches dense sampling") {
    auto sum = [](double s, double t) { return s + t; };
    auto first = [](double s, double t) { return s; };
    auto one = [](double, double) { return 1.0; };

    CHECK(w2_modulus(one, 0.0, 1.0, 0.3) == 0.0);
    CHECK(w2_modulus(sum, 0.0, 1.0, 0.1) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(w2_modulus(first, 0.0, 1.0, 0.25) == doctest::Approx(0.25).epsilon(1e-12));

    CHECK(w2_modulus(sum, 0.0, 1.0, 0.0) == 0.0);
    CHECK_THROWS_AS(w2_modulus(sum, 0.0, 1.0, -1.0), std::domain_error);

    double prev = 0.0;
    for (double h : {0.01, 0.05, 0.1, 0.2}) {
        double w = w2_modulus(sum, 0.0, 1.0, h);
        CHECK(w >= prev);
        prev = w;
    }

    // a genuinely 2d function against a brute-force dense estimate
    auto f = [](double s, double t) { return std::sin(3.0 * s) + std::cos(2.0 * t) * s; };
    double lib = w2_modulus(f, 0.0, 1.0, 0.15);
    double dense = 0.0;
    const int nb = 160;
    for (int i = 0; i <= nb; ++i)
        for (int j = 0; j <= nb; ++j) {
            double s = i / double(nb), t = j / double(nb);
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    double s2 = s + 0.15 * di, t2 = t + 0.15 * dj;
                    if (s2 < 0 || s2 > 1 || t2 < 0 || t2 > 1 || (di == 0 && dj == 0))
                        continue;
                    dense = std::max(dense, std::abs(f(s2, t2) - f(s, t)));
                }
        }
    CHECK(lib == doctest::Approx(dense).epsilon(0.05));
}

TEST_CASE("projection error is bounded by twice the oscillation") {
    Integrable1D lin(0.0, 1.0, [](double s) { return s; });
    Integrable1D phi = example2_phi();
    for (int n : {10, 40, 160}) {
        UniformGrid g(0.0, 1.0, n);

        // || pi_n f - f ||_1 for f(s) = s is h/4 exactly (per-cell triangles)
        double proj_err_lin = g.h / 4.0;
        CHECK(proj_err_lin <= 2.0 * w1_oscillation(lin, g.h));

        // the step function is reproduced exactly when the jump is a node
        CellVector pc = cell_means(phi, g);
        double proj_err_phi = oracle::integrate_dense(
            [&](double s) { return std::abs(pc(s) - phi(s)); }, 0.0, 1.0, 1 << 18);
        CHECK(proj_err_phi <= 2.0 * w1_oscillation(phi, g.h) + 1e-9);
        CHECK(proj_err_phi <= 1e-4); // exact reproduction up to the dense-rule error
    }
}
