#include "prodint/grid.hpp"
#include "prodint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace prodint {

UniformGrid::UniformGrid(double a_, double b_, int n_) : a(a_), b(b_), n(n_) {
    if (!(b > a))
        throw std::invalid_argument("UniformGrid: need b > a");
    if (n < 1)
        throw std::invalid_argument("UniformGrid: need n >= 1");
    h = (b - a) / n;
}

int UniformGrid::cell_index(double t) const {
    if (t < a || t > b)
        throw std::domain_error("UniformGrid: point " + std::to_string(t) + " outside [" +
                                std::to_string(a) + "," + std::to_string(b) + "]");
    int i = static_cast<int>(std::floor((t - a) / h)) + 1;
    return std::clamp(i, 1, n);
}

CellVector::CellVector(UniformGrid g, Eigen::VectorXd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n)
        throw std::invalid_argument("CellVector: value count does not match grid");
}

CellVector CellVector::zeros(const UniformGrid& g) {
    return CellVector(g, Eigen::VectorXd::Zero(g.n));
}

CellVector CellVector::constant(const UniformGrid& g, double c) {
    return CellVector(g, Eigen::VectorXd::Constant(g.n, c));
}

double CellVector::norm1() const {
    return grid.h * values.cwiseAbs().sum();
}

Integrable1D::Integrable1D(double a, double b, Eval f, std::vector<double> jumps)
    : a_(a), b_(b), f_(std::move(f)), jumps_(std::move(jumps)) {
    if (!(b_ > a_))
        throw std::invalid_argument("Integrable1D: need b > a");
    std::sort(jumps_.begin(), jumps_.end());
    std::erase_if(jumps_, [&](double t) { return t <= a_ || t >= b_; });
}

Integrable1D Integrable1D::constant(double a, double b, double value) {
    return with_exact_mean(
        a, b, [value](double) { return value; },
        [value](double, double) { return value; });
}

Integrable1D Integrable1D::step(double a, double b, double at, double left, double right) {
    if (at <= a || at >= b)
        throw std::invalid_argument("Integrable1D::step: jump must lie inside (a,b)");
    auto f = [at, left, right](double s) { return s < at ? left : right; };
    auto mean = [at, left, right](double lo, double hi) {
        if (hi <= at) return left;
        if (lo >= at) return right;
        return (left * (at - lo) + right * (hi - at)) / (hi - lo);
    };
    Integrable1D out = with_exact_mean(a, b, f, mean);
    out.jumps_ = {at};
    return out;
}

Integrable1D Integrable1D::with_exact_mean(double a, double b, Eval f, MeanFn mean,
                                           std::vector<double> jumps) {
    Integrable1D out(a, b, std::move(f), std::move(jumps));
    out.mean_ = std::move(mean);
    return out;
}

CellVector cell_means(const Integrable1D& f, const UniformGrid& g, int gauss_points) {
    Eigen::VectorXd c(g.n);
    if (f.has_exact_mean()) {
        for (int i = 1; i <= g.n; ++i) {
            auto [lo, hi] = g.cell(i);
            c[i - 1] = f.exact_mean(lo, hi);
        }
        return CellVector(g, c);
    }
    GaussLegendre rule(gauss_points);
    for (int i = 1; i <= g.n; ++i) {
        auto [lo, hi] = g.cell(i);
        bool finite = true;
        auto eval = [&](double s) {
            double v = f(s);
            if (!std::isfinite(v))
                finite = false;
            return v;
        };
        double integral = rule.integrate_split(eval, lo, hi, f.jumps());
        if (!finite || !std::isfinite(integral))
            throw std::runtime_error("cell_means: non-finite evaluation in cell " +
                                     std::to_string(i));
        c[i - 1] = integral / g.h;
    }
    return CellVector(g, c);
}

double w1_oscillation(const Integrable1D& f, double h, int shift_samples, int gauss_points) {
    if (h < 0.0)
        throw std::domain_error("w1_oscillation: h must be >= 0");
    if (h == 0.0)
        return 0.0;
    if (shift_samples < 2)
        shift_samples = 2;

    const double a = f.a(), b = f.b();
    GaussLegendre rule(gauss_points);
    double best = 0.0;
    for (int k = 0; k < shift_samples; ++k) {
        const double u = h * k / (shift_samples - 1);
        if (u == 0.0)
            continue;
        // |f~(v+u) - f~(v)| is supported on [a-u, b]. Both f~(.) and f~(.+u)
        // are piecewise smooth with breakpoints at the interval endpoints,
        // the declared jumps, and their u-shifted copies.
        std::vector<double> breaks = {a, b - u};
        for (double j : f.jumps()) {
            breaks.push_back(j);
            breaks.push_back(j - u);
        }
        auto integrand = [&](double v) { return std::abs(f.extended(v + u) - f.extended(v)); };
        double val = rule.integrate_split(integrand, a - u, b, breaks);
        best = std::max(best, val);
    }
    return best;
}

double w2_modulus(const std::function<double(double, double)>& f, double a, double b,
                  double h, int base_points, int directions) {
    if (h < 0.0)
        throw std::domain_error("w2_modulus: h must be >= 0");
    if (h == 0.0)
        return 0.0;
    if (base_points < 2)
        base_points = 2;
    if (directions < 4)
        directions = 4;

    // Displacements on the max-norm sphere of radius h; the parametrization
    // hits the four corners, where interpolation error bounds are attained.
    std::vector<std::pair<double, double>> disp;
    disp.reserve(directions);
    for (int k = 0; k < directions; ++k) {
        double th = 2.0 * M_PI * k / directions;
        double cx = std::cos(th), cy = std::sin(th);
        double scale = h / std::max(std::abs(cx), std::abs(cy));
        disp.emplace_back(scale * cx, scale * cy);
    }

    double best = 0.0;
    for (int i = 0; i < base_points; ++i) {
        double s = a + (b - a) * i / (base_points - 1);
        for (int j = 0; j < base_points; ++j) {
            double t = a + (b - a) * j / (base_points - 1);
            double f0 = f(s, t);
            for (auto [ds, dt] : disp) {
                double s2 = s + ds, t2 = t + dt;
                if (s2 < a || s2 > b || t2 < a || t2 > b)
                    continue;
                best = std::max(best, std::abs(f(s2, t2) - f0));
            }
        }
    }
    return best;
}

} // namespace prodint
