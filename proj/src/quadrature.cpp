#include "prodint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prodint {

GaussLegendre::GaussLegendre(int points) {
    if (points < 1)
        throw std::invalid_argument("GaussLegendre: order must be >= 1");
    const int m = points;
    nodes_.assign(m, 0.0);
    weights_.assign(m, 0.0);
    for (int k = 0; k < (m + 1) / 2; ++k) {
        // Chebyshev-based initial guess for the k-th root of P_m.
        double x = std::cos(M_PI * (k + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Evaluate P_m and P_m' by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= m; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        // One clean-up recurrence pass at the converged node.
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= m; ++j) {
            double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        nodes_[k] = -x;
        nodes_[m - 1 - k] = x;
        weights_[k] = weights_[m - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    if (m % 2 == 1) {
        nodes_[m / 2] = 0.0;
        // P_m'(0) via recurrence on the derivative values.
        double p0 = 1.0, p1 = 0.0;
        for (int j = 2; j <= m; ++j) {
            double p2 = -(j - 1.0) * p0 / j;
            p0 = p1;
            p1 = p2;
        }
        // dP_m(0) = m * P_{m-1}(0); p0 holds P_{m-1}(0) here.
        double dp = m * p0;
        weights_[m / 2] = 2.0 / (dp * dp);
    }
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double lo, double hi) const {
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        sum += weights_[k] * f(c + r * nodes_[k]);
    return r * sum;
}

double GaussLegendre::integrate_split(const std::function<double(double)>& f, double lo, double hi,
                                      const std::vector<double>& breaks) const {
    std::vector<double> pts;
    pts.push_back(lo);
    for (double t : breaks)
        if (t > lo && t < hi)
            pts.push_back(t);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
        if (pts[k + 1] > pts[k])
            sum += integrate(f, pts[k], pts[k + 1]);
    return sum;
}

std::vector<double> graded_breakpoints(double lo, double hi, double endpoint,
                                       int pieces, double ratio) {
    if (pieces < 1 || ratio <= 0.0 || ratio >= 1.0)
        throw std::invalid_argument("graded_breakpoints: need pieces >= 1 and 0 < ratio < 1");
    const double len = hi - lo;
    std::vector<double> pts;
    pts.reserve(pieces + 1);
    // Distances from the graded endpoint: len, len*ratio, ..., len*ratio^{pieces-1}, 0.
    if (endpoint == lo) {
        pts.push_back(lo);
        for (int k = pieces - 1; k >= 1; --k)
            pts.push_back(lo + len * std::pow(ratio, k));
        pts.push_back(hi);
    } else {
        pts.push_back(lo);
        for (int k = 1; k <= pieces - 1; ++k)
            pts.push_back(hi - len * std::pow(ratio, k));
        pts.push_back(hi);
    }
    return pts;
}

} // namespace prodint
