#ifndef PRODINT_QUADRATURE_HPP
#define PRODINT_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace prodint {

/// Gauss-Legendre rule of a given order on [-1,1], mapped to arbitrary
/// intervals on demand. Nodes and weights are computed once at construction
/// by Newton iteration on the Legendre polynomial, so any order is available
/// without tables.
class GaussLegendre {
public:
    explicit GaussLegendre(int points);

    int points() const { return static_cast<int>(nodes_.size()); }

    /// Integrate f over [lo, hi].
    double integrate(const std::function<double(double)>& f, double lo, double hi) const;

    /// Composite rule over the partition induced by `breaks` (must be sorted;
    /// entries outside [lo, hi] are ignored).
    double integrate_split(const std::function<double(double)>& f, double lo, double hi,
                           const std::vector<double>& breaks) const;

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> nodes_;   // on [-1,1], ascending
    std::vector<double> weights_;
};

/// Breakpoints of a partition of [lo, hi] into `pieces` subintervals graded
/// geometrically (ratio < 1) toward `endpoint`, which must be lo or hi.
/// Used where an integrand is smooth inside the interval but has unbounded
/// derivative at one end.
std::vector<double> graded_breakpoints(double lo, double hi, double endpoint,
                                       int pieces, double ratio);

} // namespace prodint

#endif
