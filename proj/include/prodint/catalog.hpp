#ifndef PRODINT_CATALOG_HPP
#define PRODINT_CATALOG_HPP

#include "prodint/assembly.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace prodint {

/// A named benchmark problem: the continuous spec, its exact discrete
/// solution when one exists (the root the relative-error tables measure
/// against), and a documented default initial guess that reaches the
/// tabulated behavior. The discrete equations here have several roots (the
/// sine nonlinearities vanish on the integers), so the guess is part of the
/// problem description.
struct CatalogEntry {
    std::string id;
    std::string description;
    std::shared_ptr<const ProblemSpec> problem;
    /// Exact root of the discrete system, when known (may depend on n).
    std::function<std::optional<CellVector>(const UniformGrid&)> exact_discrete;
    /// Default initial guess for this problem.
    std::function<Eigen::VectorXd(const DiscreteSystem&)> default_guess;
};

const std::vector<CatalogEntry>& catalog();

/// Lookup by id; throws std::invalid_argument listing the known ids.
const CatalogEntry& find_problem(const std::string& id);

} // namespace prodint

#endif
