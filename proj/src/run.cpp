#include "prodint/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace prodint {

namespace {

std::string sci(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, v);
    return buf;
}

NewtonConfig newton_config(const RunConfig& cfg, const DiscreteSystem& sys,
                           const CatalogEntry& entry) {
    NewtonConfig nc;
    nc.tol = cfg.tol;
    nc.max_iter = cfg.max_iter;
    nc.damping = cfg.damping;
    if (cfg.guess == "zeros") {
        nc.guess = NewtonConfig::GuessPolicy::Zeros;
    } else if (cfg.guess == "ymeans") {
        nc.guess = NewtonConfig::GuessPolicy::YMeans;
    } else if (cfg.guess == "catalog") {
        nc = nc.with_guess(entry.default_guess(sys));
    } else {
        // anything else is a file: one value per line, exactly n values
        std::ifstream in(cfg.guess);
        if (!in)
            throw std::invalid_argument("cannot open guess file '" + cfg.guess + "'");
        std::vector<double> vals;
        double v;
        while (in >> v)
            vals.push_back(v);
        if (static_cast<int>(vals.size()) != sys.grid.n)
            throw std::invalid_argument("guess file '" + cfg.guess + "' holds " +
                                        std::to_string(vals.size()) + " values, grid needs " +
                                        std::to_string(sys.grid.n));
        nc = nc.with_guess(Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size()));
    }
    return nc;
}

int run_tables(const RunConfig& cfg, const CatalogEntry& entry, std::ostream& out,
               std::ostream& err) {
    bool all_converged = true;
    std::ostringstream csv;
    csv << "problem,n,k,relative_error,residual_norm\n";

    for (int n : cfg.ns) {
        UniformGrid g(entry.problem->a, entry.problem->b, n);
        DiscreteSystem sys = assemble(entry.problem, g);
        if (cfg.dump_matrix_path) {
            std::string path = *cfg.dump_matrix_path;
            if (cfg.ns.size() > 1)
                path += ".n" + std::to_string(n);
            dump_system(sys, path);
        }
        NewtonConfig nc = newton_config(cfg, sys, entry);
        std::optional<CellVector> ref = entry.exact_discrete(g);
        NewtonReport rep = newton_solve(sys, nc, ref);

        out << "problem " << entry.id << ", n = " << n << " (h = " << sci(g.h, 1) << ")\n";
        out << (ref ? "  k   rel.error   residual\n" : "  k   residual\n");
        for (std::size_t k = 1; k < rep.residual_norms.size(); ++k) {
            char line[128];
            if (ref)
                std::snprintf(line, sizeof line, "%3zu   %s     %s\n", k,
                              sci((*rep.relative_errors)[k], 1).c_str(),
                              sci(rep.residual_norms[k], 1).c_str());
            else
                std::snprintf(line, sizeof line, "%3zu   %s\n", k,
                              sci(rep.residual_norms[k], 1).c_str());
            out << line;
        }
        if (rep.converged)
            out << "converged in " << rep.iterations << " iterations";
        else
            out << "NOT CONVERGED after " << rep.iterations << " iterations ("
                << rep.failure_reason << ")";
        out << "; cond1(J) ~ " << sci(rep.jacobian_condition_estimate, 1) << "\n";
        if (cfg.emit_bound && entry.problem->phi_ref) {
            double bnd = error_bound_terms(entry.problem->L, *entry.problem->phi_ref, g,
                                           BoundInputs(cfg.m0, cfg.M1, cfg.M2));
            out << "bound terms (up to the unknown constant): " << sci(bnd, 6) << "\n";
        }
        out << "\n";

        for (std::size_t k = 0; k < rep.residual_norms.size(); ++k) {
            char line[160];
            double rel = ref ? (*rep.relative_errors)[k]
                             : std::numeric_limits<double>::quiet_NaN();
            std::snprintf(line, sizeof line, "%s,%d,%zu,%.17e,%.17e\n", entry.id.c_str(), n, k,
                          rel, rep.residual_norms[k]);
            csv << line;
        }

        all_converged = all_converged && rep.converged;
    }

    if (cfg.csv_path) {
        std::ofstream f(*cfg.csv_path);
        if (!f) {
            err << "error: cannot open CSV path '" << *cfg.csv_path << "'\n";
            return kExitUsage;
        }
        f << csv.str();
    }
    return all_converged ? kExitConverged : kExitNoConvergence;
}

int run_study(const RunConfig& cfg, const CatalogEntry& entry, std::ostream& out,
              std::ostream& err) {
    if (!entry.problem->phi_ref) {
        err << "error: problem '" << entry.id << "' has no reference solution for a study\n";
        return kExitUsage;
    }
    UniformGrid g0(entry.problem->a, entry.problem->b, cfg.study_ns.front());
    DiscreteSystem sys0 = assemble(entry.problem, g0);
    NewtonConfig nc = newton_config(cfg, sys0, entry);
    if (nc.guess == NewtonConfig::GuessPolicy::User && cfg.guess != "catalog") {
        err << "error: study mode needs a grid-independent guess (catalog, zeros or ymeans)\n";
        return kExitUsage;
    }

    std::optional<BoundInputs> bound;
    if (cfg.emit_bound)
        bound.emplace(cfg.m0, cfg.M1, cfg.M2);

    GuessProvider provider;
    if (cfg.guess == "catalog")
        provider = entry.default_guess;
    StudyResult study =
        convergence_study(entry.problem, cfg.study_ns, nc, bound, {}, provider);

    out << "study " << entry.id << " over n =";
    for (int n : cfg.study_ns)
        out << " " << n;
    out << "\n  n       h         error       iters  order\n";
    for (const StudyRow& r : study.rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%5d   %s   %s   %3d   %s%s\n", r.n,
                      sci(r.h, 1).c_str(), sci(r.error, 1).c_str(), r.iterations,
                      std::isnan(r.order_so_far) ? "  -  " : sci(r.order_so_far, 1).c_str(),
                      r.converged ? "" : "   [not converged]");
        out << line;
    }
    out << "estimated order: " << sci(study.estimated_order, 2) << "\n";

    if (cfg.csv_path) {
        std::ofstream f(*cfg.csv_path);
        if (!f) {
            err << "error: cannot open CSV path '" << *cfg.csv_path << "'\n";
            return kExitUsage;
        }
        write_study_csv(study, f);
    }
    bool all_converged = true;
    for (const StudyRow& r : study.rows)
        all_converged = all_converged && r.converged;
    return all_converged ? kExitConverged : kExitNoConvergence;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const CatalogEntry& entry = find_problem(cfg.problem);
        if (cfg.ns.empty() && cfg.study_ns.empty()) {
            err << "error: no grid sizes requested\n";
            return kExitUsage;
        }
        for (int n : cfg.ns)
            if (n < 1) {
                err << "error: grid size must be >= 1\n";
                return kExitUsage;
            }
        if (cfg.emit_bound && !(cfg.m0 > 0.0 && cfg.M1 > 0.0 && cfg.M2 > 0.0)) {
            err << "error: --bound requires positive --m0 --M1 --M2\n";
            return kExitUsage;
        }
        if (!cfg.study_ns.empty())
            return run_study(cfg, entry, out, err);
        return run_tables(cfg, entry, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace prodint
