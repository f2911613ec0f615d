// Batch front-end: pick a catalog problem, run the product-integration
// discretization and Newton's method, print per-iteration tables and write
// CSV / matrix dumps. See README.md for the catalog and the config format.

#include "prodint/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw CLI::ValidationError("expected a comma-separated list of integers, got '" +
                                       text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw CLI::ValidationError("expected at least one integer in '" + text + "'");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Product-integration solver for weakly singular Fredholm equations "
                 "of the second kind"};
    app.set_config("--config", "", "flat key = value config file (# comments); "
                                   "command-line flags win");

    prodint::RunConfig cfg;
    std::string n_text = "10";
    std::string study_text;
    std::string csv_path, dump_path;

    app.add_option("problem", cfg.problem, "catalog problem id")->required(false);
    app.add_option("--problem", cfg.problem, "catalog problem id");
    app.add_option("--n", n_text, "grid size or comma list (default 10)");
    app.add_option("--study", study_text, "comma list of grid sizes for a convergence study");
    app.add_option("--tol", cfg.tol, "Newton stopping tolerance (default 1e-14)");
    app.add_option("--max-iter", cfg.max_iter, "Newton iteration cap (default 50)");
    app.add_option("--guess", cfg.guess,
                   "initial iterate: catalog | zeros | ymeans | file with one value per line");
    app.add_flag("--damping", cfg.damping, "enable the 1,1/2,1/4,1/8 step line search");
    app.add_option("--csv", csv_path, "write per-iteration (or study) CSV here");
    app.add_option("--dump-matrix", dump_path, "dump A and Y to this plain-text file");
    app.add_flag("--bound", cfg.emit_bound,
                 "emit the error-bound terms (requires --m0 --M1 --M2)");
    app.add_option("--m0", cfg.m0, "bound constant m0");
    app.add_option("--M1", cfg.M1, "bound constant M1");
    app.add_option("--M2", cfg.M2, "bound constant M2");
    app.add_option("--seed", cfg.seed, "seed (reserved for randomized test drivers)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return prodint::kExitUsage;
    }

    if (cfg.problem.empty()) {
        std::cerr << "error: no problem selected; known problems:\n";
        for (const auto& entry : prodint::catalog())
            std::cerr << "  " << entry.id << "  -  " << entry.description << "\n";
        return prodint::kExitUsage;
    }

    try {
        cfg.ns = parse_int_list(n_text);
        if (!study_text.empty())
            cfg.study_ns = parse_int_list(study_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return prodint::kExitUsage;
    }
    if (!csv_path.empty())
        cfg.csv_path = csv_path;
    if (!dump_path.empty())
        cfg.dump_matrix_path = dump_path;

    return prodint::run(cfg, std::cout, std::cerr);
}
