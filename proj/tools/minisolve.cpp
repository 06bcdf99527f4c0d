// minisolve — standalone DIMACS CNF solver on the library's CDCL core.
//
// Reads a DIMACS file (or stdin), prints the usual solution lines:
//   s SATISFIABLE / s UNSATISFIABLE / s UNKNOWN
//   v <lit> ... 0            (models only)
// Exit codes follow the SAT-competition convention: 10 SAT, 20 UNSAT,
// 0 UNKNOWN, 1 on input errors.
#include <CLI11.hpp>

#include <rainbow/cnf.hpp>
#include <rainbow/sat_solver.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

int main(int argc, char** argv)
{
    CLI::App app{"DIMACS CNF solver (CDCL, deterministic)"};
    std::string path;
    std::uint64_t max_conflicts = rainbow::sat::SolverBudget{}.max_conflicts;
    double max_seconds = rainbow::sat::SolverBudget{}.max_seconds;
    bool quiet = false;
    app.add_option("file", path, "DIMACS CNF file (default: stdin)");
    app.add_option("--max-conflicts", max_conflicts, "conflict budget");
    app.add_option("--max-seconds", max_seconds, "wall-time budget, seconds");
    app.add_flag("--quiet,-q", quiet, "suppress the v lines");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << '\n';
            return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    rainbow::CnfFormula formula;
    try {
        formula = rainbow::parse_dimacs(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    rainbow::sat::SolverBudget budget;
    budget.max_conflicts = max_conflicts;
    budget.max_seconds = max_seconds;
    const auto outcome =
        rainbow::sat::solve_clauses(formula.num_vars, formula.clauses, budget);

    switch (outcome.status) {
        case rainbow::sat::SolveStatus::SAT: {
            std::cout << "s SATISFIABLE\n";
            if (!quiet) {
                std::cout << "v";
                for (int lit : outcome.model) std::cout << ' ' << lit;
                std::cout << " 0\n";
            }
            return 10;
        }
        case rainbow::sat::SolveStatus::UNSAT:
            std::cout << "s UNSATISFIABLE\n";
            return 20;
        case rainbow::sat::SolveStatus::UNKNOWN:
        default:
            std::cout << "s UNKNOWN\n";
            return 0;
    }
}
