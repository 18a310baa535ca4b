// Poisson client: assembles the Q1 problem for the polynomial test function,
// solves levels 2..L with the selected solver precision and prints a
// level / L2 error / reduction table plus per-level solver statistics.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <honei/fem/poisson.hpp>
#include <honei/math/multigrid.hpp>
#include <honei/util/runtime.hpp>

using namespace honei;

namespace {

struct LevelResult {
    std::size_t level = 0;
    double error = 0.0;
    math::SolverReport report;
};

template <Real T>
math::SolverReport solve_fixed_precision(BackendTag tag, std::size_t level, double tol,
                                         DenseVector<double>& solution_out) {
    const auto problem = fem::polynomial_problem(level);
    auto hierarchy = fem::build_hierarchy<T>(level);
    auto b_double = fem::assemble_rhs(level, problem.f, problem.u_exact);
    auto guess = fem::dirichlet_guess(level, problem.u_exact);

    if constexpr (std::is_same_v<T, double>) {
        DenseVector<double> x = guess;
        auto report = math::multigrid_solve(tag, hierarchy, x, b_double, tol, 32);
        solution_out = x;
        return report;
    } else {
        auto b = convert_precision<float>(b_double);
        DenseVector<float> x = convert_precision<float>(guess);
        auto report = math::multigrid_solve(tag, hierarchy, x, b, tol, 32);
        solution_out = convert_precision<double>(x);
        return report;
    }
}

math::SolverReport solve_mixed(BackendTag tag, std::size_t level, double tol,
                               DenseVector<double>& solution_out) {
    const auto problem = fem::polynomial_problem(level);
    auto hd = fem::build_hierarchy<double>(level);
    auto hs = fem::build_hierarchy<float>(level);
    auto b = fem::assemble_rhs(level, problem.f, problem.u_exact);
    DenseVector<double> x = fem::dirichlet_guess(level, problem.u_exact);
    auto report = math::mixed_defect_correct(tag, hd, hs, x, b, tol, 32);
    solution_out = x;
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Q1 multigrid Poisson solver (polynomial accuracy study)"};

    std::size_t level = 6;
    std::string precision = "double";
    std::string backend;
    double tol = 0.0;
    std::string config_path;

    app.add_option("--level", level, "finest refinement level (<= 10)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10}));
    app.add_option("--precision", precision, "single | double | mixed")
        ->check(CLI::IsMember({"single", "double", "mixed"}));
    app.add_option("--backend", backend, "generic | blocked | parallel");
    app.add_option("--tol", tol, "relative residual tolerance");
    app.add_option("--config", config_path, "runtime config file");

    CLI11_PARSE(app, argc, argv);

    try {
        auto& runtime = Runtime::instance();
        if (!config_path.empty())
            runtime.set_config(load_config(config_path));
        for (const auto& warning : runtime.config().warnings)
            std::fprintf(stderr, "warning: %s\n", warning.c_str());
        const BackendTag tag =
            backend.empty() ? runtime.config().default_backend : parse_backend_tag(backend);
        if (tol <= 0.0)
            tol = precision == "mixed" ? 1e-8 : 1e-10;

        std::printf("# precision=%s backend=%s tol=%g\n", precision.c_str(),
                    std::string(to_string(tag)).c_str(), tol);
        std::printf("%5s  %12s  %6s  %7s  %5s  %9s\n", "level", "L2 error", "red.", "cycles",
                    "conv", "seconds");

        bool all_converged = true;
        std::vector<LevelResult> results;
        for (std::size_t l = 2; l <= level; ++l) {
            LevelResult r;
            r.level = l;
            DenseVector<double> solution(1, 0.0);
            if (precision == "double")
                r.report = solve_fixed_precision<double>(tag, l, tol, solution);
            else if (precision == "single")
                r.report = solve_fixed_precision<float>(tag, l, tol, solution);
            else
                r.report = solve_mixed(tag, l, tol, solution);

            const auto problem = fem::polynomial_problem(l);
            r.error = fem::l2_error(solution, problem.u_exact, l);
            all_converged = all_converged && r.report.converged;

            if (results.empty())
                std::printf("%5zu  %12.4e  %6s  %7zu  %5s  %9.3f\n", l, r.error, "-",
                            r.report.iterations, r.report.converged ? "yes" : "NO",
                            r.report.wall_time);
            else
                std::printf("%5zu  %12.4e  %6.2f  %7zu  %5s  %9.3f\n", l, r.error,
                            results.back().error / r.error, r.report.iterations,
                            r.report.converged ? "yes" : "NO", r.report.wall_time);
            results.push_back(std::move(r));
        }

        if (!all_converged) {
            std::fprintf(stderr, "error: at least one level did not converge\n");
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
