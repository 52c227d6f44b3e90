#pragma once

// Command-line front end: kernel, apply, seminorm, verify and solve.

#include "biharm/calculus.hpp"
#include "biharm/kernel.hpp"
#include "biharm/lipschitz.hpp"
#include "biharm/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace biharm {

enum class Subcommand { Kernel, Apply, Seminorm, Verify, Solve };

struct RunConfig {
    Subcommand subcommand = Subcommand::Verify;

    // Grid and input. `input` (a GridFunction CSV) wins over `function`.
    int dim = 1;
    int points = 512;
    double side_length = 0.0; ///< 0 selects default_side_length()
    std::string input;
    std::string function = "single_mode";
    std::optional<std::uint64_t> seed; ///< replaces the RandomTrig seed
    std::string output;                ///< empty writes to stdout
    int jobs = 1;

    // kernel
    int kernel_l = 0;
    int kernel_k = 0;
    double r_max = 10.0;
    int r_count = 401;
    double c_prime = 0.5 * kKernelDecayRate;
    KernelQuadrature quad;

    // apply
    std::string op = "heat";
    double t = 1.0;
    double beta = 1.0;
    int k = 1;
    int axis = 1;
    std::optional<ZeroModePolicy> zero_mode;
    bool oracle = false;
    std::vector<double> breakpoints{0.0, 10.0};
    std::vector<double> step_levels{1.0};

    // seminorm
    std::string estimator = "heat";
    double alpha = 1.0;
    TimeGrid time_grid;
    std::optional<double> y_max;

    // verify
    std::string suite_name = "default";
    SuiteConfig suite;

    // solve
    std::vector<double> times{1e-2, 1e-4, 1e-6};
    std::string solution_path; ///< u at the last time, if set
};

/// Parses argv (argv[0] is the program name). A `--config FILE` in INI form
/// (sections named after subcommands) supplies defaults that flags override.
/// Throws ConfigError naming the offending key and its accepted range.
/// Returns std::nullopt when --help was requested (help text goes to `out`).
std::optional<RunConfig> parse_config(int argc, const char* const* argv, std::ostream& out);

struct CauchyRow {
    double t;
    double sup_ratio;   ///< ||u(t)||_inf / ||f||_inf
    double l2_distance; ///< ||u(t) - f||_2
    bool within_bound;  ///< sup_ratio <= \int|g| + 0.01
};

struct CauchyResult {
    std::vector<GridFunction> solutions; ///< u(., t) per requested t
    std::vector<CauchyRow> rows;
    double abs_mass = 0.0; ///< \int |g|
};

/// u(., t) = W_t f for each t in config.times.
CauchyResult solve_cauchy(const RunConfig& config);

/// The sampled input of a config: the CSV file if given, else the corpus entry.
GridFunction load_input(const RunConfig& config);

/// Runs the command line; returns the process exit status
/// (0 ok, 1 a verification band failed, 2 configuration error, 3 runtime error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace biharm
