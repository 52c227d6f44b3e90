#include "biharm/cli.hpp"

#include "biharm/errors.hpp"
#include "biharm/grid_io.hpp"
#include "biharm/oracles.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace biharm {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

[[noreturn]] void bad(const std::string& key, const std::string& range, const std::string& got) {
    throw ConfigError("--" + key + ": expected " + range + ", got " + got);
}

void positive(const std::string& key, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) bad(key, "a positive number", num(v));
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

ZeroModePolicy parse_zero_mode(const std::string& s) {
    if (s == "keep") return ZeroModePolicy::Keep;
    if (s == "project") return ZeroModePolicy::Project;
    if (s == "forbid") return ZeroModePolicy::Forbid;
    bad("zero-mode", "one of keep|project|forbid", s);
}

const std::set<std::string> kOps{"heat",     "poisson",    "bessel",       "fracint", "fracpow",
                                  "riesz-pre", "riesz-post", "laplace-mult", "dt"};
const std::set<std::string> kOracleOps{"poisson", "bessel", "fracint", "fracpow"};

void validate(RunConfig& c) {
    if (c.dim != 1 && c.dim != 2) bad("dim", "1 or 2", std::to_string(c.dim));
    if (!power_of_two(c.points) || c.points < 16)
        bad("points", "a power of two >= 16", std::to_string(c.points));
    if (c.side_length < 0.0 || !std::isfinite(c.side_length))
        bad("length", "a positive side length (0 for the default 6 pi)", num(c.side_length));
    if (c.jobs < 1) bad("jobs", "an integer >= 1", std::to_string(c.jobs));

    switch (c.subcommand) {
    case Subcommand::Kernel:
        if (c.kernel_l < 0 || c.kernel_l > 2) bad("l", "0..2", std::to_string(c.kernel_l));
        if (c.kernel_k < 0 || c.kernel_k > 4) bad("k", "0..4", std::to_string(c.kernel_k));
        if (!(c.r_max >= 10.0)) bad("r-max", "a value >= 10", num(c.r_max));
        if (c.r_count < 2) bad("count", "an integer >= 2", std::to_string(c.r_count));
        positive("c-prime", c.c_prime);
        if (c.quad.radius < 3.0) bad("radius", "a value >= 3", num(c.quad.radius));
        if (c.quad.nodes < 64) bad("nodes", "an integer >= 64", std::to_string(c.quad.nodes));
        break;
    case Subcommand::Apply:
        if (!kOps.count(c.op))
            bad("op", "one of heat|poisson|bessel|fracint|fracpow|riesz-pre|riesz-post|laplace-mult|dt", c.op);
        positive("t", c.t);
        positive("beta", c.beta);
        if (c.k < 1) bad("k", "an integer >= 1", std::to_string(c.k));
        if (c.axis < 1 || c.axis > c.dim) bad("i", "an axis in 1.." + std::to_string(c.dim), std::to_string(c.axis));
        if (c.oracle && !kOracleOps.count(c.op)) bad("oracle", "an op among poisson|bessel|fracint|fracpow", c.op);
        if (c.op == "laplace-mult") {
            try {
                StepProfile(c.breakpoints, c.step_levels);
            } catch (const DomainError& e) {
                throw ConfigError(std::string("--breakpoints/--levels: ") + e.what());
            }
        }
        break;
    case Subcommand::Seminorm:
        if (c.estimator != "heat" && c.estimator != "poisson" && c.estimator != "diff2")
            bad("estimator", "one of heat|poisson|diff2", c.estimator);
        positive("alpha", c.alpha);
        if (c.estimator == "diff2" && !(c.alpha < 2.0)) bad("alpha", "a value in (0, 2) for diff2", num(c.alpha));
        positive("tmin", c.time_grid.t_min);
        if (!(c.time_grid.t_max > c.time_grid.t_min)) bad("tmax", "a value above --tmin", num(c.time_grid.t_max));
        if (c.time_grid.count < 2) bad("tnum", "an integer >= 2", std::to_string(c.time_grid.count));
        if (c.y_max) positive("ymax", *c.y_max);
        break;
    case Subcommand::Verify:
        if (c.suite.levels.size() < 2)
            bad("levels", "at least two grid levels", std::to_string(c.suite.levels.size()));
        for (std::size_t i = 0; i < c.suite.levels.size(); ++i) {
            const int n = c.suite.levels[i];
            if (!power_of_two(n) || n < 64) bad("levels", "powers of two >= 64", std::to_string(n));
            if (i > 0 && n <= c.suite.levels[i - 1]) bad("levels", "strictly increasing values", std::to_string(n));
        }
        for (double a : c.suite.alphas) positive("alphas", a);
        for (double b : c.suite.betas) positive("betas", b);
        c.suite.jobs = c.jobs;
        c.suite.side_length = c.side_length;
        break;
    case Subcommand::Solve:
        if (c.times.empty()) bad("times", "at least one time", "none");
        for (double t : c.times) positive("times", t);
        break;
    }
}

int default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : int(n);
}

std::string seminorm_csv(const SeminormEstimate& e) {
    std::ostringstream os;
    os << "estimator,alpha,k,value,argmax,boundary_flag\n"
       << to_string(e.estimator) << ',' << format_real(e.alpha) << ',' << e.k << ',' << format_real(e.value)
       << ',' << format_real(e.argmax) << ',' << (e.boundary_flag ? "true" : "false") << '\n';
    return os.str();
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
    if (c.output.empty())
        out << content;
    else
        write_file_atomic(c.output, content);
}

GridFunction run_apply(const RunConfig& c, const GridFunction& f) {
    auto policy = [&](const SymbolKind& kind) { return c.zero_mode.value_or(SymbolSpec::default_policy(kind)); };
    auto spec_of = [&](SymbolKind kind) { return SymbolSpec(kind, policy(kind)); };

    if (c.oracle) {
        if (c.op == "poisson") return subordinated_poisson_oracle(f, c.t);
        if (c.op == "bessel") return gamma_quadrature_oracle(f, c.beta, true);
        if (c.op == "fracint") return gamma_quadrature_oracle(f, c.beta, false);
        return fractional_power_oracle(f, c.beta);
    }
    if (c.op == "heat") return apply(spec_of(symbol::Heat{c.t}), f);
    if (c.op == "poisson") return apply(spec_of(symbol::Poisson{c.t}), f);
    if (c.op == "bessel") return apply(spec_of(symbol::BesselPotential{c.beta}), f);
    if (c.op == "fracint") return apply(spec_of(symbol::FractionalIntegral{c.beta}), f);
    if (c.op == "fracpow") return apply(spec_of(symbol::FractionalPower{c.beta}), f);
    if (c.op == "riesz-pre") return apply(spec_of(symbol::RieszPre{c.axis}), f);
    if (c.op == "riesz-post") return apply(spec_of(symbol::RieszPost{c.axis}), f);
    if (c.op == "dt") return apply(spec_of(symbol::HeatTimeDeriv{c.t, c.k}), f);
    return apply(spec_of(symbol::LaplaceMultiplier{StepProfile(c.breakpoints, c.step_levels)}), f);
}

std::string run_kernel(const RunConfig& c, std::ostream& err) {
    const KernelProfile p = make_profile(c.dim, c.kernel_l, c.kernel_k, c.r_max, c.r_count, 1.2, c.quad);
    const bool plain = c.kernel_l == 0 && c.kernel_k == 0;
    const int power = c.dim + c.kernel_k + 4 * c.kernel_l;
    std::ostringstream os;
    os << "r,g,bound_ratio\n";
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
        const double r = p.radii[i];
        double ratio = std::abs(p.values[i]) * std::exp(c.c_prime * std::pow(r, 4.0 / 3.0));
        if (!plain) ratio *= std::pow(1.0 + r, power);
        os << format_real(r) << ',' << format_real(p.values[i]) << ',' << format_real(ratio) << '\n';
    }
    const DecayCheck d = check_decay(p, c.c_prime);
    err << "decay check: C=" << d.observed_C << " at r=" << d.argmax_r << " (r_max " << d.r_max << "), "
        << (d.pass ? "pass" : "fail") << '\n';
    return os.str();
}

} // namespace

GridFunction load_input(const RunConfig& c) {
    if (!c.input.empty()) return load_grid_csv(c.input);
    const GridSpec spec(c.dim, c.points, c.side_length > 0.0 ? c.side_length : default_side_length());
    for (CorpusFunction cf : default_corpus(c.dim)) {
        if (cf.name != c.function) continue;
        if (c.seed)
            if (auto* r = std::get_if<recipe::RandomTrig>(&cf.recipe)) r->seed = *c.seed;
        return build(cf, spec);
    }
    std::string names;
    for (const CorpusFunction& cf : default_corpus(c.dim)) names += (names.empty() ? "" : "|") + cf.name;
    throw ConfigError("--function: expected one of " + names + ", got " + c.function);
}

CauchyResult solve_cauchy(const RunConfig& c) {
    const GridFunction f = load_input(c);
    CauchyResult out;
    out.abs_mass = kernel_abs_mass(f.spec().dim());
    const double fsup = sup_norm(f);
    const SpectralFunction F = forward(f);
    for (double t : c.times) {
        if (!(t > 0.0)) throw ConfigError("--times: expected positive times, got " + num(t));
        GridFunction u = apply(SymbolSpec(symbol::Heat{t}), F);
        CauchyRow row;
        row.t = t;
        row.sup_ratio = fsup == 0.0 ? 0.0 : sup_norm(u) / fsup;
        row.l2_distance = l2_norm(u - f);
        row.within_bound = row.sup_ratio <= out.abs_mass + 0.01;
        out.rows.push_back(row);
        out.solutions.push_back(std::move(u));
    }
    return out;
}

std::optional<RunConfig> parse_config(int argc, const char* const* argv, std::ostream& out) {
    RunConfig c;
    c.jobs = default_jobs();
    CLI::App app{"Spectral calculus of the biharmonic operator on periodic grids"};
    app.config_formatter(std::make_shared<CLI::ConfigINI>());
    app.set_config("--config", "", "INI file; [kernel], [apply], ... sections hold subcommand keys");
    app.require_subcommand(1, 1);
    app.add_option("--jobs", c.jobs, "worker threads for verify (default: available cores)")
        ->envname("BIHARM_JOBS");

    auto grid_options = [&](CLI::App* s) {
        s->add_option("--dim", c.dim, "dimension, 1 or 2")->capture_default_str();
        s->add_option("--points", c.points, "points per axis, a power of two >= 16")->capture_default_str();
        s->add_option("--length", c.side_length, "box side L (default 6 pi)");
        s->add_option("--in", c.input, "input GridFunction CSV (overrides --function)");
        s->add_option("--function", c.function, "default corpus entry to sample")->capture_default_str();
        s->add_option("--out", c.output, "output path (default stdout)");
    };
    std::uint64_t seed = 0;
    std::string zero_mode;
    double y_max = 0.0;

    CLI::App* kernel = app.add_subcommand("kernel", "radial profile of the heat kernel and its decay check");
    kernel->add_option("--dim", c.dim, "dimension, 1 or 2")->capture_default_str();
    kernel->add_option("--l", c.kernel_l, "time-derivative order (0..2)")->capture_default_str();
    kernel->add_option("--k", c.kernel_k, "space-derivative order (0..4)")->capture_default_str();
    kernel->add_option("--r-max", c.r_max, "profile radius (>= 10)")->capture_default_str();
    kernel->add_option("--count", c.r_count, "profile samples")->capture_default_str();
    kernel->add_option("--c-prime", c.c_prime, "decay exponent of the ratio (default c/2)");
    kernel->add_option("--nodes", c.quad.nodes, "radial quadrature nodes")->capture_default_str();
    kernel->add_option("--radius", c.quad.radius, "radial truncation")->capture_default_str();
    kernel->add_option("--out", c.output, "output path (default stdout)");

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply a Fourier multiplier to a sampled function");
    grid_options(apply_cmd);
    apply_cmd->add_option("--op", c.op, "heat|poisson|bessel|fracint|fracpow|riesz-pre|riesz-post|laplace-mult|dt")
        ->capture_default_str();
    apply_cmd->add_option("--t", c.t, "semigroup time")->capture_default_str();
    apply_cmd->add_option("--beta", c.beta, "order of bessel/fracint/fracpow")->capture_default_str();
    apply_cmd->add_option("--k", c.k, "time-derivative order for dt")->capture_default_str();
    apply_cmd->add_option("--i", c.axis, "axis of a Riesz transform (1-based)")->capture_default_str();
    apply_cmd->add_option("--zero-mode", zero_mode, "keep|project|forbid (default per operator)");
    apply_cmd->add_flag("--oracle", c.oracle, "use the quadrature formula instead of the symbol");
    apply_cmd->add_option("--breakpoints", c.breakpoints, "laplace-mult breakpoints, from 0")->delimiter(',');
    apply_cmd->add_option("--levels", c.step_levels, "laplace-mult step values")->delimiter(',');
    apply_cmd->add_option("--seed", seed, "seed for random_trig");

    CLI::App* semi = app.add_subcommand("seminorm", "Lipschitz seminorm of a sampled function");
    grid_options(semi);
    semi->add_option("--estimator", c.estimator, "heat|poisson|diff2")->capture_default_str();
    semi->add_option("--alpha", c.alpha, "smoothness exponent")->capture_default_str();
    semi->add_option("--tmin", c.time_grid.t_min, "smallest time")->capture_default_str();
    semi->add_option("--tmax", c.time_grid.t_max, "largest time")->capture_default_str();
    semi->add_option("--tnum", c.time_grid.count, "log-spaced times")->capture_default_str();
    semi->add_option("--ymax", y_max, "largest shift for diff2 (default L/4)");
    semi->add_option("--seed", seed, "seed for random_trig");

    CLI::App* verify = app.add_subcommand("verify", "run the theorem checks and write a CSV report");
    std::vector<int> levels;
    std::vector<double> alphas, betas;
    std::vector<std::string> functions;
    bool no_2d = false, no_kernel = false;
    verify->add_option("--suite", c.suite_name, "default|full")->capture_default_str();
    verify->add_option("--levels", levels, "grid levels, at least two (default 256,512)")->delimiter(',');
    verify->add_option("--alphas", alphas, "alpha values (default 0.3,0.7,1,1.5)")->delimiter(',');
    verify->add_option("--betas", betas, "beta values (default 0.5,1,2)")->delimiter(',');
    verify->add_option("--functions", functions, "corpus entries or 'all' (default all)")->delimiter(',');
    verify->add_flag("--no-2d", no_2d, "skip the two-dimensional corpus");
    verify->add_flag("--no-kernel", no_kernel, "skip the kernel decay rows");
    verify->add_option("--length", c.side_length, "box side L (default 6 pi)");
    verify->add_option("--out", c.output, "report path (default stdout)");

    CLI::App* solve = app.add_subcommand("solve", "heat flow u(t) = W_t f with a convergence table");
    grid_options(solve);
    solve->add_option("--times", c.times, "times t (default 1e-2,1e-4,1e-6)")->delimiter(',');
    solve->add_option("--seed", seed, "seed for random_trig");
    std::string solution_path;
    solve->add_option("--solution", solution_path, "write u at the last time to this CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    if (kernel->parsed()) c.subcommand = Subcommand::Kernel;
    if (apply_cmd->parsed()) c.subcommand = Subcommand::Apply;
    if (semi->parsed()) c.subcommand = Subcommand::Seminorm;
    if (verify->parsed()) c.subcommand = Subcommand::Verify;
    if (solve->parsed()) c.subcommand = Subcommand::Solve;

    for (CLI::App* s : {apply_cmd, semi, solve})
        if (s->parsed() && s->count("--seed")) c.seed = seed;
    if (!zero_mode.empty()) c.zero_mode = parse_zero_mode(zero_mode);
    if (semi->count("--ymax")) c.y_max = y_max;
    if (verify->parsed()) {
        if (c.suite_name == "default")
            c.suite = SuiteConfig::default_suite();
        else if (c.suite_name == "full")
            c.suite = SuiteConfig::full_suite();
        else
            bad("suite", "default or full", c.suite_name);
        if (verify->count("--levels")) c.suite.levels = levels;
        if (verify->count("--alphas")) c.suite.alphas = alphas;
        if (verify->count("--betas")) c.suite.betas = betas;
        if (verify->count("--functions")) {
            std::erase(functions, std::string());
            c.suite.functions = functions;
        }
        c.suite.include_2d = !no_2d;
        c.suite.include_kernel = !no_kernel;
    }
    validate(c);
    if (!solution_path.empty()) c.solution_path = solution_path;
    return c;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> parsed;
    try {
        parsed = parse_config(argc, argv, out);
    } catch (const ConfigError& e) {
        err << e.what() << '\n';
        return 2;
    }
    if (!parsed) return 0;
    const RunConfig& c = *parsed;
    try {
        switch (c.subcommand) {
        case Subcommand::Kernel:
            emit(c, run_kernel(c, err), out);
            return 0;
        case Subcommand::Apply: {
            std::ostringstream os;
            write_grid_csv(os, run_apply(c, load_input(c)));
            emit(c, os.str(), out);
            return 0;
        }
        case Subcommand::Seminorm: {
            const GridFunction f = load_input(c);
            SeminormEstimate e;
            if (c.estimator == "heat")
                e = seminorm_heat(f, c.alpha, c.time_grid);
            else if (c.estimator == "poisson")
                e = seminorm_poisson(f, c.alpha, c.time_grid);
            else
                e = seminorm_second_diff(f, c.alpha, c.y_max);
            emit(c, seminorm_csv(e), out);
            return 0;
        }
        case Subcommand::Verify: {
            const auto rows = run_suite(c.suite);
            emit(c, report_csv(rows), out);
            std::size_t failed = 0;
            for (const CheckReport& r : rows) failed += r.pass ? 0 : 1;
            err << rows.size() << " checks, " << failed << " outside their bands\n";
            return failed == 0 ? 0 : 1;
        }
        case Subcommand::Solve: {
            const CauchyResult res = solve_cauchy(c);
            std::ostringstream os;
            os << "t,sup_ratio,l2_distance,within_bound\n";
            for (const CauchyRow& r : res.rows)
                os << format_real(r.t) << ',' << format_real(r.sup_ratio) << ',' << format_real(r.l2_distance)
                   << ',' << (r.within_bound ? "true" : "false") << '\n';
            emit(c, os.str(), out);
            if (!c.solution_path.empty()) {
                std::ostringstream u;
                write_grid_csv(u, res.solutions.back());
                write_file_atomic(c.solution_path, u.str());
            }
            return 0;
        }
        }
    } catch (const ConfigError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 3;
    }
    return 3;
}

} // namespace biharm
