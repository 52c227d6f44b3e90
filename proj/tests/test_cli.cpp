#include "biharm/cli.hpp"
#include "biharm/errors.hpp"
#include "biharm/grid_io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <fstream>
#include <sstream>
#include <vector>

using namespace biharm;

namespace {

struct Args {
    std::vector<std::string> words;
    std::vector<const char*> ptrs;
    explicit Args(std::initializer_list<std::string> w) : words{"biharm"} {
        words.insert(words.end(), w);
        for (const auto& s : words) ptrs.push_back(s.c_str());
    }
    int argc() const { return int(ptrs.size()); }
    const char* const* argv() const { return ptrs.data(); }
};

std::optional<RunConfig> parse(std::initializer_list<std::string> w) {
    Args a(w);
    std::ostringstream out;
    return parse_config(a.argc(), a.argv(), out);
}

int run(std::initializer_list<std::string> w, std::string* out_text = nullptr) {
    Args a(w);
    std::ostringstream out, err;
    const int code = run_cli(a.argc(), a.argv(), out, err);
    if (out_text) *out_text = out.str();
    return code;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "biharm_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("verify levels parse and validate") {
    const auto c = parse({"verify", "--suite", "default", "--levels", "256,512"});
    REQUIRE(c);
    CHECK(c->subcommand == Subcommand::Verify);
    CHECK(c->suite.levels == std::vector<int>{256, 512});
    CHECK_THROWS_AS(parse({"verify", "--levels", "256"}), ConfigError);
    CHECK_THROWS_AS(parse({"verify", "--levels", "512,256"}), ConfigError);
    CHECK_THROWS_AS(parse({"verify", "--suite", "huge"}), ConfigError);
    CHECK(parse({"verify", "--suite", "full"})->suite.levels.size() == 3);
}

TEST_CASE("parameter ranges are enforced before any work") {
    try {
        parse({"apply", "--op", "heat", "--t", "-1"});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("--t") != std::string::npos);
    }
    CHECK_THROWS_AS(parse({"apply", "--op", "nope"}), ConfigError);
    CHECK_THROWS_AS(parse({"apply", "--op", "riesz-pre", "--oracle"}), ConfigError);
    CHECK_THROWS_AS(parse({"apply", "--op", "riesz-pre", "--i", "2"}), ConfigError);
    CHECK_THROWS_AS(parse({"apply", "--points", "100"}), ConfigError);
    CHECK_THROWS_AS(parse({"apply", "--zero-mode", "sometimes"}), ConfigError);
    CHECK_THROWS_AS(parse({"apply", "--op", "laplace-mult", "--breakpoints", "1,2"}), ConfigError);
    CHECK_THROWS_AS(parse({"seminorm", "--estimator", "diff2", "--alpha", "2.5"}), ConfigError);
    CHECK_THROWS_AS(parse({"seminorm", "--tmin", "1", "--tmax", "0.5"}), ConfigError);
    CHECK_THROWS_AS(parse({"kernel", "--r-max", "5"}), ConfigError);
    CHECK_THROWS_AS(parse({"solve", "--times", "0.1,-1"}), ConfigError);
    CHECK_THROWS_AS(parse({"--jobs", "0", "verify"}), ConfigError);
    CHECK_THROWS_AS(parse({"frobnicate"}), ConfigError);
}

TEST_CASE("help returns no config") {
    CHECK_FALSE(parse({"--help"}));
    CHECK_FALSE(parse({"apply", "--help"}));
}

TEST_CASE("config file supplies defaults that flags override") {
    const auto ini = scratch("run.ini");
    std::ofstream(ini) << "jobs=2\n[seminorm]\nalpha=0.5\nestimator=poisson\n";
    auto c = parse({"--config", ini.string(), "seminorm"});
    REQUIRE(c);
    CHECK(c->alpha == 0.5);
    CHECK(c->estimator == "poisson");
    CHECK(c->jobs == 2);
    c = parse({"--config", ini.string(), "seminorm", "--alpha", "0.9"});
    CHECK(c->alpha == 0.9);
}

TEST_CASE("solve on cos(x) at t = 1") {
    auto c = *parse({"solve", "--times", "1"});
    c.side_length = 2.0 * std::numbers::pi;
    c.points = 64;
    const CauchyResult r = solve_cauchy(c);
    REQUIRE(r.solutions.size() == 1);
    const GridFunction& u = r.solutions[0];
    double err = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        err = std::max(err, std::abs(u[i] - std::exp(-1.0) * std::cos(u.spec().coordinate(i)[0])));
    CHECK(err < 1e-14);
    CHECK(r.rows[0].sup_ratio == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("solve: L2 distance decreases as t -> 0 and the sup bound holds") {
    for (const char* fn : {"gaussian", "weierstrass_0.5", "random_trig"}) {
        CAPTURE(fn);
        const CauchyResult r = solve_cauchy(*parse({"solve", "--function", fn}));
        REQUIRE(r.rows.size() == 3);
        CHECK(r.rows[0].l2_distance > r.rows[1].l2_distance);
        CHECK(r.rows[1].l2_distance > r.rows[2].l2_distance);
        for (const CauchyRow& row : r.rows) CHECK(row.within_bound);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"--help"}) == 0);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"apply", "--t", "-1"}) == 2);
    CHECK(run({"apply", "--op", "fracint", "--zero-mode", "forbid", "--function", "gaussian"}) == 3);
    CHECK(run({"apply", "--in", scratch("missing.csv").string()}) == 3);
    CHECK(run({"verify", "--functions", ""}) == 0);
}

TEST_CASE("apply writes a loadable grid; reruns are byte-identical") {
    const auto path = scratch("u.csv");
    CHECK(run({"apply", "--op", "bessel", "--beta", "2", "--function", "gaussian", "--out", path.string()}) == 0);
    std::ifstream in(path);
    std::stringstream first;
    first << in.rdbuf();
    const GridFunction u = load_grid_csv(path);
    CHECK(u.size() == 512);
    std::string again;
    CHECK(run({"apply", "--op", "bessel", "--beta", "2", "--function", "gaussian"}, &again) == 0);
    CHECK(again == first.str());
    CHECK(run({"apply", "--in", path.string(), "--op", "fracpow", "--beta", "1", "--oracle"}) == 0);
}

TEST_CASE("seminorm output") {
    std::string out;
    CHECK(run({"seminorm", "--estimator", "diff2", "--alpha", "1"}, &out) == 0);
    CHECK(out.rfind("estimator,alpha,k,value,argmax,boundary_flag\ndiff2,1,0,1.449", 0) == 0);
}

TEST_CASE("kernel output") {
    std::string out;
    CHECK(run({"kernel", "--count", "11"}, &out) == 0);
    CHECK(out.rfind("r,g,bound_ratio\n0,0.2885168693082", 0) == 0);
}

TEST_CASE("seed replaces the random_trig seed") {
    std::string a, b, c;
    run({"apply", "--function", "random_trig", "--seed", "1"}, &a);
    run({"apply", "--function", "random_trig", "--seed", "2"}, &b);
    run({"apply", "--function", "random_trig", "--seed", "1"}, &c);
    CHECK(a != b);
    CHECK(a == c);
}

}
