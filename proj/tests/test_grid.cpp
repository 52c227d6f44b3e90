#include "biharm/errors.hpp"
#include "biharm/grid.hpp"
#include "biharm/grid_io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace biharm;

TEST_SUITE("grid") {

TEST_CASE("GridSpec rejects bad dimensions, sizes and lengths") {
    CHECK_THROWS_AS(GridSpec(3, 64, 1.0), DomainError);
    CHECK_THROWS_AS(GridSpec(1, 100, 1.0), DomainError);
    CHECK_THROWS_AS(GridSpec(1, 8, 1.0), DomainError);
    CHECK_THROWS_AS(GridSpec(1, 64, 0.0), DomainError);
    CHECK_THROWS_AS(GridSpec(1, 64, -2.0), DomainError);
    CHECK_NOTHROW(GridSpec(2, 16, 1.0));
}

TEST_CASE("coordinates start at -L/2 and wavenumbers are signed") {
    const GridSpec s(1, 16, 2.0 * std::numbers::pi);
    CHECK(s.coordinate(0)[0] == doctest::Approx(-std::numbers::pi));
    CHECK(s.wavenumber(7)[0] == 7);
    CHECK(s.wavenumber(8)[0] == -8);
    CHECK(s.wavenumber(15)[0] == -1);
    CHECK(s.frequency(3)[0] == doctest::Approx(3.0));
    CHECK(s.partner(3) == 13);
    CHECK(s.partner(8) == 8);
    const GridSpec s2(2, 16, 4.0);
    CHECK(s2.flatten(s2.unflatten(37)) == 37);
}

TEST_CASE("forward of a cosine puts 1/2 on the two modes") {
    const GridSpec s(1, 64, 2.0 * std::numbers::pi);
    const SpectralFunction F = forward(testing::cosine(s, 3.0));
    CHECK(std::abs(F.at({3, 0}) - Complex(0.5, 0.0)) < 1e-14);
    CHECK(std::abs(F.at({-3, 0}) - Complex(0.5, 0.0)) < 1e-14);
    double rest = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i)
        if (std::abs(s.wavenumber(i)[0]) != 3) rest = std::max(rest, std::abs(F.coeffs()[i]));
    CHECK(rest < 1e-14);
}

TEST_CASE("a constant maps to the zero mode") {
    const GridSpec s(2, 32, 5.0);
    const SpectralFunction F = forward(GridFunction::constant(s, 2.5));
    CHECK(std::abs(F.at({0, 0}) - Complex(2.5, 0.0)) < 1e-14);
}

TEST_CASE("round trip and Parseval on random data") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const GridSpec s(seed % 2 ? 1 : 2, seed % 2 ? 256 : 64, 3.0 + double(seed));
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> d;
        std::vector<double> v(s.size());
        for (double& x : v) x = d(rng);
        const GridFunction f(s, v);
        const SpectralFunction F = forward(f);
        CHECK(F.symmetry_defect() == 0.0);
        CHECK(sup_norm(inverse(F) - f) < 1e-13 * sup_norm(f));
        CHECK(l2_norm(F) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
    }
}

TEST_CASE("inverse rejects a coefficient set that is not conjugate symmetric") {
    const GridSpec s(1, 32, 1.0);
    SpectralFunction F(s, std::vector<Complex>(s.size()));
    F.at({2, 0}) = Complex(1.0, 0.0);
    CHECK_THROWS_AS(inverse(F), SymmetryViolation);
    F.at({-2, 0}) = Complex(1.0, 0.0);
    CHECK_NOTHROW(inverse(F));
}

TEST_CASE("GridFunction rejects mismatched sizes and non-finite samples") {
    const GridSpec s(1, 16, 1.0);
    CHECK_THROWS_AS(GridFunction(s, std::vector<double>(15)), DomainError);
    std::vector<double> v(16, 0.0);
    v[3] = std::nan("");
    CHECK_THROWS_AS(GridFunction(s, v), DomainError);
    const GridFunction a = GridFunction::constant(s, 1.0);
    CHECK_THROWS_AS(a - GridFunction::constant(GridSpec(1, 32, 1.0), 1.0), DomainError);
}

TEST_CASE("shift moves samples by lattice vectors only") {
    const GridSpec s(1, 64, 2.0 * std::numbers::pi);
    const GridFunction f = testing::cosine(s);
    const double h = s.spacing();
    const GridFunction g = shift(f, {5 * h, 0.0});
    for (std::size_t i = 0; i + 5 < s.size(); ++i) CHECK(g[i] == f[i + 5]);
    CHECK(sup_norm(shift(f, {s.side_length(), 0.0}) - f) == 0.0);
    CHECK(sup_norm(shift(shift(f, {3 * h, 0}), {-3 * h, 0}) - f) == 0.0);
    CHECK_THROWS_AS(shift(f, {0.5 * h, 0.0}), NonLatticeShift);
    const GridSpec s2(2, 16, 1.0);
    const GridFunction f2 = testing::random_smooth(s2, 4, 3);
    const GridFunction g2 = shift_by(f2, {1, -2});
    CHECK(g2[s2.flatten({0, 2})] == f2[s2.flatten({1, 0})]);
}

TEST_CASE("norms") {
    const GridSpec s(1, 128, 2.0 * std::numbers::pi);
    const GridFunction f = testing::cosine(s);
    CHECK(sup_norm(f) == doctest::Approx(1.0));
    CHECK(l2_norm(f) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(f.mean() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("CSV round trip is exact and rejects malformed input") {
    const GridSpec s(2, 16, 3.7);
    const GridFunction f = testing::random_smooth(s, 9, 3, false);
    std::ostringstream os;
    write_grid_csv(os, f);
    std::istringstream is(os.str());
    const GridFunction g = read_grid_csv(is);
    CHECK(g.spec() == s);
    CHECK(sup_norm(g - f) == 0.0);

    std::istringstream bad_header("# 1,17,1\n0\n");
    CHECK_THROWS_AS(read_grid_csv(bad_header), DomainError);
    std::istringstream short_body("# 1,16,1\n0\n1\n");
    CHECK_THROWS_AS(read_grid_csv(short_body), DomainError);
    std::istringstream junk("# 1,16,1\n" + std::string(15 * 2, ' ') + "x\n");
    CHECK_THROWS_AS(read_grid_csv(junk), DomainError);
}

TEST_CASE("format_real round-trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::strtod(format_real(v).c_str(), nullptr) == v);
}

TEST_CASE("write_file_atomic replaces the target and leaves no temporary") {
    const auto dir = std::filesystem::temp_directory_path() / "biharm_atomic_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "second");
    int files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
}

}
