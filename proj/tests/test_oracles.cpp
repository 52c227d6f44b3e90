#include "biharm/calculus.hpp"
#include "biharm/errors.hpp"
#include "biharm/lipschitz.hpp"
#include "biharm/oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace biharm;

TEST_SUITE("oracles") {

TEST_CASE("Gamma-formula transfers reproduce the closed forms") {
    for (double beta : {0.5, 1.0, 2.0, 3.0, 6.0})
        for (double lambda : {1e-2, 1.0, 1e6}) {
            const double bessel = std::pow(1.0 + lambda, -0.25 * beta);
            const double frac = std::pow(lambda, -0.25 * beta);
            CHECK(std::abs(gamma_transfer(lambda, beta, true) / bessel - 1.0) < 1e-10);
            CHECK(std::abs(gamma_transfer(lambda, beta, false) / frac - 1.0) < 1e-10);
        }
    CHECK(gamma_transfer(0.0, 2.0, true) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(gamma_transfer(0.0, 2.0, false), QuadratureDivergence);
}

TEST_CASE("difference-power constant and transfer") {
    // c_beta for beta = 2: \int (e^{-u} - 1) u^{-3/2} du = Gamma(-1/2) = -2 sqrt(pi)
    CHECK(fractional_power_constant(2.0) == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-11));
    for (double beta : {0.5, 2.0, 5.0})
        for (double lambda : {1e-3, 0.7, 1e5})
            CHECK(std::abs(fractional_power_transfer(lambda, beta) / std::pow(lambda, 0.25 * beta) - 1.0) < 1e-10);
}

TEST_CASE("double subordination reproduces exp(-t lambda^{1/4})") {
    for (double t : {0.5, 1.0, 2.0})
        for (double lambda : {0.1, 1.0, 10.0}) {
            const double e = std::exp(-t * std::pow(lambda, 0.25));
            CHECK(std::abs(subordination_transfer(lambda, t) - e) < 1e-6 * e);
        }
    CHECK(subordination_transfer(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("operator oracles agree with the symbols on the corpus") {
    const GridSpec spec(1, 512, default_side_length());
    for (const auto& [entry, f] : corpus(spec)) {
        CAPTURE(entry.name);
        const GridFunction f0 = f.without_mean();
        CHECK(testing::rel_sup(gamma_quadrature_oracle(f, 1.0, true), apply(SymbolSpec(symbol::BesselPotential{1.0}), f)) < 1e-6);
        CHECK(testing::rel_sup(gamma_quadrature_oracle(f0, 2.0, false), apply(SymbolSpec(symbol::FractionalIntegral{2.0}), f0)) < 1e-6);
        CHECK(testing::rel_sup(fractional_power_oracle(f, 1.5), apply(SymbolSpec(symbol::FractionalPower{1.5}), f)) < 1e-6);
        CHECK(testing::rel_sup(subordinated_poisson_oracle(f, 1.0), apply(SymbolSpec(symbol::Poisson{1.0}), f)) < 1e-5);
    }
}

TEST_CASE("oracle preconditions") {
    const GridSpec spec(1, 64, default_side_length());
    const GridFunction f = testing::cosine(spec) + GridFunction::constant(spec, 1.0);
    CHECK_THROWS_AS(gamma_quadrature_oracle(f, 1.0, false), NonZeroMean);
    CHECK_THROWS_AS(fractional_power_oracle(f, 4.0), DomainError);
    CHECK_THROWS_AS(fractional_power_oracle(f, 8.0), DomainError);
    CHECK_THROWS_AS(subordinated_poisson_oracle(f, 0.0), DomainError);
    CHECK_THROWS_AS(gamma_quadrature_oracle(f, -1.0, true), DomainError);

    OracleQuadrature q;
    q.step = 0.0;
    CHECK_THROWS_AS(q.validate(), BadQuadrature);
    q = {};
    q.max_nodes = 10;
    CHECK_THROWS_AS(gamma_quadrature_oracle(f, 1.0, true, q), QuadratureDivergence);
}

TEST_CASE("a coarser step still converges, only less accurately") {
    OracleQuadrature coarse;
    coarse.step = 0.6;
    const double e = std::pow(2.0, -0.25);
    const double fine_err = std::abs(gamma_transfer(1.0, 1.0, true) - e);
    const double coarse_err = std::abs(gamma_transfer(1.0, 1.0, true, coarse) - e);
    CHECK(fine_err <= coarse_err);
    CHECK(coarse_err < 1e-3);
}

}
