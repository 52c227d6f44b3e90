#pragma once

// Semigroup integral formulas for the Bessel potential, fractional integral,
// fractional power and Poisson semigroup, evaluated by quadrature over the
// heat semigroup. They exist to cross-check the closed-form symbols in
// calculus.hpp and share nothing with that path beyond forward/inverse.
//
// Every integral is a trapezoid rule in v = log s with a fixed step; the
// truncation [v_min, v_max] comes from explicit tail bounds over the active
// spectrum, so the node count adapts to beta and to the grid.

#include "biharm/grid.hpp"

namespace biharm {

struct OracleQuadrature {
    double step = 0.3;        ///< spacing in log s
    double tolerance = 1e-12; ///< relative tail bound at each truncation end
    int max_nodes = 20000;    ///< per axis; QuadratureDivergence beyond this

    /// Throws BadQuadrature for a non-positive step or tolerance outside (0, 1e-3].
    void validate() const;
};

/// (1/Gamma(a)) \int_0^inf e^{-s} e^{-s lambda} s^{a-1} ds with a = beta/4
/// (bessel), or the same integral without e^{-s}. Targets (1 + lambda)^{-a}
/// and lambda^{-a}.
double gamma_transfer(double lambda, double beta, bool bessel, const OracleQuadrature& quad = {});

/// c_beta = \int_0^inf (e^{-u} - 1)^l u^{-1-beta/4} du with l = [beta/4] + 1.
double fractional_power_constant(double beta, const OracleQuadrature& quad = {});

/// (1/c_beta) \int_0^inf (e^{-s lambda} - 1)^l s^{-1-beta/4} ds, target lambda^{beta/4}.
double fractional_power_transfer(double lambda, double beta, const OracleQuadrature& quad = {});

/// (1/2pi) \int\int t e^{-t^2/4tau} tau^{-3/2} e^{-u} u^{-1/2} e^{-(tau^2/4u) lambda} du dtau,
/// target exp(-t lambda^{1/4}).
double subordination_transfer(double lambda, double t, const OracleQuadrature& quad = {});

/// Bessel potential (bessel = true) or fractional integral of order beta as
/// a weighted sum of heat-semigroup applications W_s f. The fractional
/// integral needs a mean-zero f (NonZeroMean otherwise).
GridFunction gamma_quadrature_oracle(const GridFunction& f, double beta, bool bessel,
                                     const OracleQuadrature& quad = {});

/// (Delta^2)^{beta/4} f from the difference-power integral of (W_s - Id)^l.
/// Throws DomainError if beta is a multiple of 4.
GridFunction fractional_power_oracle(const GridFunction& f, double beta,
                                     const OracleQuadrature& quad = {});

/// Poisson semigroup e^{-t sqrt(-Delta)} f through two subordination steps
/// over the biharmonic heat semigroup.
GridFunction subordinated_poisson_oracle(const GridFunction& f, double t,
                                         const OracleQuadrature& quad = {});

} // namespace biharm
