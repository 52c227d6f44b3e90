#include "biharm/oracles.hpp"

#include "biharm/calculus.hpp"
#include "biharm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace biharm {

namespace {

constexpr double kPi = std::numbers::pi;

// Trapezoid nodes v_i = v_min + i h covering [v_min, v_max], returned as
// (s_i = e^{v_i}, h * end-weight). The caller folds in the integrand's own factor.
struct LogNodes {
    std::vector<double> v;
    std::vector<double> w;
};

LogNodes log_nodes(double v_min, double v_max, const OracleQuadrature& quad, const char* what) {
    if (!std::isfinite(v_min) || !std::isfinite(v_max) || !(v_max > v_min))
        throw QuadratureDivergence(std::string(what) + ": tail bound gives no finite range");
    const double span = (v_max - v_min) / quad.step;
    if (span + 1.0 > quad.max_nodes)
        throw QuadratureDivergence(std::string(what) + ": tails need " +
                                   std::to_string(long(std::ceil(span)) + 1) + " nodes, limit " +
                                   std::to_string(quad.max_nodes));
    const int n = int(std::ceil(span));
    LogNodes out;
    out.v.resize(std::size_t(n) + 1);
    out.w.resize(std::size_t(n) + 1);
    for (int i = 0; i <= n; ++i) {
        out.v[std::size_t(i)] = v_min + i * quad.step;
        out.w[std::size_t(i)] = (i == 0 || i == n ? 0.5 : 1.0) * quad.step;
    }
    return out;
}

// Phi(lambda) = sum_i w_i exp(-s_i lambda): a weighted sum of heat semigroups.
struct ExpSum {
    std::vector<double> s;
    std::vector<double> w;

    double operator()(double lambda) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) acc += w[i] * std::exp(-s[i] * lambda);
        return acc;
    }
};

// Phi(lambda) = sum_i w_i (exp(-s_i lambda) - 1)^l: differences of heat semigroups.
struct DiffPowerSum {
    std::vector<double> s;
    std::vector<double> w;
    int l = 1;

    double operator()(double lambda) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) acc += w[i] * std::pow(std::expm1(-s[i] * lambda), l);
        return acc;
    }
};

ExpSum gamma_rule(double lambda_lo, double lambda_hi, double beta, bool bessel,
                  const OracleQuadrature& quad) {
    quad.validate();
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    const double a = 0.25 * beta;
    const double mu_lo = bessel ? 1.0 + lambda_lo : lambda_lo;
    const double mu_hi = bessel ? 1.0 + lambda_hi : lambda_hi;
    if (!(mu_lo > 0.0))
        throw QuadratureDivergence("fractional integral: the s-integral diverges at lambda = 0");
    // Small s: (s mu)^a / (a Gamma(a)) <= tol. Large s: e^{-s mu} (s mu)^{a-1} negligible.
    const double lg = std::lgamma(a);
    const double v_min = (std::log(quad.tolerance * a) + lg) / a - std::log(mu_hi);
    const double v_max = std::log((40.0 + 4.0 * a) / mu_lo);
    const LogNodes nodes = log_nodes(v_min, v_max, quad, "gamma formula");

    ExpSum sum;
    sum.s.reserve(nodes.v.size());
    sum.w.reserve(nodes.v.size());
    for (std::size_t i = 0; i < nodes.v.size(); ++i) {
        const double v = nodes.v[i];
        const double s = std::exp(v);
        // ds = s dv, so s^{a-1} ds = s^a dv.
        double weight = nodes.w[i] * std::exp(a * v - lg);
        if (bessel) weight *= std::exp(-s);
        sum.s.push_back(s);
        sum.w.push_back(weight);
    }
    return sum;
}

int difference_order(double beta) { return int(std::floor(0.25 * beta)) + 1; }

void check_power_beta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
    const double q = 0.25 * beta;
    if (q == std::floor(q))
        throw DomainError("fractional power oracle excludes beta a multiple of 4 (beta = " +
                          std::to_string(beta) + ")");
}

// Unnormalized rule for \int (e^{-s lambda} - 1)^l s^{-1-a} ds over lambda in [lo, hi].
DiffPowerSum difference_rule(double lambda_lo, double lambda_hi, double beta,
                             const OracleQuadrature& quad) {
    quad.validate();
    check_power_beta(beta);
    if (!(lambda_lo > 0.0)) throw DomainError("difference-power rule needs lambda > 0");
    const double a = 0.25 * beta;
    const int l = difference_order(beta);
    // Small s: (s lambda)^{l-a} / (l-a) <= tol. Large s: (s lambda)^{-a} / a <= tol.
    const double v_min = std::log(quad.tolerance * (l - a)) / (l - a) - std::log(lambda_hi);
    const double v_max = -std::log(quad.tolerance * a) / a - std::log(lambda_lo);
    const LogNodes nodes = log_nodes(v_min, v_max, quad, "difference-power formula");

    DiffPowerSum sum;
    sum.l = l;
    sum.s.reserve(nodes.v.size());
    sum.w.reserve(nodes.v.size());
    for (std::size_t i = 0; i < nodes.v.size(); ++i) {
        const double v = nodes.v[i];
        sum.s.push_back(std::exp(v));
        sum.w.push_back(nodes.w[i] * std::exp(-a * v));
    }
    return sum;
}

// The double subordination integral regrouped by s = tau^2 / (4u). With both
// log grids on the same step, log s = 2 v_tau - v_u - log 4 lands on a single
// log grid, so the 2-D rule collapses to a 1-D sum of heat semigroups.
ExpSum subordination_rule(double t, const OracleQuadrature& quad) {
    quad.validate();
    if (!(t > 0.0)) throw DomainError("Poisson time t must be positive");
    const double tol = quad.tolerance;
    const double log_cut = std::log(-std::log(tol));
    const LogNodes tau = log_nodes(std::log(0.25 * t * t) - log_cut,
                                   2.0 * std::log(t / (std::sqrt(kPi) * tol)), quad, "subordination (tau)");
    const LogNodes u = log_nodes(2.0 * std::log(tol), log_cut, quad, "subordination (u)");

    const std::size_t nu = u.v.size();
    std::vector<double> weight(2 * tau.v.size() + nu, 0.0);
    const double base = 2.0 * tau.v.front() - u.v.back() - std::log(4.0);
    for (std::size_t i = 0; i < tau.v.size(); ++i) {
        const double vt = tau.v[i];
        const double tv = std::exp(vt);
        // t e^{-t^2/4tau} tau^{-3/2} d tau = t e^{-t^2/4tau} tau^{-1/2} dv
        const double wt = tau.w[i] * t * std::exp(-0.25 * t * t / tv - 0.5 * vt);
        for (std::size_t j = 0; j < nu; ++j) {
            const double vu = u.v[j];
            // e^{-u} u^{-1/2} du = e^{-u} u^{1/2} dv
            const double wu = u.w[j] * std::exp(-std::exp(vu) + 0.5 * vu);
            weight[2 * i + (nu - 1 - j)] += wt * wu;
        }
    }
    ExpSum sum;
    for (std::size_t key = 0; key < weight.size(); ++key) {
        if (weight[key] == 0.0) continue;
        sum.s.push_back(std::exp(base + double(key) * quad.step));
        sum.w.push_back(weight[key] / (2.0 * kPi));
    }
    return sum;
}

struct SpectrumBounds {
    double lambda_min;
    double lambda_max;
};

SpectrumBounds spectrum_bounds(const GridSpec& spec) {
    const double dk = spec.frequency_step();
    const double half = 0.5 * spec.points_per_axis();
    const double kmax2 = spec.dim() * half * half;
    return {std::pow(dk, 4), std::pow(dk, 4) * kmax2 * kmax2};
}

// Multiplies each coefficient by phi(lambda), one evaluation per distinct |k|^2.
template <class Phi>
GridFunction apply_transfer(const GridFunction& f, const Phi& phi, bool keep_zero) {
    SpectralFunction F = forward(f);
    const GridSpec& spec = F.spec();
    const double dk4 = std::pow(spec.frequency_step(), 4);
    const std::int64_t half = spec.points_per_axis() / 2;
    std::vector<double> cache(std::size_t(spec.dim() * half * half) + 1,
                              std::numeric_limits<double>::quiet_NaN());
    auto coeffs = F.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Index k = spec.wavenumber(i);
        const std::int64_t m = std::int64_t(k[0]) * k[0] + std::int64_t(k[1]) * k[1];
        if (m == 0 && !keep_zero) {
            coeffs[i] = 0.0;
            continue;
        }
        double& c = cache[std::size_t(m)];
        if (std::isnan(c)) c = phi(dk4 * double(m) * double(m));
        coeffs[i] *= c;
    }
    return inverse(F);
}

} // namespace

void OracleQuadrature::validate() const {
    if (!(step > 0.0) || !(tolerance > 0.0) || tolerance > 1e-3 || max_nodes < 2)
        throw BadQuadrature("oracle quadrature needs step > 0, 0 < tolerance <= 1e-3, max_nodes >= 2");
}

double gamma_transfer(double lambda, double beta, bool bessel, const OracleQuadrature& quad) {
    if (lambda < 0.0) throw DomainError("lambda must be non-negative");
    return gamma_rule(lambda, lambda, beta, bessel, quad)(lambda);
}

double fractional_power_constant(double beta, const OracleQuadrature& quad) {
    const DiffPowerSum rule = difference_rule(1.0, 1.0, beta, quad);
    return rule(1.0);
}

double fractional_power_transfer(double lambda, double beta, const OracleQuadrature& quad) {
    if (lambda < 0.0) throw DomainError("lambda must be non-negative");
    if (lambda == 0.0) return 0.0;
    // A range anchored at lambda alone would just be the c_beta grid rescaled,
    // making the check exact by construction; span [min(lambda,1), max(lambda,1)].
    const DiffPowerSum rule = difference_rule(std::min(lambda, 1.0), std::max(lambda, 1.0), beta, quad);
    return rule(lambda) / fractional_power_constant(beta, quad);
}

double subordination_transfer(double lambda, double t, const OracleQuadrature& quad) {
    if (lambda < 0.0) throw DomainError("lambda must be non-negative");
    return subordination_rule(t, quad)(lambda);
}

GridFunction gamma_quadrature_oracle(const GridFunction& f, double beta, bool bessel,
                                     const OracleQuadrature& quad) {
    if (!bessel) require_zero_mean(f, "fractional integral oracle");
    const SpectrumBounds b = spectrum_bounds(f.spec());
    const ExpSum rule = gamma_rule(bessel ? 0.0 : b.lambda_min, b.lambda_max, beta, bessel, quad);
    return apply_transfer(f, rule, bessel);
}

GridFunction fractional_power_oracle(const GridFunction& f, double beta, const OracleQuadrature& quad) {
    const SpectrumBounds b = spectrum_bounds(f.spec());
    const DiffPowerSum rule = difference_rule(b.lambda_min, b.lambda_max, beta, quad);
    const double c_beta = fractional_power_constant(beta, quad);
    return apply_transfer(f, [&](double lambda) { return rule(lambda) / c_beta; }, false);
}

GridFunction subordinated_poisson_oracle(const GridFunction& f, double t, const OracleQuadrature& quad) {
    const ExpSum rule = subordination_rule(t, quad);
    return apply_transfer(f, rule, true);
}

} // namespace biharm
