#include "biharm/calculus.hpp"

#include "biharm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

namespace biharm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// sign * lambda^k * exp(-t lambda) without overflowing the power for large lambda.
double power_times_exp(double lambda, int k, double t) {
    if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
    const double mag = std::exp(k * std::log(lambda) - t * lambda);
    return (k & 1) ? -mag : mag;
}

Complex i_pow(int order) {
    switch (((order % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

void check_axis(int axis, int dim) {
    if (axis < 1 || axis > dim)
        throw DomainError("axis " + std::to_string(axis) + " outside 1.." + std::to_string(dim));
}

int axis_of(const SymbolKind& kind) {
    return std::visit(overloaded{[](const symbol::RieszPre& s) { return s.axis; },
                                 [](const symbol::RieszPost& s) { return s.axis; },
                                 [](const symbol::PartialDerivative& s) { return s.axis; },
                                 [](const auto&) { return 0; }},
                      kind);
}

} // namespace

// ---------------------------------------------------------------------------
// StepProfile

StepProfile::StepProfile(std::vector<double> breakpoints, std::vector<double> levels)
    : breakpoints_(std::move(breakpoints)), levels_(std::move(levels)) {
    if (levels_.empty() || breakpoints_.size() != levels_.size() + 1)
        throw DomainError("step profile needs m >= 1 levels and m + 1 breakpoints");
    if (breakpoints_.front() != 0.0) throw DomainError("first breakpoint must be 0");
    for (std::size_t j = 1; j < breakpoints_.size(); ++j)
        if (!(breakpoints_[j] > breakpoints_[j - 1]) || !std::isfinite(breakpoints_[j]))
            throw DomainError("breakpoints must increase strictly and stay finite");
    for (double a : levels_)
        if (!std::isfinite(a)) throw DomainError("step levels must be finite");
}

double StepProfile::sup_abs() const {
    double m = 0.0;
    for (double a : levels_) m = std::max(m, std::abs(a));
    return m;
}

double StepProfile::laplace_multiplier(double lambda) const {
    if (lambda < 0.0) throw DomainError("laplace multiplier needs lambda >= 0");
    double m = 0.0;
    double prev = std::exp(-breakpoints_[0] * lambda);
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        const double next = std::exp(-breakpoints_[j + 1] * lambda);
        m += levels_[j] * (prev - next);
        prev = next;
    }
    return m;
}

// ---------------------------------------------------------------------------
// SymbolSpec

bool SymbolSpec::singular_at_zero(const SymbolKind& kind) {
    return std::holds_alternative<symbol::FractionalIntegral>(kind) ||
           std::holds_alternative<symbol::RieszPre>(kind) ||
           std::holds_alternative<symbol::RieszPost>(kind);
}

ZeroModePolicy SymbolSpec::default_policy(const SymbolKind& kind) {
    return singular_at_zero(kind) ? ZeroModePolicy::Project : ZeroModePolicy::Keep;
}

int SymbolSpec::odd_axis(const SymbolKind& kind) {
    if (std::holds_alternative<symbol::RieszPre>(kind) || std::holds_alternative<symbol::RieszPost>(kind))
        return axis_of(kind) - 1;
    if (const auto* d = std::get_if<symbol::PartialDerivative>(&kind))
        return (d->order & 1) ? d->axis - 1 : -1;
    return -1;
}

SymbolSpec::SymbolSpec(SymbolKind k, ZeroModePolicy z) : kind(std::move(k)), zero_mode(z) {
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError(std::string(what) + " must be positive and finite, got " + num(v));
    };
    std::visit(overloaded{
                   [&](const symbol::Heat& s) { positive(s.t, "t"); },
                   [&](const symbol::Poisson& s) { positive(s.t, "t"); },
                   [&](const symbol::HeatTimeDeriv& s) {
                       positive(s.t, "t");
                       if (s.k < 1) throw DomainError("time-derivative order k must be >= 1");
                   },
                   [&](const symbol::PoissonTimeDeriv& s) {
                       positive(s.t, "t");
                       if (s.k < 1) throw DomainError("time-derivative order k must be >= 1");
                   },
                   [&](const symbol::BesselPotential& s) { positive(s.beta, "beta"); },
                   [&](const symbol::FractionalIntegral& s) { positive(s.beta, "beta"); },
                   [&](const symbol::FractionalPower& s) { positive(s.beta, "beta"); },
                   [&](const symbol::RieszPre& s) { check_axis(s.axis, 2); },
                   [&](const symbol::RieszPost& s) { check_axis(s.axis, 2); },
                   [&](const symbol::PartialDerivative& s) {
                       check_axis(s.axis, 2);
                       if (s.order < 1) throw DomainError("derivative order must be >= 1");
                   },
                   [&](const symbol::LaplaceMultiplier&) {},
               },
               kind);
    if (zero_mode == ZeroModePolicy::Keep && singular_at_zero(kind))
        throw DomainError(describe(kind) + " is singular at xi = 0; use Project or Forbid");
}

SymbolSpec::SymbolSpec(SymbolKind k) : SymbolSpec(k, default_policy(k)) {}

std::string describe(const SymbolKind& kind) {
    return std::visit(
        overloaded{
            [](const symbol::Heat& s) { return "heat(t=" + num(s.t) + ")"; },
            [](const symbol::HeatTimeDeriv& s) {
                return "heat_dt(t=" + num(s.t) + ",k=" + std::to_string(s.k) + ")";
            },
            [](const symbol::Poisson& s) { return "poisson(t=" + num(s.t) + ")"; },
            [](const symbol::PoissonTimeDeriv& s) {
                return "poisson_dt(t=" + num(s.t) + ",k=" + std::to_string(s.k) + ")";
            },
            [](const symbol::BesselPotential& s) { return "bessel(beta=" + num(s.beta) + ")"; },
            [](const symbol::FractionalIntegral& s) { return "fracint(beta=" + num(s.beta) + ")"; },
            [](const symbol::FractionalPower& s) { return "fracpow(beta=" + num(s.beta) + ")"; },
            [](const symbol::RieszPre& s) { return "riesz_pre(i=" + std::to_string(s.axis) + ")"; },
            [](const symbol::RieszPost& s) { return "riesz_post(i=" + std::to_string(s.axis) + ")"; },
            [](const symbol::PartialDerivative& s) {
                return "d(i=" + std::to_string(s.axis) + ",order=" + std::to_string(s.order) + ")";
            },
            [](const symbol::LaplaceMultiplier& s) {
                return "laplace_mult(m=" + std::to_string(s.profile.levels().size()) + ")";
            },
        },
        kind);
}

Complex symbol_value(const SymbolSpec& s, const Point& xi, int dim) {
    const double r2 = dim == 1 ? xi[0] * xi[0] : xi[0] * xi[0] + xi[1] * xi[1];
    const double r = std::sqrt(r2);
    const double lambda = r2 * r2;
    if (r == 0.0 && SymbolSpec::singular_at_zero(s.kind))
        throw SingularAtZero(describe(s.kind) + " evaluated at xi = 0");
    const int axis = axis_of(s.kind);
    if (axis > dim) throw DomainError("axis " + std::to_string(axis) + " exceeds dim");

    return std::visit(
        overloaded{
            [&](const symbol::Heat& k) { return Complex(std::exp(-k.t * lambda)); },
            [&](const symbol::HeatTimeDeriv& k) { return Complex(power_times_exp(lambda, k.k, k.t)); },
            [&](const symbol::Poisson& k) { return Complex(std::exp(-k.t * r)); },
            [&](const symbol::PoissonTimeDeriv& k) { return Complex(power_times_exp(r, k.k, k.t)); },
            [&](const symbol::BesselPotential& k) {
                return Complex(std::pow(1.0 + lambda, -0.25 * k.beta));
            },
            [&](const symbol::FractionalIntegral& k) { return Complex(std::pow(r, -k.beta)); },
            [&](const symbol::FractionalPower& k) {
                return Complex(r == 0.0 ? 0.0 : std::pow(r, k.beta));
            },
            [&](const symbol::RieszPre& k) { return Complex(0.0, xi[std::size_t(k.axis - 1)] / r); },
            [&](const symbol::RieszPost& k) { return Complex(0.0, xi[std::size_t(k.axis - 1)] / r); },
            [&](const symbol::PartialDerivative& k) {
                return i_pow(k.order) * std::pow(xi[std::size_t(k.axis - 1)], k.order);
            },
            [&](const symbol::LaplaceMultiplier& k) {
                return Complex(k.profile.laplace_multiplier(lambda));
            },
        },
        s.kind);
}

void require_zero_mean(const GridFunction& f, const std::string& context) {
    const double m = f.mean();
    if (std::abs(m) > kZeroMeanTolerance * sup_norm(f))
        throw NonZeroMean(context + ": input mean " + num(m) + " is not zero (sup " +
                          num(sup_norm(f)) + ")");
}

SpectralFunction multiply(const SymbolSpec& s, const SpectralFunction& F) {
    const GridSpec& spec = F.spec();
    if (axis_of(s.kind) > spec.dim())
        throw DomainError(describe(s.kind) + " needs an axis within dim " + std::to_string(spec.dim()));
    if (s.zero_mode == ZeroModePolicy::Forbid) require_zero_mean(inverse(F), describe(s.kind));

    const int odd = SymbolSpec::odd_axis(s.kind);
    const int nyquist = -spec.points_per_axis() / 2;
    std::vector<Complex> out(F.coeffs().begin(), F.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Index k = spec.wavenumber(i);
        const bool origin = k[0] == 0 && k[1] == 0;
        if (origin && s.zero_mode != ZeroModePolicy::Keep) {
            out[i] = 0.0;
        } else if (odd >= 0 && k[std::size_t(odd)] == nyquist) {
            out[i] = 0.0;
        } else {
            out[i] *= symbol_value(s, spec.frequency(i), spec.dim());
        }
    }
    return SpectralFunction(spec, std::move(out));
}

GridFunction apply(const SymbolSpec& s, const SpectralFunction& F) { return inverse(multiply(s, F)); }

GridFunction apply(const SymbolSpec& s, const GridFunction& f) {
    if (s.zero_mode == ZeroModePolicy::Forbid) require_zero_mean(f, describe(s.kind));
    SymbolSpec relaxed = s;
    if (relaxed.zero_mode == ZeroModePolicy::Forbid) relaxed.zero_mode = ZeroModePolicy::Project;
    return inverse(multiply(relaxed, forward(f)));
}

GridFunction heat_time_derivative(const GridFunction& f, double t, int k) {
    return apply(SymbolSpec(symbol::HeatTimeDeriv{t, k}), f);
}

} // namespace biharm
