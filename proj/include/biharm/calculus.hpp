#pragma once

// Fourier-multiplier calculus of the biharmonic operator. Every operator is a
// symbol sigma(xi) applied mode by mode; the semigroup integral formulas that
// define the same operators live in oracles.hpp as independent checks.

#include "biharm/grid.hpp"

#include <string>
#include <variant>
#include <vector>

namespace biharm {

/// Piecewise-constant a(s) = levels[j] on [breakpoints[j], breakpoints[j+1]),
/// zero beyond the last breakpoint.
class StepProfile {
public:
    /// Throws DomainError unless breakpoints start at 0, increase strictly,
    /// and there is exactly one level per interval (at least one).
    StepProfile(std::vector<double> breakpoints, std::vector<double> levels);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& levels() const { return levels_; }

    /// max_j |a_j|.
    double sup_abs() const;
    /// m(lambda) = lambda \int_0^inf exp(-s lambda) a(s) ds
    ///           = sum_j a_j (exp(-s_{j-1} lambda) - exp(-s_j lambda)).
    double laplace_multiplier(double lambda) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> levels_;
};

namespace symbol {
/// exp(-t |xi|^4)
struct Heat { double t; };
/// (-|xi|^4)^k exp(-t |xi|^4), the k-th time derivative of the heat semigroup.
struct HeatTimeDeriv { double t; int k; };
/// exp(-t |xi|)
struct Poisson { double t; };
/// (-|xi|)^k exp(-t |xi|)
struct PoissonTimeDeriv { double t; int k; };
/// (1 + |xi|^4)^{-beta/4}
struct BesselPotential { double beta; };
/// |xi|^{-beta}
struct FractionalIntegral { double beta; };
/// |xi|^{beta}
struct FractionalPower { double beta; };
/// d_{x_i} (Delta^2)^{-1/4}: i xi_i / |xi|. Axis is 1-based.
struct RieszPre { int axis; };
/// (Delta^2)^{-1/4} d_{x_i}: i xi_i / |xi|.
struct RieszPost { int axis; };
/// (i xi_i)^order
struct PartialDerivative { int axis; int order; };
/// m(|xi|^4) for a StepProfile a.
struct LaplaceMultiplier { StepProfile profile; };
} // namespace symbol

using SymbolKind = std::variant<symbol::Heat, symbol::HeatTimeDeriv, symbol::Poisson,
                                symbol::PoissonTimeDeriv, symbol::BesselPotential,
                                symbol::FractionalIntegral, symbol::FractionalPower,
                                symbol::RieszPre, symbol::RieszPost, symbol::PartialDerivative,
                                symbol::LaplaceMultiplier>;

/// Treatment of the xi = 0 coefficient.
enum class ZeroModePolicy {
    Keep,    ///< multiply by the symbol's value at 0
    Project, ///< set the coefficient to 0
    Forbid,  ///< require a mean-zero input (NonZeroMean otherwise), then project
};

struct SymbolSpec {
    SymbolKind kind;
    ZeroModePolicy zero_mode;

    /// Validates parameters; throws DomainError (e.g. t <= 0, k < 1, Keep on
    /// a symbol that is singular at the origin).
    SymbolSpec(SymbolKind kind, ZeroModePolicy zero_mode);
    /// Uses default_policy(kind).
    explicit SymbolSpec(SymbolKind kind);

    /// Project for the symbols singular at xi = 0, Keep otherwise.
    static ZeroModePolicy default_policy(const SymbolKind& kind);
    static bool singular_at_zero(const SymbolKind& kind);
    /// Axis (0-based) in which the symbol is odd, or -1 if it is even.
    static int odd_axis(const SymbolKind& kind);
};

std::string describe(const SymbolKind& kind);

/// Closed-form symbol at the frequency xi (first `dim` components).
/// Throws SingularAtZero for a singular kind at xi = 0.
Complex symbol_value(const SymbolSpec& s, const Point& xi, int dim);

/// inverse(symbol * forward(f)). A symbol odd in xi_i is zeroed on the
/// Nyquist line k_i = -N/2 so the product stays conjugate symmetric.
GridFunction apply(const SymbolSpec& s, const GridFunction& f);
/// Same, reusing already-computed coefficients.
GridFunction apply(const SymbolSpec& s, const SpectralFunction& F);

/// Coefficients multiplied by the discrete symbol (no inverse transform).
SpectralFunction multiply(const SymbolSpec& s, const SpectralFunction& F);

/// d_t^k W_t f by the exact spectral symbol.
GridFunction heat_time_derivative(const GridFunction& f, double t, int k);

/// Tolerance of the Forbid policy: |mean(f)| <= 1e-10 sup_norm(f).
inline constexpr double kZeroMeanTolerance = 1e-10;

/// Throws NonZeroMean unless |mean(f)| <= kZeroMeanTolerance * sup_norm(f).
void require_zero_mean(const GridFunction& f, const std::string& context);

} // namespace biharm
