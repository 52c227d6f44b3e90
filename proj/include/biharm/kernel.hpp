#pragma once

// Direct quadrature of the biharmonic heat kernel
//   W_t(x) = t^{-n/4} g(x / t^{1/4}),   g(x) = (2 pi)^{-n} \int e^{i x.eta - |eta|^4} d eta,
// and numeric checks of its super-exponential decay.

#include "biharm/grid.hpp"

#include <cmath>
#include <vector>

namespace biharm {

/// Radial Gauss-Legendre rule on [0, radius] (16-point panels) and, for
/// dim = 2, an angular trapezoid rule.
struct KernelQuadrature {
    int nodes = 1024;
    double radius = 8.0;
    double grading = 1.0;
    int angular_nodes = 512;

    /// Throws BadQuadrature if radius < 3 or nodes < 64.
    void validate() const;
};

/// Decay rate c = 3 * 2^{1/3} / 16 of |W_1(x)| <= C exp(-c |x|^{4/3}).
inline const double kKernelDecayRate = 3.0 * std::cbrt(2.0) / 16.0;

/// g(x) for dim 1 or 2 (points beyond `dim` components are ignored).
double eval_g(const Point& x, int dim, const KernelQuadrature& quad = {});

/// d_t^l d_{x_1}^k W_t at t = 1 and x = r e_1, i.e. the Fourier integral of
/// (-|eta|^4)^l (i eta_1)^k exp(-|eta|^4).
double eval_kernel_derivative(double r, int dim, int l, int k, const KernelQuadrature& quad = {});

/// W_t(x) = t^{-dim/4} g(x t^{-1/4}). Throws DomainError for t <= 0.
double eval_heat_kernel(const Point& x, double t, int dim, const KernelQuadrature& quad = {});

/// dim = 2 cross-check: g(r e_1) = (1/2pi) \int_0^R J_0(r rho) exp(-rho^4) rho d rho.
double eval_g_bessel(double r, const KernelQuadrature& quad = {});

/// \int g over R^dim, by quadrature of the sampled profile.
double kernel_mass(int dim, const KernelQuadrature& quad = {});

/// \int |g| over R^dim. The kernel changes sign, so this exceeds 1; it bounds
/// the sup-norm operator norm of every W_t.
double kernel_abs_mass(int dim, const KernelQuadrature& quad = {});

struct KernelProfile {
    int dim = 1;
    int time_order = 0;  ///< l
    int space_order = 0; ///< k
    std::vector<double> radii;
    std::vector<double> values;
    KernelQuadrature quad;

    double r_max() const { return radii.empty() ? 0.0 : radii.back(); }
};

/// Samples d_t^l d_{x_1}^k W_1(r e_1) on r_i = r_max (i/(count-1))^grading.
KernelProfile make_profile(int dim, int time_order, int space_order, double r_max = 10.0,
                           int count = 401, double grading = 1.2, const KernelQuadrature& quad = {});

struct DecayCheck {
    double c_exponent = 0.0;
    double observed_C = 0.0;
    double argmax_r = 0.0;
    double r_max = 0.0;
    bool pass = false;
};

/// The max must be attained before this fraction of r_max.
inline constexpr double kDecayInteriorFraction = 0.8;

/// observed_C = max_r |v(r)| exp(c' r^{4/3}) (1 + r)^{n + k + 4l}, the
/// polynomial factor only for (l, k) != (0, 0). Passes when observed_C is
/// finite and attained at r < kDecayInteriorFraction * r_max.
/// Throws InsufficientRange if the profile stops short of r = 10.
DecayCheck check_decay(const KernelProfile& profile, double c_prime = 0.5 * kKernelDecayRate);

} // namespace biharm
