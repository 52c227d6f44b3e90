#pragma once

// The three Lipschitz seminorms of a sampled function:
//   S_alpha  = sup_t t^{k - alpha/4} ||d_t^k W_t f||_inf,          k = [alpha/4] + 1
//   S~_alpha = sup_t t^{k - alpha}   ||d_t^k e^{-t sqrt(-Delta)} f||_inf, k = [alpha] + 1
//   N_alpha  = sup_y ||f(. + y) + f(. - y) - 2 f||_inf / |y|^alpha,  0 < alpha < 2
// each as a max over a finite sample set, plus the test corpus they run on.

#include "biharm/grid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace biharm {

/// count log-spaced times in [t_min, t_max].
struct TimeGrid {
    double t_min = 1e-6;
    double t_max = 1e2;
    int count = 200;

    /// Throws DomainError unless 0 < t_min < t_max and count >= 2.
    void validate() const;
    std::vector<double> points() const;
};

enum class Estimator { HeatS, PoissonS, SecondDiffN };

std::string to_string(Estimator e);

struct SeminormEstimate {
    double alpha = 0.0;
    int k = 0;           ///< time-derivative order (0 for N_alpha)
    int space_order = 0; ///< x-derivative order of a mixed scan
    Estimator estimator = Estimator::HeatS;
    double value = 0.0;
    double argmax = 0.0;         ///< the t or |y| attaining the max
    bool boundary_flag = false;  ///< max at the first or last sample
    double range_min = 0.0;      ///< sampled t or |y| range
    double range_max = 0.0;
    std::size_t samples = 0;
};

/// [alpha/4] + 1
int heat_order(double alpha);
/// [alpha] + 1
int poisson_order(double alpha);

/// S_alpha. k = 0 selects heat_order(alpha); a larger k scans the
/// higher-order weight t^{k - alpha/4} instead.
SeminormEstimate seminorm_heat(const GridFunction& f, double alpha, const TimeGrid& grid = {}, int k = 0);

/// S~_alpha with the Poisson semigroup; k = 0 selects poisson_order(alpha).
SeminormEstimate seminorm_poisson(const GridFunction& f, double alpha, const TimeGrid& grid = {},
                                  int k = 0);

/// N_alpha over lattice shifts with 0 < |y| <= y_max (axis shifts, and in
/// dim 2 also the two diagonals). y_max defaults to L/4. Throws DomainError
/// for alpha outside (0, 2) or y_max > L/4.
SeminormEstimate seminorm_second_diff(const GridFunction& f, double alpha,
                                      std::optional<double> y_max = std::nullopt);

/// sup_t t^{m/4 + j - alpha/4} ||d_{x_i}^m d_t^j W_t f||_inf (axis 1-based).
/// Throws DomainError unless m/4 + j >= [alpha/4] + 1.
SeminormEstimate mixed_derivative_bound(const GridFunction& f, double alpha, int m, int j, int axis,
                                        const TimeGrid& grid = {});

// ---------------------------------------------------------------------------
// Corpus

namespace recipe {
/// cos(xi0 x_1)
struct SingleMode { double xi0; };
/// sum_{j=0}^{terms} 2^{-j alpha} cos(2^j xi_base x_1)
struct WeierstrassLike { double alpha; int terms; double xi_base = 1.0; };
/// exp(-|x - center|^2 / (2 sigma^2))
struct GaussianBump { double sigma; Point center{0.0, 0.0}; };
/// Seeded trigonometric polynomial with modes m xi_base, |m|_inf <= modes,
/// amplitudes |m|^{-decay} and uniform random phases.
struct RandomTrig { std::uint64_t seed; double decay; int modes = 8; double xi_base = 1.0; };
} // namespace recipe

using Recipe = std::variant<recipe::SingleMode, recipe::WeierstrassLike, recipe::GaussianBump,
                            recipe::RandomTrig>;

struct CorpusFunction {
    std::string name;
    Recipe recipe;
    std::optional<double> nominal_alpha;
};

/// Samples the recipe. Throws DomainError if a frequency is off the box's
/// lattice or a bump lacks 6 sigma of margin, SpectrumOverflow if the
/// highest frequency exceeds half the Nyquist frequency.
GridFunction build(const CorpusFunction& c, const GridSpec& spec);

/// The default corpus for dim 1 or 2 (box side 6 pi).
std::vector<CorpusFunction> default_corpus(int dim);

/// Builds the default corpus entry `name`, or all of them for "all".
/// Throws DomainError for an unknown name.
std::vector<std::pair<CorpusFunction, GridFunction>> corpus(const GridSpec& spec,
                                                            const std::string& name = "all");

/// Side length of the default box, 6 pi: frequencies are multiples of 1/3.
double default_side_length();

} // namespace biharm
