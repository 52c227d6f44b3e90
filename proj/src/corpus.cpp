#include "biharm/errors.hpp"
#include "biharm/lipschitz.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace biharm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_lattice(double xi, const GridSpec& spec, const std::string& what) {
    const double q = xi / spec.frequency_step();
    if (std::abs(q - std::round(q)) > 1e-9 * std::max(1.0, std::abs(q)))
        throw DomainError(what + ": frequency " + std::to_string(xi) +
                          " is not a multiple of 2 pi / L, so the box would cut it off");
}

void require_band(double xi, const GridSpec& spec, const std::string& what) {
    const double limit = 0.5 * std::numbers::pi / spec.spacing();
    if (xi > limit * (1.0 + 1e-12))
        throw SpectrumOverflow(what + ": top frequency " + std::to_string(xi) +
                               " exceeds half the Nyquist frequency " + std::to_string(limit));
}

// Uniform in [0, 1) from the top 53 bits; portable, unlike the std distributions.
double unit_uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1p-53; }

} // namespace

double default_side_length() { return 6.0 * std::numbers::pi; }

GridFunction build(const CorpusFunction& c, const GridSpec& spec) {
    const int dim = spec.dim();
    return std::visit(
        overloaded{
            [&](const recipe::SingleMode& r) {
                require_lattice(r.xi0, spec, c.name);
                require_band(std::abs(r.xi0), spec, c.name);
                return GridFunction::sample(spec, [&](const Point& x) { return std::cos(r.xi0 * x[0]); });
            },
            [&](const recipe::WeierstrassLike& r) {
                if (r.terms < 0) throw DomainError(c.name + ": terms must be >= 0");
                require_lattice(r.xi_base, spec, c.name);
                require_band(std::ldexp(std::abs(r.xi_base), r.terms), spec, c.name);
                return GridFunction::sample(spec, [&](const Point& x) {
                    double s = 0.0;
                    for (int j = 0; j <= r.terms; ++j)
                        s += std::pow(2.0, -j * r.alpha) * std::cos(std::ldexp(r.xi_base, j) * x[0]);
                    return s;
                });
            },
            [&](const recipe::GaussianBump& r) {
                if (!(r.sigma > 0.0)) throw DomainError(c.name + ": sigma must be positive");
                for (int a = 0; a < dim; ++a)
                    if (std::abs(r.center[std::size_t(a)]) + 6.0 * r.sigma > 0.5 * spec.side_length())
                        throw DomainError(c.name + ": bump needs 6 sigma of margin inside the box");
                const double inv = 1.0 / (2.0 * r.sigma * r.sigma);
                return GridFunction::sample(spec, [&](const Point& x) {
                    double d2 = 0.0;
                    for (int a = 0; a < dim; ++a) {
                        const double d = x[std::size_t(a)] - r.center[std::size_t(a)];
                        d2 += d * d;
                    }
                    return std::exp(-d2 * inv);
                });
            },
            [&](const recipe::RandomTrig& r) {
                if (r.modes < 1) throw DomainError(c.name + ": modes must be >= 1");
                require_lattice(r.xi_base, spec, c.name);
                require_band(r.modes * std::abs(r.xi_base), spec, c.name);
                struct Term {
                    double k0, k1, amp, phase;
                };
                std::vector<Term> terms;
                std::mt19937_64 rng(r.seed);
                if (dim == 1) {
                    for (int m = 1; m <= r.modes; ++m)
                        terms.push_back({m * r.xi_base, 0.0, std::pow(m, -r.decay),
                                         2.0 * std::numbers::pi * unit_uniform(rng)});
                } else {
                    // One representative per +-m pair: m0 > 0, or m0 = 0 and m1 > 0.
                    for (int m0 = 0; m0 <= r.modes; ++m0)
                        for (int m1 = -r.modes; m1 <= r.modes; ++m1) {
                            if (m0 == 0 && m1 <= 0) continue;
                            const double norm = std::hypot(double(m0), double(m1));
                            terms.push_back({m0 * r.xi_base, m1 * r.xi_base, std::pow(norm, -r.decay),
                                             2.0 * std::numbers::pi * unit_uniform(rng)});
                        }
                }
                return GridFunction::sample(spec, [&](const Point& x) {
                    double s = 0.0;
                    for (const Term& t : terms) s += t.amp * std::cos(t.k0 * x[0] + t.k1 * x[1] + t.phase);
                    return s;
                });
            },
        },
        c.recipe);
}

std::vector<CorpusFunction> default_corpus(int dim) {
    if (dim == 1)
        return {
            {"single_mode", recipe::SingleMode{1.0}, std::nullopt},
            {"weierstrass_0.5", recipe::WeierstrassLike{0.5, 4}, 0.5},
            {"weierstrass_1.2", recipe::WeierstrassLike{1.2, 4}, 1.2},
            {"gaussian", recipe::GaussianBump{1.0}, std::nullopt},
            {"random_trig", recipe::RandomTrig{7, 1.5, 8}, std::nullopt},
        };
    if (dim == 2)
        return {
            {"single_mode_2d", recipe::SingleMode{1.0}, std::nullopt},
            {"gaussian_2d", recipe::GaussianBump{1.0}, std::nullopt},
            {"random_trig_2d", recipe::RandomTrig{11, 1.5, 4}, std::nullopt},
        };
    throw DomainError("corpus exists for dim 1 and 2 only");
}

std::vector<std::pair<CorpusFunction, GridFunction>> corpus(const GridSpec& spec, const std::string& name) {
    std::vector<std::pair<CorpusFunction, GridFunction>> out;
    for (const CorpusFunction& c : default_corpus(spec.dim()))
        if (name == "all" || name == c.name) out.emplace_back(c, build(c, spec));
    if (out.empty()) throw DomainError("unknown corpus function '" + name + "'");
    return out;
}

} // namespace biharm
