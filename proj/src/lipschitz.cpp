#include "biharm/lipschitz.hpp"

#include "biharm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace biharm {

namespace {

int wrap(int j, int n) {
    const int r = j % n;
    return r < 0 ? r + n : r;
}

// |Complex factor| aside, (-r)^p exp(-t r), computed in logs so huge r^p
// cannot overflow before the exponential damps it.
double damped_power(double r, int p, double t) {
    if (r == 0.0) return p == 0 ? 1.0 : 0.0;
    const double mag = std::exp(p * std::log(r) - t * r);
    return (p & 1) ? -mag : mag;
}

// sup over t of t^weight_exp * ||inverse(base_k * (-rate_k)^p e^{-t rate_k})||_inf.
SeminormEstimate scan_time(const SpectralFunction& base, const std::vector<double>& rate, int p,
                           double weight_exp, const TimeGrid& grid) {
    grid.validate();
    const auto ts = grid.points();
    SeminormEstimate out;
    out.range_min = grid.t_min;
    out.range_max = grid.t_max;
    out.samples = ts.size();
    std::size_t best = 0;
    SpectralFunction work = base;
    for (std::size_t n = 0; n < ts.size(); ++n) {
        const double t = ts[n];
        auto dst = work.coeffs();
        const auto src = base.coeffs();
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i] * damped_power(rate[i], p, t);
        const double v = std::pow(t, weight_exp) * sup_norm(inverse(work));
        if (v > out.value) {
            out.value = v;
            best = n;
        }
    }
    out.argmax = ts[best];
    out.boundary_flag = out.value > 0.0 && (best == 0 || best + 1 == ts.size());
    return out;
}

std::vector<double> mode_rates(const GridSpec& spec, bool quartic) {
    std::vector<double> rate(spec.size());
    for (std::size_t i = 0; i < rate.size(); ++i) {
        const Point xi = spec.frequency(i);
        const double r2 = xi[0] * xi[0] + (spec.dim() == 2 ? xi[1] * xi[1] : 0.0);
        rate[i] = quartic ? r2 * r2 : std::sqrt(r2);
    }
    return rate;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("alpha must be positive, got " + std::to_string(alpha));
}

} // namespace

void TimeGrid::validate() const {
    if (!(t_min > 0.0) || !(t_max > t_min) || count < 2 || !std::isfinite(t_max))
        throw DomainError("time grid needs 0 < t_min < t_max and count >= 2");
}

std::vector<double> TimeGrid::points() const {
    validate();
    std::vector<double> ts(static_cast<std::size_t>(count));
    const double span = std::log(t_max / t_min);
    for (int i = 0; i < count; ++i) ts[std::size_t(i)] = t_min * std::exp(span * i / (count - 1));
    ts.back() = t_max;
    return ts;
}

std::string to_string(Estimator e) {
    switch (e) {
    case Estimator::HeatS: return "heat";
    case Estimator::PoissonS: return "poisson";
    case Estimator::SecondDiffN: return "diff2";
    }
    return "?";
}

int heat_order(double alpha) { return int(std::floor(0.25 * alpha)) + 1; }
int poisson_order(double alpha) { return int(std::floor(alpha)) + 1; }

SeminormEstimate seminorm_heat(const GridFunction& f, double alpha, const TimeGrid& grid, int k) {
    check_alpha(alpha);
    const int order = k == 0 ? heat_order(alpha) : k;
    if (order < heat_order(alpha))
        throw DomainError("derivative order " + std::to_string(order) + " is below [alpha/4] + 1");
    return mixed_derivative_bound(f, alpha, 0, order, 1, grid);
}

SeminormEstimate seminorm_poisson(const GridFunction& f, double alpha, const TimeGrid& grid, int k) {
    check_alpha(alpha);
    const int order = k == 0 ? poisson_order(alpha) : k;
    if (order < poisson_order(alpha))
        throw DomainError("derivative order " + std::to_string(order) + " is below [alpha] + 1");
    SeminormEstimate out =
        scan_time(forward(f), mode_rates(f.spec(), false), order, order - alpha, grid);
    out.alpha = alpha;
    out.k = order;
    out.estimator = Estimator::PoissonS;
    return out;
}

SeminormEstimate mixed_derivative_bound(const GridFunction& f, double alpha, int m, int j, int axis,
                                        const TimeGrid& grid) {
    check_alpha(alpha);
    if (m < 0 || j < 0) throw DomainError("derivative orders must be non-negative");
    if (0.25 * m + j < heat_order(alpha))
        throw DomainError("mixed orders need m/4 + j >= [alpha/4] + 1 (m=" + std::to_string(m) +
                          ", j=" + std::to_string(j) + ", alpha=" + std::to_string(alpha) + ")");
    const GridSpec& spec = f.spec();
    if (axis < 1 || axis > spec.dim()) throw DomainError("axis outside 1..dim");

    SpectralFunction base = forward(f);
    if (m > 0) {
        // (i xi_i)^m; odd orders vanish on the Nyquist line to keep the output real.
        static const Complex powers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        const Complex unit = powers[m % 4];
        const int nyquist = -spec.points_per_axis() / 2;
        auto c = base.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::size_t a = std::size_t(axis - 1);
            if ((m & 1) && spec.wavenumber(i)[a] == nyquist) {
                c[i] = 0.0;
                continue;
            }
            c[i] *= unit * std::pow(spec.frequency(i)[a], m);
        }
    }
    SeminormEstimate out = scan_time(base, mode_rates(spec, true), j, 0.25 * m + j - 0.25 * alpha, grid);
    out.alpha = alpha;
    out.k = j;
    out.space_order = m;
    out.estimator = Estimator::HeatS;
    return out;
}

SeminormEstimate seminorm_second_diff(const GridFunction& f, double alpha, std::optional<double> y_max) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("second differences need 0 < alpha < 2, got " + std::to_string(alpha));
    const GridSpec& spec = f.spec();
    const double quarter = 0.25 * spec.side_length();
    const double h = spec.spacing();
    const double ymax = y_max.value_or(quarter);
    if (ymax > quarter * (1.0 + 1e-12))
        throw DomainError("y_max " + std::to_string(ymax) + " exceeds L/4 = " + std::to_string(quarter));
    if (ymax < h) throw DomainError("y_max is below one grid step");

    const int n = spec.points_per_axis();
    const auto v = f.values();
    std::vector<Index> directions{{1, 0}};
    if (spec.dim() == 2) directions = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

    SeminormEstimate out;
    out.alpha = alpha;
    out.estimator = Estimator::SecondDiffN;
    out.range_min = h;
    for (const Index& d : directions) {
        const double unit = h * std::sqrt(double(d[0] * d[0] + d[1] * d[1]));
        for (int s = 1; s * unit <= ymax * (1.0 + 1e-12); ++s) {
            const double y = s * unit;
            double worst = 0.0;
            if (spec.dim() == 1) {
                for (int i = 0; i < n; ++i)
                    worst = std::max(worst, std::abs(v[wrap(i + s, n)] + v[wrap(i - s, n)] - 2.0 * v[i]));
            } else {
                const int sa = s * d[0], sb = s * d[1];
                for (int a = 0; a < n; ++a) {
                    const std::size_t plus = std::size_t(wrap(a + sa, n)) * n;
                    const std::size_t minus = std::size_t(wrap(a - sa, n)) * n;
                    const std::size_t here = std::size_t(a) * n;
                    for (int b = 0; b < n; ++b)
                        worst = std::max(worst, std::abs(v[plus + wrap(b + sb, n)] +
                                                         v[minus + wrap(b - sb, n)] - 2.0 * v[here + b]));
                }
            }
            const double ratio = worst / std::pow(y, alpha);
            ++out.samples;
            out.range_max = std::max(out.range_max, y);
            if (ratio > out.value) {
                out.value = ratio;
                out.argmax = y;
            }
        }
    }
    const double eps = 1e-9 * h;
    out.boundary_flag =
        out.value > 0.0 && (out.argmax <= out.range_min + eps || out.argmax >= out.range_max - eps);
    return out;
}

} // namespace biharm
