#include "biharm/grid.hpp"

#include "biharm/errors.hpp"
#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace biharm {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int signed_wavenumber(int j, int n) { return j < n / 2 ? j : j - n; }

int wrap(int j, int n) {
    const int r = j % n;
    return r < 0 ? r + n : r;
}

// (-1)^k for the grid origin at -L/2; the parity of k and j agree since N is even.
double origin_phase(Index idx, int dim) {
    int parity = idx[0];
    if (dim == 2) parity += idx[1];
    return (parity & 1) ? -1.0 : 1.0;
}

} // namespace

// ---------------------------------------------------------------------------
// GridSpec

GridSpec::GridSpec(int dim, int points_per_axis, double side_length)
    : dim_(dim), n_(points_per_axis), length_(side_length) {
    if (dim != 1 && dim != 2)
        throw DomainError("dim must be 1 or 2, got " + std::to_string(dim));
    if (!is_power_of_two(points_per_axis) || points_per_axis < 16)
        throw DomainError("points_per_axis must be a power of two >= 16, got " +
                          std::to_string(points_per_axis));
    if (!(side_length > 0.0) || !std::isfinite(side_length))
        throw DomainError("side_length must be positive and finite");
}

double GridSpec::frequency_step() const { return 2.0 * std::numbers::pi / length_; }

std::size_t GridSpec::size() const {
    return dim_ == 1 ? std::size_t(n_) : std::size_t(n_) * std::size_t(n_);
}

Index GridSpec::unflatten(std::size_t flat) const {
    if (dim_ == 1) return {int(flat), 0};
    return {int(flat / n_), int(flat % n_)};
}

std::size_t GridSpec::flatten(Index idx) const {
    if (dim_ == 1) return std::size_t(idx[0]);
    return std::size_t(idx[0]) * n_ + std::size_t(idx[1]);
}

Point GridSpec::coordinate(std::size_t flat) const {
    const Index j = unflatten(flat);
    const double h = spacing();
    Point x{-0.5 * length_ + j[0] * h, 0.0};
    if (dim_ == 2) x[1] = -0.5 * length_ + j[1] * h;
    return x;
}

Index GridSpec::wavenumber(std::size_t flat) const {
    const Index j = unflatten(flat);
    Index k{signed_wavenumber(j[0], n_), 0};
    if (dim_ == 2) k[1] = signed_wavenumber(j[1], n_);
    return k;
}

Point GridSpec::frequency(std::size_t flat) const {
    const Index k = wavenumber(flat);
    const double dk = frequency_step();
    return {k[0] * dk, k[1] * dk};
}

std::size_t GridSpec::partner(std::size_t flat) const {
    const Index j = unflatten(flat);
    Index p{wrap(-j[0], n_), 0};
    if (dim_ == 2) p[1] = wrap(-j[1], n_);
    return flatten(p);
}

// ---------------------------------------------------------------------------
// GridFunction

GridFunction::GridFunction(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
    if (values_.size() != spec_.size())
        throw DomainError("sample count " + std::to_string(values_.size()) +
                          " does not match grid size " + std::to_string(spec_.size()));
    for (double v : values_)
        if (!std::isfinite(v)) throw DomainError("grid function has a non-finite sample");
}

GridFunction GridFunction::sample(const GridSpec& spec,
                                  const std::function<double(const Point&)>& fn) {
    std::vector<double> v(spec.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(spec.coordinate(i));
    return GridFunction(spec, std::move(v));
}

GridFunction GridFunction::constant(const GridSpec& spec, double value) {
    return GridFunction(spec, std::vector<double>(spec.size(), value));
}

double GridFunction::mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / double(values_.size());
}

GridFunction GridFunction::without_mean() const {
    const double m = mean();
    std::vector<double> v(values_);
    for (double& x : v) x -= m;
    return GridFunction(spec_, std::move(v));
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    if (!(a.spec_ == b.spec_)) throw DomainError("grid mismatch in +");
    std::vector<double> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return GridFunction(a.spec_, std::move(v));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    if (!(a.spec_ == b.spec_)) throw DomainError("grid mismatch in -");
    std::vector<double> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
    return GridFunction(a.spec_, std::move(v));
}

GridFunction operator*(double c, const GridFunction& f) {
    std::vector<double> v(f.values_);
    for (double& x : v) x *= c;
    return GridFunction(f.spec_, std::move(v));
}

// ---------------------------------------------------------------------------
// SpectralFunction

SpectralFunction::SpectralFunction(GridSpec spec, std::vector<Complex> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != spec_.size())
        throw DomainError("coefficient count does not match grid size");
}

Complex SpectralFunction::at(Index k) const {
    const int n = spec_.points_per_axis();
    Index j{wrap(k[0], n), spec_.dim() == 2 ? wrap(k[1], n) : 0};
    return coeffs_[spec_.flatten(j)];
}

Complex& SpectralFunction::at(Index k) {
    const int n = spec_.points_per_axis();
    Index j{wrap(k[0], n), spec_.dim() == 2 ? wrap(k[1], n) : 0};
    return coeffs_[spec_.flatten(j)];
}

double SpectralFunction::symmetry_defect() const {
    double defect = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        defect = std::max(defect, std::abs(coeffs_[i] - std::conj(coeffs_[spec_.partner(i)])));
    return defect;
}

// ---------------------------------------------------------------------------
// Transforms

SpectralFunction forward(const GridFunction& f) {
    const GridSpec& spec = f.spec();
    std::vector<Complex> data(f.values().begin(), f.values().end());
    detail::fft_in_place(data, spec.dim(), spec.points_per_axis(), detail::FftDirection::Forward);
    const double scale = 1.0 / double(spec.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        data[i] *= scale * origin_phase(spec.unflatten(i), spec.dim());
    // The transform of real data is conjugate symmetric; remove the rounding
    // asymmetry, which high-order multipliers would otherwise amplify.
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::size_t p = spec.partner(i);
        if (p < i) continue;
        const Complex avg = 0.5 * (data[i] + std::conj(data[p]));
        data[i] = avg;
        data[p] = std::conj(avg);
    }
    return SpectralFunction(spec, std::move(data));
}

GridFunction inverse(const SpectralFunction& F) {
    const GridSpec& spec = F.spec();
    double peak = 0.0;
    for (const Complex& c : F.coeffs()) peak = std::max(peak, std::abs(c));
    const double defect = F.symmetry_defect();
    if (defect > kSymmetryTolerance * peak)
        throw SymmetryViolation("conjugate-symmetry defect " + std::to_string(defect) +
                                " exceeds tolerance relative to max coefficient " +
                                std::to_string(peak));

    std::vector<Complex> data(F.coeffs().begin(), F.coeffs().end());
    for (std::size_t i = 0; i < data.size(); ++i)
        data[i] *= origin_phase(spec.unflatten(i), spec.dim());
    detail::fft_in_place(data, spec.dim(), spec.points_per_axis(), detail::FftDirection::Backward);
    std::vector<double> v(data.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = data[i].real();
    return GridFunction(spec, std::move(v));
}

// ---------------------------------------------------------------------------
// Norms and shifts

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

double l2_norm(const GridFunction& f) {
    double s = 0.0;
    for (double v : f.values()) s += v * v;
    return std::sqrt(std::pow(f.spec().spacing(), f.spec().dim()) * s);
}

double l2_norm(const SpectralFunction& F) {
    double s = 0.0;
    for (const Complex& c : F.coeffs()) s += std::norm(c);
    return std::sqrt(std::pow(F.spec().side_length(), F.spec().dim()) * s);
}

GridFunction shift(const GridFunction& f, const Point& y) {
    const GridSpec& spec = f.spec();
    const double h = spec.spacing();
    Index steps{0, 0};
    for (int axis = 0; axis < spec.dim(); ++axis) {
        const double q = y[axis] / h;
        const double r = std::round(q);
        if (std::abs(q - r) > 1e-9 * std::max(1.0, std::abs(q)))
            throw NonLatticeShift("component " + std::to_string(y[axis]) +
                                  " is not a multiple of h = " + std::to_string(h));
        // Reduce modulo N before converting; a shift by L is the identity.
        const double n = spec.points_per_axis();
        steps[axis] = int(std::fmod(r, n));
    }
    return shift_by(f, steps);
}

GridFunction shift_by(const GridFunction& f, Index steps) {
    const GridSpec& spec = f.spec();
    const int n = spec.points_per_axis();
    std::vector<double> out(f.size());
    if (spec.dim() == 1) {
        for (int j = 0; j < n; ++j) out[j] = f[wrap(j + steps[0], n)];
    } else {
        for (int a = 0; a < n; ++a) {
            const std::size_t src_row = std::size_t(wrap(a + steps[0], n)) * n;
            const std::size_t dst_row = std::size_t(a) * n;
            for (int b = 0; b < n; ++b) out[dst_row + b] = f[src_row + wrap(b + steps[1], n)];
        }
    }
    return GridFunction(spec, std::move(out));
}

} // namespace biharm
