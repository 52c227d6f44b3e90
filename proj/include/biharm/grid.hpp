#pragma once

// Periodic grid model of R^n (n = 1, 2): sampled functions, their discrete
// Fourier coefficients, and the norms and lattice shifts built on them.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace biharm {

using Complex = std::complex<double>;

/// A point or frequency vector. Only the first `dim` components are used.
using Point = std::array<double, 2>;

/// Integer multi-index; per axis either a grid index or a signed wavenumber.
using Index = std::array<int, 2>;

/// The box [-L/2, L/2)^dim sampled with N points per axis.
class GridSpec {
public:
    /// Throws DomainError unless dim is 1 or 2, N is a power of two >= 16 and L > 0.
    GridSpec(int dim, int points_per_axis, double side_length);

    int dim() const { return dim_; }
    int points_per_axis() const { return n_; }
    double side_length() const { return length_; }

    /// h = L / N.
    double spacing() const { return length_ / n_; }
    /// 2*pi / L, the spacing of the frequency lattice.
    double frequency_step() const;
    /// N^dim.
    std::size_t size() const;

    /// Grid index of a flat (row-major) position.
    Index unflatten(std::size_t flat) const;
    std::size_t flatten(Index idx) const;

    /// x_j = -L/2 + j*h per axis.
    Point coordinate(std::size_t flat) const;

    /// Signed wavenumber k in [-N/2, N/2) stored at a flat position in
    /// transform order.
    Index wavenumber(std::size_t flat) const;
    /// xi_k = 2*pi*k / L.
    Point frequency(std::size_t flat) const;
    /// Flat position holding wavenumber -k (the conjugate partner).
    std::size_t partner(std::size_t flat) const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    int dim_;
    int n_;
    double length_;
};

/// Real samples f(x_j) on a GridSpec, row-major for dim = 2.
class GridFunction {
public:
    /// Throws DomainError on a size mismatch or a non-finite sample.
    GridFunction(GridSpec spec, std::vector<double> values);

    /// Samples `fn` at every grid point.
    static GridFunction sample(const GridSpec& spec, const std::function<double(const Point&)>& fn);
    static GridFunction constant(const GridSpec& spec, double value);

    const GridSpec& spec() const { return spec_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    /// Average over the grid, i.e. the zero-frequency coefficient.
    double mean() const;
    /// f minus its mean.
    GridFunction without_mean() const;

    friend GridFunction operator+(const GridFunction& a, const GridFunction& b);
    friend GridFunction operator-(const GridFunction& a, const GridFunction& b);
    friend GridFunction operator*(double c, const GridFunction& f);

private:
    GridSpec spec_;
    std::vector<double> values_;
};

/// Fourier coefficients c_k with f(x) = sum_k c_k exp(i xi_k . x). Stored in
/// transform order; use GridSpec::wavenumber to read the signed index.
class SpectralFunction {
public:
    SpectralFunction(GridSpec spec, std::vector<Complex> coeffs);

    const GridSpec& spec() const { return spec_; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    std::span<Complex> coeffs() { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient at a signed wavenumber (each component in [-N/2, N/2)).
    Complex at(Index k) const;
    Complex& at(Index k);

    /// Largest |c_k - conj(c_{-k})|.
    double symmetry_defect() const;

private:
    GridSpec spec_;
    std::vector<Complex> coeffs_;
};

/// Discrete Fourier coefficients; cos(xi_k x) maps to 1/2 at +-xi_k.
SpectralFunction forward(const GridFunction& f);

/// Inverse of forward. Throws SymmetryViolation when the coefficients are not
/// conjugate symmetric to 1e-10 of the largest magnitude; the imaginary
/// residue is dropped otherwise.
GridFunction inverse(const SpectralFunction& F);

/// Relative tolerance of the conjugate-symmetry test in inverse().
inline constexpr double kSymmetryTolerance = 1e-10;

/// max_j |f(x_j)|.
double sup_norm(const GridFunction& f);
/// sqrt(h^dim * sum |f|^2).
double l2_norm(const GridFunction& f);
/// sqrt(L^dim * sum |c_k|^2), equal to l2_norm(inverse(F)) by Parseval.
double l2_norm(const SpectralFunction& F);

/// (shift(f, y))(x) = f(x + y), periodically. y must be a lattice vector;
/// throws NonLatticeShift otherwise.
GridFunction shift(const GridFunction& f, const Point& y);
/// Shift by whole grid steps.
GridFunction shift_by(const GridFunction& f, Index steps);

} // namespace biharm
