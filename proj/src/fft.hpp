#pragma once

#include <complex>
#include <vector>

namespace biharm::detail {

enum class FftDirection { Forward, Backward };

/// Unnormalized in-place DFT of an N (dim=1) or N x N row-major (dim=2)
/// array. Forward uses exp(-i...), Backward exp(+i...).
void fft_in_place(std::vector<std::complex<double>>& data, int dim, int n, FftDirection dir);

} // namespace biharm::detail
