#ifndef CAUCHYKIT_FFT_HPP
#define CAUCHYKIT_FFT_HPP

#include <vector>

#include "cauchykit/common.hpp"

namespace cauchykit {

// In-place radix-2 FFT on power-of-two lengths, extended precision.
// Unnormalized: fft followed by ifft multiplies by n.
void fft(std::vector<cplx>& a);
void ifft(std::vector<cplx>& a);  // conjugate-trick inverse, includes the 1/n factor

// Forward Fourier analysis of boundary samples: c[k] = (1/M) sum_j g[j] e^{-2pi i jk/M}.
std::vector<cplx> analysis_coefficients(const std::vector<cplx>& samples);

// Synthesis at the grid nodes: g[j] = sum_k c[k] e^{2pi i jk/M} (c padded/truncated to M).
std::vector<cplx> synthesis_samples(const std::vector<cplx>& coeffs, std::size_t M);

}  // namespace cauchykit

#endif  // CAUCHYKIT_FFT_HPP
