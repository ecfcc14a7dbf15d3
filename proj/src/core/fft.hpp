#pragma once

#include <complex>
#include <span>
#include <vector>

namespace winding::detail {

// Unnormalized DFT pair, X_k = sum_j x_j e^{-2*pi*i*j*k/N} and its e^{+} twin.
// Thread safe: the FFTW planner is serialized internally, execution is not.
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x);
std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> x);

}  // namespace winding::detail
