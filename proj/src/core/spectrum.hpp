#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "core/signal.hpp"

namespace winding {

/// Complex Fourier coefficients a_n for n in [-M, M], stored ascending.
class FourierSpectrum {
 public:
  /// coefficients.size() must be odd (2M + 1).
  explicit FourierSpectrum(std::vector<std::complex<double>> coefficients);

  std::size_t bandwidth() const { return (coefficients_.size() - 1) / 2; }
  std::span<const std::complex<double>> coefficients() const { return coefficients_; }

  /// a_n, |n| <= M.
  std::complex<double> coeff(long n) const;

 private:
  std::vector<std::complex<double>> coefficients_;
};

/// a_n = (1/N) * sum_j f_j e^{-i n t_j} for n in [-M, M]. Requires M <= N/2.
FourierSpectrum analyze(const CircleSignal& signal, std::size_t bandwidth);

/// f_j = sum_n a_n e^{i n t_j}. Requires N >= 2M + 2.
CircleSignal synthesize(const FourierSpectrum& spectrum, std::size_t sample_count);

/// u_m = m (|a_m|^2 - |a_{-m}|^2), m = 1..M.
std::vector<double> energy_sequence(const FourierSpectrum& spectrum);

/// | (1/N) sum_j |f_j|^2  -  sum_n |a_n|^2 |, the truncation/sampling diagnostic.
double parseval_defect(const CircleSignal& signal, const FourierSpectrum& spectrum);

}  // namespace winding
