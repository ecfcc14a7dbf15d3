#include "core/spectrum.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/fft.hpp"

namespace winding {

FourierSpectrum::FourierSpectrum(std::vector<std::complex<double>> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.size() % 2 == 0)
    fail(errc::invalid_argument, "spectrum must hold 2M+1 coefficients for n in [-M, M]");
}

std::complex<double> FourierSpectrum::coeff(long n) const {
  const long m = static_cast<long>(bandwidth());
  if (n < -m || n > m)
    fail(errc::invalid_argument, "coefficient index n=" + std::to_string(n) + " outside band [-M, M], M=" + std::to_string(m));
  return coefficients_[static_cast<std::size_t>(n + m)];
}

FourierSpectrum analyze(const CircleSignal& signal, std::size_t bandwidth) {
  const std::size_t n = signal.size();
  if (2 * bandwidth > n)
    fail(errc::bandwidth, "bandwidth M=" + std::to_string(bandwidth) + " exceeds Nyquist limit N/2=" + std::to_string(n / 2));

  const auto bins = detail::dft_forward(signal.samples());
  const double scale = 1.0 / static_cast<double>(n);
  const long m = static_cast<long>(bandwidth);
  std::vector<std::complex<double>> coeffs(2 * bandwidth + 1);
  for (long k = -m; k <= m; ++k) {
    const std::size_t bin = static_cast<std::size_t>((k % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n));
    coeffs[static_cast<std::size_t>(k + m)] = bins[bin] * scale;
  }
  return FourierSpectrum(std::move(coeffs));
}

CircleSignal synthesize(const FourierSpectrum& spectrum, std::size_t sample_count) {
  const std::size_t m = spectrum.bandwidth();
  if (sample_count < 2 * m + 2)
    fail(errc::undersampled, "synthesis with N=" + std::to_string(sample_count) +
                                 " undersamples bandwidth M=" + std::to_string(m) + " (need N >= 2M + 2)");

  std::vector<std::complex<double>> bins(sample_count, {0.0, 0.0});
  const long mm = static_cast<long>(m);
  const long nn = static_cast<long>(sample_count);
  for (long k = -mm; k <= mm; ++k) {
    bins[static_cast<std::size_t>((k % nn + nn) % nn)] += spectrum.coeff(k);
  }
  auto samples = detail::dft_backward(bins);
  return CircleSignal(std::move(samples));
}

std::vector<double> energy_sequence(const FourierSpectrum& spectrum) {
  const std::size_t m = spectrum.bandwidth();
  std::vector<double> u(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const long n = static_cast<long>(k);
    u[k - 1] = static_cast<double>(k) * (std::norm(spectrum.coeff(n)) - std::norm(spectrum.coeff(-n)));
  }
  return u;
}

double parseval_defect(const CircleSignal& signal, const FourierSpectrum& spectrum) {
  double power = 0.0;
  for (const auto& v : signal.samples()) power += std::norm(v);
  power /= static_cast<double>(signal.size());

  double coeff_power = 0.0;
  for (const auto& a : spectrum.coefficients()) coeff_power += std::norm(a);

  return std::abs(power - coeff_power);
}

}  // namespace winding
