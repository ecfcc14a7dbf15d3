#include "core/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "core/error.hpp"

namespace winding::detail {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::complex<double>> transform(std::span<const std::complex<double>> x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) fail(errc::invalid_argument, "empty input to DFT");

  fftw_complex* in = fftw_alloc_complex(n);
  fftw_complex* out = fftw_alloc_complex(n);
  if (in == nullptr || out == nullptr) {
    fftw_free(in);
    fftw_free(out);
    fail(errc::internal, "DFT buffer allocation failed");
  }

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign, FFTW_ESTIMATE);
  }

  for (std::size_t i = 0; i < n; ++i) {
    in[i][0] = x[i].real();
    in[i][1] = x[i].imag();
  }
  fftw_execute(plan);

  std::vector<std::complex<double>> result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = {out[i][0], out[i][1]};

  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return result;
}

}  // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x) {
  return transform(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> x) {
  return transform(x, FFTW_BACKWARD);
}

}  // namespace winding::detail
