#include "core/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"

namespace winding {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

CircleSignal::CircleSignal(std::vector<std::complex<double>> samples, double unimodular_tol)
    : samples_(std::move(samples)), tol_(unimodular_tol), defect_(0.0) {
  const std::size_t n = samples_.size();
  if (n < 4 || !is_pow2(n))
    fail(errc::invalid_argument,
         "sample count N=" + std::to_string(n) + " must be a power of two with N >= 4");
  if (!(tol_ >= 0.0)) fail(errc::invalid_argument, "unimodular tolerance must be nonnegative");
  for (const auto& v : samples_) {
    const double d = std::abs(std::abs(v) - 1.0);
    if (d > defect_) defect_ = d;
  }
}

double CircleSignal::grid_step() const { return 2.0 * std::numbers::pi / static_cast<double>(size()); }

double CircleSignal::angle(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(size());
}

}  // namespace winding
