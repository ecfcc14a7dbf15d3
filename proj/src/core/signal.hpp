#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace winding {

/// Uniformly sampled values f(e^{i t_j}) at t_j = 2*pi*j/N, immutable after
/// construction. N must be a power of two, at least 4. The unimodular
/// tolerance is a declared bound; operations that require |f| = 1 check the
/// measured deviation against it.
class CircleSignal {
 public:
  static constexpr double kGeneratorTol = 1e-8;

  explicit CircleSignal(std::vector<std::complex<double>> samples, double unimodular_tol = kGeneratorTol);

  std::size_t size() const { return samples_.size(); }
  std::span<const std::complex<double>> samples() const { return samples_; }
  std::complex<double> sample(std::size_t j) const { return samples_[j]; }

  double unimodular_tol() const { return tol_; }
  /// max_j | |f_j| - 1 |, measured once at construction.
  double unimodular_defect() const { return defect_; }
  bool is_unimodular() const { return defect_ <= tol_; }

  /// Grid spacing 2*pi/N.
  double grid_step() const;
  /// Sample angle t_j.
  double angle(std::size_t j) const;

 private:
  std::vector<std::complex<double>> samples_;
  double tol_;
  double defect_;
};

}  // namespace winding
