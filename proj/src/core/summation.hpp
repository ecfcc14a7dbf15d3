#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/spectrum.hpp"

namespace winding {

enum class MethodKind { partial, cesaro, riemann, abel };

/// One of the summation processes applicable to a real sequence u_1, u_2, ...
/// Cesaro carries a real order k > -1, Riemann an integer order k >= 1.
struct SummationMethod {
  MethodKind kind = MethodKind::partial;
  double order = 0.0;

  static SummationMethod partial();
  static SummationMethod cesaro(double k);
  static SummationMethod riemann(int k);
  static SummationMethod abel();

  /// Accepts "partial", "cesaro:k=1.5", "riemann:k=2", "abel".
  static SummationMethod parse(std::string_view text);
  std::string str() const;
};

/// Numerical realization of the method's limit: a strictly monotone parameter
/// schedule plus a trailing-plateau convergence test.
struct LimitProtocol {
  std::vector<double> schedule;
  int plateau_window = 4;
  double tolerance = 1e-4;

  void validate() const;

  /// Geometric schedules: n = 2^i for partial/Cesaro (partial capped at the
  /// sequence length), t = 2^-i for Riemann, r = 1 - 2^-i for Abel.
  static LimitProtocol defaults_for(const SummationMethod& method, std::size_t sequence_len);

  /// Defaults with "depth=I,window=W,tol=X" overrides applied.
  static LimitProtocol parse(const SummationMethod& method, std::size_t sequence_len, std::string_view overrides);
};

/// sum_{m<=n} u_m, fixed left-to-right order. Errors if n exceeds the sequence.
double sum_partial(std::span<const double> u, std::size_t n);

/// binom(n+k,k)^-1 sum_m binom(n+k-m,k) u_m. Terms past the stored length are
/// treated as zero, so the cutoff may exceed the sequence. k = 0 coincides
/// with sum_partial exactly; fractional k uses log-gamma binomials.
double sum_cesaro(std::span<const double> u, double k, std::uint64_t n);

/// sum_m u_m (sin(mt)/(mt))^k, integer k >= 1, t > 0.
double sum_riemann(std::span<const double> u, int k, double t);

/// sum_m |u_m| m^-k, the (R,k) applicability gauge (always finite here).
double riemann_weight_sum(std::span<const double> u, int k);

/// sum_m r^m u_m, 0 < r < 1.
double sum_abel(std::span<const double> u, double r);

/// sum_{|n|<=M} |a_n|^2 sin(nt)/t. Equals sum_riemann(energy_sequence, 1, t)
/// up to float reassociation.
double riemann_sin_form(const FourierSpectrum& spectrum, double t);

/// Method evaluated at one schedule parameter (n, t or r by kind).
double evaluate_method(std::span<const double> u, const SummationMethod& method, double parameter);

struct LimitResult {
  double estimate = 0.0;
  bool converged = false;
  std::vector<std::pair<double, double>> trace;  // (parameter, value)
};

/// Evaluates along the schedule; converged when the last plateau_window values
/// pairwise differ by at most the tolerance. The estimate is the last value.
LimitResult extract_limit(const std::function<double(double)>& evaluator, const LimitProtocol& protocol);

}  // namespace winding
