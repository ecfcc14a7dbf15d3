#include "core/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/numfmt.hpp"
#include "core/parallel.hpp"

namespace winding {

double h_half_coefficient(const FourierSpectrum& spectrum) {
  const long m = static_cast<long>(spectrum.bandwidth());
  double s = 0.0;
  for (long n = -m; n <= m; ++n) s += std::abs(static_cast<double>(n)) * std::norm(spectrum.coeff(n));
  return s;
}

double gagliardo(const CircleSignal& signal, double s, double p) {
  if (!(s > 0.0 && s < 1.0)) fail(errc::invalid_argument, "gagliardo order s=" + format_double(s) + " must lie in (0, 1)");
  if (!(p > 1.0) || !std::isfinite(p))
    fail(errc::invalid_argument, "gagliardo exponent p=" + format_double(p) + " must lie in (1, inf)");

  const auto f = signal.samples();
  const std::size_t n = f.size();
  const double expo = 1.0 + s * p;

  // d(t_j, t_k) depends only on the index difference; precompute the kernel.
  std::vector<double> kernel(n, 0.0);
  for (std::size_t d = 1; d < n; ++d) {
    const double chord = 2.0 * std::sin(std::numbers::pi * static_cast<double>(d) / static_cast<double>(n));
    kernel[d] = std::pow(chord, -expo);
  }

  std::vector<double> row_sums(n, 0.0);
  const bool quadratic = p == 2.0;
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      double acc = 0.0;
      for (std::size_t d = 1; d < n; ++d) {
        const std::size_t k = j + d < n ? j + d : j + d - n;
        const double sq = std::norm(f[j] - f[k]);
        acc += (quadratic ? sq : std::pow(sq, p / 2.0)) * kernel[d];
      }
      row_sums[j] = acc;
    }
  });

  double total = 0.0;
  for (const double r : row_sums) total += r;
  return total / (static_cast<double>(n) * static_cast<double>(n));
}

namespace {

// Max over all circular windows of L samples of the discrete mean oscillation
// 2 S / L^2, S the unordered pair sum of |f_a - f_b| inside the window.
// The window slides with O(L) edge updates; the sum is refreshed from scratch
// periodically to cap floating-point drift.
double max_window_oscillation(std::span<const std::complex<double>> f, std::size_t window) {
  const std::size_t n = f.size();
  const std::size_t starts = window == n ? 1 : n;
  const double inv = 2.0 / (static_cast<double>(window) * static_cast<double>(window));

  auto fresh = [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t u = 0; u + 1 < window; ++u) {
      const auto fu = f[(j + u) % n];
      for (std::size_t v = u + 1; v < window; ++v) s += std::abs(fu - f[(j + v) % n]);
    }
    return s;
  };

  double pair_sum = fresh(0);
  double best = pair_sum * inv;
  for (std::size_t j = 1; j < starts; ++j) {
    if (j % 1024 == 0) {
      pair_sum = fresh(j);
    } else {
      const auto leaving = f[j - 1];
      const auto entering = f[(j - 1 + window) % n];
      double delta = 0.0;
      for (std::size_t u = 1; u < window; ++u) {
        const auto mid = f[(j - 1 + u) % n];
        delta += std::abs(mid - entering) - std::abs(leaving - mid);
      }
      pair_sum += delta;
    }
    best = std::max(best, pair_sum * inv);
  }
  return best;
}

}  // namespace

double vmo_modulus(const CircleSignal& signal, double arc_length) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(arc_length > 0.0) || arc_length > two_pi * (1.0 + 1e-12))
    fail(errc::invalid_argument, "arc length must lie in (0, 2*pi]");

  const std::size_t n = signal.size();
  const double h = two_pi / static_cast<double>(n);
  const std::size_t max_cells = std::min<std::size_t>(n, static_cast<std::size_t>(arc_length / h + 1e-9));
  if (max_cells < 2)
    fail(errc::arc_too_short, "arc length " + format_double(arc_length) + " spans fewer than 2 grid cells (step " +
                                  format_double(h) + ")");

  double best = 0.0;
  for (std::size_t window = 2; window <= max_cells; window *= 2)
    best = std::max(best, max_window_oscillation(signal.samples(), window));
  return best;
}

std::vector<std::pair<double, double>> lambda_test(const CircleSignal& signal, double alpha, double p,
                                                   std::span<const std::size_t> shift_steps) {
  if (!(alpha > 0.0)) fail(errc::invalid_argument, "order alpha must be positive");
  if (!(p >= 1.0) || !std::isfinite(p)) fail(errc::invalid_argument, "exponent p must lie in [1, inf)");

  const auto f = signal.samples();
  const std::size_t n = f.size();
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);

  std::vector<std::pair<double, double>> trace;
  trace.reserve(shift_steps.size());
  for (const std::size_t k : shift_steps) {
    if (k == 0 || k >= n)
      fail(errc::off_grid, "shift of " + std::to_string(k) + " grid steps is outside [1, N-1]");
    double integral = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double sq = std::norm(f[(j + k) % n] - f[j]);
      integral += p == 2.0 ? sq : std::pow(sq, p / 2.0);
    }
    integral *= h;
    const double t = h * static_cast<double>(k);
    trace.emplace_back(t, integral / std::pow(t, alpha));
  }
  return trace;
}

std::vector<std::pair<double, double>> lambda_test_angles(const CircleSignal& signal, double alpha, double p,
                                                          std::span<const double> shifts) {
  const double h = signal.grid_step();
  std::vector<std::size_t> steps;
  steps.reserve(shifts.size());
  for (const double t : shifts) {
    const double cells = t / h;
    const double rounded = std::round(cells);
    if (!(t > 0.0) || std::abs(cells - rounded) > 1e-9 * std::max(1.0, std::abs(cells)))
      fail(errc::off_grid, "shift t=" + format_double(t) + " is not a positive multiple of the grid step " +
                               format_double(h));
    steps.push_back(static_cast<std::size_t>(rounded));
  }
  return lambda_test(signal, alpha, p, steps);
}

std::vector<std::size_t> default_shift_ladder(std::size_t sample_count) {
  std::vector<std::size_t> steps;
  for (std::size_t k = sample_count / 4; k >= 1; k /= 2) steps.push_back(k);
  return steps;
}

}  // namespace winding
