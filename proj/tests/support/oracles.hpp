#pragma once

// Independent oracle routes used to freeze expected values. Everything here
// is a literal transcription of the defining formulas (plain loops, no shared
// code with the implementation paths under test).

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "core/signal.hpp"
#include "core/spectrum.hpp"

namespace oracles {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// (1/2pi) integral f(t) e^{-int} dt by a plain Riemann sum on a fine grid,
// evaluated from the analytic function, not from stored samples.
inline std::complex<double> quad_coefficient(const std::function<std::complex<double>(double)>& f, long n,
                                             std::size_t grid = 1 << 14) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < grid; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(grid);
    acc += f(t) * std::polar(1.0, -static_cast<double>(n) * t);
  }
  return acc / static_cast<double>(grid);
}

// Literal double sum for the normalized Gagliardo gauge.
inline double brute_gagliardo(const winding::CircleSignal& signal, double s, double p) {
  const auto f = signal.samples();
  const std::size_t n = f.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const double x = two_pi * static_cast<double>(j) / static_cast<double>(n);
      const double y = two_pi * static_cast<double>(k) / static_cast<double>(n);
      const double chord = std::abs(std::polar(1.0, x) - std::polar(1.0, y));
      acc += std::pow(std::abs(f[j] - f[k]), p) / std::pow(chord, 1.0 + s * p);
    }
  }
  return acc / (static_cast<double>(n) * static_cast<double>(n));
}

// Mean oscillation of the window of `cells` samples starting at `start`,
// recomputed from scratch.
inline double brute_window_oscillation(std::span<const std::complex<double>> f, std::size_t start,
                                       std::size_t cells) {
  const std::size_t n = f.size();
  double acc = 0.0;
  for (std::size_t u = 0; u < cells; ++u)
    for (std::size_t v = 0; v < cells; ++v)
      acc += std::abs(f[(start + u) % n] - f[(start + v) % n]);
  return acc / (static_cast<double>(cells) * static_cast<double>(cells));
}

// Sup over power-of-two window lengths <= max_cells and all starts.
inline double brute_vmo_ladder(std::span<const std::complex<double>> f, std::size_t max_cells) {
  double best = 0.0;
  for (std::size_t cells = 2; cells <= max_cells; cells *= 2)
    for (std::size_t start = 0; start < f.size(); ++start)
      best = std::max(best, brute_window_oscillation(f, start, cells));
  return best;
}

// Sup over every window length in [2, max_cells], not just the ladder.
inline double brute_vmo_all_lengths(std::span<const std::complex<double>> f, std::size_t max_cells) {
  double best = 0.0;
  for (std::size_t cells = 2; cells <= max_cells; ++cells)
    for (std::size_t start = 0; start < f.size(); ++start)
      best = std::max(best, brute_window_oscillation(f, start, cells));
  return best;
}

// Integer-order Cesaro mean by iterated prefix sums: A^0_j = s_j (partial
// sums, s_0 = 0), A^k_n = sum_{j<=n} A^{k-1}_j, mean = A^k_n / binom(n+k, k).
// An independent route to the binomial-weight formula.
inline double cesaro_iterated(std::span<const double> u, int k, std::size_t n) {
  std::vector<double> a(n + 1, 0.0);
  double run = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j <= u.size()) run += u[j - 1];
    a[j] = run;
  }
  for (int level = 0; level < k; ++level) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      acc += a[j];
      a[j] = acc;
    }
  }
  double binom = 1.0;
  for (int j = 1; j <= k; ++j) binom *= static_cast<double>(n + static_cast<std::size_t>(j)) / static_cast<double>(j);
  return a[n] / binom;
}

// Smooth random unimodular signal: exp(i (d t + trig polynomial with seeded
// coefficients)). Smoothness keeps every gauge and both degree routes valid.
inline winding::CircleSignal random_phase_signal(std::uint64_t seed, std::size_t n, long d = 0,
                                                 int harmonics = 4, double amplitude = 0.7) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<double> ac(static_cast<std::size_t>(harmonics)), bc(static_cast<std::size_t>(harmonics));
  for (auto& c : ac) c = amplitude * (2.0 * unit() - 1.0) / harmonics;
  for (auto& c : bc) c = amplitude * (2.0 * unit() - 1.0) / harmonics;
  std::vector<std::complex<double>> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(n);
    double phi = static_cast<double>(d) * t;
    for (int h = 1; h <= harmonics; ++h)
      phi += ac[static_cast<std::size_t>(h - 1)] * std::cos(h * t) + bc[static_cast<std::size_t>(h - 1)] * std::sin(h * t);
    samples[j] = std::polar(1.0, phi);
  }
  return winding::CircleSignal(std::move(samples));
}

// The +1/-1 half-circle step (bounded, not VMO at the jump scale).
inline winding::CircleSignal step_signal(std::size_t n) {
  std::vector<std::complex<double>> samples(n);
  for (std::size_t j = 0; j < n; ++j) samples[j] = j < n / 2 ? 1.0 : -1.0;
  return winding::CircleSignal(std::move(samples));
}

// Exact spectrum of e^{i d t}: a_d = 1, everything else identically zero.
// Analyzed spectra carry ~1e-16 trig/FFT dust in the zero coefficients, so
// tests for exact-zero semantics construct the coefficients directly.
inline winding::FourierSpectrum exact_monomial_spectrum(long d, std::size_t m) {
  std::vector<std::complex<double>> coeffs(2 * m + 1, {0.0, 0.0});
  coeffs[static_cast<std::size_t>(d + static_cast<long>(m))] = {1.0, 0.0};
  return winding::FourierSpectrum(std::move(coeffs));
}

inline std::vector<double> alternating(std::size_t len) {
  std::vector<double> u(len);
  for (std::size_t m = 1; m <= len; ++m) u[m - 1] = m % 2 == 1 ? 1.0 : -1.0;
  return u;
}

inline std::vector<double> alternating_m(std::size_t len) {
  std::vector<double> u(len);
  for (std::size_t m = 1; m <= len; ++m) u[m - 1] = (m % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(m);
  return u;
}

}  // namespace oracles
