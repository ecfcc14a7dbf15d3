#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "core/signal.hpp"
#include "core/spectrum.hpp"

namespace winding {

/// sum |n| |a_n|^2 over the band.
double h_half_coefficient(const FourierSpectrum& spectrum);

/// Normalized Gagliardo double sum over grid pairs j != k,
///   (1/N^2) sum |f_j - f_k|^p / d(t_j, t_k)^{1 + s p},
/// with d the chordal distance |e^{ix} - e^{iy}|. At s = 1/2, p = 2 this
/// equals sum |n| |a_n|^2 in the continuum (Fejer kernel identity).
double gagliardo(const CircleSignal& signal, double s, double p);

/// Supremum over grid-aligned arcs I (power-of-two cell counts, length <=
/// arc_length) of the discrete mean oscillation (1/|I|^2) integral of
/// |f(x) - f(y)| over I x I.
double vmo_modulus(const CircleSignal& signal, double arc_length);

/// For each grid-aligned shift t (given in steps of 2 pi / N), the pair
/// (t, integral |f(s+t) - f(s)|^p ds / t^alpha). Decay of the ratio along
/// t -> 0 probes the little-o Hoelder class of order alpha.
std::vector<std::pair<double, double>> lambda_test(const CircleSignal& signal, double alpha, double p,
                                                   std::span<const std::size_t> shift_steps);

/// Same, with shifts given as angles that must sit on the grid.
std::vector<std::pair<double, double>> lambda_test_angles(const CircleSignal& signal, double alpha, double p,
                                                          std::span<const double> shifts);

/// Default shift ladder N/4, N/8, ..., 1 (in grid steps).
std::vector<std::size_t> default_shift_ladder(std::size_t sample_count);

}  // namespace winding
