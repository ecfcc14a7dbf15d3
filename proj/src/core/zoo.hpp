#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "core/signal.hpp"
#include "core/spectrum.hpp"

namespace winding::zoo {

/// Samples of e^{i d t}; degree d by construction. Requires |d| < N/2.
CircleSignal monomial(long d, std::size_t sample_count);

/// Finite Blaschke product prod_k (z - z_k)/(1 - conj(z_k) z) on |z| = 1.
/// Degree equals the zero count; an empty list yields the constant 1.
/// Zeros must satisfy |z_k| <= 0.95 so coefficient decay stays resolvable.
CircleSignal blaschke(std::span<const std::complex<double>> zeros, std::size_t sample_count);

struct PhaseKnot {
  double angle = 0.0;  // in [0, 2*pi), strictly increasing across knots
  double phase = 0.0;
};

/// f = e^{i phi(t)} with phi piecewise linear through the knots and total
/// increment 2*pi*d around the circle: a C-and-BV representative of degree d.
CircleSignal piecewise_linear_phase(std::span<const PhaseKnot> knots, long d, std::size_t sample_count);

/// f = exp(i (d t + lambda * sum_{j=1..scales} 2^{-alpha j} cos(2^j t + phi_j)))
/// with seeded pseudo-random phases phi_j: a Hoelder-class representative of
/// order alpha with degree d (the lacunary part is null-homotopic).
CircleSignal weierstrass_phase(double alpha, int scales, double lambda, long d, std::uint64_t seed,
                               std::size_t sample_count);

/// Same moduli |a_n|, seeded pseudo-random phases. The output is generally
/// not the spectrum of a unimodular function; measure the deviation through
/// synthesize.
FourierSpectrum phase_scramble(const FourierSpectrum& spectrum, std::uint64_t seed);

/// |a_n| e^{i phases[n+M]}; phase_scramble with explicit phases.
FourierSpectrum with_phases(const FourierSpectrum& spectrum, std::span<const double> phases);

/// Inline generator spec, e.g. "monomial:d=3,n=4096",
/// "blaschke:zeros=0.3,-0.4+0.2i;n=512",
/// "pwlinear:knots=0:0|3.14:5;d=2;n=1024",
/// "weierstrass:alpha=0.6,scales=10,lambda=1,d=1,seed=7,n=4096".
CircleSignal from_spec(std::string_view spec);

/// "0.3,-0.4+0.2i,0.1-0.5i" -> complex list.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

/// Key=value pairs of a spec body, ';' or ',' separated; fragments without
/// '=' continue the previous value (complex lists contain commas).
std::vector<std::pair<std::string, std::string>> parse_spec_pairs(std::string_view body);

}  // namespace winding::zoo
