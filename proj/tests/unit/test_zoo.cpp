#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "core/degree.hpp"
#include "core/error.hpp"
#include "core/seminorms.hpp"
#include "core/spectrum.hpp"
#include "core/zoo.hpp"
#include "support/oracles.hpp"

using namespace winding;

TEST_CASE("monomial generator") {
  SUBCASE("d = 0 is the constant 1") {
    const auto f = zoo::monomial(0, 64);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(f.sample(j) == std::complex<double>(1.0, 0.0));
  }
  SUBCASE("degree comes back through the oracle") { CHECK(winding_geometric(zoo::monomial(3, 64)) == 3); }
  SUBCASE("gauges of e^{-2it}") {
    const auto spectrum = analyze(zoo::monomial(-2, 1024), 256);
    CHECK(h_half_coefficient(spectrum) == doctest::Approx(2.0).epsilon(1e-12));
    const auto u = energy_sequence(spectrum);
    CHECK(u[1] == doctest::Approx(-2.0).epsilon(1e-12));
  }
  SUBCASE("aliasing guard") {
    try {
      (void)zoo::monomial(32, 64);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::aliasing);
    }
  }
}

TEST_CASE("blaschke generator") {
  SUBCASE("empty zero list is the constant 1") {
    const auto f = zoo::blaschke({}, 64);
    CHECK(winding_geometric(f) == 0);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(f.sample(j) - 1.0) == 0.0);
  }
  SUBCASE("single zero at the origin equals the monomial exactly on the grid") {
    const auto b = zoo::blaschke(std::vector<std::complex<double>>{{0.0, 0.0}}, 128);
    const auto m = zoo::monomial(1, 128);
    for (std::size_t j = 0; j < b.size(); ++j) CHECK(b.sample(j) == m.sample(j));
  }
  SUBCASE("three zeros wind three times") {
    const std::vector<std::complex<double>> zeros{{0.3, 0.0}, {-0.4, 0.2}, {0.1, -0.5}};
    CHECK(winding_geometric(zoo::blaschke(zeros, 512)) == 3);
  }
  SUBCASE("boundary guard") {
    try {
      (void)zoo::blaschke(std::vector<std::complex<double>>{{0.97, 0.0}}, 64);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::zero_near_boundary);
    }
  }
  SUBCASE("unimodular to 1e-10") {
    const std::vector<std::complex<double>> zeros{{0.9, 0.0}, {0.0, -0.8}, {-0.5, 0.5}};
    CHECK(zoo::blaschke(zeros, 256).unimodular_defect() < 1e-10);
  }
}

TEST_CASE("piecewise-linear phase generator") {
  SUBCASE("single knot with d=1 is e^{it}") {
    const auto f = zoo::piecewise_linear_phase(std::vector<zoo::PhaseKnot>{{0.0, 0.0}}, 1, 128);
    const auto m = zoo::monomial(1, 128);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(f.sample(j) - m.sample(j)) < 1e-12);
  }
  SUBCASE("sawtooth-modulated phase keeps its declared degree") {
    const std::vector<zoo::PhaseKnot> knots{{0.0, 0.0}, {1.0, 2.0}, {2.0, -1.0}, {4.5, 3.0}};
    CHECK(winding_geometric(zoo::piecewise_linear_phase(knots, 3, 2048)) == 3);
  }
  SUBCASE("degree 0 triangle phase has a nonzero smoothness gauge") {
    const std::vector<zoo::PhaseKnot> knots{{0.0, 0.0}, {3.0, 2.0}};
    const auto f = zoo::piecewise_linear_phase(knots, 0, 1024);
    CHECK(winding_geometric(f) == 0);
    CHECK(h_half_coefficient(analyze(f, 256)) > 0.1);
  }
  SUBCASE("interpolates through the knots") {
    // knots placed on grid angles of N = 8: t_2 = pi/2, t_6 = 3pi/2
    const double quarter = 2.0 * std::numbers::pi / 4.0;
    const std::vector<zoo::PhaseKnot> knots{{0.0, 0.3}, {quarter, 1.0}, {3.0 * quarter, -0.4}};
    const auto f = zoo::piecewise_linear_phase(knots, 1, 8);
    CHECK(std::abs(f.sample(0) - std::polar(1.0, 0.3)) < 1e-15);
    CHECK(std::abs(f.sample(2) - std::polar(1.0, 1.0)) < 1e-15);
    CHECK(std::abs(f.sample(6) - std::polar(1.0, -0.4)) < 1e-15);
    // midpoint of the first segment
    CHECK(std::abs(f.sample(1) - std::polar(1.0, 0.65)) < 1e-15);
  }
  SUBCASE("non-increasing knot angles are a discontinuous specification") {
    const std::vector<zoo::PhaseKnot> knots{{1.0, 0.0}, {1.0, 2.0}};
    CHECK_THROWS_AS((void)zoo::piecewise_linear_phase(knots, 0, 64), error);
    const std::vector<zoo::PhaseKnot> unsorted{{2.0, 0.0}, {1.0, 2.0}};
    CHECK_THROWS_AS((void)zoo::piecewise_linear_phase(unsorted, 0, 64), error);
  }
}

TEST_CASE("lacunary (weierstrass) phase generator") {
  SUBCASE("lambda = 0 collapses to the monomial") {
    const auto f = zoo::weierstrass_phase(0.6, 10, 0.0, 3, 5, 4096);
    const auto m = zoo::monomial(3, 4096);
    for (std::size_t j = 0; j < 4096; j += 37) CHECK(std::abs(f.sample(j) - m.sample(j)) < 1e-12);
  }
  SUBCASE("declared degree survives the lacunary part") {
    CHECK(winding_geometric(zoo::weierstrass_phase(0.6, 10, 1.0, 1, 7, 4096)) == 1);
    CHECK(winding_geometric(zoo::weierstrass_phase(0.25, 12, 1.0, 2, 7, 1 << 14)) == 2);
  }
  SUBCASE("deterministic under the seed") {
    const auto a = zoo::weierstrass_phase(0.5, 8, 1.0, 1, 9, 1024);
    const auto b = zoo::weierstrass_phase(0.5, 8, 1.0, 1, 9, 1024);
    for (std::size_t j = 0; j < 1024; ++j) CHECK(a.sample(j) == b.sample(j));
    const auto c = zoo::weierstrass_phase(0.5, 8, 1.0, 1, 10, 1024);
    bool any_different = false;
    for (std::size_t j = 0; j < 1024; ++j) any_different = any_different || a.sample(j) != c.sample(j);
    CHECK(any_different);
  }
  SUBCASE("aliasing guard on the top scale") {
    try {
      (void)zoo::weierstrass_phase(0.5, 8, 1.0, 1, 1, 256);  // 2^8 = 256 >= N/2
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::aliasing);
    }
  }
}

TEST_CASE("every generator output is unimodular to 1e-8") {
  std::vector<CircleSignal> fixtures;
  fixtures.push_back(zoo::monomial(5, 256));
  fixtures.push_back(zoo::blaschke(std::vector<std::complex<double>>{{0.5, 0.2}, {-0.1, -0.6}}, 256));
  fixtures.push_back(zoo::piecewise_linear_phase(std::vector<zoo::PhaseKnot>{{0.0, 1.0}, {2.0, 0.0}}, 2, 256));
  fixtures.push_back(zoo::weierstrass_phase(0.4, 6, 1.0, 1, 3, 256));
  for (const auto& f : fixtures) {
    CHECK(f.unimodular_defect() <= 1e-8);
    CHECK(f.is_unimodular());
  }
}

TEST_CASE("phase scramble") {
  const auto spectrum = analyze(zoo::blaschke(std::vector<std::complex<double>>{{0.5, 0.0}}, 512), 64);

  SUBCASE("keeps every modulus, scrambles phases deterministically") {
    const auto scrambled = zoo::phase_scramble(spectrum, 7);
    const auto again = zoo::phase_scramble(spectrum, 7);
    for (long n = -64; n <= 64; ++n) {
      CHECK(std::abs(scrambled.coeff(n)) == doctest::Approx(std::abs(spectrum.coeff(n))).epsilon(1e-13));
      CHECK(scrambled.coeff(n) == again.coeff(n));
    }
  }
  SUBCASE("identity phases reproduce the input") {
    std::vector<double> phases;
    for (long n = -64; n <= 64; ++n) phases.push_back(std::arg(spectrum.coeff(n)));
    const auto same = zoo::with_phases(spectrum, phases);
    for (long n = -64; n <= 64; ++n) CHECK(std::abs(same.coeff(n) - spectrum.coeff(n)) < 1e-15);
  }
  SUBCASE("a lone harmonic stays unimodular under scrambling") {
    const auto s1 = analyze(zoo::monomial(1, 64), 8);
    const auto scrambled = zoo::phase_scramble(s1, 3);
    const auto g = synthesize(scrambled, 64);
    CHECK(g.unimodular_defect() < 1e-10);
  }
  SUBCASE("a rich spectrum generally leaves the circle; the deviation is measurable") {
    const auto scrambled = zoo::phase_scramble(spectrum, 11);
    const auto g = synthesize(scrambled, 512);
    CHECK(g.unimodular_defect() > 1e-3);
  }
}

TEST_CASE("inline generator specs") {
  SUBCASE("monomial") {
    const auto f = zoo::from_spec("monomial:d=3,n=256");
    CHECK(winding_geometric(f) == 3);
    CHECK(f.size() == 256);
  }
  SUBCASE("blaschke with a complex zero list and semicolon separator") {
    const auto f = zoo::from_spec("blaschke:zeros=0.3,-0.4+0.2i,0.1-0.5i;n=512");
    CHECK(winding_geometric(f) == 3);
  }
  SUBCASE("pwlinear") {
    const auto f = zoo::from_spec("pwlinear:knots=0:0|3:1.5;d=2;n=512");
    CHECK(winding_geometric(f) == 2);
  }
  SUBCASE("weierstrass defaults") {
    const auto f = zoo::from_spec("weierstrass:alpha=0.6,scales=8,seed=7,n=1024");
    CHECK(winding_geometric(f) == 1);
  }
  SUBCASE("rejects unknown families and keys") {
    CHECK_THROWS_AS((void)zoo::from_spec("chebyshev:d=1"), error);
    CHECK_THROWS_AS((void)zoo::from_spec("monomial:q=1"), error);
    CHECK_THROWS_AS((void)zoo::from_spec("monomial:d=zzz"), error);
    CHECK_THROWS_AS((void)zoo::from_spec("blaschke:zeros=0.3+0.2"), error);
  }
}

TEST_CASE("complex list parsing") {
  const auto zs = zoo::parse_complex_list("0.3,-0.4+0.2i,0.1-0.5i,i,-i,2i,1e-2");
  REQUIRE(zs.size() == 7);
  CHECK(zs[0] == std::complex<double>(0.3, 0.0));
  CHECK(zs[1] == std::complex<double>(-0.4, 0.2));
  CHECK(zs[2] == std::complex<double>(0.1, -0.5));
  CHECK(zs[3] == std::complex<double>(0.0, 1.0));
  CHECK(zs[4] == std::complex<double>(0.0, -1.0));
  CHECK(zs[5] == std::complex<double>(0.0, 2.0));
  CHECK(zs[6] == std::complex<double>(1e-2, 0.0));
}
