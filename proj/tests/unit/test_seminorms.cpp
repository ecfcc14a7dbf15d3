#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "core/error.hpp"
#include "core/seminorms.hpp"
#include "core/spectrum.hpp"
#include "core/zoo.hpp"
#include "support/oracles.hpp"

using namespace winding;
using oracles::two_pi;

TEST_CASE("coefficient-form H^{1/2} gauge") {
  CHECK(h_half_coefficient(analyze(zoo::monomial(4, 256), 64)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(h_half_coefficient(analyze(zoo::monomial(-2, 1024), 256)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(h_half_coefficient(analyze(zoo::monomial(0, 256), 64)) == doctest::Approx(0.0));
  // Blaschke factor a=1/2: sum n (1-a^2)^2 a^{2(n-1)} = 1 (geometric series).
  const auto spectrum = analyze(zoo::blaschke(std::vector<std::complex<double>>{{0.5, 0.0}}, 2048), 64);
  CHECK(h_half_coefficient(spectrum) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("h_half splits into positive and negative energy exactly") {
  const auto spectrum = analyze(oracles::random_phase_signal(51, 512, 2), 128);
  const long m = static_cast<long>(spectrum.bandwidth());
  double lhs = h_half_coefficient(spectrum);
  double split = 0.0;
  for (long n = 1; n <= m; ++n)
    split += static_cast<double>(n) * (std::norm(spectrum.coeff(n)) + std::norm(spectrum.coeff(-n)));
  CHECK(lhs == doctest::Approx(split).epsilon(1e-13));
}

TEST_CASE("gagliardo double sum matches the literal brute-force oracle") {
  const auto f = oracles::random_phase_signal(52, 128, 1);
  for (const auto& [s, p] : std::vector<std::pair<double, double>>{{0.5, 2.0}, {0.3, 2.5}, {0.7, 1.5}}) {
    const double fast = gagliardo(f, s, p);
    const double brute = oracles::brute_gagliardo(f, s, p);
    CHECK(fast == doctest::Approx(brute).epsilon(1e-10));
  }
}

TEST_CASE("Fejer identity: gagliardo(1/2, 2) matches the coefficient form") {
  SUBCASE("e^{it} evaluates to 1 - 1/N") {
    const auto f = zoo::monomial(1, 1024);
    CHECK(gagliardo(f, 0.5, 2.0) == doctest::Approx(1.0 - 1.0 / 1024.0).epsilon(1e-12));
    CHECK(std::abs(gagliardo(f, 0.5, 2.0) - 1.0) < 0.02);
  }
  SUBCASE("e^{2it} sits within 2% of 2") {
    const auto f = zoo::monomial(2, 1024);
    CHECK(std::abs(gagliardo(f, 0.5, 2.0) - 2.0) / 2.0 < 0.02);
  }
  SUBCASE("Blaschke factor within 2% of its coefficient gauge") {
    const auto f = zoo::blaschke(std::vector<std::complex<double>>{{0.5, 0.0}}, 1024);
    const double g = gagliardo(f, 0.5, 2.0);
    const double h = h_half_coefficient(analyze(f, 256));
    CHECK(std::abs(g - h) / h < 0.02);
  }
}

TEST_CASE("gagliardo parameter validation") {
  const auto f = zoo::monomial(1, 64);
  CHECK_THROWS_AS((void)gagliardo(f, 0.0, 2.0), error);
  CHECK_THROWS_AS((void)gagliardo(f, 1.0, 2.0), error);
  CHECK_THROWS_AS((void)gagliardo(f, 0.5, 1.0), error);
}

TEST_CASE("vmo modulus") {
  SUBCASE("constants have zero oscillation at every arc length") {
    const auto f = zoo::monomial(0, 256);
    for (double arc : {0.1, 1.0, two_pi}) CHECK(vmo_modulus(f, arc) == 0.0);
  }
  SUBCASE("e^{it} obeys the Lipschitz bound: modulus <= arc length") {
    const auto f = zoo::monomial(1, 512);
    for (double arc : {two_pi / 4.0, two_pi / 16.0, two_pi / 64.0}) {
      const double v = vmo_modulus(f, arc);
      CHECK(v > 0.0);
      CHECK(v <= arc);
    }
  }
  SUBCASE("the +/-1 step stays above 0.4 as arcs shrink") {
    const auto f = oracles::step_signal(512);
    for (double arc : {two_pi, two_pi / 8.0, two_pi / 32.0}) CHECK(vmo_modulus(f, arc) >= 0.4);
  }
  SUBCASE("matches the brute-force ladder oracle on a rough signal") {
    const auto f = oracles::step_signal(64);
    for (double arc : {two_pi, two_pi / 4.0, two_pi / 16.0}) {
      const std::size_t cells = static_cast<std::size_t>(arc / (two_pi / 64.0) + 1e-9);
      CHECK(vmo_modulus(f, arc) == doctest::Approx(oracles::brute_vmo_ladder(f.samples(), cells)).epsilon(1e-10));
    }
    const auto g = oracles::random_phase_signal(53, 64, 1);
    CHECK(vmo_modulus(g, two_pi / 2.0) ==
          doctest::Approx(oracles::brute_vmo_ladder(g.samples(), 32)).epsilon(1e-10));
    // the power-of-two ladder tracks the all-lengths supremum closely here
    CHECK(oracles::brute_vmo_all_lengths(g.samples(), 32) - oracles::brute_vmo_ladder(g.samples(), 32) < 0.05);
  }
  SUBCASE("monotone nondecreasing in arc length") {
    for (std::uint64_t seed : {61u, 62u}) {
      const auto f = oracles::random_phase_signal(seed, 256, 1, 5, 1.4);
      double prev = 0.0;
      for (int i = 6; i >= 0; --i) {
        const double arc = two_pi / std::ldexp(1.0, i);
        const double v = vmo_modulus(f, arc);
        CHECK(v >= prev);
        prev = v;
      }
    }
  }
  SUBCASE("arc shorter than two cells is rejected") {
    const auto f = zoo::monomial(1, 64);
    try {
      (void)vmo_modulus(f, two_pi / 64.0);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::arc_too_short);
    }
    CHECK_THROWS_AS((void)vmo_modulus(f, 0.0), error);
    CHECK_THROWS_AS((void)vmo_modulus(f, 7.0), error);
  }
}

TEST_CASE("lambda gauge traces") {
  SUBCASE("e^{it} at p=2, alpha=1: closed form 8 pi sin^2(t/2) / t") {
    const auto f = zoo::monomial(1, 1024);
    const auto ladder = default_shift_ladder(f.size());
    const auto trace = lambda_test(f, 1.0, 2.0, ladder);
    for (const auto& [t, ratio] : trace) {
      const double expected = 8.0 * std::numbers::pi * std::sin(t / 2.0) * std::sin(t / 2.0) / t;
      CHECK(ratio == doctest::Approx(expected).epsilon(1e-10));
    }
    // ratio decays like t
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i].second < trace[i - 1].second);
  }
  SUBCASE("constants have identically zero ratio") {
    const auto f = zoo::monomial(0, 256);
    const auto trace = lambda_test(f, 0.5, 3.0, default_shift_ladder(f.size()));
    for (const auto& [t, ratio] : trace) CHECK(ratio == 0.0);
  }
  SUBCASE("smoother-than-gauge lacunary phase: decreasing ratio trace") {
    const auto f = zoo::weierstrass_phase(0.6, 8, 1.0, 0, 3, 2048);
    const auto trace = lambda_test(f, 0.3, 3.0, default_shift_ladder(f.size()));
    // the largest shift saturates the chord; the trend is asymptotic
    for (std::size_t i = 2; i < trace.size(); ++i) CHECK(trace[i].second < trace[i - 1].second);
    CHECK(trace.back().second < 0.01 * trace.front().second);
  }
  SUBCASE("off-grid shifts are rejected") {
    const auto f = zoo::monomial(1, 256);
    const std::vector<double> bad{0.1};
    try {
      (void)lambda_test_angles(f, 1.0, 2.0, bad);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::off_grid);
    }
    const std::vector<double> good{two_pi * 8.0 / 256.0};
    CHECK(lambda_test_angles(f, 1.0, 2.0, good).size() == 1);
  }
}

TEST_CASE("gauges are invariant under rotation, translation, conjugation") {
  const auto f = oracles::random_phase_signal(54, 256, 1);
  std::vector<std::complex<double>> rotated(f.size()), shifted(f.size()), conj_s(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    rotated[j] = std::polar(1.0, 0.9) * f.sample(j);
    shifted[j] = f.sample((j + 19) % f.size());
    conj_s[j] = std::conj(f.sample(j));
  }
  const std::vector<CircleSignal> variants{CircleSignal(std::move(rotated)), CircleSignal(std::move(shifted)),
                                           CircleSignal(std::move(conj_s))};

  const double g0 = gagliardo(f, 0.5, 2.0);
  const double v0 = vmo_modulus(f, 1.0);
  const double h0 = h_half_coefficient(analyze(f, 64));
  const auto l0 = lambda_test(f, 0.5, 2.0, default_shift_ladder(f.size()));
  for (const auto& variant : variants) {
    CHECK(gagliardo(variant, 0.5, 2.0) == doctest::Approx(g0).epsilon(1e-10));
    CHECK(vmo_modulus(variant, 1.0) == doctest::Approx(v0).epsilon(1e-10));
    CHECK(h_half_coefficient(analyze(variant, 64)) == doctest::Approx(h0).epsilon(1e-9));
    const auto lv = lambda_test(variant, 0.5, 2.0, default_shift_ladder(variant.size()));
    for (std::size_t i = 0; i < lv.size(); ++i)
      CHECK(lv[i].second == doctest::Approx(l0[i].second).epsilon(1e-10));
  }
}
