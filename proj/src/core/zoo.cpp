#include "core/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "core/error.hpp"
#include "core/numfmt.hpp"

namespace winding::zoo {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_generator_output(const CircleSignal& signal, const char* family) {
  if (signal.unimodular_defect() > CircleSignal::kGeneratorTol)
    fail(errc::internal, std::string(family) + " generator produced a non-unimodular signal (defect " +
                             format_double(signal.unimodular_defect()) + ")");
}

double unit_double(std::mt19937_64& rng) {
  // 53 explicit bits; identical across platforms, unlike the distribution adapters.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CircleSignal monomial(long d, std::size_t sample_count) {
  if (2 * static_cast<std::size_t>(std::llabs(d)) >= sample_count)
    fail(errc::aliasing, "monomial degree d=" + std::to_string(d) + " aliases at N=" + std::to_string(sample_count) +
                             " (need |d| < N/2)");
  std::vector<std::complex<double>> samples(sample_count);
  for (std::size_t j = 0; j < sample_count; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(sample_count);
    samples[j] = std::polar(1.0, static_cast<double>(d) * t);
  }
  CircleSignal s(std::move(samples));
  check_generator_output(s, "monomial");
  return s;
}

CircleSignal blaschke(std::span<const std::complex<double>> zeros, std::size_t sample_count) {
  for (const auto& z : zeros) {
    if (std::abs(z) > 0.95)
      fail(errc::zero_near_boundary, "blaschke zero at |z|=" + format_double(std::abs(z)) +
                                         " is too close to the boundary (require |z| <= 0.95)");
  }
  std::vector<std::complex<double>> samples(sample_count);
  for (std::size_t j = 0; j < sample_count; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(sample_count);
    const std::complex<double> z = std::polar(1.0, t);
    std::complex<double> b{1.0, 0.0};
    for (const auto& zero : zeros) b *= (z - zero) / (1.0 - std::conj(zero) * z);
    samples[j] = b;
  }
  CircleSignal s(std::move(samples));
  check_generator_output(s, "blaschke");
  return s;
}

CircleSignal piecewise_linear_phase(std::span<const PhaseKnot> knots, long d, std::size_t sample_count) {
  if (knots.empty()) fail(errc::invalid_argument, "piecewise-linear phase needs at least one knot");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i].angle >= 0.0 && knots[i].angle < two_pi))
      fail(errc::invalid_argument, "knot angle " + format_double(knots[i].angle) + " outside [0, 2*pi)");
    if (i > 0 && !(knots[i].angle > knots[i - 1].angle))
      fail(errc::invalid_argument,
           "discontinuous phase specification: knot angles must be strictly increasing");
  }

  // Closing segment runs from the last knot to the first knot shifted by a
  // full turn, with phase lifted by 2*pi*d.
  std::vector<double> angles(knots.size() + 1);
  std::vector<double> phases(knots.size() + 1);
  for (std::size_t i = 0; i < knots.size(); ++i) {
    angles[i] = knots[i].angle;
    phases[i] = knots[i].phase;
  }
  angles.back() = knots.front().angle + two_pi;
  phases.back() = knots.front().phase + two_pi * static_cast<double>(d);

  std::vector<std::complex<double>> samples(sample_count);
  for (std::size_t j = 0; j < sample_count; ++j) {
    double t = two_pi * static_cast<double>(j) / static_cast<double>(sample_count);
    if (t < angles.front()) t += two_pi;
    const auto it = std::upper_bound(angles.begin(), angles.end(), t);
    const std::size_t seg = static_cast<std::size_t>(it - angles.begin());
    const std::size_t lo = seg == 0 ? 0 : seg - 1;
    const std::size_t hi = std::min(lo + 1, angles.size() - 1);
    const double span = angles[hi] - angles[lo];
    const double frac = span > 0.0 ? (t - angles[lo]) / span : 0.0;
    const double phi = phases[lo] + frac * (phases[hi] - phases[lo]);
    samples[j] = std::polar(1.0, phi);
  }
  CircleSignal s(std::move(samples));
  check_generator_output(s, "pwlinear");
  return s;
}

CircleSignal weierstrass_phase(double alpha, int scales, double lambda, long d, std::uint64_t seed,
                               std::size_t sample_count) {
  if (!(alpha > 0.0)) fail(errc::invalid_argument, "hoelder order alpha must be positive");
  if (scales < 0 || scales >= 62) fail(errc::invalid_argument, "scale count must lie in [0, 61]");
  const std::uint64_t top = scales == 0 ? 0 : (std::uint64_t{1} << scales);
  if (2 * top >= sample_count)
    fail(errc::aliasing, "top scale 2^" + std::to_string(scales) + " aliases at N=" + std::to_string(sample_count) +
                             " (need 2^scales < N/2)");

  std::mt19937_64 rng(seed);
  std::vector<double> offsets(static_cast<std::size_t>(scales));
  for (auto& phi : offsets) phi = two_pi * unit_double(rng);

  std::vector<std::complex<double>> samples(sample_count);
  for (std::size_t j = 0; j < sample_count; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(sample_count);
    double phi = static_cast<double>(d) * t;
    for (int k = 1; k <= scales; ++k) {
      const double freq = std::ldexp(1.0, k);
      phi += lambda * std::pow(2.0, -alpha * k) * std::cos(freq * t + offsets[static_cast<std::size_t>(k - 1)]);
    }
    samples[j] = std::polar(1.0, phi);
  }
  CircleSignal s(std::move(samples));
  check_generator_output(s, "weierstrass");
  return s;
}

FourierSpectrum with_phases(const FourierSpectrum& spectrum, std::span<const double> phases) {
  const auto coeffs = spectrum.coefficients();
  if (phases.size() != coeffs.size())
    fail(errc::invalid_argument, "phase count " + std::to_string(phases.size()) + " does not match band size " +
                                     std::to_string(coeffs.size()));
  std::vector<std::complex<double>> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = std::polar(std::abs(coeffs[i]), phases[i]);
  return FourierSpectrum(std::move(out));
}

FourierSpectrum phase_scramble(const FourierSpectrum& spectrum, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> phases(spectrum.coefficients().size());
  for (auto& p : phases) p = two_pi * unit_double(rng);
  return with_phases(spectrum, phases);
}

std::vector<std::pair<std::string, std::string>> parse_spec_pairs(std::string_view body) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t stop = body.find_first_of(";,", start);
    if (stop == std::string_view::npos) stop = body.size();
    const std::string_view item = body.substr(start, stop - start);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        // continuation of the previous value (complex lists contain commas)
        if (pairs.empty()) fail(errc::parse, "spec fragment '" + std::string(item) + "' has no key");
        pairs.back().second += ",";
        pairs.back().second += std::string(item);
      } else {
        pairs.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
      }
    }
    if (stop == body.size()) break;
    start = stop + 1;
  }
  return pairs;
}

namespace {

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) fail(errc::parse, "empty complex literal");
  // Split on the last top-level sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') split = i;
  }
  auto parse_part = [&](std::string_view part, bool imaginary) {
    if (imaginary) {
      if (part.empty() || (part.back() != 'i' && part.back() != 'I'))
        fail(errc::parse, "complex literal '" + std::string(text) + "': imaginary part must end in 'i'");
      part.remove_suffix(1);
      if (part.empty() || part == "+") return 1.0;
      if (part == "-") return -1.0;
    }
    return parse_double(part, "complex literal '" + std::string(text) + "'");
  };
  const bool ends_i = text.back() == 'i' || text.back() == 'I';
  if (split == std::string_view::npos) {
    if (ends_i) return {0.0, parse_part(text, true)};
    return {parse_part(text, false), 0.0};
  }
  if (!ends_i) fail(errc::parse, "complex literal '" + std::string(text) + "': expected '<re>+<im>i'");
  return {parse_part(text.substr(0, split), false), parse_part(text.substr(split), true)};
}

}  // namespace

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
  std::vector<std::complex<double>> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    const auto item = text.substr(start, stop - start);
    if (!item.empty()) out.push_back(parse_complex(item));
    start = stop + 1;
  }
  return out;
}

namespace {

std::vector<PhaseKnot> parse_knots(std::string_view text) {
  std::vector<PhaseKnot> knots;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find('|', start);
    if (stop == std::string_view::npos) stop = text.size();
    const auto item = text.substr(start, stop - start);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      fail(errc::parse, "knot '" + std::string(item) + "' must be angle:phase");
    knots.push_back({parse_double(item.substr(0, colon), "knot angle"),
                     parse_double(item.substr(colon + 1), "knot phase")});
    start = stop + 1;
  }
  return knots;
}

class SpecArgs {
 public:
  explicit SpecArgs(std::string_view body) : pairs_(parse_spec_pairs(body)) {}

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : pairs_) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  std::string require(const std::string& key, const char* family) const {
    const auto* v = find(key);
    if (v == nullptr) fail(errc::parse, std::string(family) + " spec is missing '" + key + "='");
    return *v;
  }

  double number(const std::string& key, double fallback) const {
    const auto* v = find(key);
    return v == nullptr ? fallback : parse_double(*v, "spec value " + key);
  }

  long integer(const std::string& key, long fallback) const {
    const auto* v = find(key);
    return v == nullptr ? fallback : static_cast<long>(parse_long(*v, "spec value " + key));
  }

  void allow_only(std::initializer_list<const char*> keys, const char* family) const {
    for (const auto& [k, v] : pairs_) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        fail(errc::parse, std::string(family) + " spec has unknown key '" + k + "'");
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
};

}  // namespace

CircleSignal from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string family(spec.substr(0, colon));
  const SpecArgs args(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1));

  if (family == "monomial") {
    args.allow_only({"d", "n"}, "monomial");
    return monomial(args.integer("d", 0), static_cast<std::size_t>(args.integer("n", 4096)));
  }
  if (family == "blaschke") {
    args.allow_only({"zeros", "n"}, "blaschke");
    const auto* zeros = args.find("zeros");
    const auto list = zeros == nullptr ? std::vector<std::complex<double>>{} : parse_complex_list(*zeros);
    return blaschke(list, static_cast<std::size_t>(args.integer("n", 4096)));
  }
  if (family == "pwlinear") {
    args.allow_only({"knots", "d", "n"}, "pwlinear");
    const auto knots = parse_knots(args.require("knots", "pwlinear"));
    return piecewise_linear_phase(knots, args.integer("d", 0), static_cast<std::size_t>(args.integer("n", 4096)));
  }
  if (family == "weierstrass") {
    args.allow_only({"alpha", "scales", "lambda", "d", "seed", "n"}, "weierstrass");
    return weierstrass_phase(args.number("alpha", 0.5), static_cast<int>(args.integer("scales", 10)),
                             args.number("lambda", 1.0), args.integer("d", 1),
                             static_cast<std::uint64_t>(args.integer("seed", 1)),
                             static_cast<std::size_t>(args.integer("n", 4096)));
  }
  fail(errc::parse, "unknown generator family '" + family +
                        "' (expected monomial, blaschke, pwlinear, weierstrass)");
}

}  // namespace winding::zoo
