#include "core/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/numfmt.hpp"

namespace winding {

namespace {

void check_cesaro_order(double k) {
  if (!(k > -1.0) || !std::isfinite(k))
    fail(errc::invalid_argument, "cesaro order k=" + format_double(k) + " must satisfy k > -1");
}

void check_riemann_order(int k) {
  if (k < 1) fail(errc::invalid_argument, "riemann order k=" + std::to_string(k) + " must be a positive integer");
}

bool is_integer_order(double k) { return k == std::floor(k) && k >= 0.0 && k <= 64.0; }

}  // namespace

SummationMethod SummationMethod::partial() { return {MethodKind::partial, 0.0}; }

SummationMethod SummationMethod::cesaro(double k) {
  check_cesaro_order(k);
  return {MethodKind::cesaro, k};
}

SummationMethod SummationMethod::riemann(int k) {
  check_riemann_order(k);
  return {MethodKind::riemann, static_cast<double>(k)};
}

SummationMethod SummationMethod::abel() { return {MethodKind::abel, 0.0}; }

SummationMethod SummationMethod::parse(std::string_view text) {
  if (text == "partial") return partial();
  if (text == "abel") return abel();
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  if (name == "cesaro" || name == "riemann") {
    if (colon == std::string_view::npos || text.substr(colon + 1, 2) != "k=")
      fail(errc::parse, "method '" + std::string(text) + "' needs an order, e.g. '" + std::string(name) + ":k=1'");
    const std::string_view val = text.substr(colon + 3);
    const double k = parse_double(val, "method order");
    if (name == "cesaro") return cesaro(k);
    if (k != std::floor(k))
      fail(errc::invalid_argument, "riemann order must be an integer, got k=" + std::string(val));
    return riemann(static_cast<int>(k));
  }
  fail(errc::parse, "unknown summation method '" + std::string(text) +
                        "' (expected partial, cesaro:k=<r>, riemann:k=<int>, abel)");
}

std::string SummationMethod::str() const {
  switch (kind) {
    case MethodKind::partial:
      return "partial";
    case MethodKind::cesaro:
      return "cesaro:k=" + format_double(order);
    case MethodKind::riemann:
      return "riemann:k=" + format_double(order);
    case MethodKind::abel:
      return "abel";
  }
  fail(errc::internal, "unreachable method kind");
}

void LimitProtocol::validate() const {
  if (plateau_window < 3) fail(errc::invalid_argument, "plateau window must be at least 3");
  if (!(tolerance > 0.0)) fail(errc::invalid_argument, "protocol tolerance must be positive");
  if (schedule.size() < static_cast<std::size_t>(plateau_window) + 2)
    fail(errc::invalid_argument, "protocol schedule needs at least plateau_window + 2 = " +
                                     std::to_string(plateau_window + 2) + " points, got " +
                                     std::to_string(schedule.size()));
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    inc = inc && schedule[i] > schedule[i - 1];
    dec = dec && schedule[i] < schedule[i - 1];
  }
  if (!inc && !dec) fail(errc::invalid_argument, "protocol schedule must be strictly monotone");
}

namespace {

struct ProtocolSpec {
  int depth = 0;  // 0 keeps the per-kind default
  int window = 4;
  double tol = 1e-4;
};

LimitProtocol build_protocol(const SummationMethod& method, std::size_t len, const ProtocolSpec& spec) {
  LimitProtocol p;
  p.plateau_window = spec.window;
  p.tolerance = spec.tol;
  switch (method.kind) {
    case MethodKind::partial: {
      if (len < 5)
        fail(errc::invalid_argument,
             "sequence length " + std::to_string(len) + " is too short for a partial-sum schedule (need >= 5)");
      std::size_t cap = len;
      if (spec.depth > 0 && spec.depth < 63) cap = std::min<std::size_t>(cap, std::size_t{1} << spec.depth);
      if (cap <= 64) {
        for (std::size_t n = 1; n <= cap; ++n) p.schedule.push_back(static_cast<double>(n));
      } else {
        // both parities at every scale, so period-2 oscillation of the
        // partial sums cannot masquerade as a plateau
        for (std::size_t n = 4; n < cap; n *= 2) {
          p.schedule.push_back(static_cast<double>(n));
          if (n + 1 < cap) p.schedule.push_back(static_cast<double>(n + 1));
        }
        p.schedule.push_back(static_cast<double>(cap));
      }
      if (p.schedule.size() < static_cast<std::size_t>(p.plateau_window) + 2) p.plateau_window = 3;
      break;
    }
    case MethodKind::cesaro: {
      const int top = spec.depth > 0 ? spec.depth : 32;
      for (int i = 2; i <= top; ++i) {
        p.schedule.push_back(std::ldexp(1.0, i));
        // odd companion point; beyond 2^52 the +1 is absorbed by rounding
        if (i <= 52) p.schedule.push_back(std::ldexp(1.0, i) + 1.0);
      }
      break;
    }
    case MethodKind::riemann: {
      const int top = spec.depth > 0 ? spec.depth : 20;
      for (int i = 1; i <= top; ++i) p.schedule.push_back(std::ldexp(1.0, -i));
      break;
    }
    case MethodKind::abel: {
      const int top = spec.depth > 0 ? spec.depth : 32;
      for (int i = 1; i <= top; ++i) p.schedule.push_back(1.0 - std::ldexp(1.0, -i));
      break;
    }
  }
  p.validate();
  return p;
}

}  // namespace

LimitProtocol LimitProtocol::defaults_for(const SummationMethod& method, std::size_t sequence_len) {
  return build_protocol(method, sequence_len, ProtocolSpec{});
}

LimitProtocol LimitProtocol::parse(const SummationMethod& method, std::size_t sequence_len,
                                   std::string_view overrides) {
  ProtocolSpec spec;
  std::string_view rest = overrides;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail(errc::parse, "protocol item '" + std::string(item) + "' is not key=value");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    if (key == "depth") {
      spec.depth = static_cast<int>(parse_long(val, "protocol depth"));
      if (spec.depth < 1 || spec.depth > 60) fail(errc::invalid_argument, "protocol depth must be in [1, 60]");
    } else if (key == "window") {
      spec.window = static_cast<int>(parse_long(val, "protocol window"));
    } else if (key == "tol") {
      spec.tol = parse_double(val, "protocol tolerance");
    } else {
      fail(errc::parse, "unknown protocol key '" + std::string(key) + "' (expected depth, window, tol)");
    }
  }
  return build_protocol(method, sequence_len, spec);
}

double sum_partial(std::span<const double> u, std::size_t n) {
  if (n > u.size())
    fail(errc::invalid_argument, "partial-sum cutoff n=" + std::to_string(n) + " exceeds sequence length " +
                                     std::to_string(u.size()));
  double s = 0.0;
  for (std::size_t m = 0; m < n; ++m) s += u[m];
  return s;
}

double sum_cesaro(std::span<const double> u, double k, std::uint64_t n) {
  check_cesaro_order(k);
  const std::size_t top = static_cast<std::size_t>(std::min<std::uint64_t>(n, u.size()));
  if (k == 0.0) {
    double s = 0.0;
    for (std::size_t m = 0; m < top; ++m) s += u[m];
    return s;
  }
  const double nd = static_cast<double>(n);
  double s = 0.0;
  if (is_integer_order(k)) {
    const int ki = static_cast<int>(k);
    for (std::size_t m = 1; m <= top; ++m) {
      // binom(n+k-m, k) / binom(n+k, k) as an exact k-term product
      double w = 1.0;
      const double md = static_cast<double>(m);
      for (int j = 0; j < ki; ++j) w *= (nd + k - md - j) / (nd + k - j);
      s += w * u[m - 1];
    }
  } else {
    const double log_denom = std::lgamma(nd + k + 1.0) - std::lgamma(nd + 1.0);
    for (std::size_t m = 1; m <= top; ++m) {
      const double md = static_cast<double>(m);
      const double log_num = std::lgamma(nd + k - md + 1.0) - std::lgamma(nd - md + 1.0);
      s += std::exp(log_num - log_denom) * u[m - 1];
    }
  }
  return s;
}

double sum_riemann(std::span<const double> u, int k, double t) {
  check_riemann_order(k);
  if (!(t > 0.0)) fail(errc::invalid_argument, "riemann parameter t=" + format_double(t) + " must be positive");
  double s = 0.0;
  for (std::size_t m = 1; m <= u.size(); ++m) {
    const double x = static_cast<double>(m) * t;
    const double f = x == 0.0 ? 1.0 : std::sin(x) / x;
    double w = 1.0;
    for (int j = 0; j < k; ++j) w *= f;
    s += w * u[m - 1];
  }
  return s;
}

double riemann_weight_sum(std::span<const double> u, int k) {
  check_riemann_order(k);
  double s = 0.0;
  for (std::size_t m = 1; m <= u.size(); ++m) s += std::abs(u[m - 1]) * std::pow(static_cast<double>(m), -k);
  return s;
}

double sum_abel(std::span<const double> u, double r) {
  if (!(r > 0.0 && r < 1.0))
    fail(errc::invalid_argument, "abel radius r=" + format_double(r) + " must lie in (0, 1)");
  double s = 0.0;
  double rp = 1.0;
  for (std::size_t m = 0; m < u.size(); ++m) {
    rp *= r;
    s += rp * u[m];
  }
  return s;
}

double riemann_sin_form(const FourierSpectrum& spectrum, double t) {
  if (!(t > 0.0)) fail(errc::invalid_argument, "sin-form parameter t=" + format_double(t) + " must be positive");
  const long m = static_cast<long>(spectrum.bandwidth());
  double s = 0.0;
  for (long n = -m; n <= m; ++n) {
    s += std::norm(spectrum.coeff(n)) * std::sin(static_cast<double>(n) * t) / t;
  }
  return s;
}

double evaluate_method(std::span<const double> u, const SummationMethod& method, double parameter) {
  switch (method.kind) {
    case MethodKind::partial:
      return sum_partial(u, static_cast<std::size_t>(std::llround(parameter)));
    case MethodKind::cesaro:
      if (!(parameter >= 1.0)) fail(errc::invalid_argument, "cesaro cutoff must be at least 1");
      return sum_cesaro(u, method.order, static_cast<std::uint64_t>(std::llround(parameter)));
    case MethodKind::riemann:
      return sum_riemann(u, static_cast<int>(method.order), parameter);
    case MethodKind::abel:
      return sum_abel(u, parameter);
  }
  fail(errc::internal, "unreachable method kind");
}

LimitResult extract_limit(const std::function<double(double)>& evaluator, const LimitProtocol& protocol) {
  protocol.validate();
  LimitResult result;
  result.trace.reserve(protocol.schedule.size());
  for (const double p : protocol.schedule) {
    double v = 0.0;
    try {
      v = evaluator(p);
    } catch (const error& e) {
      fail(e.code(), std::string("evaluator failed at parameter ") + format_double(p) + ": " + e.what());
    }
    result.trace.emplace_back(p, v);
  }
  const std::size_t w = static_cast<std::size_t>(protocol.plateau_window);
  const std::size_t n = result.trace.size();
  bool plateau = true;
  for (std::size_t i = n - w; i < n && plateau; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(result.trace[i].second - result.trace[j].second) > protocol.tolerance) {
        plateau = false;
        break;
      }
    }
  }
  result.converged = plateau;
  result.estimate = result.trace.back().second;
  return result;
}

}  // namespace winding
