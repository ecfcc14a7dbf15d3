#include "core/degree.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/numfmt.hpp"

namespace winding {

namespace {

constexpr double kStepMargin = 0.1;  // rad, guards against aliased winding
constexpr double kIntegerSlack = 1e-6;

}  // namespace

long winding_geometric(const CircleSignal& signal) {
  if (!signal.is_unimodular())
    fail(errc::not_unimodular, "signal is not unimodular within tolerance " +
                                   format_double(signal.unimodular_tol()) +
                                   " (max | |f|-1 | = " + format_double(signal.unimodular_defect()) + ")");

  const auto f = signal.samples();
  const std::size_t n = f.size();
  const double bound = std::numbers::pi - kStepMargin;
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto next = f[(j + 1) % n];
    const double step = std::arg(next * std::conj(f[j]));
    if (!(std::abs(step) < bound))
      fail(errc::undersampled, "angular step " + format_double(step) + " rad at sample " + std::to_string(j) +
                                   " reaches pi - 0.1; increase the sample count N");
    total += step;
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const long rounded = std::lround(turns);
  if (std::abs(turns - static_cast<double>(rounded)) > kIntegerSlack)
    fail(errc::undersampled, "argument lift " + format_double(turns) +
                                 " is not within 1e-6 of an integer; sampling too coarse for this signal");
  return rounded;
}

DegreeReport degree_fourier(const FourierSpectrum& spectrum, const SummationMethod& method,
                            const LimitProtocol& protocol) {
  const auto u = energy_sequence(spectrum);
  if (u.empty()) fail(errc::invalid_argument, "spectrum has no positive-frequency band (M = 0)");

  auto lr = extract_limit([&u, &method](double p) { return evaluate_method(u, method, p); }, protocol);

  DegreeReport report;
  report.method = method;
  report.estimate = lr.estimate;
  report.rounded = std::lround(lr.estimate);
  report.residual = std::abs(lr.estimate - static_cast<double>(report.rounded));
  report.protocol_tolerance = protocol.tolerance;
  // A plateau far from any integer is still a divergent degree.
  report.converged = lr.converged && report.residual <= protocol.tolerance;
  report.trace = std::move(lr.trace);
  if (method.kind == MethodKind::riemann)
    report.riemann_weight_sum = riemann_weight_sum(u, static_cast<int>(method.order));
  return report;
}

DegreeReport degree_fourier(const FourierSpectrum& spectrum, const SummationMethod& method) {
  return degree_fourier(spectrum, method, LimitProtocol::defaults_for(method, spectrum.bandwidth()));
}

OracleComparison oracle_compare(const CircleSignal& signal, const std::vector<SummationMethod>& methods,
                                std::size_t bandwidth) {
  OracleComparison cmp;
  cmp.oracle = winding_geometric(signal);
  const std::size_t m = bandwidth == 0 ? signal.size() / 4 : bandwidth;
  const auto spectrum = analyze(signal, m);
  cmp.rows.reserve(methods.size());
  for (const auto& method : methods) {
    const auto report = degree_fourier(spectrum, method);
    cmp.rows.push_back({method, report.estimate, report.converged,
                        std::abs(report.estimate - static_cast<double>(cmp.oracle))});
  }
  return cmp;
}

}  // namespace winding
