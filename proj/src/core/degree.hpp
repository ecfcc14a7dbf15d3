#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/signal.hpp"
#include "core/spectrum.hpp"
#include "core/summation.hpp"

namespace winding {

/// Winding number by lifting the argument along the sample polygon, one
/// principal-branch step per edge. Requires the signal to be unimodular
/// within its declared tolerance and every angular step to stay below
/// pi - 0.1 rad; coarser sampling is rejected rather than guessed at.
long winding_geometric(const CircleSignal& signal);

struct DegreeReport {
  double estimate = 0.0;
  long rounded = 0;
  SummationMethod method;
  bool converged = false;            // plateau reached AND estimate within tolerance of rounded
  double residual = 0.0;             // |estimate - rounded|
  double protocol_tolerance = 0.0;
  std::vector<std::pair<double, double>> trace;
  std::optional<double> riemann_weight_sum;  // sum |u_m| m^-k, Riemann methods only
};

/// Applies the summation method to the energy sequence under the limit
/// protocol. Divergence is reported, never thrown.
DegreeReport degree_fourier(const FourierSpectrum& spectrum, const SummationMethod& method,
                            const LimitProtocol& protocol);
DegreeReport degree_fourier(const FourierSpectrum& spectrum, const SummationMethod& method);

struct OracleRow {
  SummationMethod method;
  double estimate = 0.0;
  bool converged = false;
  double abs_error = 0.0;  // |estimate - geometric degree|
};

struct OracleComparison {
  long oracle = 0;
  std::vector<OracleRow> rows;
};

/// Geometric degree computed once, then one spectral row per method at the
/// given bandwidth (0 selects the N/4 default).
OracleComparison oracle_compare(const CircleSignal& signal, const std::vector<SummationMethod>& methods,
                                std::size_t bandwidth = 0);

}  // namespace winding
