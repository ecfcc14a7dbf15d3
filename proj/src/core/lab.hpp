#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/degree.hpp"
#include "core/spectrum.hpp"
#include "core/summation.hpp"

namespace winding::lab {

/// A quotient that may fail to be finite; never encoded as a sentinel number.
struct Ratio {
  enum class Flag { finite, infinite, undefined } flag = Flag::undefined;
  double value = 0.0;  // meaningful only when finite

  static Ratio of(double numerator, double denominator);
  const char* flag_name() const;
};

/// Both sides of the coefficient-mass inequalities, measured on one spectrum.
/// bound2 (the constant-32 form) is recorded, not asserted: antiholomorphic
/// spectra violate it as printed.
struct Q5Report {
  double lhs = 0.0;              // sum |n| |a_n|^2
  double positive_energy = 0.0;  // sum_{n>=1} n |a_n|^2
  double degree_estimate = 0.0;  // Abel estimate on the energy sequence
  bool degree_converged = false;
  long degree_used = 0;  // rounded Abel estimate, or the oracle fallback
  std::string degree_source;  // "abel" or "oracle"
  double bound1 = 0.0;  // |deg| + 2 * positive_energy
  double bound2 = 0.0;  // 32 * positive_energy
  Ratio ratio1;
  Ratio ratio2;
  bool bound1_holds = false;  // lhs <= bound1 + 1e-6
  bool bound2_holds = false;  // lhs <= bound2 + 1e-6
  double identity_residual = 0.0;  // |(lhs - signed sum) - 2 * negative energy|
};

Q5Report q5_report(const FourierSpectrum& spectrum, std::optional<long> oracle_degree = std::nullopt);

struct SweepRow {
  double s = 0.0;
  double full = 0.0;      // sum |n|^{2s} |a_n|^2
  double positive = 0.0;  // sum_{n>=1} n^{2s} |a_n|^2
  Ratio ratio;
};

std::vector<SweepRow> s_sweep(const FourierSpectrum& spectrum, std::span<const double> s_values);

struct TableRow {
  std::string spec;  // fully expanded generator spec for this grid point
  long oracle = 0;
  std::string method;
  double estimate = 0.0;
  bool converged = false;
  double abs_error = 0.0;
};

/// Expands a generator spec whose values may be '|'-separated grids, e.g.
/// "weierstrass:alpha=0.5|0.6;d=1|2;seed=7;n=4096", and evaluates every
/// method on every grid point (bandwidth N/4). Row order follows the grid,
/// rightmost key fastest, methods innermost.
std::vector<TableRow> convergence_table(std::string_view family_grid_spec,
                                        const std::vector<SummationMethod>& methods);

}  // namespace winding::lab
