#include "core/lab.hpp"

#include <cmath>
#include <mutex>
#include <utility>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/seminorms.hpp"
#include "core/zoo.hpp"

namespace winding::lab {

Ratio Ratio::of(double numerator, double denominator) {
  if (denominator > 0.0) return {Flag::finite, numerator / denominator};
  if (numerator > 0.0) return {Flag::infinite, 0.0};
  return {Flag::undefined, 0.0};
}

const char* Ratio::flag_name() const {
  switch (flag) {
    case Flag::finite:
      return "ok";
    case Flag::infinite:
      return "infinite";
    case Flag::undefined:
      return "undefined";
  }
  return "undefined";
}

Q5Report q5_report(const FourierSpectrum& spectrum, std::optional<long> oracle_degree) {
  constexpr double slack = 1e-6;
  const long m = static_cast<long>(spectrum.bandwidth());

  Q5Report report;
  report.lhs = h_half_coefficient(spectrum);

  double negative_energy = 0.0;
  double signed_sum = 0.0;
  for (long n = -m; n <= m; ++n) {
    const double e = std::norm(spectrum.coeff(n));
    signed_sum += static_cast<double>(n) * e;
    if (n >= 1) report.positive_energy += static_cast<double>(n) * e;
    if (n <= -1) negative_energy += static_cast<double>(-n) * e;
  }
  report.identity_residual = std::abs((report.lhs - signed_sum) - 2.0 * negative_energy);

  const auto abel = degree_fourier(spectrum, SummationMethod::abel());
  report.degree_estimate = abel.estimate;
  report.degree_converged = abel.converged;
  if (abel.converged || !oracle_degree.has_value()) {
    report.degree_used = abel.rounded;
    report.degree_source = "abel";
  } else {
    report.degree_used = *oracle_degree;
    report.degree_source = "oracle";
  }

  report.bound1 = static_cast<double>(std::labs(report.degree_used)) + 2.0 * report.positive_energy;
  report.bound2 = 32.0 * report.positive_energy;
  report.ratio1 = Ratio::of(report.lhs, report.bound1);
  report.ratio2 = Ratio::of(report.lhs, report.bound2);
  report.bound1_holds = report.lhs <= report.bound1 + slack;
  report.bound2_holds = report.lhs <= report.bound2 + slack;
  return report;
}

std::vector<SweepRow> s_sweep(const FourierSpectrum& spectrum, std::span<const double> s_values) {
  const long m = static_cast<long>(spectrum.bandwidth());
  std::vector<SweepRow> rows;
  rows.reserve(s_values.size());
  for (const double s : s_values) {
    if (!(s > 0.0)) fail(errc::invalid_argument, "sweep exponent s must be positive");
    SweepRow row;
    row.s = s;
    for (long n = -m; n <= m; ++n) {
      if (n == 0) continue;
      const double w = std::pow(std::abs(static_cast<double>(n)), 2.0 * s);
      const double e = std::norm(spectrum.coeff(n));
      row.full += w * e;
      if (n >= 1) row.positive += w * e;
    }
    row.ratio = Ratio::of(row.full, row.positive);
    rows.push_back(row);
  }
  return rows;
}

namespace {

struct GridKey {
  std::string key;
  std::vector<std::string> values;
};

// "alpha=0.5|0.6" -> {alpha, {0.5, 0.6}}
std::vector<GridKey> split_grid(std::string_view body) {
  std::vector<GridKey> grid;
  for (const auto& [key, value] : zoo::parse_spec_pairs(body)) {
    GridKey g{key, {}};
    std::size_t start = 0;
    const std::string_view v = value;
    while (start <= v.size()) {
      std::size_t stop = v.find('|', start);
      if (stop == std::string_view::npos) stop = v.size();
      g.values.emplace_back(v.substr(start, stop - start));
      if (stop == v.size()) break;
      start = stop + 1;
    }
    if (g.values.empty()) fail(errc::parse, "grid key '" + g.key + "' has no values");
    grid.push_back(std::move(g));
  }
  return grid;
}

}  // namespace

std::vector<TableRow> convergence_table(std::string_view family_grid_spec,
                                        const std::vector<SummationMethod>& methods) {
  const auto colon = family_grid_spec.find(':');
  const std::string family(family_grid_spec.substr(0, colon));
  const auto grid =
      split_grid(colon == std::string_view::npos ? std::string_view{} : family_grid_spec.substr(colon + 1));
  if (methods.empty()) fail(errc::invalid_argument, "convergence table needs at least one method");

  std::size_t points = 1;
  for (const auto& g : grid) points *= g.values.size();
  if (points == 0 || family.empty()) fail(errc::parse, "empty generator grid");

  // Expand the cartesian product in row-major order, rightmost key fastest.
  std::vector<std::string> specs(points);
  for (std::size_t p = 0; p < points; ++p) {
    std::size_t rem = p;
    std::vector<std::size_t> pick(grid.size(), 0);
    for (std::size_t g = grid.size(); g-- > 0;) {
      pick[g] = rem % grid[g].values.size();
      rem /= grid[g].values.size();
    }
    std::string spec = family + ":";
    for (std::size_t g = 0; g < grid.size(); ++g) {
      if (g > 0) spec += ";";
      spec += grid[g].key + "=" + grid[g].values[pick[g]];
    }
    specs[p] = std::move(spec);
  }

  std::vector<std::vector<TableRow>> blocks(points);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  parallel_for(points, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      try {
        const auto signal = zoo::from_spec(specs[p]);
        const auto cmp = oracle_compare(signal, methods);
        auto& rows = blocks[p];
        rows.reserve(methods.size());
        for (const auto& r : cmp.rows)
          rows.push_back({specs[p], cmp.oracle, r.method.str(), r.estimate, r.converged, r.abs_error});
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  });
  if (first_error) std::rethrow_exception(first_error);

  std::vector<TableRow> table;
  table.reserve(points * methods.size());
  for (auto& block : blocks)
    for (auto& row : block) table.push_back(std::move(row));
  return table;
}

}  // namespace winding::lab
