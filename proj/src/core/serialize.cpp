#include "core/serialize.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/numfmt.hpp"

namespace winding {

using ordered_json = nlohmann::ordered_json;

namespace {

struct CsvTable {
  std::vector<std::vector<std::string>> rows;  // header excluded
};

CsvTable parse_csv(std::string_view text, std::string_view expected_header, std::size_t columns) {
  CsvTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    const bool last = stop == std::string_view::npos;
    std::string_view line = text.substr(start, last ? text.size() - start : stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      ++line_no;
      if (line_no == 1) {
        if (line != expected_header)
          fail(errc::parse, "CSV header '" + std::string(line) + "' does not match expected '" +
                                std::string(expected_header) + "'");
      } else {
        std::vector<std::string> fields;
        std::size_t fs = 0;
        const std::string_view l = line;
        while (fs <= l.size()) {
          std::size_t fe = l.find(',', fs);
          if (fe == std::string_view::npos) fe = l.size();
          fields.emplace_back(l.substr(fs, fe - fs));
          if (fe == l.size()) break;
          fs = fe + 1;
        }
        if (fields.size() != columns)
          fail(errc::parse, "CSV line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                                " fields, expected " + std::to_string(columns));
        table.rows.push_back(std::move(fields));
      }
    }
    if (last) break;
    start = stop + 1;
  }
  if (line_no == 0) fail(errc::parse, "empty CSV input");
  return table;
}

}  // namespace

std::string signal_to_csv(const CircleSignal& signal) {
  std::string out = "j,t,re,im\n";
  for (std::size_t j = 0; j < signal.size(); ++j) {
    const auto v = signal.sample(j);
    out += std::to_string(j);
    out += ',';
    out += format_double(signal.angle(j));
    out += ',';
    out += format_double(v.real());
    out += ',';
    out += format_double(v.imag());
    out += '\n';
  }
  return out;
}

CircleSignal signal_from_csv(std::string_view text, double unimodular_tol) {
  const auto table = parse_csv(text, "j,t,re,im", 4);
  std::vector<std::complex<double>> samples;
  samples.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const long long j = parse_long(row[0], "signal CSV index");
    if (j != static_cast<long long>(i))
      fail(errc::parse, "signal CSV rows must run j = 0..N-1 in order; row " + std::to_string(i + 2) +
                            " has j=" + std::to_string(j));
    samples.emplace_back(parse_double(row[2], "signal CSV re"), parse_double(row[3], "signal CSV im"));
  }
  return CircleSignal(std::move(samples), unimodular_tol);
}

std::string spectrum_to_csv(const FourierSpectrum& spectrum) {
  std::string out = "n,re,im\n";
  const long m = static_cast<long>(spectrum.bandwidth());
  for (long n = -m; n <= m; ++n) {
    const auto a = spectrum.coeff(n);
    out += std::to_string(n);
    out += ',';
    out += format_double(a.real());
    out += ',';
    out += format_double(a.imag());
    out += '\n';
  }
  return out;
}

FourierSpectrum spectrum_from_csv(std::string_view text) {
  const auto table = parse_csv(text, "n,re,im", 3);
  if (table.rows.size() % 2 == 0) fail(errc::parse, "spectrum CSV must hold 2M+1 rows for n = -M..M");
  const long m = static_cast<long>(table.rows.size() / 2);
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const long long n = parse_long(row[0], "spectrum CSV index");
    if (n != static_cast<long long>(i) - m)
      fail(errc::parse, "spectrum CSV rows must run n = -M..M in order; row " + std::to_string(i + 2) +
                            " has n=" + std::to_string(n));
    coeffs.emplace_back(parse_double(row[1], "spectrum CSV re"), parse_double(row[2], "spectrum CSV im"));
  }
  return FourierSpectrum(std::move(coeffs));
}

std::string sequence_to_csv(std::span<const double> u) {
  std::string out = "m,u\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(u[i]);
    out += '\n';
  }
  return out;
}

std::vector<double> sequence_from_csv(std::string_view text) {
  const auto table = parse_csv(text, "m,u", 2);
  std::vector<double> u;
  u.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const long long m = parse_long(row[0], "sequence CSV index");
    if (m != static_cast<long long>(i) + 1)
      fail(errc::parse, "sequence CSV rows must run m = 1..L in order; row " + std::to_string(i + 2) +
                            " has m=" + std::to_string(m));
    u.push_back(parse_double(row[1], "sequence CSV value"));
  }
  return u;
}

std::string trace_to_csv(std::span<const std::pair<double, double>> trace) {
  std::string out = "param,value\n";
  for (const auto& [p, v] : trace) {
    out += format_double(p);
    out += ',';
    out += format_double(v);
    out += '\n';
  }
  return out;
}

std::string sweep_to_csv(std::span<const lab::SweepRow> rows) {
  std::string out = "s,full,positive,ratio,ratio_flag\n";
  for (const auto& row : rows) {
    out += format_double(row.s);
    out += ',';
    out += format_double(row.full);
    out += ',';
    out += format_double(row.positive);
    out += ',';
    if (row.ratio.flag == lab::Ratio::Flag::finite) out += format_double(row.ratio.value);
    out += ',';
    out += row.ratio.flag_name();
    out += '\n';
  }
  return out;
}

std::string table_to_csv(std::span<const lab::TableRow> rows) {
  std::string out = "spec,oracle,method,estimate,converged,abs_error\n";
  for (const auto& row : rows) {
    // specs contain commas; quote the field
    out += '"';
    out += row.spec;
    out += "\",";
    out += std::to_string(row.oracle);
    out += ',';
    out += row.method;
    out += ',';
    out += format_double(row.estimate);
    out += ',';
    out += row.converged ? "true" : "false";
    out += ',';
    out += format_double(row.abs_error);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) fail(errc::io, "short write to '" + path + "'");
}

namespace {

ordered_json report_json(const DegreeReport& report) {
  ordered_json j;
  j["estimate"] = report.estimate;
  j["rounded"] = report.rounded;
  j["method"] = report.method.str();
  j["converged"] = report.converged;
  j["residual"] = report.residual;
  ordered_json trace = ordered_json::array();
  for (const auto& [p, v] : report.trace) trace.push_back(ordered_json::array({p, v}));
  j["trace"] = std::move(trace);
  if (report.riemann_weight_sum.has_value()) j["riemann_weight_sum"] = *report.riemann_weight_sum;
  return j;
}

ordered_json ratio_json(const lab::Ratio& ratio) {
  ordered_json j;
  j["flag"] = ratio.flag_name();
  if (ratio.flag == lab::Ratio::Flag::finite) j["value"] = ratio.value;
  return j;
}

}  // namespace

std::string degree_report_to_json(const DegreeReport& report) { return report_json(report).dump(2); }

std::string degree_output_to_json(std::optional<long> oracle, std::span<const DegreeReport> reports) {
  ordered_json j;
  if (oracle.has_value())
    j["oracle"] = *oracle;
  else
    j["oracle"] = nullptr;
  ordered_json rs = ordered_json::array();
  ordered_json cmp = ordered_json::array();
  for (const auto& r : reports) {
    rs.push_back(report_json(r));
    ordered_json row;
    row["method"] = r.method.str();
    row["estimate"] = r.estimate;
    row["converged"] = r.converged;
    if (oracle.has_value())
      row["abs_error"] = std::abs(r.estimate - static_cast<double>(*oracle));
    else
      row["abs_error"] = nullptr;
    cmp.push_back(std::move(row));
  }
  j["reports"] = std::move(rs);
  j["comparison"] = std::move(cmp);
  return j.dump(2);
}

std::string seminorm_to_json(const std::string& gauge,
                             std::span<const std::pair<std::string, double>> parameters, double value) {
  ordered_json j;
  j["gauge"] = gauge;
  ordered_json params;
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["value"] = value;
  return j.dump(2);
}

std::string q5_to_json(const lab::Q5Report& report) {
  ordered_json j;
  j["lhs"] = report.lhs;
  j["positive_energy"] = report.positive_energy;
  ordered_json deg;
  deg["estimate"] = report.degree_estimate;
  deg["converged"] = report.degree_converged;
  deg["used"] = report.degree_used;
  deg["source"] = report.degree_source;
  j["degree"] = std::move(deg);
  j["bound1"] = report.bound1;
  j["bound2"] = report.bound2;
  j["ratio1"] = ratio_json(report.ratio1);
  j["ratio2"] = ratio_json(report.ratio2);
  j["bound1_holds"] = report.bound1_holds;
  j["bound2_holds"] = report.bound2_holds;
  j["identity_residual"] = report.identity_residual;
  return j.dump(2);
}

std::string limit_to_json(const std::string& method, const LimitResult& result) {
  ordered_json j;
  j["method"] = method;
  j["estimate"] = result.estimate;
  j["converged"] = result.converged;
  ordered_json trace = ordered_json::array();
  for (const auto& [p, v] : result.trace) trace.push_back(ordered_json::array({p, v}));
  j["trace"] = std::move(trace);
  return j.dump(2);
}

std::string value_to_json(const std::string& method, double param, double value) {
  ordered_json j;
  j["method"] = method;
  j["param"] = param;
  j["value"] = value;
  return j.dump(2);
}

}  // namespace winding
