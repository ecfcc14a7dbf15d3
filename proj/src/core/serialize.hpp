#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/degree.hpp"
#include "core/lab.hpp"
#include "core/signal.hpp"
#include "core/spectrum.hpp"

namespace winding {

// CSV, UTF-8, LF line endings, shortest round-trip numbers throughout.

/// Header "j,t,re,im", rows j = 0..N-1 with t = 2*pi*j/N.
std::string signal_to_csv(const CircleSignal& signal);
CircleSignal signal_from_csv(std::string_view text, double unimodular_tol);

/// Header "n,re,im", rows n = -M..M.
std::string spectrum_to_csv(const FourierSpectrum& spectrum);
FourierSpectrum spectrum_from_csv(std::string_view text);

/// Header "m,u", rows m = 1..L.
std::string sequence_to_csv(std::span<const double> u);
std::vector<double> sequence_from_csv(std::string_view text);

/// Header "param,value".
std::string trace_to_csv(std::span<const std::pair<double, double>> trace);

std::string sweep_to_csv(std::span<const lab::SweepRow> rows);
std::string table_to_csv(std::span<const lab::TableRow> rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// JSON documents (serialized text; key order and formatting are stable).

std::string degree_report_to_json(const DegreeReport& report);

/// {"oracle": ..., "reports": [...], "comparison": [...]}
std::string degree_output_to_json(std::optional<long> oracle, std::span<const DegreeReport> reports);

std::string seminorm_to_json(const std::string& gauge,
                             std::span<const std::pair<std::string, double>> parameters, double value);

std::string q5_to_json(const lab::Q5Report& report);

/// {"method": ..., "estimate": ..., "converged": ..., "trace": [...]}
std::string limit_to_json(const std::string& method, const LimitResult& result);

/// {"method": ..., "param": ..., "value": ...}
std::string value_to_json(const std::string& method, double param, double value);

}  // namespace winding
