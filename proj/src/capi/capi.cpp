#include <winding/winding.h>

#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "core/degree.hpp"
#include "core/error.hpp"
#include "core/lab.hpp"
#include "core/parallel.hpp"
#include "core/seminorms.hpp"
#include "core/serialize.hpp"
#include "core/signal.hpp"
#include "core/spectrum.hpp"
#include "core/summation.hpp"
#include "core/zoo.hpp"

struct wn_signal {
  winding::CircleSignal v;
};
struct wn_spectrum {
  winding::FourierSpectrum v;
};
struct wn_sequence {
  std::vector<double> v;
};

namespace {

thread_local std::string t_last_error;

wn_status map_code(winding::errc c) {
  switch (c) {
    case winding::errc::invalid_argument:
      return WN_EINVAL;
    case winding::errc::parse:
      return WN_EPARSE;
    case winding::errc::io:
      return WN_EIO;
    case winding::errc::bandwidth:
      return WN_EBANDWIDTH;
    case winding::errc::undersampled:
      return WN_EUNDERSAMPLED;
    case winding::errc::not_unimodular:
      return WN_ENOTUNIMODULAR;
    case winding::errc::arc_too_short:
      return WN_EARC;
    case winding::errc::off_grid:
      return WN_EOFFGRID;
    case winding::errc::aliasing:
      return WN_EALIAS;
    case winding::errc::zero_near_boundary:
      return WN_EBOUNDARY;
    case winding::errc::internal:
      return WN_EINTERNAL;
  }
  return WN_EINTERNAL;
}

template <class F>
wn_status guarded(F&& body) noexcept {
  try {
    body();
    t_last_error.clear();
    return WN_OK;
  } catch (const winding::error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return WN_EINTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return WN_EINTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) winding::fail(winding::errc::invalid_argument, what);
}

char* copy_out(const std::string& s) {
  char* mem = new char[s.size() + 1];
  std::memcpy(mem, s.c_str(), s.size() + 1);
  return mem;
}

std::vector<winding::SummationMethod> parse_methods(const char* csv) {
  require(csv != nullptr && *csv != '\0', "methods list is null or empty");
  std::vector<winding::SummationMethod> methods;
  const std::string_view text(csv);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    const auto item = text.substr(start, stop - start);
    if (!item.empty()) methods.push_back(winding::SummationMethod::parse(item));
    if (stop == text.size()) break;
    start = stop + 1;
  }
  require(!methods.empty(), "methods list is empty");
  return methods;
}

winding::LimitProtocol protocol_for(const winding::SummationMethod& method, std::size_t len,
                                    const char* overrides) {
  if (overrides == nullptr || *overrides == '\0') return winding::LimitProtocol::defaults_for(method, len);
  return winding::LimitProtocol::parse(method, len, overrides);
}

}  // namespace

extern "C" {

int wn_status_is_precondition(wn_status status) {
  return status >= WN_EBANDWIDTH && status < WN_EINTERNAL ? 1 : 0;
}

const char* wn_version(void) { return "0.1.0"; }

const char* wn_last_error(void) { return t_last_error.c_str(); }

void wn_set_threads(int n) { winding::set_max_threads(n <= 0 ? 0u : static_cast<unsigned>(n)); }

void wn_string_free(char* s) { delete[] s; }

/* ---- signals ---- */

wn_status wn_signal_from_samples(const double* re, const double* im, size_t len, double unimodular_tol,
                                 wn_signal** out) {
  return guarded([&] {
    require(re != nullptr && out != nullptr, "null pointer argument");
    std::vector<std::complex<double>> samples(len);
    for (size_t j = 0; j < len; ++j) samples[j] = {re[j], im == nullptr ? 0.0 : im[j]};
    *out = new wn_signal{winding::CircleSignal(std::move(samples), unimodular_tol)};
  });
}

wn_status wn_signal_from_zoo(const char* spec, wn_signal** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_signal{winding::zoo::from_spec(spec)};
  });
}

wn_status wn_signal_read_csv(const char* path, double unimodular_tol, wn_signal** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_signal{winding::signal_from_csv(winding::read_file(path), unimodular_tol)};
  });
}

wn_status wn_signal_to_csv(const wn_signal* signal, char** out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null pointer argument");
    *out = copy_out(winding::signal_to_csv(signal->v));
  });
}

size_t wn_signal_len(const wn_signal* signal) { return signal == nullptr ? 0 : signal->v.size(); }

double wn_signal_unimodular_defect(const wn_signal* signal) {
  return signal == nullptr ? -1.0 : signal->v.unimodular_defect();
}

void wn_signal_free(wn_signal* signal) { delete signal; }

/* ---- spectra ---- */

wn_status wn_analyze(const wn_signal* signal, size_t bandwidth, wn_spectrum** out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_spectrum{winding::analyze(signal->v, bandwidth)};
  });
}

wn_status wn_synthesize(const wn_spectrum* spectrum, size_t sample_count, double unimodular_tol,
                        wn_signal** out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null pointer argument");
    auto s = winding::synthesize(spectrum->v, sample_count);
    std::vector<std::complex<double>> samples(s.samples().begin(), s.samples().end());
    *out = new wn_signal{winding::CircleSignal(std::move(samples), unimodular_tol)};
  });
}

wn_status wn_spectrum_read_csv(const char* path, wn_spectrum** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_spectrum{winding::spectrum_from_csv(winding::read_file(path))};
  });
}

wn_status wn_spectrum_to_csv(const wn_spectrum* spectrum, char** out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null pointer argument");
    *out = copy_out(winding::spectrum_to_csv(spectrum->v));
  });
}

size_t wn_spectrum_bandwidth(const wn_spectrum* spectrum) {
  return spectrum == nullptr ? 0 : spectrum->v.bandwidth();
}

wn_status wn_spectrum_coeff(const wn_spectrum* spectrum, long n, double* re, double* im) {
  return guarded([&] {
    require(spectrum != nullptr && re != nullptr && im != nullptr, "null pointer argument");
    const auto a = spectrum->v.coeff(n);
    *re = a.real();
    *im = a.imag();
  });
}

wn_status wn_parseval_defect(const wn_signal* signal, const wn_spectrum* spectrum, double* out) {
  return guarded([&] {
    require(signal != nullptr && spectrum != nullptr && out != nullptr, "null pointer argument");
    *out = winding::parseval_defect(signal->v, spectrum->v);
  });
}

wn_status wn_phase_scramble(const wn_spectrum* spectrum, unsigned long long seed, wn_spectrum** out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_spectrum{winding::zoo::phase_scramble(spectrum->v, seed)};
  });
}

void wn_spectrum_free(wn_spectrum* spectrum) { delete spectrum; }

/* ---- sequences ---- */

wn_status wn_sequence_from_values(const double* u, size_t len, wn_sequence** out) {
  return guarded([&] {
    require(u != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_sequence{std::vector<double>(u, u + len)};
  });
}

wn_status wn_sequence_read_csv(const char* path, wn_sequence** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_sequence{winding::sequence_from_csv(winding::read_file(path))};
  });
}

wn_status wn_energy_sequence(const wn_spectrum* spectrum, wn_sequence** out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null pointer argument");
    *out = new wn_sequence{winding::energy_sequence(spectrum->v)};
  });
}

size_t wn_sequence_len(const wn_sequence* sequence) { return sequence == nullptr ? 0 : sequence->v.size(); }

void wn_sequence_free(wn_sequence* sequence) { delete sequence; }

/* ---- summation ---- */

wn_status wn_sum_partial(const wn_sequence* u, size_t n, double* out) {
  return guarded([&] {
    require(u != nullptr && out != nullptr, "null pointer argument");
    *out = winding::sum_partial(u->v, n);
  });
}

wn_status wn_sum_cesaro(const wn_sequence* u, double k, unsigned long long n, double* out) {
  return guarded([&] {
    require(u != nullptr && out != nullptr, "null pointer argument");
    *out = winding::sum_cesaro(u->v, k, n);
  });
}

wn_status wn_sum_riemann(const wn_sequence* u, int k, double t, double* out) {
  return guarded([&] {
    require(u != nullptr && out != nullptr, "null pointer argument");
    *out = winding::sum_riemann(u->v, k, t);
  });
}

wn_status wn_sum_abel(const wn_sequence* u, double r, double* out) {
  return guarded([&] {
    require(u != nullptr && out != nullptr, "null pointer argument");
    *out = winding::sum_abel(u->v, r);
  });
}

wn_status wn_riemann_sin_form(const wn_spectrum* spectrum, double t, double* out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null pointer argument");
    *out = winding::riemann_sin_form(spectrum->v, t);
  });
}

wn_status wn_method_limit_json(const wn_sequence* u, const char* method, const char* protocol, char** out) {
  return guarded([&] {
    require(u != nullptr && method != nullptr && out != nullptr, "null pointer argument");
    const auto m = winding::SummationMethod::parse(method);
    const auto proto = protocol_for(m, u->v.size(), protocol);
    const auto lr = winding::extract_limit(
        [&](double p) { return winding::evaluate_method(u->v, m, p); }, proto);
    *out = copy_out(winding::limit_to_json(m.str(), lr));
  });
}

wn_status wn_method_limit_trace_csv(const wn_sequence* u, const char* method, const char* protocol,
                                    char** out) {
  return guarded([&] {
    require(u != nullptr && method != nullptr && out != nullptr, "null pointer argument");
    const auto m = winding::SummationMethod::parse(method);
    const auto proto = protocol_for(m, u->v.size(), protocol);
    const auto lr = winding::extract_limit(
        [&](double p) { return winding::evaluate_method(u->v, m, p); }, proto);
    *out = copy_out(winding::trace_to_csv(lr.trace));
  });
}

wn_status wn_method_value_json(const wn_sequence* u, const char* method, double param, char** out) {
  return guarded([&] {
    require(u != nullptr && method != nullptr && out != nullptr, "null pointer argument");
    const auto m = winding::SummationMethod::parse(method);
    const double v = winding::evaluate_method(u->v, m, param);
    *out = copy_out(winding::value_to_json(m.str(), param, v));
  });
}

/* ---- degree ---- */

wn_status wn_winding_geometric(const wn_signal* signal, long* out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null pointer argument");
    *out = winding::winding_geometric(signal->v);
  });
}

wn_status wn_degree_fourier_json(const wn_spectrum* spectrum, const char* method, const char* protocol,
                                 char** out) {
  return guarded([&] {
    require(spectrum != nullptr && method != nullptr && out != nullptr, "null pointer argument");
    const auto m = winding::SummationMethod::parse(method);
    const auto proto = protocol_for(m, spectrum->v.bandwidth(), protocol);
    const auto report = winding::degree_fourier(spectrum->v, m, proto);
    *out = copy_out(winding::degree_report_to_json(report));
  });
}

wn_status wn_degree_output_json(const wn_signal* signal, const char* methods, size_t bandwidth,
                                const char* protocol, char** out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null pointer argument");
    const auto method_list = parse_methods(methods);
    const long oracle = winding::winding_geometric(signal->v);
    const std::size_t m = bandwidth == 0 ? signal->v.size() / 4 : bandwidth;
    const auto spectrum = winding::analyze(signal->v, m);
    std::vector<winding::DegreeReport> reports;
    reports.reserve(method_list.size());
    for (const auto& method : method_list)
      reports.push_back(
          winding::degree_fourier(spectrum, method, protocol_for(method, spectrum.bandwidth(), protocol)));
    *out = copy_out(winding::degree_output_to_json(oracle, reports));
  });
}

/* ---- seminorms ---- */

wn_status wn_h_half(const wn_spectrum* spectrum, double* out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null pointer argument");
    *out = winding::h_half_coefficient(spectrum->v);
  });
}

wn_status wn_gagliardo(const wn_signal* signal, double s, double p, double* out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null pointer argument");
    *out = winding::gagliardo(signal->v, s, p);
  });
}

wn_status wn_vmo_modulus(const wn_signal* signal, double arc_length, double* out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null pointer argument");
    *out = winding::vmo_modulus(signal->v, arc_length);
  });
}

wn_status wn_seminorm_json(const char* gauge, const char* const* keys, const double* values,
                           size_t parameter_count, double value, char** out) {
  return guarded([&] {
    require(gauge != nullptr && out != nullptr, "null pointer argument");
    require(parameter_count == 0 || (keys != nullptr && values != nullptr), "null parameter arrays");
    std::vector<std::pair<std::string, double>> params;
    params.reserve(parameter_count);
    for (size_t i = 0; i < parameter_count; ++i) params.emplace_back(keys[i], values[i]);
    *out = copy_out(winding::seminorm_to_json(gauge, params, value));
  });
}

wn_status wn_lambda_trace_csv(const wn_signal* signal, double alpha, double p, const double* shifts,
                              size_t shift_count, char** out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null pointer argument");
    std::vector<std::pair<double, double>> trace;
    if (shifts == nullptr) {
      const auto ladder = winding::default_shift_ladder(signal->v.size());
      trace = winding::lambda_test(signal->v, alpha, p, ladder);
    } else {
      trace = winding::lambda_test_angles(signal->v, alpha, p, std::span(shifts, shift_count));
    }
    *out = copy_out(winding::trace_to_csv(trace));
  });
}

/* ---- experiment drivers ---- */

wn_status wn_q5_report_json(const wn_spectrum* spectrum, int have_oracle, long oracle, char** out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null pointer argument");
    std::optional<long> fallback;
    if (have_oracle != 0) fallback = oracle;
    *out = copy_out(winding::q5_to_json(winding::lab::q5_report(spectrum->v, fallback)));
  });
}

wn_status wn_s_sweep_csv(const wn_spectrum* spectrum, const double* s_values, size_t count, char** out) {
  return guarded([&] {
    require(spectrum != nullptr && s_values != nullptr && out != nullptr, "null pointer argument");
    const auto rows = winding::lab::s_sweep(spectrum->v, std::span(s_values, count));
    *out = copy_out(winding::sweep_to_csv(rows));
  });
}

wn_status wn_convergence_table_csv(const char* family_grid_spec, const char* methods, char** out) {
  return guarded([&] {
    require(family_grid_spec != nullptr && out != nullptr, "null pointer argument");
    const auto rows = winding::lab::convergence_table(family_grid_spec, parse_methods(methods));
    *out = copy_out(winding::table_to_csv(rows));
  });
}

} /* extern "C" */
