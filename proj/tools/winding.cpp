// Command-line front end. Everything numerical goes through the shared
// library's C API (winding/winding.h); this file only parses arguments,
// moves bytes, and maps status codes to exit codes (0 ok, 2 usage,
// 3 numerical precondition failure).

#include <winding/winding.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct CliFailure {
  int exit_code;
  std::string message;
};

void check(wn_status st) {
  if (st == WN_OK) return;
  throw CliFailure{wn_status_is_precondition(st) ? 3 : 2, wn_last_error()};
}

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { wn_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

using SignalPtr = std::unique_ptr<wn_signal, decltype(&wn_signal_free)>;
using SpectrumPtr = std::unique_ptr<wn_spectrum, decltype(&wn_spectrum_free)>;
using SequencePtr = std::unique_ptr<wn_sequence, decltype(&wn_sequence_free)>;

SignalPtr make_signal(wn_signal* p) { return SignalPtr(p, &wn_signal_free); }
SpectrumPtr make_spectrum(wn_spectrum* p) { return SpectrumPtr(p, &wn_spectrum_free); }
SequencePtr make_sequence(wn_sequence* p) { return SequencePtr(p, &wn_sequence_free); }

// Shared input options: a signal CSV path or an inline generator spec.
struct SignalInput {
  std::string csv_path;
  std::string zoo_spec;
  double unimodular_tol = 1e-6;

  void attach(CLI::App* sub, bool positional = true) {
    if (positional)
      sub->add_option("input", csv_path,
                      "signal CSV file (header j,t,re,im), or an inline generator spec "
                      "(anything containing ':')");
    sub->add_option("--zoo", zoo_spec,
                    "inline generator spec, e.g. \"monomial:d=3,n=4096\" or "
                    "\"blaschke:zeros=0.5;n=4096\"");
    sub->add_option("--unimodular-tol", unimodular_tol, "declared |f|=1 tolerance for loaded signals")
        ->capture_default_str();
  }

  SignalPtr load() const {
    std::string path = csv_path;
    std::string spec = zoo_spec;
    if (!path.empty() && path.find(':') != std::string::npos && spec.empty()) {
      spec = path;
      path.clear();
    }
    if (path.empty() == spec.empty())
      throw CliFailure{2, "exactly one of <input.csv> or --zoo is required"};
    wn_signal* s = nullptr;
    if (!spec.empty())
      check(wn_signal_from_zoo(spec.c_str(), &s));
    else
      check(wn_signal_read_csv(path.c_str(), unimodular_tol, &s));
    return make_signal(s);
  }
};

void emit(const std::string& payload, const std::string& out_path, bool trailing_newline) {
  std::string bytes = payload;
  if (trailing_newline && (bytes.empty() || bytes.back() != '\n')) bytes += '\n';
  if (out_path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (f == nullptr) throw CliFailure{2, "cannot open '" + out_path + "' for writing"};
  std::fwrite(bytes.data(), 1, bytes.size(), f);
  std::fclose(f);
}

std::string join_methods(const std::vector<std::string>& methods, const char* fallback) {
  if (methods.empty()) return fallback;
  std::string joined;
  for (const auto& m : methods) {
    if (!joined.empty()) joined += ',';
    joined += m;
  }
  return joined;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"winding numbers of circle-valued functions from Fourier coefficients"};
  app.require_subcommand(1);

  int threads = 0;
  if (const char* env = std::getenv("WINDING_THREADS")) threads = std::atoi(env);
  app.add_option("--threads", threads, "worker budget for quadratic kernels (mirrors WINDING_THREADS)");
  app.fallthrough();  // root options (--threads) may follow the subcommand

  // ---- degree ----
  auto* degree = app.add_subcommand(
      "degree", "degree estimates under summation methods, checked against the argument-lifting oracle");
  SignalInput degree_in;
  degree_in.attach(degree);
  std::vector<std::string> degree_methods;
  std::string degree_protocol;
  std::size_t degree_m = 0;
  std::string degree_out;
  degree->add_option("--method", degree_methods,
                     "summation methods (partial, cesaro:k=<r>, riemann:k=<int>, abel); repeatable");
  degree->add_option("--protocol", degree_protocol, "limit protocol overrides: depth=I,window=W,tol=X");
  degree->add_option("--m", degree_m, "analysis bandwidth (default N/4)");
  degree->add_option("--out", degree_out, "write the JSON here instead of stdout");

  // ---- spectrum ----
  auto* spectrum = app.add_subcommand("spectrum", "Fourier coefficients of a signal as CSV (header n,re,im)");
  SignalInput spectrum_in;
  spectrum_in.attach(spectrum);
  std::size_t spectrum_m = 0;
  std::string spectrum_out;
  bool spectrum_defect = false;
  spectrum->add_option("--m", spectrum_m, "bandwidth (default N/4)");
  spectrum->add_option("--out", spectrum_out, "write the CSV here instead of stdout");
  spectrum->add_flag("--defect", spectrum_defect, "print the Parseval defect to stderr");
  long long spectrum_scramble = -1;
  spectrum->add_option("--scramble", spectrum_scramble,
                       "replace all coefficient phases with seeded pseudo-random ones (keeps |a_n|); "
                       "also prints the unimodularity deviation of the re-synthesized signal to stderr");

  // ---- seminorm ----
  auto* seminorm = app.add_subcommand("seminorm", "function-space gauges: hhalf, gagliardo, vmo, lambda");
  SignalInput seminorm_in;
  seminorm_in.attach(seminorm);
  std::string gauge;
  seminorm->add_option("--gauge", gauge, "hhalf | gagliardo | vmo | lambda")->required();
  double sm_s = 0.5, sm_p = 2.0, sm_arc = 0.5, sm_alpha = 0.5;
  std::size_t sm_m = 0;
  std::vector<double> sm_shifts;
  std::string seminorm_out;
  seminorm->add_option("--s", sm_s, "gagliardo order in (0,1)")->capture_default_str();
  seminorm->add_option("--p", sm_p, "integral exponent")->capture_default_str();
  seminorm->add_option("--arc", sm_arc, "vmo arc length in (0, 2*pi]")->capture_default_str();
  seminorm->add_option("--alpha", sm_alpha, "lambda gauge order")->capture_default_str();
  seminorm->add_option("--shifts", sm_shifts, "lambda shifts (grid-aligned angles); default ladder 2*pi/2^i");
  seminorm->add_option("--m", sm_m, "bandwidth for hhalf (default N/4)");
  seminorm->add_option("--out", seminorm_out, "write output here instead of stdout");

  // ---- sum ----
  auto* sum = app.add_subcommand("sum", "apply a summation method to a real sequence from CSV (header m,u)");
  std::string sum_method = "abel", sum_sequence, sum_protocol, sum_out;
  sum->add_option("--method", sum_method, "summation method descriptor")->capture_default_str();
  sum->add_option("--sequence", sum_sequence, "sequence CSV file")->required();
  sum->add_option("--protocol", sum_protocol, "limit protocol overrides: depth=I,window=W,tol=X");
  double sum_at_value = 0.0;
  auto* at_opt = sum->add_option("--at", sum_at_value, "evaluate at one parameter instead of extracting a limit");
  std::string sum_trace_csv;
  sum->add_option("--trace-csv", sum_trace_csv, "also write the schedule trace as param,value CSV to this file (limit mode only)");
  sum->add_option("--out", sum_out, "write the JSON here instead of stdout");

  // ---- zoo ----
  auto* zoo = app.add_subcommand("zoo", "generate a signal from a named family, emitted as signal CSV");
  std::string zoo_family;
  zoo->add_option("family", zoo_family, "monomial | blaschke | pwlinear | weierstrass")->required();
  long zoo_d = 1;
  std::size_t zoo_n = 4096;
  std::string zoo_zeros, zoo_knots, zoo_out;
  double zoo_alpha = 0.5, zoo_lambda = 1.0;
  long zoo_scales = 10, zoo_seed = 1;
  auto* zoo_d_opt = zoo->add_option("--d", zoo_d, "degree parameter");
  zoo->add_option("--n", zoo_n, "sample count (power of two)")->capture_default_str();
  zoo->add_option("--zeros", zoo_zeros, "blaschke zeros, e.g. \"0.3,-0.4+0.2i\"");
  zoo->add_option("--knots", zoo_knots, "pwlinear knots, e.g. \"0:0|3.14:5\"");
  zoo->add_option("--alpha", zoo_alpha, "weierstrass hoelder order")->capture_default_str();
  zoo->add_option("--scales", zoo_scales, "weierstrass scale count")->capture_default_str();
  zoo->add_option("--lambda", zoo_lambda, "weierstrass amplitude")->capture_default_str();
  zoo->add_option("--seed", zoo_seed, "weierstrass phase seed")->capture_default_str();
  zoo->add_option("--out", zoo_out, "write the CSV here instead of stdout");

  // ---- lab ----
  auto* lab = app.add_subcommand("lab", "experiment drivers");
  lab->require_subcommand(1);

  auto* lab_q5 = lab->add_subcommand("q5", "coefficient-mass inequality report (JSON)");
  SignalInput q5_in;
  q5_in.attach(lab_q5);
  std::string q5_spectrum_file, q5_out;
  std::size_t q5_m = 0;
  lab_q5->add_option("--spectrum", q5_spectrum_file, "spectrum CSV input (skips the oracle fallback)");
  lab_q5->add_option("--m", q5_m, "bandwidth (default N/4)");
  lab_q5->add_option("--out", q5_out, "write the JSON here instead of stdout");

  auto* lab_sweep = lab->add_subcommand(
      "sweep", "s-exponent sweep of one-sided vs two-sided mass; CSV columns: s,full,positive,ratio,ratio_flag");
  SignalInput sweep_in;
  sweep_in.attach(lab_sweep);
  std::string sweep_spectrum_file, sweep_out;
  std::vector<double> sweep_s{0.25, 0.5, 0.75, 1.0};
  std::size_t sweep_m = 0;
  lab_sweep->add_option("--spectrum", sweep_spectrum_file, "spectrum CSV input");
  lab_sweep->add_option("--s", sweep_s, "exponents to sweep")->capture_default_str();
  lab_sweep->add_option("--m", sweep_m, "bandwidth (default N/4)");
  lab_sweep->add_option("--out", sweep_out, "write the CSV here instead of stdout");

  auto* lab_table = lab->add_subcommand(
      "table",
      "method-vs-family convergence table; CSV columns: spec,oracle,method,estimate,converged,abs_error");
  std::string table_family, table_out;
  std::vector<std::string> table_methods;
  lab_table
      ->add_option("--family", table_family,
                   "generator grid spec; '|' separates grid values, e.g. "
                   "\"weierstrass:alpha=0.5|0.6;d=1|2;seed=7;n=4096\"")
      ->required();
  lab_table->add_option("--methods", table_methods, "summation methods; repeatable")->required();
  lab_table->add_option("--out", table_out, "write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    wn_set_threads(threads);

    if (degree->parsed()) {
      auto signal = degree_in.load();
      const std::string methods = join_methods(degree_methods, "abel");
      StringOut json;
      check(wn_degree_output_json(signal.get(), methods.c_str(), degree_m,
                                  degree_protocol.empty() ? nullptr : degree_protocol.c_str(), &json.ptr));
      emit(json.str(), degree_out, true);
    } else if (spectrum->parsed()) {
      auto signal = spectrum_in.load();
      const std::size_t m = spectrum_m == 0 ? wn_signal_len(signal.get()) / 4 : spectrum_m;
      wn_spectrum* sp = nullptr;
      check(wn_analyze(signal.get(), m, &sp));
      auto spec = make_spectrum(sp);
      if (spectrum_defect) {
        double defect = 0.0;
        check(wn_parseval_defect(signal.get(), spec.get(), &defect));
        std::fprintf(stderr, "parseval_defect %.17g\n", defect);
      }
      if (spectrum_scramble >= 0) {
        wn_spectrum* scrambled = nullptr;
        check(wn_phase_scramble(spec.get(), static_cast<unsigned long long>(spectrum_scramble), &scrambled));
        spec = make_spectrum(scrambled);
        // full-band spectra need a bigger grid (power of two with N >= 2M+2)
        std::size_t synth_n = wn_signal_len(signal.get());
        while (synth_n < 2 * wn_spectrum_bandwidth(spec.get()) + 2) synth_n *= 2;
        wn_signal* back = nullptr;
        check(wn_synthesize(spec.get(), synth_n, 1e-8, &back));
        auto resynth = make_signal(back);
        std::fprintf(stderr, "unimodular_deviation %.17g\n", wn_signal_unimodular_defect(resynth.get()));
      }
      StringOut csv;
      check(wn_spectrum_to_csv(spec.get(), &csv.ptr));
      emit(csv.str(), spectrum_out, false);
    } else if (seminorm->parsed()) {
      auto signal = seminorm_in.load();
      auto emit_gauge = [&](const char* name, std::initializer_list<std::pair<const char*, double>> params,
                            double value) {
        std::vector<const char*> keys;
        std::vector<double> vals;
        for (const auto& [k, v] : params) {
          keys.push_back(k);
          vals.push_back(v);
        }
        StringOut json;
        check(wn_seminorm_json(name, keys.data(), vals.data(), keys.size(), value, &json.ptr));
        emit(json.str(), seminorm_out, true);
      };
      if (gauge == "hhalf") {
        const std::size_t m = sm_m == 0 ? wn_signal_len(signal.get()) / 4 : sm_m;
        wn_spectrum* sp = nullptr;
        check(wn_analyze(signal.get(), m, &sp));
        auto spec = make_spectrum(sp);
        double value = 0.0;
        check(wn_h_half(spec.get(), &value));
        emit_gauge("hhalf", {{"m", static_cast<double>(m)}}, value);
      } else if (gauge == "gagliardo") {
        double value = 0.0;
        check(wn_gagliardo(signal.get(), sm_s, sm_p, &value));
        emit_gauge("gagliardo", {{"s", sm_s}, {"p", sm_p}}, value);
      } else if (gauge == "vmo") {
        double value = 0.0;
        check(wn_vmo_modulus(signal.get(), sm_arc, &value));
        emit_gauge("vmo", {{"arc", sm_arc}}, value);
      } else if (gauge == "lambda") {
        StringOut csv;
        check(wn_lambda_trace_csv(signal.get(), sm_alpha, sm_p, sm_shifts.empty() ? nullptr : sm_shifts.data(),
                                  sm_shifts.size(), &csv.ptr));
        emit(csv.str(), seminorm_out, false);
      } else {
        throw CliFailure{2, "unknown gauge '" + gauge + "' (expected hhalf, gagliardo, vmo, lambda)"};
      }
    } else if (sum->parsed()) {
      wn_sequence* seq = nullptr;
      check(wn_sequence_read_csv(sum_sequence.c_str(), &seq));
      auto sequence = make_sequence(seq);
      StringOut json;
      if (at_opt->count() > 0) {
        check(wn_method_value_json(sequence.get(), sum_method.c_str(), sum_at_value, &json.ptr));
      } else {
        check(wn_method_limit_json(sequence.get(), sum_method.c_str(),
                                   sum_protocol.empty() ? nullptr : sum_protocol.c_str(), &json.ptr));
        if (!sum_trace_csv.empty()) {
          StringOut trace;
          check(wn_method_limit_trace_csv(sequence.get(), sum_method.c_str(),
                                          sum_protocol.empty() ? nullptr : sum_protocol.c_str(), &trace.ptr));
          emit(trace.str(), sum_trace_csv, false);
        }
      }
      emit(json.str(), sum_out, true);
    } else if (zoo->parsed()) {
      auto fmt_double = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
      };
      std::string spec = zoo_family + ":";
      auto append = [&spec](const std::string& kv) {
        if (spec.back() != ':') spec += ';';
        spec += kv;
      };
      if (zoo_family == "blaschke") {
        if (!zoo_zeros.empty()) append("zeros=" + zoo_zeros);
      } else if (zoo_family == "pwlinear") {
        if (zoo_knots.empty()) throw CliFailure{2, "pwlinear requires --knots"};
        append("knots=" + zoo_knots);
        append("d=" + std::to_string(zoo_d));
      } else if (zoo_family == "monomial") {
        if (zoo_d_opt->count() == 0) throw CliFailure{2, "monomial requires --d"};
        append("d=" + std::to_string(zoo_d));
      } else if (zoo_family == "weierstrass") {
        append("alpha=" + fmt_double(zoo_alpha));
        append("scales=" + std::to_string(zoo_scales));
        append("lambda=" + fmt_double(zoo_lambda));
        append("d=" + std::to_string(zoo_d));
        append("seed=" + std::to_string(zoo_seed));
      } else {
        throw CliFailure{2, "unknown family '" + zoo_family +
                                "' (expected monomial, blaschke, pwlinear, weierstrass)"};
      }
      append("n=" + std::to_string(zoo_n));
      wn_signal* s = nullptr;
      check(wn_signal_from_zoo(spec.c_str(), &s));
      auto signal = make_signal(s);
      StringOut csv;
      check(wn_signal_to_csv(signal.get(), &csv.ptr));
      emit(csv.str(), zoo_out, false);
    } else if (lab_q5->parsed()) {
      StringOut json;
      if (!q5_spectrum_file.empty()) {
        wn_spectrum* sp = nullptr;
        check(wn_spectrum_read_csv(q5_spectrum_file.c_str(), &sp));
        auto spec = make_spectrum(sp);
        check(wn_q5_report_json(spec.get(), 0, 0, &json.ptr));
      } else {
        auto signal = q5_in.load();
        long oracle = 0;
        check(wn_winding_geometric(signal.get(), &oracle));
        const std::size_t m = q5_m == 0 ? wn_signal_len(signal.get()) / 4 : q5_m;
        wn_spectrum* sp = nullptr;
        check(wn_analyze(signal.get(), m, &sp));
        auto spec = make_spectrum(sp);
        check(wn_q5_report_json(spec.get(), 1, oracle, &json.ptr));
      }
      emit(json.str(), q5_out, true);
    } else if (lab_sweep->parsed()) {
      SpectrumPtr spec = make_spectrum(nullptr);
      if (!sweep_spectrum_file.empty()) {
        wn_spectrum* sp = nullptr;
        check(wn_spectrum_read_csv(sweep_spectrum_file.c_str(), &sp));
        spec = make_spectrum(sp);
      } else {
        auto signal = sweep_in.load();
        const std::size_t m = sweep_m == 0 ? wn_signal_len(signal.get()) / 4 : sweep_m;
        wn_spectrum* sp = nullptr;
        check(wn_analyze(signal.get(), m, &sp));
        spec = make_spectrum(sp);
      }
      StringOut csv;
      check(wn_s_sweep_csv(spec.get(), sweep_s.data(), sweep_s.size(), &csv.ptr));
      emit(csv.str(), sweep_out, false);
    } else if (lab_table->parsed()) {
      const std::string methods = join_methods(table_methods, "abel");
      StringOut csv;
      check(wn_convergence_table_csv(table_family.c_str(), methods.c_str(), &csv.ptr));
      emit(csv.str(), table_out, false);
    }
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return 0;
}
