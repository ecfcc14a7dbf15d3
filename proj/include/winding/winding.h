/* winding: winding numbers of circle-valued functions from Fourier data.
 *
 * C API over the core library. All objects are opaque handles created and
 * released through these functions; every fallible call returns a wn_status
 * and leaves a human-readable message in wn_last_error() (per thread).
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with wn_string_free().
 */

#ifndef WINDING_WINDING_H
#define WINDING_WINDING_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wn_status {
  WN_OK = 0,
  /* usage-class failures */
  WN_EINVAL = 1,  /* argument outside its contract */
  WN_EPARSE = 2,  /* malformed CSV, spec string, or method descriptor */
  WN_EIO = 3,     /* file not readable/writable */
  /* numerical precondition failures */
  WN_EBANDWIDTH = 10,     /* bandwidth exceeds Nyquist N/2 */
  WN_EUNDERSAMPLED = 11,  /* synthesis or argument lift needs more samples */
  WN_ENOTUNIMODULAR = 12, /* |f| leaves the circle beyond the declared tolerance */
  WN_EARC = 13,           /* arc shorter than two grid cells */
  WN_EOFFGRID = 14,       /* shift not aligned with the sample grid */
  WN_EALIAS = 15,         /* generator frequency at or beyond Nyquist */
  WN_EBOUNDARY = 16,      /* Blaschke zero too close to |z| = 1 */
  WN_EINTERNAL = 99
} wn_status;

/* Nonzero when the status names a numerical precondition failure (the CLI
 * maps these to exit 3, usage-class failures to exit 2). */
int wn_status_is_precondition(wn_status status);

const char* wn_version(void);

/* Message for the most recent failing call on this thread. */
const char* wn_last_error(void);

/* Worker budget for the quadratic kernels; n <= 0 restores the hardware
 * default. Results are identical for every thread count. */
void wn_set_threads(int n);

void wn_string_free(char* s);

/* ---- signals ------------------------------------------------------- */

typedef struct wn_signal wn_signal;

/* N = len must be a power of two, at least 4. im may be NULL (real data). */
wn_status wn_signal_from_samples(const double* re, const double* im, size_t len, double unimodular_tol,
                                 wn_signal** out);
/* Generator spec, e.g. "monomial:d=3,n=4096", "blaschke:zeros=0.3,-0.4+0.2i;n=512",
 * "pwlinear:knots=0:0|3.14:5;d=2;n=1024", "weierstrass:alpha=0.6,scales=10,seed=7,n=4096". */
wn_status wn_signal_from_zoo(const char* spec, wn_signal** out);
wn_status wn_signal_read_csv(const char* path, double unimodular_tol, wn_signal** out);
wn_status wn_signal_to_csv(const wn_signal* signal, char** out);
size_t wn_signal_len(const wn_signal* signal);
double wn_signal_unimodular_defect(const wn_signal* signal);
void wn_signal_free(wn_signal* signal);

/* ---- spectra -------------------------------------------------------- */

typedef struct wn_spectrum wn_spectrum;

wn_status wn_analyze(const wn_signal* signal, size_t bandwidth, wn_spectrum** out);
wn_status wn_synthesize(const wn_spectrum* spectrum, size_t sample_count, double unimodular_tol,
                        wn_signal** out);
wn_status wn_spectrum_read_csv(const char* path, wn_spectrum** out);
wn_status wn_spectrum_to_csv(const wn_spectrum* spectrum, char** out);
size_t wn_spectrum_bandwidth(const wn_spectrum* spectrum);
wn_status wn_spectrum_coeff(const wn_spectrum* spectrum, long n, double* re, double* im);
wn_status wn_parseval_defect(const wn_signal* signal, const wn_spectrum* spectrum, double* out);
wn_status wn_phase_scramble(const wn_spectrum* spectrum, unsigned long long seed, wn_spectrum** out);
void wn_spectrum_free(wn_spectrum* spectrum);

/* ---- real sequences -------------------------------------------------- */

typedef struct wn_sequence wn_sequence;

wn_status wn_sequence_from_values(const double* u, size_t len, wn_sequence** out);
/* CSV with header "m,u", rows m = 1..L. */
wn_status wn_sequence_read_csv(const char* path, wn_sequence** out);
wn_status wn_energy_sequence(const wn_spectrum* spectrum, wn_sequence** out);
size_t wn_sequence_len(const wn_sequence* sequence);
void wn_sequence_free(wn_sequence* sequence);

/* ---- summation ------------------------------------------------------- */

wn_status wn_sum_partial(const wn_sequence* u, size_t n, double* out);
wn_status wn_sum_cesaro(const wn_sequence* u, double k, unsigned long long n, double* out);
wn_status wn_sum_riemann(const wn_sequence* u, int k, double t, double* out);
wn_status wn_sum_abel(const wn_sequence* u, double r, double* out);
wn_status wn_riemann_sin_form(const wn_spectrum* spectrum, double t, double* out);

/* Method descriptors: "partial", "cesaro:k=1.5", "riemann:k=2", "abel".
 * Protocol overrides: NULL/"" for defaults, else "depth=I,window=W,tol=X".
 * Emits {"method","estimate","converged","trace"} JSON. */
wn_status wn_method_limit_json(const wn_sequence* u, const char* method, const char* protocol, char** out);
/* Same evaluation, emitted as a "param,value" CSV trace. */
wn_status wn_method_limit_trace_csv(const wn_sequence* u, const char* method, const char* protocol,
                                    char** out);
/* One evaluation at a single parameter (cutoff n, t, or r by method kind):
 * {"method","param","value"} JSON. */
wn_status wn_method_value_json(const wn_sequence* u, const char* method, double param, char** out);

/* ---- degree ----------------------------------------------------------- */

wn_status wn_winding_geometric(const wn_signal* signal, long* out);
/* DegreeReport JSON: {"estimate","rounded","method","converged","residual","trace"[, "riemann_weight_sum"]} */
wn_status wn_degree_fourier_json(const wn_spectrum* spectrum, const char* method, const char* protocol,
                                 char** out);
/* methods: comma-separated descriptors. bandwidth 0 selects N/4. Emits
 * {"oracle","reports","comparison"} JSON. */
wn_status wn_degree_output_json(const wn_signal* signal, const char* methods, size_t bandwidth,
                                const char* protocol, char** out);

/* ---- seminorms --------------------------------------------------------- */

wn_status wn_h_half(const wn_spectrum* spectrum, double* out);
wn_status wn_gagliardo(const wn_signal* signal, double s, double p, double* out);
wn_status wn_vmo_modulus(const wn_signal* signal, double arc_length, double* out);
/* {"gauge","parameters","value"} JSON for a gauge evaluation; keys/values
 * list the parameters the caller used. */
wn_status wn_seminorm_json(const char* gauge, const char* const* keys, const double* values,
                           size_t parameter_count, double value, char** out);
/* shifts: angles that must sit on the grid; NULL selects the ladder
 * 2*pi/4, 2*pi/8, ..., 2*pi/N. Emits a "param,value" CSV trace. */
wn_status wn_lambda_trace_csv(const wn_signal* signal, double alpha, double p, const double* shifts,
                              size_t shift_count, char** out);

/* ---- experiment drivers ------------------------------------------------ */

/* have_oracle != 0 supplies a geometric-degree fallback for the bound. */
wn_status wn_q5_report_json(const wn_spectrum* spectrum, int have_oracle, long oracle, char** out);
wn_status wn_s_sweep_csv(const wn_spectrum* spectrum, const double* s_values, size_t count, char** out);
/* Generator grid, e.g. "weierstrass:alpha=0.5|0.6;d=1|2;seed=7;n=4096". */
wn_status wn_convergence_table_csv(const char* family_grid_spec, const char* methods, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WINDING_WINDING_H */
