/* mobiuswalsh — exact Fourier–Walsh / exponential-sum / Dirichlet-character
 * toolkit around the Moebius function on [0, 2^n).
 *
 * C interface to the shared library. Objects travel as opaque handles and
 * every fallible call returns an mw_rc; a human-readable message for the
 * last failure on the calling thread is available via mw_last_error().
 *
 * Return codes double as CLI exit codes:
 *   0 ok, 2 bad parameter, 3 capacity limit, 4 corrupt cache, 5 internal.
 */
#ifndef MOBIUSWALSH_H
#define MOBIUSWALSH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mw_rc {
    MW_OK = 0,
    MW_E_PARAM = 2,
    MW_E_CAPACITY = 3,
    MW_E_CACHE = 4,
    MW_E_INTERNAL = 5,
} mw_rc;

const char* mw_last_error(void);

/* Caps internal worker threads (default 1). */
void mw_set_threads(uint32_t threads);

/* Strings returned through char** out-parameters are heap-allocated and
 * must be released with mw_string_free. */
void mw_string_free(char* s);

/* ---- Moebius tables ---------------------------------------------------- */

typedef struct mw_mu_table mw_mu_table;

mw_rc mw_mu_sieve(uint32_t n, mw_mu_table** out);
void mw_mu_free(mw_mu_table* t);
uint32_t mw_mu_n(const mw_mu_table* t);
/* mu(x) for x < 2^n; out in {-1, 0, +1} */
mw_rc mw_mu_value(const mw_mu_table* t, uint64_t x, int32_t* out);
mw_rc mw_mu_save(const mw_mu_table* t, const char* path);
mw_rc mw_mu_load(const char* path, mw_mu_table** out);

/* Trial-division point oracle, x >= 1. */
mw_rc mw_mu_point(uint64_t x, int32_t* out);
/* Euler phi, distinct-prime count, squarefree flag. */
mw_rc mw_factor_summary(uint64_t x, uint64_t* phi, uint32_t* omega, int32_t* squarefree);

/* ---- Walsh spectra ------------------------------------------------------ */

typedef struct mw_spectrum mw_spectrum;

mw_rc mw_spectrum_from_mu(const mw_mu_table* t, mw_spectrum** out);
mw_rc mw_spectrum_from_table(const int64_t* values, uint64_t length, mw_spectrum** out);
void mw_spectrum_free(mw_spectrum* s);
uint32_t mw_spectrum_n(const mw_spectrum* s);
mw_rc mw_spectrum_coeff(const mw_spectrum* s, uint64_t mask, int64_t* out);
mw_rc mw_spectrum_save(const mw_spectrum* s, const char* path);
mw_rc mw_spectrum_load(const char* path, mw_spectrum** out);

/* Walsh character value w_A(x) in {-1, +1}. */
int32_t mw_walsh_eval(uint64_t mask, uint64_t x);

/* Low-level spectral mass sum_{|A| <= n0} fhat(A)^2 as exact num/den strings
 * plus a double rendering. */
mw_rc mw_low_level_mass(const mw_spectrum* s, uint32_t n0, char** num, char** den, double* value);

/* Level profile as CSV (header: level,mass_num,mass_den,mass_float). */
mw_rc mw_level_profile_csv(const mw_spectrum* s, char** csv);

/* ---- Noise operator ------------------------------------------------------ */

/* Tail split of the noise-damped table at level floor(K*n0); reports the
 * counting-norm tail ||f2||_2 / sqrt(N) and the bound (1 - 1/n0)^cutoff. */
mw_rc mw_noise_tail(const mw_spectrum* s, uint32_t n0, double K, double* tail_over_sqrt_n,
                    double* bound_rho_pow, int32_t* bound_holds);

/* ---- Report pipelines (JSON / CSV payloads used by the CLI) ------------- */

mw_rc mw_report_sieve(uint32_t n, const char* cache_dir, const char* table_out, char** json_out);
mw_rc mw_report_spectrum(uint32_t n, const char* cache_dir, const char* spectrum_out,
                         char** json_out);
mw_rc mw_profile_csv(uint32_t n, const char* cache_dir, char** csv_out);
mw_rc mw_report_mass(uint32_t n, uint32_t n0, const char* cache_dir, char** json_out);
mw_rc mw_report_noise(uint32_t n, uint32_t n0, double K, double rho_override,
                      const char* cache_dir, char** json_out);
mw_rc mw_arcs_csv(uint32_t n, uint64_t B, char** csv_out);
mw_rc mw_report_minor_scan(uint32_t n, uint64_t B, uint64_t grid, const char* cache_dir,
                           char** json_out);
mw_rc mw_chars_csv(uint64_t q, char** csv_out);
mw_rc mw_report_exceptional(uint64_t qmax, double sigma_min, size_t zero_scan_limit,
                            char** json_out);
mw_rc mw_report_correlate(uint32_t n, const char* fn_name, uint32_t fn_param, uint32_t level,
                          const char* cache_dir, char** json_out);
mw_rc mw_report_cap(uint32_t n, uint32_t m, uint32_t K0, double K, uint32_t n0,
                    const char* cache_dir, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MOBIUSWALSH_H */
