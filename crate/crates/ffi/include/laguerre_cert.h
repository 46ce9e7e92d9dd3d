#ifndef LAGUERRE_CERT_H
#define LAGUERRE_CERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first three mirror the CLI exit codes.
 */
typedef enum LcStatus {
  LC_STATUS_OK = 0,
  LC_STATUS_VIOLATED = 1,
  LC_STATUS_INCONCLUSIVE = 2,
  LC_STATUS_INVALID_ARGUMENT = 3,
  LC_STATUS_NULL_POINTER = 4,
  LC_STATUS_BELOW_PROOF_RANGE = 5,
  LC_STATUS_OUT_OF_RANGE = 6,
  LC_STATUS_STREAM_END = 7,
  LC_STATUS_INTERNAL = 8,
} LcStatus;

typedef enum LcVerdict {
  LC_VERDICT_VERIFIED = 0,
  LC_VERDICT_VIOLATED = 1,
  LC_VERDICT_INCONCLUSIVE = 2,
} LcVerdict;

/**
 * Opaque stream of `(n, Q_n(1))`.
 */
typedef struct LcQStream LcQStream;

/**
 * Opaque verification report.
 */
typedef struct LcReport LcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or NULL. Valid until the next call
 * into this library from the same thread.
 */
const char *lc_last_error(void);

/**
 * Library version as a static string.
 */
const char *lc_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void lc_string_free(char *s);

/**
 * `|Q_n(1)| <= n!` for `0 <= n <= n_max`. Returns the verdict as a status
 * and stores the report in `*out`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum LcStatus lc_check_folklore(uint64_t n_max, struct LcReport **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum LcStatus lc_check_ratio_extrema(uint64_t n_max,
                                     uint32_t prec_start,
                                     uint32_t prec_cap,
                                     struct LcReport **out);

/**
 * `c` is a decimal (`"0.33"`) or fraction (`"33/100"`).
 *
 * # Safety
 * `c` must be a NUL-terminated string; `out` a valid pointer.
 */
enum LcStatus lc_check_theorem1_numeric(uint64_t n_max,
                                        const char *c,
                                        uint32_t prec_start,
                                        uint32_t prec_cap,
                                        struct LcReport **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum LcStatus lc_check_theorem1_tail(uint64_t n,
                                     uint32_t prec_start,
                                     uint32_t prec_cap,
                                     struct LcReport **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum LcStatus lc_check_lemma4(uint64_t k_max, struct LcReport **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum LcStatus lc_check_qraja(uint64_t n_max,
                             uint32_t prec_start,
                             uint32_t prec_cap,
                             struct LcReport **out);

/**
 * # Safety
 * `report` must be a live report from this library.
 */
enum LcVerdict lc_report_verdict(const struct LcReport *report);

/**
 * # Safety
 * `report` must be NULL or a live report from this library.
 */
size_t lc_report_witness_count(const struct LcReport *report);

/**
 * Writes witness `index` as `n` and outward-rounded `double` bounds.
 *
 * # Safety
 * `report` must be a live report; output pointers must be writable.
 */
enum LcStatus lc_report_witness(const struct LcReport *report,
                                size_t index,
                                uint64_t *n,
                                double *lo,
                                double *hi);

/**
 * Report as JSON; free with [`lc_string_free`]. NULL on error.
 *
 * # Safety
 * `report` must be a live report from this library.
 */
char *lc_report_json(const struct LcReport *report);

/**
 * # Safety
 * `report` must be NULL or a report from this library, not yet freed.
 */
void lc_report_free(struct LcReport *report);

/**
 * Stream of `Q_0(1) … Q_{n_max}(1)`.
 */
struct LcQStream *lc_qstream_new(uint64_t n_max);

/**
 * Advances the stream. On `LC_STATUS_OK`, `*n` holds the index and
 * `*value` a decimal string to free with [`lc_string_free`]. Returns
 * `LC_STATUS_STREAM_END` once exhausted.
 *
 * # Safety
 * `stream` must be live; `n` and `value` must be writable.
 */
enum LcStatus lc_qstream_next(struct LcQStream *stream, uint64_t *n, char **value);

/**
 * # Safety
 * `stream` must be NULL or a stream from this library, not yet freed.
 */
void lc_qstream_free(struct LcQStream *stream);

/**
 * Exact `Q_n(t)` for rational `t`, as a decimal integer or `num/den`.
 *
 * # Safety
 * `t` must be NUL-terminated; `value` writable.
 */
enum LcStatus lc_q_direct(uint64_t n, const char *t, char **value);

/**
 * Outward `double` bounds of `M(n) = √(e/π)·cos(2√n − π/4)/n^{1/4}`.
 *
 * # Safety
 * `lo` and `hi` must be writable.
 */
enum LcStatus lc_main_term(uint64_t n, uint32_t prec, double *lo, double *hi);

/**
 * Bounds of `J_order(2r)`, `order ∈ {0, 1, 3}`, with `r` a decimal or
 * fraction string.
 *
 * # Safety
 * `r` must be NUL-terminated; `lo` and `hi` writable.
 */
enum LcStatus lc_bessel(uint32_t order, const char *r, uint32_t prec, double *lo, double *hi);

/**
 * Bounds of the normalized error budget `(E_2 + … + E_8)·n^{3/4}`.
 *
 * # Safety
 * `lo` and `hi` must be writable.
 */
enum LcStatus lc_error_budget_normalized(uint64_t n, uint32_t prec, double *lo, double *hi);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LAGUERRE_CERT_H */
