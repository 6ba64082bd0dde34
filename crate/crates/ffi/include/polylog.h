#ifndef POLYLOG_H
#define POLYLOG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlgFamily {
  PLG_FAMILY_PLUS = 0,
  PLG_FAMILY_MINUS = 1,
  PLG_FAMILY_MIXED = 2,
} PlgFamily;

typedef enum PlgStatus {
  PLG_STATUS_OK = 0,
  PLG_STATUS_NULL_POINTER = 1,
  PLG_STATUS_INVALID_ARGUMENT = 2,
  PLG_STATUS_DOMAIN = 3,
  PLG_STATUS_CAPACITY = 4,
  PLG_STATUS_CONVERGENCE = 5,
  PLG_STATUS_PARSE = 6,
  PLG_STATUS_BUFFER_TOO_SMALL = 7,
  PLG_STATUS_INTERNAL = 8,
} PlgStatus;

typedef enum PlgSum {
  PLG_SUM_S_PLUS = 0,
  PLG_SUM_S_MINUS = 1,
  PLG_SUM_JORDAN1 = 2,
  PLG_SUM_JORDAN2 = 3,
  PLG_SUM_MILGRAM = 4,
  PLG_SUM_C = 5,
} PlgSum;

/**
 * Opaque exact closed form.
 */
typedef struct PlgClosedForm PlgClosedForm;

/**
 * Opaque verification report.
 */
typedef struct PlgReport PlgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf`.
 */
enum PlgStatus plg_last_error(char *buf, size_t len, size_t *needed);

/**
 * Parses the text syntax, e.g. `"2 - pi^2/6"`.
 */
enum PlgStatus plg_closed_parse(const char *src, struct PlgClosedForm **out);

/**
 * Parses the JSON serialization.
 */
enum PlgStatus plg_closed_from_json(const char *src, struct PlgClosedForm **out);

void plg_closed_free(struct PlgClosedForm *cf);

enum PlgStatus plg_closed_add(const struct PlgClosedForm *a,
                              const struct PlgClosedForm *b,
                              struct PlgClosedForm **out);

enum PlgStatus plg_closed_mul(const struct PlgClosedForm *a,
                              const struct PlgClosedForm *b,
                              struct PlgClosedForm **out);

/**
 * Returns 1 if the two forms are identical, else 0, through `out`.
 */
enum PlgStatus plg_closed_equal(const struct PlgClosedForm *a,
                                const struct PlgClosedForm *b,
                                int32_t *out);

/**
 * Decimal value using the shared constant table.
 */
enum PlgStatus plg_closed_eval(const struct PlgClosedForm *cf, double *out);

/**
 * Canonical text form, re-readable by `plg_closed_parse`.
 */
enum PlgStatus plg_closed_to_string(const struct PlgClosedForm *cf,
                                    char *buf,
                                    size_t len,
                                    size_t *needed);

enum PlgStatus plg_closed_to_json(const struct PlgClosedForm *cf,
                                  char *buf,
                                  size_t len,
                                  size_t *needed);

/**
 * i(n,m) = ∫₀¹ lnⁿ(x) lnᵐ(1−x) dx.
 */
enum PlgStatus plg_inm(uint32_t n, uint32_t m, struct PlgClosedForm **out);

/**
 * h(n,m) = ∫₀¹ lnⁿ(x) lnᵐ(1+x) dx.
 */
enum PlgStatus plg_hnm(uint32_t n, uint32_t m, struct PlgClosedForm **out);

enum PlgStatus plg_ipq(enum PlgFamily family, uint32_t p, uint32_t q, struct PlgClosedForm **out);

enum PlgStatus plg_euler_sum(enum PlgSum sum, uint32_t r, struct PlgClosedForm **out);

/**
 * S_{n,p}(−1): the registered closed form, or the bare atom.
 */
enum PlgStatus plg_sigma_tilde(uint32_t n, uint32_t p, struct PlgClosedForm **out);

enum PlgStatus plg_s_minus_truncated(uint32_t p, uint32_t kt, struct PlgClosedForm **out);

/**
 * Nielsen S_{n,p}(z) by quadrature.
 */
enum PlgStatus plg_nielsen(uint32_t n, uint32_t p, double z, double *out);

/**
 * Runs a suite ("all", "ipq", "sums", "lognm", "appendix") with tolerances scaled by `tol_scale`.
 */
enum PlgStatus plg_verify(const char *suite, double tol_scale, struct PlgReport **out);

void plg_report_free(struct PlgReport *report);

/**
 * Pass and fail counts.
 */
enum PlgStatus plg_report_counts(const struct PlgReport *report, size_t *passed, size_t *failed);

enum PlgStatus plg_report_to_json(const struct PlgReport *report,
                                  char *buf,
                                  size_t len,
                                  size_t *needed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYLOG_H */
