/* hatsiegel - special Siegel half-space geometry and line-bundle calculus
 * on the associated abelian surface.
 *
 * C interface to the shared library. All state lives behind the opaque
 * session handle; every call returns an hs_status code and the last error
 * message is kept per session. Strings returned through out-parameters are
 * allocated by the library and must be released with hs_string_free.
 */

#ifndef HATSIEGEL_H
#define HATSIEGEL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
    HS_OK = 0,
    HS_CHECK_FAILED = 1, /* a verification/accuracy check did not pass */
    HS_ERROR = 2         /* domain violation, bad request or usage error */
} hs_status;

typedef struct hs_session hs_session;

const char* hs_version(void);

hs_session* hs_session_new(void);
void hs_session_free(hs_session* s);

/* Default comparison tolerances for subsequent calls (abs 1e-10, rel 1e-9
 * until overridden). Returns HS_ERROR for non-positive values. */
hs_status hs_session_set_tolerance(hs_session* s, double abs_tol, double rel_tol);
hs_status hs_session_set_seed(hs_session* s, uint64_t seed);

/* Message describing the most recent failure on this session; empty string
 * when the last call succeeded. The pointer stays valid until the next call
 * on the same session. */
const char* hs_last_error(const hs_session* s);

/* JSON command interface: request {"subcommand": ..., "payload": {...}}
 * (seed/tolerances from the session unless present in the request).
 * *response receives a JSON document in every case, including errors.
 * The returned status mirrors the CLI exit code. */
hs_status hs_dispatch_json(hs_session* s, const char* request_json, char** response);

void hs_string_free(char* str);

/* --- typed convenience entry points ------------------------------------ */

/* Membership of [[tau, z], [z, tau]] in the special half-space. */
hs_status hs_point_check(hs_session* s, double tau_re, double tau_im, double z_re, double z_im,
                         int* in_domain);

/* Invariant distance between two points given as (tau, z) pairs. */
hs_status hs_distance(hs_session* s, double tau1_re, double tau1_im, double z1_re, double z1_im,
                      double tau2_re, double tau2_im, double z2_re, double z2_im, double* rho);

/* Section-space dimension of the named form ("omega", "tau", "star"). */
hs_status hs_section_dimension(hs_session* s, const char* kind, double tau_re, double tau_im,
                               double z_re, double z_im, int64_t* dimension);

/* Exact Pfaffian of a 4x4 antisymmetric integer matrix (row-major). */
hs_status hs_pfaffian4(hs_session* s, const int64_t entries[16], int64_t* pfaffian);

/* Smith normal form divisors of a 4x4 integer matrix (row-major). */
hs_status hs_smith_divisors4(hs_session* s, const int64_t entries[16], int64_t divisors[4]);

/* Truncated theta series at (tau, z), z-argument (z1, z2); radius <= 0 asks
 * the library to pick the radius from the 1e-12 tail target. */
hs_status hs_theta(hs_session* s, double tau_re, double tau_im, double z_re, double z_im,
                   double z1_re, double z1_im, double z2_re, double z2_im, int radius,
                   double* value_re, double* value_im, double* tail_bound);

/* Runs a named property suite ("all" for every suite); *failures receives
 * the number of failed suites. HS_CHECK_FAILED when any failed. */
hs_status hs_verify(hs_session* s, const char* suite, int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HATSIEGEL_H */
