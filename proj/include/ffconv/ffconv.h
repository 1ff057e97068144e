/* C interface to the finite free convolution library.
 *
 * Polynomials cross the boundary as opaque ffc_poly handles; every other
 * result is returned as a JSON string owned by the caller and released
 * with ffc_string_free. Rationals are passed as "p/q" text. Functions
 * return FFC_OK or an error status; the message of the most recent error
 * on the calling thread is available from ffc_last_error_message. */
#ifndef FFCONV_FFCONV_H
#define FFCONV_FFCONV_H

#include <stdint.h>

#if defined(FFC_BUILDING_LIBRARY)
#define FFC_API __attribute__((visibility("default")))
#else
#define FFC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ffc_status {
  FFC_OK = 0,
  FFC_ERR_INTERNAL = 1,
  FFC_ERR_MALFORMED = 3,
  FFC_ERR_SIZE_LIMIT = 4,
  FFC_ERR_DOMAIN = 5,
  FFC_ERR_DIMENSION = 6,
  FFC_ERR_CONVERGENCE = 7,
  FFC_ERR_INDEX = 8
} ffc_status;

typedef struct ffc_poly ffc_poly;

FFC_API const char* ffc_version(void);
FFC_API const char* ffc_last_error_message(void);
FFC_API const char* ffc_status_name(ffc_status status);
FFC_API void ffc_string_free(char* s);

/* Partition-size cap n_max shared by every lattice sum. */
FFC_API ffc_status ffc_set_max_partition_size(int n);
FFC_API int ffc_get_max_partition_size(void);

/* Accepts {"degree","a"}, {"coefficients"} or {"roots"}. */
FFC_API ffc_status ffc_poly_from_json(const char* json, ffc_poly** out);
FFC_API ffc_status ffc_poly_from_roots(const char* csv, ffc_poly** out);
FFC_API ffc_status ffc_poly_to_json(const ffc_poly* p, char** out);
FFC_API int ffc_poly_degree(const ffc_poly* p);
FFC_API void ffc_poly_free(ffc_poly* p);

FFC_API ffc_status ffc_boxplus(const ffc_poly* p, const ffc_poly* q, ffc_poly** out);
FFC_API ffc_status ffc_boxplus_power(const ffc_poly* p, const char* t, ffc_poly** out);

FFC_API ffc_status ffc_cumulants(const ffc_poly* p, int rescaled, char** out);
FFC_API ffc_status ffc_moments(const ffc_poly* p, int count, char** out);
FFC_API ffc_status ffc_r_transform(const ffc_poly* p, char** out);
FFC_API ffc_status ffc_roots(const ffc_poly* p, double tol, char** out);
FFC_API ffc_status ffc_coeffs_from_cumulants(const char* cumulants_json, ffc_poly** out);
FFC_API ffc_status ffc_coeffs_from_moments(const char* moments_json, int d, ffc_poly** out);
FFC_API ffc_status ffc_cumulants_from_moments(const char* moments_json, int d, char** out);
FFC_API ffc_status ffc_moments_from_cumulants(const char* cumulants_json, int count, char** out);

/* P_sigma, its join form and Q_sigma for a partition such as "{1,3|2}". */
FFC_API ffc_status ffc_p_sigma(const char* sigma, char** out);
/* Counts of P(n) and NC(n) by type; with list != 0 also every partition
 * (of NC(n) when noncrossing != 0). */
FFC_API ffc_status ffc_partitions(int n, int noncrossing, int list, char** out);

FFC_API ffc_status ffc_hermite(int d, int shrunk, ffc_poly** out);
FFC_API ffc_status ffc_poisson(const char* lambda, int d, ffc_poly** out);
FFC_API ffc_status ffc_clt_rescaled_sum(const ffc_poly* p, long n, char** out);

FFC_API ffc_status ffc_free_moments(const char* r_csv, int count, char** out);
FFC_API ffc_status ffc_free_cumulants(const char* moments_json, int count, char** out);
FFC_API ffc_status ffc_convergence(const char* r_csv, int n, const char* d_csv, char** out);

FFC_API ffc_status ffc_is_cpd(const char* kappa_csv, int* out);
FFC_API ffc_status ffc_check_id(const ffc_poly* p, char** out);
FFC_API ffc_status ffc_threshold(const ffc_poly* p, const char* t_max, int steps, char** out);
FFC_API ffc_status ffc_cramer(int d, const char* eps, char** out);

/* Monte-Carlo estimate of p boxplus q together with the exact coefficients
 * and a per-coefficient verdict |exact - mean| <= 5 stderr + 0.02. */
FFC_API ffc_status ffc_verify_mc(const ffc_poly* p, const ffc_poly* q, long samples, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif
