/* liecurve -- curves in the three 3-d Lie groups with bi-invariant metrics.
 *
 * C API of the shared library. All functions return lc_status (LC_OK on
 * success); objects are opaque handles released with the matching _free
 * call. Error detail for the current thread is available via lc_last_error.
 */
#ifndef LIECURVE_H
#define LIECURVE_H

#include <stddef.h>

#if defined(_WIN32)
#  define LIECURVE_API __declspec(dllexport)
#else
#  define LIECURVE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
  LC_OK = 0,
  LC_ERR_INVALID_ARGUMENT = 1,
  LC_ERR_IO = 2,
  LC_ERR_PARSE = 3,
  LC_ERR_INSUFFICIENT_SAMPLES = 4,
  LC_ERR_NON_UNIT_SPEED = 5,
  LC_ERR_GEODESIC_DEGENERACY = 6,
  LC_ERR_IRREGULAR_CURVE = 7,
  LC_ERR_CONSTANT_H = 8,
  LC_ERR_NOT_SLANT_HELIX = 9,
  LC_ERR_VANISHING_H = 10,
  LC_ERR_CUSP_IN_RANGE = 11,
  LC_ERR_DOMAIN_SINGULARITY = 12,
  LC_ERR_INTERNAL = 13
} lc_status;

typedef enum lc_group {
  LC_GROUP_ABELIAN = 0,
  LC_GROUP_SO3 = 1,
  LC_GROUP_SU2 = 2
} lc_group;

typedef enum lc_classification {
  LC_CLASS_GEODESIC = 0,
  LC_CLASS_CIRCULAR_HELIX = 1,
  LC_CLASS_GENERAL_HELIX = 2,
  LC_CLASS_SLANT_HELIX = 3,
  LC_CLASS_GENERIC = 4
} lc_classification;

typedef enum lc_profile_kind {
  LC_PROFILE_GEODESIC = 0,
  LC_PROFILE_CIRCULAR = 1,
  LC_PROFILE_GENERAL = 2,
  LC_PROFILE_SLANT = 3
} lc_profile_kind;

typedef enum lc_derived_kind {
  LC_DERIVED_TANGENT = 0,
  LC_DERIVED_NORMAL = 1,
  LC_DERIVED_BINORMAL = 2,
  LC_DERIVED_INVOLUTE = 3
} lc_derived_kind;

typedef enum lc_quantity {
  LC_QUANTITY_S = 0,
  LC_QUANTITY_KAPPA = 1,
  LC_QUANTITY_TAU = 2,
  LC_QUANTITY_TAU_G = 3,
  LC_QUANTITY_H = 4,
  LC_QUANTITY_H_PRIME = 5,
  LC_QUANTITY_SIGMA_N = 6 /* masked samples come back as NaN */
} lc_quantity;

typedef struct lc_curve lc_curve;
typedef struct lc_analysis lc_analysis;
typedef struct lc_derived lc_derived;

LIECURVE_API const char* lc_version(void);
LIECURVE_API const char* lc_status_name(lc_status status);
/* Message of the most recent failure on this thread ("" if none). */
LIECURVE_API const char* lc_last_error(void);

/* --- curves -------------------------------------------------------------- */

LIECURVE_API lc_status lc_curve_read_csv(lc_group group, const char* path,
                                         lc_curve** out);
LIECURVE_API lc_status lc_curve_write_csv(const lc_curve* curve,
                                          const char* path);
LIECURVE_API size_t lc_curve_samples(const lc_curve* curve);
LIECURVE_API lc_group lc_curve_group(const lc_curve* curve);
LIECURVE_API void lc_curve_free(lc_curve* curve);

/* --- synthesis ------------------------------------------------------------ */

typedef struct lc_synthesis_params {
  lc_profile_kind profile;
  double kappa0; /* constant curvature (circular/general/slant) */
  double tau0;   /* constant torsion (circular) */
  double slope;  /* general helix slope c in tau = c kappa + tau_g */
  double sigma;  /* slant helix constant m = sigma_N */
  double s0, s1, step;
} lc_synthesis_params;

/* Fill with the documented defaults (slant profile, kappa0 = 1, sigma = 1,
 * domain [-0.85, 0.85], step 1e-3). */
LIECURVE_API void lc_synthesis_params_init(lc_synthesis_params* params);
LIECURVE_API lc_status lc_synthesize(lc_group group,
                                     const lc_synthesis_params* params,
                                     lc_curve** out);

/* Round-trip check for synthesized curves: analyzes the curve and reports
 * the max abs deviation of the recovered kappa/tau from the prescribed
 * profiles over the interior window. Fails with LC_ERR_INVALID_ARGUMENT on
 * curves that were not produced by lc_synthesize. */
LIECURVE_API lc_status lc_curve_roundtrip_error(const lc_curve* curve,
                                                int fd_order,
                                                double* max_dkappa,
                                                double* max_dtau);

/* --- analysis ------------------------------------------------------------- */

typedef struct lc_analysis_options {
  double tol_rel_std;    /* constancy tolerance (default 1e-3) */
  int fd_order;          /* 2 or 4 (default 4) */
} lc_analysis_options;

LIECURVE_API void lc_analysis_options_init(lc_analysis_options* options);
LIECURVE_API lc_status lc_analyze(const lc_curve* curve,
                                  const lc_analysis_options* options,
                                  lc_analysis** out);
LIECURVE_API lc_classification lc_analysis_classification(
    const lc_analysis* analysis);
LIECURVE_API size_t lc_analysis_samples(const lc_analysis* analysis);
/* theta of a slant helix (NaN otherwise). */
LIECURVE_API double lc_analysis_theta(const lc_analysis* analysis);
/* Axis of a general or slant helix. */
LIECURVE_API lc_status lc_analysis_axis(const lc_analysis* analysis,
                                        double out[3]);
/* Copy a profile; *len receives the sample count. buf may be NULL to query
 * the length. */
LIECURVE_API lc_status lc_analysis_profile(const lc_analysis* analysis,
                                           lc_quantity quantity, double* buf,
                                           size_t cap, size_t* len);
LIECURVE_API lc_status lc_analysis_write_report(const lc_analysis* analysis,
                                                const char* path);
LIECURVE_API lc_status lc_analysis_write_plot(const lc_analysis* analysis,
                                              const char* path);
/* Report text as a malloc'd string; release with lc_string_free. */
LIECURVE_API lc_status lc_analysis_report_text(const lc_analysis* analysis,
                                               char** out);
LIECURVE_API void lc_analysis_free(lc_analysis* analysis);
LIECURVE_API void lc_string_free(char* text);

/* --- derived curves -------------------------------------------------------- */

LIECURVE_API lc_status lc_derive(const lc_curve* curve,
                                 const lc_analysis_options* options,
                                 lc_derived_kind kind, double involute_c,
                                 lc_derived** out);
LIECURVE_API size_t lc_derived_result_count(const lc_derived* derived);
LIECURVE_API lc_status lc_derived_write_report(const lc_derived* derived,
                                               const char* path);
LIECURVE_API lc_status lc_derived_write_plot(const lc_derived* derived,
                                             const char* path);
/* Derived curve polyline (indicatrix on its arc grid; the literal point
 * curve for the abelian involute; the frame tangent samples otherwise). */
LIECURVE_API lc_status lc_derived_write_curve_csv(const lc_derived* derived,
                                                  size_t index,
                                                  const char* path);
/* Ambient embedding polyline of a non-abelian involute (visualization only);
 * LC_ERR_INVALID_ARGUMENT for other kinds. */
LIECURVE_API lc_status lc_derived_write_embedding_csv(const lc_derived* derived,
                                                      const char* path);
LIECURVE_API void lc_derived_free(lc_derived* derived);

#ifdef __cplusplus
}
#endif

#endif /* LIECURVE_H */
