/*
 * hhdec - boundary-value decomposition u = h + H on planar Jordan curves.
 *
 * C interface to the shared library: opaque handles, status codes, and the
 * last-error message per thread. All arrays are caller-allocated with the
 * sizes reported by the corresponding *_size call.
 */
#ifndef HHDEC_H
#define HHDEC_H

#include <stddef.h>

#if defined(_WIN32)
#define HHDEC_API __declspec(dllexport)
#else
#define HHDEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hhdec_status {
    HHDEC_OK = 0,
    HHDEC_ERR_INVALID_ARGUMENT = 1,
    HHDEC_ERR_INVALID_SPEC = 2,
    HHDEC_ERR_PARSE = 3,
    HHDEC_ERR_IO = 4,
    HHDEC_ERR_OFFSET_TOO_LARGE = 5,
    HHDEC_ERR_POINT_NOT_INTERIOR = 6,
    HHDEC_ERR_POINT_NOT_EXTERIOR = 7,
    HHDEC_ERR_CURVE_MISMATCH = 8,
    HHDEC_ERR_POLYGON_UNSUPPORTED = 9,
    HHDEC_ERR_INPUT_NOT_HARDY = 10,
    HHDEC_ERR_PATH_LEAVES_DOMAIN = 11,
    HHDEC_ERR_DATA_NOT_REAL = 12,
    HHDEC_ERR_NOT_A_DISC = 13,
    HHDEC_ERR_POLE_ON_CURVE = 14,
    HHDEC_ERR_CAP_TOO_SHORT = 15,
    HHDEC_ERR_SOLVER = 16,
    HHDEC_ERR_NON_CONVERGENT = 17,
    HHDEC_ERR_INTERNAL = 18
} hhdec_status;

typedef struct hhdec_curve hhdec_curve;
typedef struct hhdec_data hhdec_data;

/* Message describing the most recent failure on this thread. */
HHDEC_API const char* hhdec_last_error(void);
HHDEC_API const char* hhdec_version(void);

/* ---- curves ---------------------------------------------------------- */

/* JSON specs, e.g. {"kind":"disc","center":[0,0],"radius":1.0,"n":256}. */
HHDEC_API hhdec_status hhdec_curve_from_json(const char* json_text, hhdec_curve** out);
HHDEC_API hhdec_status hhdec_curve_from_json_file(const char* path, hhdec_curve** out);
/* Same, overriding the resolution knob (n, or panels per side for polygons).
 * n_override <= 0 keeps the value from the JSON. */
HHDEC_API hhdec_status hhdec_curve_from_json_file_n(const char* path, int n_override,
                                                    hhdec_curve** out);
HHDEC_API void hhdec_curve_free(hhdec_curve* curve);

HHDEC_API int hhdec_curve_size(const hhdec_curve* curve);
HHDEC_API double hhdec_curve_length(const hhdec_curve* curve);
/* Any output pointer may be NULL. */
HHDEC_API hhdec_status hhdec_curve_nodes(const hhdec_curve* curve, double* t, double* re_z,
                                         double* im_z, double* re_dz, double* im_dz, double* w);
HHDEC_API hhdec_status hhdec_curve_offset(const hhdec_curve* curve, double eps,
                                          hhdec_curve** out);
HHDEC_API hhdec_status hhdec_curve_write_csv(const hhdec_curve* curve, const char* path);

/* labels: 0 interior, 1 exterior, 2 near-boundary. near_threshold <= 0 uses
 * the default of five node spacings. */
HHDEC_API hhdec_status hhdec_curve_classify(const hhdec_curve* curve, int npts,
                                            const double* re, const double* im,
                                            double near_threshold, int* labels,
                                            double* distance);

/* ---- boundary data ---------------------------------------------------- */

HHDEC_API hhdec_status hhdec_data_from_csv(const hhdec_curve* curve, const char* path,
                                           hhdec_data** out);
/* Builtins: "fourier:M", "rational:a,b,..." (real pole locations, unit
 * residues), "indicator:t1,t2". */
HHDEC_API hhdec_status hhdec_data_builtin(const hhdec_curve* curve, const char* name,
                                          unsigned long long seed, hhdec_data** out);
HHDEC_API hhdec_status hhdec_data_from_values(const hhdec_curve* curve, const double* re,
                                              const double* im, hhdec_data** out);
HHDEC_API void hhdec_data_free(hhdec_data* data);
HHDEC_API int hhdec_data_size(const hhdec_data* data);
HHDEC_API hhdec_status hhdec_data_values(const hhdec_data* data, double* re, double* im);
HHDEC_API hhdec_status hhdec_data_write_csv(const hhdec_curve* curve, const hhdec_data* data,
                                            const char* path);

/* Reference split of a builtin datum into its exact h and H parts
 * (fourier and rational only). */
HHDEC_API hhdec_status hhdec_oracle_split(const hhdec_curve* curve, const char* name,
                                          unsigned long long seed, hhdec_data** u,
                                          hhdec_data** h, hhdec_data** H);

/* ---- decomposition and transforms ------------------------------------- */

typedef struct hhdec_decomp_diag {
    double residual;          /* max |u - h - H| */
    double projection_defect; /* max |C h - h| */
    double exterior_defect;   /* max |C H| */
    double jump_error;        /* Plemelj probe at a mid-curve node */
} hhdec_decomp_diag;

HHDEC_API hhdec_status hhdec_decompose(const hhdec_curve* curve, const hhdec_data* u,
                                       hhdec_data** h, hhdec_data** H,
                                       hhdec_decomp_diag* diag);

HHDEC_API hhdec_status hhdec_cauchy_interior(const hhdec_curve* curve, const hhdec_data* u,
                                             double re_z, double im_z, double* re_out,
                                             double* im_out);
HHDEC_API hhdec_status hhdec_cauchy_exterior(const hhdec_curve* curve, const hhdec_data* u,
                                             double re_z, double im_z, double* re_out,
                                             double* im_out);
HHDEC_API hhdec_status hhdec_cauchy_boundary(const hhdec_curve* curve, const hhdec_data* u,
                                             hhdec_data** out);

HHDEC_API hhdec_status hhdec_plemelj_jump(const hhdec_curve* curve, const hhdec_data* u,
                                          int node, int ndeltas, const double* deltas,
                                          double* re_jump, double* im_jump, double* abs_err);

/* Slow principal-value oracle for the boundary transform at one node. */
HHDEC_API hhdec_status hhdec_brute_pv(const hhdec_curve* curve, const hhdec_data* u, int node,
                                      double* re_out, double* im_out);

/* ---- antiderivative ---------------------------------------------------- */

typedef struct hhdec_antider_diag {
    double endpoint_residual; /* |integral of h dz| over the boundary */
    double hardy_defect;      /* projection defect of the input */
    double interior_rel_error; /* derivative check at an interior probe */
} hhdec_antider_diag;

HHDEC_API hhdec_status hhdec_antiderivative(const hhdec_curve* curve, const hhdec_data* h,
                                            hhdec_data** boundary, hhdec_antider_diag* diag);

/* ---- Dirichlet on the disc --------------------------------------------- */

/* method1: U = h + reflected H (real part reported); method2: 2 Re C u - u0.
 * Data must be real-valued. */
HHDEC_API hhdec_status hhdec_dirichlet_disc(const hhdec_curve* curve, const hhdec_data* u,
                                            int npts, const double* re_z, const double* im_z,
                                            double* method1, double* method2,
                                            double* abs_diff);

/* ---- Szego projection --------------------------------------------------- */

typedef struct hhdec_szego_diag {
    double idempotence;     /* ||P P u - P u||_2 / ||u||_2 */
    double self_adjointness; /* |<Pu, v> - <u, Pv>| / (||u||_2 ||v||_2), random v */
    double ks_skew_defect;  /* ||A + A*||_max */
    double ks_max_abs;      /* ||A||_max, zero on a disc */
} hhdec_szego_diag;

HHDEC_API hhdec_status hhdec_szego_project(const hhdec_curve* curve, const hhdec_data* u,
                                           hhdec_data** out, hhdec_szego_diag* diag);

typedef struct hhdec_pseudolocal_report {
    int n_coarse, n_fine;
    double mid_coarse, mid_fine;
    double end_coarse, end_fine;
    double mid_ratio, end_ratio;
    int certified;
} hhdec_pseudolocal_report;

/* datum names the local holomorphic function: "indicator" (h = 1 on the cap),
 * "monomial:k" (h = w^k), or "rational:a" (h = 1/(w - a)). */
HHDEC_API hhdec_status hhdec_szego_pseudolocal(const char* curve_json, double t1, double t2,
                                               const char* datum,
                                               hhdec_pseudolocal_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HHDEC_H */
