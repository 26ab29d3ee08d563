/* C API for the zkspec shared library.
 *
 * All entry points return a zk_status; out-parameters are written only on
 * ZK_OK.  Handles are opaque and must be released with the matching
 * zk_*_free.  zk_last_error() returns a thread-local message describing the
 * most recent failure on the calling thread.
 */
#ifndef ZKSPEC_H
#define ZKSPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ZK_OK = 0,
  ZK_EINVAL = 1,   /* invalid argument / configuration */
  ZK_ENOCONV = 2,  /* iteration failed to converge */
  ZK_EBRACKET = 3, /* shooting bracket does not straddle the separatrix */
  ZK_ERANK = 4,    /* rank-deficient or exhaustive constraint set */
  ZK_EIO = 5,      /* file I/O failure */
  ZK_EEIG = 6,     /* eigensolver failure */
  ZK_EINTERNAL = 7
} zk_status;

const char* zk_status_message(zk_status status);
const char* zk_last_error(void);

/* ---- radial ground state ---- */

typedef struct zk_radial zk_radial;

zk_status zk_radial_solve(double L, int n_nodes, double tol, int max_iter,
                          zk_radial** out);
zk_status zk_radial_shoot(double L, double amp_lo, double amp_hi, double tol,
                          zk_radial** out);
zk_status zk_radial_load(const char* path, zk_radial** out);
zk_status zk_radial_save(const zk_radial* profile, const char* path);

int zk_radial_size(const zk_radial* profile);
int zk_radial_iterations(const zk_radial* profile);
double zk_radial_residual(const zk_radial* profile);
/* Copy up to cap entries into any non-NULL arrays; returns entries copied. */
int zk_radial_data(const zk_radial* profile, double* r, double* value,
                   double* deriv, int cap);
zk_status zk_radial_diagnostics(const zk_radial* profile, double* mass,
                                double* grad_sq, double* l4_4, double* energy);
void zk_radial_free(zk_radial* profile);

/* ---- pipeline ---- */

typedef struct {
  double L;         /* domain half-width, default 20 */
  double a;         /* mapping steepness, default 4 */
  int N;            /* polynomial degree per dimension, default 48 */
  int radial_nodes; /* default 2000 */
  const char* op;   /* "M", "B2", "L", "P2bar" or "all" */
  double tol_eig;
  double tol_radial;
  int use_cache;         /* nonzero: reuse cached radial profile */
  const char* cache_dir; /* NULL: caching disabled */
} zk_config;

void zk_config_init(zk_config* config);

typedef struct zk_run_handle zk_run_handle;

zk_status zk_run(const zk_config* config, zk_run_handle** out);

int zk_run_report_count(const zk_run_handle* run);
const char* zk_run_report_operator(const zk_run_handle* run, int index);
const char* zk_run_report_json(const zk_run_handle* run, int index);
/* 1 = coercivity verdict positive, 0 = not certified, -1 = bad index. */
int zk_run_report_positive(const zk_run_handle* run, int index);
int zk_run_report_eigenvalue_count(const zk_run_handle* run, int index);
int zk_run_report_eigenvalues(const zk_run_handle* run, int index,
                              double* values, int cap);

zk_status zk_run_write_outputs(const zk_run_handle* run, const char* out_dir,
                               int emit_slices);
void zk_run_free(zk_run_handle* run);

#ifdef __cplusplus
}
#endif

#endif
