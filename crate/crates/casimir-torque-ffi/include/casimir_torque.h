/* C ABI for the casimir-torque library.
 *
 * Mirrors are opaque handles created by the ct_mirror_* constructors and
 * released with ct_mirror_free. Every computation returns a CtStatus and
 * writes results through out-pointers. Units are natural: frequencies in a
 * reference omega_ref, lengths in c/omega_ref; torques are dimensionless in
 * the normalization reported alongside them. Link against the
 * casimir_torque_ffi cdylib or staticlib.
 */

#ifndef CASIMIR_TORQUE_H
#define CASIMIR_TORQUE_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque mirror handle. */
typedef struct CtMirror CtMirror;

/* Status codes of every fallible call. */
typedef enum CtStatus {
  CT_STATUS_OK = 0,
  CT_STATUS_NULL_POINTER = 1,
  CT_STATUS_INVALID_ARGUMENT = 2,
  CT_STATUS_OUT_OF_RANGE = 3,
  CT_STATUS_SINGULAR = 4,
  CT_STATUS_NO_CONVERGENCE = 5,
  CT_STATUS_INCONSISTENT_CONSTANT = 6,
  CT_STATUS_IO_ERROR = 7,
} CtStatus;

/* Which dimensionless number a torque result carries. */
typedef enum CtNormalization {
  /* tau L / (hbar c): kappa-independent mirror pairs. */
  CT_NORMALIZATION_TAU_L_OVER_HBAR_C = 0,
  /* tau / (hbar omega_ref): dispersive mirror pairs. */
  CT_NORMALIZATION_TAU_OVER_HBAR_OMEGA_REF = 1,
} CtNormalization;

/* Quadrature tolerances; obtain defaults from ct_quadrature_defaults. */
typedef struct CtQuadratureSettings {
  double rel_tol;
  double abs_tol;
  uint32_t max_subdivisions;
} CtQuadratureSettings;

/* Torque plus quadrature diagnostics. */
typedef struct CtTorqueResult {
  double tau;
  double error_estimate;
  uint64_t evaluations;
  CtNormalization normalization;
} CtTorqueResult;

/* Static description of a status code. */
const char *ct_status_message(CtStatus status);

/* Default settings: rel_tol 1e-10, abs_tol 1e-14, 200 subdivisions. */
CtQuadratureSettings ct_quadrature_defaults(void);

/* Mirror constructors. All return NULL on invalid input. */

/* Ideal polarizer r_x = sign, r_y = 0; sign must be +1 or -1. */
CtMirror *ct_mirror_perfect_polarizer(int sign);

/* Lossy polarizer r_x = r, r_y = 0, |r| <= 1. */
CtMirror *ct_mirror_lossy(double r);

/* Frequency-independent amplitudes, |r| <= 1 each. */
CtMirror *ct_mirror_constant(double r_x, double r_y);

/* Semi-infinite medium with one Lorentz resonance per principal axis. */
CtMirror *ct_mirror_lorentz(double omega0_x, double omega_p_x, double inv_tau_x,
                            double omega0_y, double omega_p_y,
                            double inv_tau_y);

/* Free-standing Lorentz film of the given thickness (c/omega_ref units). */
CtMirror *ct_mirror_slab(double omega0_x, double omega_p_x, double inv_tau_x,
                         double omega0_y, double omega_p_y, double inv_tau_y,
                         double thickness);

/* Tabulated amplitudes on a strictly increasing kappa grid, len >= 2.
 * kappa, r_x, r_y must each point to len doubles. */
CtMirror *ct_mirror_tabulated(const double *kappa, const double *r_x,
                              const double *r_y, size_t len);

/* Tabulated amplitudes from a three-column text file "kappa r_x r_y". */
CtMirror *ct_mirror_tabulated_from_file(const char *path);

/* Releases a mirror handle; NULL is allowed. */
void ct_mirror_free(CtMirror *mirror);

/* True when the mirror's amplitudes depend on kappa. */
bool ct_mirror_is_dispersive(const CtMirror *mirror);

/* Principal-axis amplitudes and anisotropy at kappa > 0. NULL out-pointers
 * are skipped. */
CtStatus ct_reflection_pair(const CtMirror *mirror, double kappa, double *r_x,
                            double *r_y, double *delta_r);

/* The torque integrand F(kappa) for the given pair. */
CtStatus ct_integrand(const CtMirror *mirror1, const CtMirror *mirror2,
                      double gamma, double separation, double kappa,
                      double *value);

/* Integrates the torque for the pair; settings may be NULL for defaults. */
CtStatus ct_torque(const CtMirror *mirror1, const CtMirror *mirror2,
                   double gamma, double separation,
                   const CtQuadratureSettings *settings,
                   CtTorqueResult *result);

/* Closed-form torque for two ideal polarizers, natural units (multiply by
 * the separation for tau L / (hbar c)). */
CtStatus ct_torque_perfect_polarizers(double gamma, double separation,
                                      double *tau);

/* Closed-form torque for two lossy polarizers of amplitude r. */
CtStatus ct_torque_lossy(double gamma, double separation, double r,
                         double *tau);

/* Weak-reflector sinusoidal approximation. */
CtStatus ct_small_r_approx(double gamma, double separation, double r,
                           double *tau);

/* Cross-validates the Green's-function kernel against the integrand over
 * len kappa samples. Writes the maximum floored relative deviation and the
 * estimated proportionality constant (NaN when unresolved); out-pointers
 * may be NULL. */
CtStatus ct_validate(const CtMirror *mirror1, const CtMirror *mirror2,
                     double gamma, double separation, const double *kappas,
                     size_t len, double *max_deviation, double *c0);

/* Converts a dimensionless torque to newton meters. The scale is the
 * separation in meters for CT_NORMALIZATION_TAU_L_OVER_HBAR_C, the
 * reference frequency in rad/s for
 * CT_NORMALIZATION_TAU_OVER_HBAR_OMEGA_REF. */
CtStatus ct_to_si(double tau, CtNormalization normalization, double scale,
                  double *newton_meters);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CASIMIR_TORQUE_H */
