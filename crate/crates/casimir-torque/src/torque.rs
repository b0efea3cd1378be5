//! Torque between two anisotropic walls from their reflection amplitudes.
//!
//! The torque on wall 2 is the imaginary-axis integral
//!
//! ```text
//! tau = -(hbar c / 2 pi) * Int_0^inf F(kappa) dkappa
//!
//!             dr1 dr2 sin(2 gamma) e^(-2 kappa L)
//! F(kappa) = --------------------------------------------------------------
//!            dr1 dr2 sin^2(gamma) e^(-2 kappa L)
//!              + (1 - r1x r2x e^(-2 kappa L)) (1 - r1y r2y e^(-2 kappa L))
//! ```
//!
//! with `dr = r_x - r_y` the anisotropy of each wall and `gamma` the angle
//! between their principal axes. The quadrature runs over `u = e^(-2 kappa L)`
//! on (0, 1], which compresses the exponential tail exactly and keeps the
//! transformed integrand bounded; the `u = 0` endpoint is never evaluated.
//!
//! For walls whose amplitudes do not depend on kappa the integral scales as
//! `1/L` exactly, so results are reported as the dimensionless product
//! `tau L / (hbar c)`. Dispersive walls introduce the reference frequency as
//! a scale and results are reported as `tau / (hbar omega_ref)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::material::MirrorModel;
use crate::quadrature::{self, QuadratureSettings};

pub use crate::quadrature::QuadratureOutcome;

/// Denominator magnitude below which the integrand is treated as singular.
/// Only ideal |r| = 1 mirror pairs at kappa L -> 0 can get here.
pub const DEFAULT_DENOMINATOR_GUARD: f64 = 1e-300;

/// Two walls at separation `L` with principal axes rotated by `angle`.
#[derive(Debug, Clone, PartialEq)]
pub struct CavityConfig {
    /// Wall separation, > 0. Units of `c / omega_ref`.
    pub separation: f64,
    /// Relative angle between principal axes, radians. Any real value;
    /// the physics has period pi.
    pub angle: f64,
    pub mirror1: MirrorModel,
    pub mirror2: MirrorModel,
}

impl CavityConfig {
    pub fn new(separation: f64, angle: f64, mirror1: MirrorModel, mirror2: MirrorModel) -> Result<Self> {
        if !(separation > 0.0) || !separation.is_finite() {
            return Err(Error::domain(format!("separation must be > 0, got {separation}")));
        }
        if !angle.is_finite() {
            return Err(Error::domain(format!("angle must be finite, got {angle}")));
        }
        Ok(Self { separation, angle, mirror1, mirror2 })
    }

    /// The angle folded into (-pi/2, pi/2] for reporting.
    pub fn reduced_angle(&self) -> f64 {
        let mut a = self.angle.rem_euclid(std::f64::consts::PI);
        if a > std::f64::consts::FRAC_PI_2 {
            a -= std::f64::consts::PI;
        }
        a
    }

    /// True when either wall's amplitudes depend on kappa.
    pub fn is_dispersive(&self) -> bool {
        self.mirror1.is_dispersive() || self.mirror2.is_dispersive()
    }

    fn validate(&self) -> Result<()> {
        if !(self.separation > 0.0) || !self.separation.is_finite() {
            return Err(Error::domain(format!(
                "separation must be > 0, got {}",
                self.separation
            )));
        }
        Ok(())
    }
}

/// Which dimensionless number a [`TorqueResult`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    /// `tau L / (hbar c)`; used for kappa-independent mirror pairs.
    #[serde(rename = "tauL_over_hbar_c")]
    TauLOverHbarC,
    /// `tau / (hbar omega_ref)`; used when either mirror is dispersive.
    #[serde(rename = "tau_over_hbar_omega_ref")]
    TauOverHbarOmegaRef,
}

/// Converged torque with quadrature diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorqueResult {
    /// Dimensionless torque in the declared normalization.
    pub tau: f64,
    /// Absolute error estimate on `tau`, same normalization.
    pub error_estimate: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: u64,
    pub normalization: Normalization,
}

impl TorqueResult {
    /// The product `tau L / (hbar c)` regardless of normalization;
    /// `l` is the separation in `c / omega_ref`.
    pub fn tau_times_length(&self, l: f64) -> f64 {
        match self.normalization {
            Normalization::TauLOverHbarC => self.tau,
            Normalization::TauOverHbarOmegaRef => self.tau * l,
        }
    }
}

/// Integrand evaluated from `u = e^(-2 kappa L)` with the numerator's factor
/// of `u` already divided out; used by the quadrature after the substitution.
fn integrand_over_u(u: f64, kappa: f64, cfg: &CavityConfig, guard: f64) -> Result<f64> {
    let p1 = cfg.mirror1.reflection_pair(kappa)?;
    let p2 = cfg.mirror2.reflection_pair(kappa)?;
    let (sin_g, cos_g) = cfg.angle.sin_cos();
    let sin_2g = 2.0 * sin_g * cos_g;
    let dd = p1.delta_r * p2.delta_r;
    let den = dd * sin_g * sin_g * u
        + (1.0 - p1.r_x * p2.r_x * u) * (1.0 - p1.r_y * p2.r_y * u);
    if den.abs() < guard {
        return Err(Error::SingularDenominator { kappa });
    }
    Ok(dd * sin_2g / den)
}

/// The torque integrand `F(kappa)` for the given cavity.
///
/// Zero whenever the axes align (`gamma = 0 mod pi/2`) or either wall is
/// isotropic. Fails with [`Error::SingularDenominator`] only for ideal
/// |r| = 1 closures as `kappa L -> 0`.
pub fn integrand(kappa: f64, cfg: &CavityConfig) -> Result<f64> {
    integrand_with_guard(kappa, cfg, DEFAULT_DENOMINATOR_GUARD)
}

/// [`integrand`] with an explicit denominator guard.
pub fn integrand_with_guard(kappa: f64, cfg: &CavityConfig, guard: f64) -> Result<f64> {
    if !(kappa > 0.0) {
        return Err(Error::domain(format!("kappa must be > 0, got {kappa}")));
    }
    cfg.validate()?;
    let u = (-2.0 * kappa * cfg.separation).exp();
    Ok(integrand_over_u(u, kappa, cfg, guard)? * u)
}

/// Integrates the torque for the cavity, adaptively to the requested
/// tolerances.
///
/// The result is `tau L / (hbar c)` for kappa-independent mirrors and
/// `tau / (hbar omega_ref)` for dispersive ones; see
/// [`TorqueResult::normalization`].
pub fn torque(cfg: &CavityConfig, settings: &QuadratureSettings) -> Result<TorqueResult> {
    cfg.validate()?;
    settings.validate()?;

    let normalization = if cfg.is_dispersive() {
        Normalization::TauOverHbarOmegaRef
    } else {
        Normalization::TauLOverHbarC
    };
    // Map tau = -scale/(2 pi) * integral; scale the quadrature's absolute
    // tolerance so the reported error honors the caller's tolerances in tau
    // units.
    let scale = match normalization {
        Normalization::TauLOverHbarC => cfg.separation,
        Normalization::TauOverHbarOmegaRef => 1.0,
    };
    let factor = scale / (2.0 * std::f64::consts::PI);

    let (sin_g, cos_g) = cfg.angle.sin_cos();
    if 2.0 * sin_g * cos_g == 0.0 {
        // sin(2 gamma) = 0: the integrand vanishes identically.
        return Ok(TorqueResult { tau: 0.0, error_estimate: 0.0, evaluations: 0, normalization });
    }

    let l = cfg.separation;
    let inner = QuadratureSettings {
        abs_tol: settings.abs_tol / factor,
        ..*settings
    };
    let outcome = quadrature::integrate(
        |u| {
            let kappa = -u.ln() / (2.0 * l);
            // d kappa = -du / (2 L u); the integrand's u cancels the 1/u.
            Ok(integrand_over_u(u, kappa, cfg, DEFAULT_DENOMINATOR_GUARD)? / (2.0 * l))
        },
        0.0,
        1.0,
        &inner,
    )?;

    Ok(TorqueResult {
        tau: -factor * outcome.value,
        error_estimate: factor * outcome.error_estimate,
        evaluations: outcome.evaluations,
        normalization,
    })
}

/// `ln(sin^2 gamma)` computed from whichever of sin/cos is better
/// conditioned near the removable points.
fn log_sin_sq(sin_g: f64, cos_g: f64) -> f64 {
    if cos_g * cos_g < 0.5 {
        (-cos_g * cos_g).ln_1p()
    } else {
        (sin_g * sin_g).ln()
    }
}

/// Closed-form torque for two ideal polarizers (`r_x = +-1`, `r_y = 0`):
/// `tau = (hbar c / 2 pi L) tan(gamma) ln(sin^2 gamma)`.
///
/// Returned in natural units (`hbar = c = 1`); multiply by `l` for the
/// dimensionless `tau L / (hbar c)`. The removable points
/// `gamma = 0 mod pi/2` evaluate to their limit, 0.
pub fn torque_perfect_polarizers(gamma: f64, l: f64) -> Result<f64> {
    if !(l > 0.0) {
        return Err(Error::domain(format!("separation must be > 0, got {l}")));
    }
    let (sin_g, cos_g) = gamma.sin_cos();
    if sin_g == 0.0 || cos_g == 0.0 || cos_g.abs() == 1.0 {
        return Ok(0.0);
    }
    Ok(sin_g / cos_g * log_sin_sq(sin_g, cos_g) / (2.0 * std::f64::consts::PI * l))
}

/// Closed-form torque for two polarizers backed by mirrors of amplitude `r`:
/// `tau = (hbar c tan(gamma) / 2 pi L) ln(1 - |r|^2 cos^2 gamma)`.
///
/// Natural units as in [`torque_perfect_polarizers`]. Reduces to the ideal
/// form at |r| = 1; fails at the genuinely singular point |r| = 1,
/// `gamma = 0 mod pi` where the logarithm diverges.
pub fn torque_lossy(gamma: f64, l: f64, r: f64) -> Result<f64> {
    if !(l > 0.0) {
        return Err(Error::domain(format!("separation must be > 0, got {l}")));
    }
    if !(r.abs() <= 1.0) {
        return Err(Error::domain(format!("|r| must be <= 1, got {r}")));
    }
    let (sin_g, cos_g) = gamma.sin_cos();
    let rr_cos_sq = r * r * cos_g * cos_g;
    if rr_cos_sq == 1.0 {
        return Err(Error::SingularArgument {
            what: format!("log(1 - |r|^2 cos^2 gamma) diverges at |r| = 1, gamma = {gamma}"),
        });
    }
    if sin_g == 0.0 || cos_g == 0.0 {
        return Ok(0.0);
    }
    let log_term = if r.abs() == 1.0 {
        log_sin_sq(sin_g, cos_g)
    } else {
        (-rr_cos_sq).ln_1p()
    };
    Ok(sin_g / cos_g * log_term / (2.0 * std::f64::consts::PI * l))
}

/// Weak-reflector approximation `tau ~= -hbar c |r|^2 sin(2 gamma) / (4 pi L)`,
/// natural units.
pub fn small_r_approx(gamma: f64, l: f64, r: f64) -> Result<f64> {
    if !(l > 0.0) {
        return Err(Error::domain(format!("separation must be > 0, got {l}")));
    }
    Ok(-r * r * (2.0 * gamma).sin() / (4.0 * std::f64::consts::PI * l))
}

/// One row of a parameter scan: the abscissa (angle or separation) and the
/// torque outcome at that point. Failed rows carry their error.
#[derive(Debug)]
pub struct ScanRow {
    pub abscissa: f64,
    pub outcome: Result<TorqueResult>,
}

/// Torque at each angle in `angles`, other parameters from `cfg`.
pub fn scan_angle(cfg: &CavityConfig, angles: &[f64], settings: &QuadratureSettings) -> Vec<ScanRow> {
    angles
        .iter()
        .map(|&gamma| {
            let point = CavityConfig { angle: gamma, ..cfg.clone() };
            ScanRow { abscissa: gamma, outcome: torque(&point, settings) }
        })
        .collect()
}

/// Torque at each separation in `separations`, other parameters from `cfg`.
pub fn scan_distance(
    cfg: &CavityConfig,
    separations: &[f64],
    settings: &QuadratureSettings,
) -> Vec<ScanRow> {
    separations
        .iter()
        .map(|&l| {
            let outcome = if l > 0.0 && l.is_finite() {
                torque(&CavityConfig { separation: l, ..cfg.clone() }, settings)
            } else {
                Err(Error::domain(format!("separation must be > 0, got {l}")))
            };
            ScanRow { abscissa: l, outcome }
        })
        .collect()
}
