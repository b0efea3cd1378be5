//! Independent reconstruction of the torque integrand from the cavity
//! Green's function.
//!
//! The field between the walls is assembled from two 2x2 matrix solutions of
//! `(d^2/dz^2 + q^2) phi = 0` at `q = i kappa`: `u(z)` satisfies the boundary
//! condition at the right wall, `v(z)` at the left wall, each referred to its
//! own wall's principal axes and rotated by half the relative angle. The
//! Green's matrix follows from the standard two-solution construction, and
//! the xy-antisymmetric part of its coincident-point derivative kernel
//!
//! ```text
//! K(kappa; z) = (d/dz' - d/dz) [G_xy(z, z') - G_yx(z, z')] at z' -> z
//! ```
//!
//! is proportional to the closed-form torque integrand with one universal
//! constant, `K = c0 * F`, independent of z, angle, separation and mirror
//! pair. Numerically `c0 = -1` in this construction; [`validate`] estimates
//! it from the data rather than assuming it, and that universality is the
//! cross-check.
//!
//! All derivatives here are analytic; finite differences appear only in the
//! self-tests, as the independent method.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::torque::{integrand, CavityConfig};

/// Determinant magnitude below which a 2x2 inversion is refused.
pub const DET_GUARD: f64 = 1e-280;

/// Scale below which kernel and integrand are considered numerically
/// unresolvable; relative deviations are measured against
/// `max(|F|, KERNEL_FLOOR)`.
pub const KERNEL_FLOOR: f64 = 1e-6;

/// Acceptance threshold on the floored relative deviation reported by
/// [`validate`].
pub const VALIDATION_THRESHOLD: f64 = 1e-8;

/// Dense complex 2x2 matrix; row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        Self { m: [[m00, m01], [m10, m11]] }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::new(one, zero, zero, one)
    }

    pub fn diag(a: Complex64, b: Complex64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Self::new(a, zero, zero, b)
    }

    /// Real rotation by `theta`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(
            Complex64::new(c, 0.0),
            Complex64::new(-s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(c, 0.0),
        )
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.m;
        let b = &rhs.m;
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }

    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            self.m[0][0] - rhs.m[0][0],
            self.m[0][1] - rhs.m[0][1],
            self.m[1][0] - rhs.m[1][0],
            self.m[1][1] - rhs.m[1][1],
        )
    }

    pub fn scale(&self, s: Complex64) -> Mat2 {
        Mat2::new(self.m[0][0] * s, self.m[0][1] * s, self.m[1][0] * s, self.m[1][1] * s)
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Adjugate: `adj(M) * M = det(M) * I`.
    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(self.m[1][1], -self.m[0][1], -self.m[1][0], self.m[0][0])
    }

    /// Closed-form inverse via the adjugate, guarded against vanishing
    /// determinants.
    pub fn inverse(&self, what: &'static str) -> Result<Mat2> {
        let det = self.det();
        if det.norm() < DET_GUARD {
            return Err(Error::SingularMatrix { what, det_magnitude: det.norm() });
        }
        Ok(self.adjugate().scale(det.inv()))
    }

    pub fn max_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

/// The two matrix-valued homogeneous solutions for one cavity at one
/// imaginary wavenumber, with analytic derivatives.
#[derive(Debug, Clone)]
pub struct HomogeneousSolutions {
    kappa: f64,
    z1: f64,
    z2: f64,
    /// Rotation by half the relative angle, applied to the right-wall
    /// solution; the left-wall solution carries its transpose.
    rot: Mat2,
    rot_t: Mat2,
    refl1: (f64, f64),
    refl2: (f64, f64),
}

impl HomogeneousSolutions {
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Wall positions `(z1, z2)` with `z2 - z1 = L`.
    pub fn wall_positions(&self) -> (f64, f64) {
        (self.z1, self.z2)
    }

    /// `i q` with `q = i kappa`; the exponent rate of all terms.
    fn iq(&self) -> Complex64 {
        Complex64::new(0.0, 1.0) * Complex64::new(0.0, self.kappa)
    }

    /// Right-wall solution: `u(z) = R * [I e^{iq(z-z2)} + diag(r2) e^{-iq(z-z2)}]`,
    /// differentiated `order` times term by term.
    fn u_deriv(&self, z: f64, order: u32) -> Mat2 {
        let iq = self.iq();
        let dz = z - self.z2;
        let plus = iq.powu(order) * (iq * dz).exp();
        let minus = (-iq).powu(order) * (-iq * dz).exp();
        let base = Mat2::diag(plus + self.refl2.0 * minus, plus + self.refl2.1 * minus);
        self.rot.mul(&base)
    }

    /// Left-wall solution: `v(z) = R^T * [I e^{-iq(z-z1)} + diag(r1) e^{iq(z-z1)}]`.
    fn v_deriv(&self, z: f64, order: u32) -> Mat2 {
        let iq = self.iq();
        let dz = z - self.z1;
        let plus = iq.powu(order) * (iq * dz).exp();
        let minus = (-iq).powu(order) * (-iq * dz).exp();
        let base = Mat2::diag(minus + self.refl1.0 * plus, minus + self.refl1.1 * plus);
        self.rot_t.mul(&base)
    }

    pub fn u(&self, z: f64) -> Mat2 {
        self.u_deriv(z, 0)
    }

    pub fn u_prime(&self, z: f64) -> Mat2 {
        self.u_deriv(z, 1)
    }

    pub fn u_second(&self, z: f64) -> Mat2 {
        self.u_deriv(z, 2)
    }

    pub fn v(&self, z: f64) -> Mat2 {
        self.v_deriv(z, 0)
    }

    pub fn v_prime(&self, z: f64) -> Mat2 {
        self.v_deriv(z, 1)
    }

    pub fn v_second(&self, z: f64) -> Mat2 {
        self.v_deriv(z, 2)
    }
}

/// Builds the homogeneous solutions for `cfg` at imaginary wavenumber
/// `kappa > 0`. Walls sit at `z1 = 0` and `z2 = L`.
pub fn build_solutions(kappa: f64, cfg: &CavityConfig) -> Result<HomogeneousSolutions> {
    if !(kappa > 0.0) {
        return Err(Error::domain(format!("kappa must be > 0, got {kappa}")));
    }
    let p1 = cfg.mirror1.reflection_pair(kappa)?;
    let p2 = cfg.mirror2.reflection_pair(kappa)?;
    let half = cfg.angle / 2.0;
    Ok(HomogeneousSolutions {
        kappa,
        z1: 0.0,
        z2: cfg.separation,
        rot: Mat2::rotation(half),
        rot_t: Mat2::rotation(-half),
        refl1: (p1.r_x, p1.r_y),
        refl2: (p2.r_x, p2.r_y),
    })
}

/// Green's matrix and its first derivatives at one point pair.
#[derive(Debug, Clone, Copy)]
pub struct GreensEvaluation {
    pub g: Mat2,
    pub dg_dz: Mat2,
    pub dg_dzprime: Mat2,
}

/// Evaluates the cavity Green's matrix at `(z, z')`, both strictly inside
/// the cavity.
///
/// The construction uses the bracket factors evaluated consistently at `z'`,
/// which makes G continuous at `z = z'` with a unit jump in `dG/dz`; at
/// exact coincidence the `z >= z'` branch is taken.
pub fn greens_matrix(z: f64, zprime: f64, kappa: f64, cfg: &CavityConfig) -> Result<GreensEvaluation> {
    let sols = build_solutions(kappa, cfg)?;
    let (z1, z2) = sols.wall_positions();
    for (name, value) in [("z", z), ("z'", zprime)] {
        if !(value > z1 && value < z2) {
            return Err(Error::domain(format!(
                "{name} = {value} must lie strictly inside the cavity ({z1}, {z2})"
            )));
        }
    }

    if z >= zprime {
        let v_inv = sols.v(zprime).inverse("left solution at z'")?;
        let bracket = sols
            .u_prime(zprime)
            .sub(&sols.v_prime(zprime).mul(&v_inv).mul(&sols.u(zprime)));
        let b_inv = bracket.inverse("right-branch bracket")?;
        Ok(GreensEvaluation {
            g: sols.u(z).mul(&b_inv),
            dg_dz: sols.u_prime(z).mul(&b_inv),
            dg_dzprime: sols.u(z).mul(&b_inv).mul(&sols.v_prime(zprime)).mul(&v_inv),
        })
    } else {
        let u_inv = sols.u(zprime).inverse("right solution at z'")?;
        let bracket = sols
            .v_prime(zprime)
            .sub(&sols.u_prime(zprime).mul(&u_inv).mul(&sols.v(zprime)));
        let b_inv = bracket.inverse("left-branch bracket")?;
        let minus_one = Complex64::new(-1.0, 0.0);
        Ok(GreensEvaluation {
            g: sols.v(z).mul(&b_inv).scale(minus_one),
            dg_dz: sols.v_prime(z).mul(&b_inv).scale(minus_one),
            dg_dzprime: sols
                .v(z)
                .mul(&b_inv)
                .mul(&sols.u_prime(zprime))
                .mul(&u_inv)
                .scale(minus_one),
        })
    }
}

/// The coincident-point kernel `K(kappa; z)`.
///
/// Computed from the logarithmic derivatives `B = u' u^-1` and `P = v' v^-1`
/// at `z`, which is the analytic `z' -> z` limit of
/// `(d/dz' - d/dz)[G_xy - G_yx]`; that combination is continuous across the
/// coincidence point (the derivative jump is diagonal), so the branch choice
/// does not matter. Independent of `z` for every valid cavity.
pub fn oracle_integrand(kappa: f64, cfg: &CavityConfig, z: f64) -> Result<f64> {
    let sols = build_solutions(kappa, cfg)?;
    let (z1, z2) = sols.wall_positions();
    let margin = 1e-6 * (z2 - z1);
    if !(z >= z1 + margin && z <= z2 - margin) {
        return Err(Error::domain(format!(
            "z = {z} must stay at least {margin} away from the walls ({z1}, {z2})"
        )));
    }

    let b = sols.u_prime(z).mul(&sols.u(z).inverse("right solution")?);
    let p = sols.v_prime(z).mul(&sols.v(z).inverse("left solution")?);
    let d = b.sub(&p);
    let det = d.det();
    if det.norm() < DET_GUARD {
        return Err(Error::SingularMatrix { what: "log-derivative difference", det_magnitude: det.norm() });
    }
    // (d/dz' - d/dz) G at coincidence is D^-1 P - B D^-1; expanding D^-1
    // through the adjugate keeps the large isotropic parts cancelling
    // exactly.
    let kmat = d.adjugate().mul(&p).sub(&b.mul(&d.adjugate())).scale(det.inv());
    let k = kmat.m[0][1] - kmat.m[1][0];
    debug_assert!(
        k.im.abs() <= 1e-8 * (1.0 + k.re.abs()),
        "kernel acquired an imaginary part: {k}"
    );
    Ok(k.re)
}

/// One cross-validation sample.
#[derive(Debug, Clone, Copy)]
pub struct ValidationSample {
    pub kappa: f64,
    pub kernel: f64,
    pub integrand: f64,
    /// `|kernel / c0 - integrand| / max(|integrand|, KERNEL_FLOOR)`.
    pub deviation: f64,
}

/// Outcome of [`validate`].
#[derive(Debug, Clone)]
pub struct ValidationReport {
    /// Proportionality constant estimated from the best-resolved sample;
    /// `None` when every sample is below [`KERNEL_FLOOR`].
    pub c0: Option<f64>,
    pub max_deviation: f64,
    pub samples: Vec<ValidationSample>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.max_deviation <= VALIDATION_THRESHOLD
    }
}

/// Cross-validates kernel against closed-form integrand over `kappas`.
///
/// The constant `c0` is estimated from the sample with the largest
/// integrand magnitude and cross-checked against the second largest; a
/// disagreement beyond 1e-8 is an error. Deviations are relative with the
/// [`KERNEL_FLOOR`] floor protecting numerically unresolvable samples; when
/// both sides vanish identically (aligned axes or isotropic walls) the
/// deviation is 0 by construction.
pub fn validate(cfg: &CavityConfig, kappas: &[f64]) -> Result<ValidationReport> {
    if kappas.is_empty() {
        return Err(Error::domain("kappa sample list must be non-empty".to_string()));
    }
    let z_mid = 0.5 * cfg.separation;

    let mut kernels = Vec::with_capacity(kappas.len());
    let mut integrands = Vec::with_capacity(kappas.len());
    for &kappa in kappas {
        kernels.push(oracle_integrand(kappa, cfg, z_mid)?);
        integrands.push(integrand(kappa, cfg)?);
    }

    // Reference points: the two best-resolved samples.
    let mut order: Vec<usize> = (0..kappas.len()).collect();
    order.sort_by(|&a, &b| integrands[b].abs().total_cmp(&integrands[a].abs()));
    let best = order[0];

    let c0 = if integrands[best].abs() >= KERNEL_FLOOR {
        let c0 = kernels[best] / integrands[best];
        if let Some(&second) = order.get(1).filter(|&&i| integrands[i].abs() >= KERNEL_FLOOR) {
            let c0_check = kernels[second] / integrands[second];
            if (c0_check - c0).abs() > 1e-8 {
                return Err(Error::InconsistentConstant { first: c0, second: c0_check });
            }
        }
        Some(c0)
    } else {
        None
    };

    let mut max_deviation = 0.0_f64;
    let samples = kappas
        .iter()
        .zip(kernels.iter().zip(&integrands))
        .map(|(&kappa, (&kernel, &f))| {
            let predicted = match c0 {
                Some(c0) => kernel / c0,
                None => kernel, // both sides expected to vanish
            };
            let deviation = (predicted - f).abs() / f.abs().max(KERNEL_FLOOR);
            max_deviation = max_deviation.max(deviation);
            ValidationSample { kappa, kernel, integrand: f, deviation }
        })
        .collect();

    Ok(ValidationReport { c0, max_deviation, samples })
}
