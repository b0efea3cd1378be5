//! Mirror reflection models evaluated on the positive imaginary frequency
//! axis.
//!
//! Every model produces a pair of real reflection amplitudes `(r_x, r_y)`
//! along the two principal axes of the wall, as a function of the imaginary
//! wavenumber `kappa` (frequency `omega = i c kappa`). Natural units are used
//! throughout: frequencies in a reference `omega_ref`, lengths in
//! `c / omega_ref`, so `xi = c kappa` is numerically equal to `kappa`.
//!
//! The amplitude convention is the field convention `r = (1 - sqrt(eps)) /
//! (1 + sqrt(eps))`, which tends to -1 for a perfect conductor. The torque
//! depends only on the products `r1 r2` and `dr1 dr2`, so any global sign
//! convention applied to both walls is self-consistent.

use std::fmt;
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};

/// A single Lorentz oscillator resonance of the dielectric response.
///
/// On the positive imaginary frequency axis the permittivity is
/// `eps(i xi) = 1 + plasma_freq^2 / (resonance_freq^2 + xi^2 + xi * inverse_lifetime)`,
/// which is real, >= 1, and monotonically non-increasing in `xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzResonance {
    /// Resonance frequency, units of the reference frequency. >= 0.
    pub resonance_freq: f64,
    /// Plasma frequency (resonance strength), same units. >= 0.
    pub plasma_freq: f64,
    /// Inverse lifetime 1/tau, same units. >= 0.
    pub inverse_lifetime: f64,
}

impl LorentzResonance {
    pub fn new(resonance_freq: f64, plasma_freq: f64, inverse_lifetime: f64) -> Result<Self> {
        for (name, value) in [
            ("resonance_freq", resonance_freq),
            ("plasma_freq", plasma_freq),
            ("inverse_lifetime", inverse_lifetime),
        ] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::domain(format!(
                    "LorentzResonance {name} must be finite and >= 0, got {value}"
                )));
            }
        }
        Ok(Self { resonance_freq, plasma_freq, inverse_lifetime })
    }

    /// Undamped resonance, `1/tau = 0`.
    pub fn undamped(resonance_freq: f64, plasma_freq: f64) -> Result<Self> {
        Self::new(resonance_freq, plasma_freq, 0.0)
    }
}

/// Permittivity of a Lorentz resonance at imaginary frequency `i xi`.
///
/// Fails with [`Error::StaticDivergence`] for the ideal plasma
/// (`resonance_freq = 0`, `1/tau = 0`) at `xi = 0`, where eps diverges.
pub fn eps_imaginary_axis(res: &LorentzResonance, xi: f64) -> Result<f64> {
    if !(xi >= 0.0) {
        return Err(Error::domain(format!("xi must be >= 0, got {xi}")));
    }
    let den = res.resonance_freq * res.resonance_freq + xi * xi + xi * res.inverse_lifetime;
    if den == 0.0 {
        if res.plasma_freq == 0.0 {
            // Vacuum: 0/0 resolves to eps = 1.
            return Ok(1.0);
        }
        return Err(Error::StaticDivergence);
    }
    Ok(1.0 + res.plasma_freq * res.plasma_freq / den)
}

/// Normal-incidence reflection amplitude of a semi-infinite medium with real
/// permittivity `eps >= 1`: `r = (1 - sqrt(eps)) / (1 + sqrt(eps))`.
///
/// Always in `(-1, 0]`, zero exactly for vacuum.
pub fn fresnel_semiinfinite(eps: f64) -> Result<f64> {
    if !(eps >= 1.0) {
        return Err(Error::domain(format!("eps must be >= 1, got {eps}")));
    }
    let n = eps.sqrt();
    Ok((1.0 - n) / (1.0 + n))
}

/// Reflection amplitude of a free-standing slab of thickness `d` (units of
/// `c / omega_ref`) with a Lorentz response, at imaginary wavenumber `kappa`.
///
/// Sums the internal multiple reflections of the film:
/// `r = r01 (1 - x) / (1 - r01^2 x)` with `x = exp(-2 n kappa d)`,
/// `n = sqrt(eps(i kappa))`. Tends to 0 as `d -> 0` and monotonically to the
/// semi-infinite amplitude as `d -> inf`.
pub fn slab_reflection(res: &LorentzResonance, d: f64, kappa: f64) -> Result<f64> {
    if !(d >= 0.0) {
        return Err(Error::domain(format!("slab thickness must be >= 0, got {d}")));
    }
    if !(kappa > 0.0) {
        return Err(Error::domain(format!("kappa must be > 0, got {kappa}")));
    }
    let eps = eps_imaginary_axis(res, kappa)?;
    let n = eps.sqrt();
    let r01 = fresnel_semiinfinite(eps)?;
    let x = (-2.0 * n * kappa * d).exp();
    Ok(r01 * (1.0 - x) / (1.0 - r01 * r01 * x))
}

/// Sign of an ideal polarizer's reflecting axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;

    fn try_from(v: i8) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::domain(format!("sign must be +1 or -1, got {other}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value() as i8)
    }
}

/// One sample of a tabulated reflection model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableSample {
    pub kappa: f64,
    pub r_x: f64,
    pub r_y: f64,
}

/// Tabulated principal-axis reflection amplitudes over a strictly increasing
/// kappa grid. Queries between samples are piecewise-linear; queries outside
/// the sampled range are hard errors, never extrapolated.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionTable {
    samples: Vec<TableSample>,
}

impl ReflectionTable {
    pub fn new(samples: Vec<TableSample>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::domain(format!(
                "tabulated model needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        for (i, s) in samples.iter().enumerate() {
            if !(s.kappa > 0.0) || !s.kappa.is_finite() {
                return Err(Error::domain(format!(
                    "tabulated kappa must be finite and > 0, got {} at row {i}",
                    s.kappa
                )));
            }
            if s.r_x.abs() > 1.0 || s.r_y.abs() > 1.0 || !s.r_x.is_finite() || !s.r_y.is_finite() {
                return Err(Error::domain(format!(
                    "tabulated amplitudes must satisfy |r| <= 1, got ({}, {}) at row {i}",
                    s.r_x, s.r_y
                )));
            }
            if i > 0 && s.kappa <= samples[i - 1].kappa {
                return Err(Error::domain(format!(
                    "tabulated kappa must be strictly increasing, row {i}: {} after {}",
                    s.kappa,
                    samples[i - 1].kappa
                )));
            }
        }
        Ok(Self { samples })
    }

    /// Loads a three-column text file: whitespace-separated `kappa r_x r_y`
    /// per line, `#` starts a comment, blank lines ignored. kappa in units of
    /// `omega_ref / c`.
    pub fn from_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        let reader = std::io::BufReader::new(file);
        let mut samples = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let data = line.split('#').next().unwrap_or("").trim();
            if data.is_empty() {
                continue;
            }
            let fields: Vec<&str> = data.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::domain(format!(
                    "{}:{}: expected 3 columns `kappa r_x r_y`, got {}",
                    path.display(),
                    lineno + 1,
                    fields.len()
                )));
            }
            let mut values = [0.0_f64; 3];
            for (slot, field) in values.iter_mut().zip(&fields) {
                *slot = field.parse().map_err(|_| {
                    Error::domain(format!(
                        "{}:{}: cannot parse `{}` as a number",
                        path.display(),
                        lineno + 1,
                        field
                    ))
                })?;
            }
            samples.push(TableSample { kappa: values[0], r_x: values[1], r_y: values[2] });
        }
        Self::new(samples)
    }

    pub fn samples(&self) -> &[TableSample] {
        &self.samples
    }

    pub fn kappa_range(&self) -> (f64, f64) {
        (self.samples[0].kappa, self.samples[self.samples.len() - 1].kappa)
    }

    fn interpolate(&self, kappa: f64) -> Result<(f64, f64)> {
        let (min, max) = self.kappa_range();
        if kappa < min || kappa > max {
            return Err(Error::OutOfRange { kappa, min, max });
        }
        let idx = self.samples.partition_point(|s| s.kappa < kappa);
        if idx == 0 {
            let s = &self.samples[0];
            return Ok((s.r_x, s.r_y));
        }
        let hi = &self.samples[idx.min(self.samples.len() - 1)];
        if hi.kappa == kappa {
            return Ok((hi.r_x, hi.r_y));
        }
        let lo = &self.samples[idx - 1];
        let t = (kappa - lo.kappa) / (hi.kappa - lo.kappa);
        Ok((lo.r_x + t * (hi.r_x - lo.r_x), lo.r_y + t * (hi.r_y - lo.r_y)))
    }
}

/// Description of one wall's normal-incidence reflection behavior along its
/// two principal axes.
#[derive(Debug, Clone, PartialEq)]
pub enum MirrorModel {
    /// Frequency-independent amplitudes, |r| <= 1 on both axes.
    ConstantPair { r_x: f64, r_y: f64 },
    /// Ideal polarizer: `r_x = +-1`, `r_y = 0`.
    PerfectPolarizer { sign: Sign },
    /// Polarizer backed by a lossy mirror: `r_x = r`, `r_y = 0`, |r| <= 1.
    LossyPolarizer { r: f64 },
    /// Semi-infinite medium with independent Lorentz responses per axis.
    SemiInfiniteLorentz { res_x: LorentzResonance, res_y: LorentzResonance },
    /// Free-standing film of finite thickness with Lorentz responses.
    LorentzSlab { res_x: LorentzResonance, res_y: LorentzResonance, thickness: f64 },
    /// Measured or precomputed amplitudes on a kappa grid.
    Tabulated(ReflectionTable),
}

impl MirrorModel {
    pub fn constant_pair(r_x: f64, r_y: f64) -> Result<Self> {
        for (name, r) in [("r_x", r_x), ("r_y", r_y)] {
            if !r.is_finite() || r.abs() > 1.0 {
                return Err(Error::domain(format!("{name} must satisfy |r| <= 1, got {r}")));
            }
        }
        Ok(MirrorModel::ConstantPair { r_x, r_y })
    }

    pub fn perfect_polarizer(sign: Sign) -> Self {
        MirrorModel::PerfectPolarizer { sign }
    }

    pub fn lossy_polarizer(r: f64) -> Result<Self> {
        if !r.is_finite() || r.abs() > 1.0 {
            return Err(Error::domain(format!("lossy polarizer needs |r| <= 1, got {r}")));
        }
        Ok(MirrorModel::LossyPolarizer { r })
    }

    pub fn semi_infinite_lorentz(res_x: LorentzResonance, res_y: LorentzResonance) -> Self {
        MirrorModel::SemiInfiniteLorentz { res_x, res_y }
    }

    pub fn lorentz_slab(
        res_x: LorentzResonance,
        res_y: LorentzResonance,
        thickness: f64,
    ) -> Result<Self> {
        if !(thickness >= 0.0) {
            return Err(Error::domain(format!(
                "slab thickness must be >= 0, got {thickness}"
            )));
        }
        Ok(MirrorModel::LorentzSlab { res_x, res_y, thickness })
    }

    pub fn tabulated(table: ReflectionTable) -> Self {
        MirrorModel::Tabulated(table)
    }

    /// Whether the amplitudes depend on kappa. Decides the torque
    /// normalization: kappa-independent pairs are reported as
    /// `tau L / (hbar c)`, dispersive ones as `tau / (hbar omega_ref)`.
    pub fn is_dispersive(&self) -> bool {
        matches!(
            self,
            MirrorModel::SemiInfiniteLorentz { .. }
                | MirrorModel::LorentzSlab { .. }
                | MirrorModel::Tabulated(_)
        )
    }

    /// Principal-axis amplitudes and their anisotropy at imaginary
    /// wavenumber `kappa > 0`.
    pub fn reflection_pair(&self, kappa: f64) -> Result<ReflectionPair> {
        if !(kappa > 0.0) {
            return Err(Error::domain(format!("kappa must be > 0, got {kappa}")));
        }
        let (r_x, r_y) = match self {
            MirrorModel::ConstantPair { r_x, r_y } => (*r_x, *r_y),
            MirrorModel::PerfectPolarizer { sign } => (sign.value(), 0.0),
            MirrorModel::LossyPolarizer { r } => (*r, 0.0),
            MirrorModel::SemiInfiniteLorentz { res_x, res_y } => {
                let rx = fresnel_semiinfinite(eps_imaginary_axis(res_x, kappa)?)?;
                let ry = fresnel_semiinfinite(eps_imaginary_axis(res_y, kappa)?)?;
                (rx, ry)
            }
            MirrorModel::LorentzSlab { res_x, res_y, thickness } => {
                let rx = slab_reflection(res_x, *thickness, kappa)?;
                let ry = slab_reflection(res_y, *thickness, kappa)?;
                (rx, ry)
            }
            MirrorModel::Tabulated(table) => table.interpolate(kappa)?,
        };
        Ok(ReflectionPair::new(r_x, r_y))
    }
}

/// The amplitudes `(r_x, r_y)` of one wall at one imaginary wavenumber,
/// together with the anisotropy `delta_r = r_x - r_y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionPair {
    pub r_x: f64,
    pub r_y: f64,
    pub delta_r: f64,
}

impl ReflectionPair {
    pub fn new(r_x: f64, r_y: f64) -> Self {
        debug_assert!(r_x.abs() <= 1.0 + 1e-12, "r_x out of range: {r_x}");
        debug_assert!(r_y.abs() <= 1.0 + 1e-12, "r_y out of range: {r_y}");
        Self { r_x, r_y, delta_r: r_x - r_y }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn res(w0: f64, wp: f64, it: f64) -> LorentzResonance {
        LorentzResonance::new(w0, wp, it).unwrap()
    }

    #[test]
    fn eps_static_value() {
        // eps(0) = 1 + wp^2 / w0^2
        assert_relative_eq!(eps_imaginary_axis(&res(1.0, 1.0, 0.0), 0.0).unwrap(), 2.0);
    }

    #[test]
    fn eps_at_unit_frequency() {
        assert_relative_eq!(eps_imaginary_axis(&res(1.0, 1.0, 0.0), 1.0).unwrap(), 1.5);
    }

    #[test]
    fn eps_transparent_at_high_frequency() {
        let e = eps_imaginary_axis(&res(1.0, 1.0, 0.0), 1e8).unwrap();
        assert!((e - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eps_static_divergence_is_an_error() {
        let ideal_plasma = res(0.0, 1.0, 0.0);
        assert!(matches!(
            eps_imaginary_axis(&ideal_plasma, 0.0),
            Err(Error::StaticDivergence)
        ));
        // Away from xi = 0 the ideal plasma is fine.
        assert_relative_eq!(eps_imaginary_axis(&ideal_plasma, 1.0).unwrap(), 2.0);
    }

    #[test]
    fn fresnel_known_values() {
        assert_eq!(fresnel_semiinfinite(1.0).unwrap(), 0.0);
        assert_relative_eq!(fresnel_semiinfinite(4.0).unwrap(), -1.0 / 3.0);
        assert_relative_eq!(fresnel_semiinfinite(1e18).unwrap(), -1.0, epsilon = 1e-8);
        assert!(fresnel_semiinfinite(0.5).is_err());
    }

    #[test]
    fn slab_limits() {
        let r = res(1.0, 1.0, 0.0);
        assert_eq!(slab_reflection(&r, 0.0, 1.0).unwrap(), 0.0);
        let semi = fresnel_semiinfinite(eps_imaginary_axis(&r, 1.0).unwrap()).unwrap();
        assert_relative_eq!(slab_reflection(&r, 1e4, 1.0).unwrap(), semi, epsilon = 1e-14);
    }

    #[test]
    fn slab_matches_transfer_matrix_oracle() {
        // Independent route: characteristic matrix of the vacuum/film/vacuum
        // stack evaluated at q = i kappa.
        use num_complex::Complex64 as C;
        fn transfer_matrix_r(eps: f64, d: f64, kappa: f64) -> f64 {
            let q0 = C::new(0.0, kappa);
            let n = C::new(eps, 0.0).sqrt();
            let delta = n * q0 * d;
            let (m00, m01) = (delta.cos(), -C::i() * delta.sin() / n);
            let (m10, m11) = (-C::i() * n * delta.sin(), delta.cos());
            let num = (m00 + m01) - (m10 + m11);
            let den = (m00 + m01) + (m10 + m11);
            let r = num / den;
            assert!(r.im.abs() < 1e-14);
            r.re
        }
        let r = res(1.0, 1.0, 0.0);
        let eps = eps_imaginary_axis(&r, 1.0).unwrap();
        let oracle = transfer_matrix_r(eps, 1.0, 1.0);
        // Frozen from the oracle.
        assert_relative_eq!(oracle, -0.09238003761039633, epsilon = 1e-13);
        assert_relative_eq!(slab_reflection(&r, 1.0, 1.0).unwrap(), oracle, epsilon = 1e-13);
        // A few more (d, kappa) points, oracle vs implementation only.
        for &(d, kappa) in &[(0.1, 0.5), (2.5, 0.2), (0.7, 3.0)] {
            let eps = eps_imaginary_axis(&r, kappa).unwrap();
            assert_relative_eq!(
                slab_reflection(&r, d, kappa).unwrap(),
                transfer_matrix_r(eps, d, kappa),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn reflection_pair_per_variant() {
        let p = MirrorModel::perfect_polarizer(Sign::Plus).reflection_pair(0.7).unwrap();
        assert_eq!((p.r_x, p.r_y, p.delta_r), (1.0, 0.0, 1.0));

        let l = MirrorModel::lossy_polarizer(0.6).unwrap().reflection_pair(2.0).unwrap();
        assert_eq!((l.r_x, l.r_y, l.delta_r), (0.6, 0.0, 0.6));

        // Isotropic Lorentz mirror near kappa = 0: both axes approach the
        // static Fresnel value, anisotropy vanishes.
        let m = MirrorModel::semi_infinite_lorentz(res(1.0, 1.0, 0.0), res(1.0, 1.0, 0.0));
        let pair = m.reflection_pair(1e-9).unwrap();
        assert_relative_eq!(pair.r_x, -0.17157287525380996, epsilon = 1e-9);
        assert_eq!(pair.delta_r, 0.0);
    }

    #[test]
    fn tabulated_interpolation_and_range() {
        let table = ReflectionTable::new(vec![
            TableSample { kappa: 1.0, r_x: -0.5, r_y: -0.1 },
            TableSample { kappa: 2.0, r_x: -0.3, r_y: -0.2 },
        ])
        .unwrap();
        let m = MirrorModel::tabulated(table);
        let mid = m.reflection_pair(1.5).unwrap();
        assert_relative_eq!(mid.r_x, -0.4);
        assert_relative_eq!(mid.r_y, -0.15000000000000002);
        let at = m.reflection_pair(2.0).unwrap();
        assert_eq!(at.r_x, -0.3);
        assert!(matches!(m.reflection_pair(2.5), Err(Error::OutOfRange { .. })));
        assert!(matches!(m.reflection_pair(0.5), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn tabulated_rejects_bad_tables() {
        assert!(ReflectionTable::new(vec![TableSample { kappa: 1.0, r_x: 0.0, r_y: 0.0 }])
            .is_err());
        assert!(ReflectionTable::new(vec![
            TableSample { kappa: 1.0, r_x: 0.0, r_y: 0.0 },
            TableSample { kappa: 1.0, r_x: 0.1, r_y: 0.0 },
        ])
        .is_err());
        assert!(ReflectionTable::new(vec![
            TableSample { kappa: 1.0, r_x: 1.5, r_y: 0.0 },
            TableSample { kappa: 2.0, r_x: 0.1, r_y: 0.0 },
        ])
        .is_err());
    }

    #[test]
    fn tabulated_file_parsing() {
        use std::io::Write;
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.txt");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "# kappa r_x r_y").unwrap();
        writeln!(f).unwrap();
        writeln!(f, "0.5  -0.9 -0.2   # leading sample").unwrap();
        writeln!(f, "1.0\t-0.8 -0.25").unwrap();
        drop(f);
        let table = ReflectionTable::from_path(&path).unwrap();
        assert_eq!(table.samples().len(), 2);
        assert_eq!(table.kappa_range(), (0.5, 1.0));

        let bad = dir.path().join("bad.txt");
        std::fs::write(&bad, "1.0 0.5\n").unwrap();
        assert!(ReflectionTable::from_path(&bad).is_err());
    }

    fn arb_model() -> impl Strategy<Value = MirrorModel> {
        prop_oneof![
            (-1.0..1.0f64, -1.0..1.0f64)
                .prop_map(|(x, y)| MirrorModel::constant_pair(x, y).unwrap()),
            prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
                .prop_map(MirrorModel::perfect_polarizer),
            (-1.0..1.0f64).prop_map(|r| MirrorModel::lossy_polarizer(r).unwrap()),
            (0.01..10.0f64, 0.01..10.0f64, 0.0..2.0f64, 0.01..10.0f64, 0.01..10.0f64)
                .prop_map(|(w0x, wpx, it, w0y, wpy)| {
                    MirrorModel::semi_infinite_lorentz(
                        LorentzResonance::new(w0x, wpx, it).unwrap(),
                        LorentzResonance::new(w0y, wpy, it).unwrap(),
                    )
                }),
            (0.01..10.0f64, 0.01..10.0f64, 0.0..5.0f64).prop_map(|(w0, wp, d)| {
                MirrorModel::lorentz_slab(
                    LorentzResonance::undamped(w0, wp).unwrap(),
                    LorentzResonance::undamped(w0 * 1.3, wp).unwrap(),
                    d,
                )
                .unwrap()
            }),
        ]
    }

    proptest! {
        #[test]
        fn amplitudes_stay_bounded(model in arb_model(), kappa in 1e-6..1e3f64) {
            let pair = model.reflection_pair(kappa).unwrap();
            prop_assert!(pair.r_x.abs() <= 1.0);
            prop_assert!(pair.r_y.abs() <= 1.0);
            prop_assert_eq!(pair.delta_r, pair.r_x - pair.r_y);
        }

        #[test]
        fn identical_resonances_have_zero_anisotropy(
            w0 in 0.01..10.0f64,
            wp in 0.01..10.0f64,
            it in 0.0..2.0f64,
            kappa in 1e-6..1e3f64,
        ) {
            let r = LorentzResonance::new(w0, wp, it).unwrap();
            let m = MirrorModel::semi_infinite_lorentz(r, r);
            prop_assert_eq!(m.reflection_pair(kappa).unwrap().delta_r, 0.0);
        }

        #[test]
        fn eps_monotone_non_increasing(
            w0 in 0.0..10.0f64,
            wp in 0.01..10.0f64,
            it in 0.0..2.0f64,
            xi in 1e-6..1e3f64,
            step in 1e-6..10.0f64,
        ) {
            let r = LorentzResonance::new(w0, wp, it).unwrap();
            let lo = eps_imaginary_axis(&r, xi).unwrap();
            let hi = eps_imaginary_axis(&r, xi + step).unwrap();
            prop_assert!(hi <= lo);
            prop_assert!(hi >= 1.0);
        }

        #[test]
        fn slab_monotone_in_thickness(
            w0 in 0.01..10.0f64,
            wp in 0.01..10.0f64,
            kappa in 1e-3..1e2f64,
            d in 1e-3..10.0f64,
        ) {
            let r = LorentzResonance::undamped(w0, wp).unwrap();
            let thin = slab_reflection(&r, d, kappa).unwrap();
            let thick = slab_reflection(&r, d * 2.0, kappa).unwrap();
            let semi = fresnel_semiinfinite(eps_imaginary_axis(&r, kappa).unwrap()).unwrap();
            prop_assert!(thin.abs() <= thick.abs() + 1e-15);
            prop_assert!(thick.abs() <= semi.abs() + 1e-15);
        }
    }
}
