//! Adaptive Gauss-Kronrod quadrature on a finite interval.
//!
//! A 15-point Kronrod rule with embedded 7-point Gauss rule is applied per
//! panel; the panel with the largest error estimate is bisected until the
//! summed estimate meets the tolerance. All nodes are interior, so the
//! endpoints of the interval are never evaluated.

use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and budget for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadratureSettings {
    /// Relative tolerance on the integral. > 0.
    pub rel_tol: f64,
    /// Absolute tolerance on the integral. >= 0.
    pub abs_tol: f64,
    /// Maximum number of panel bisections. >= 1.
    pub max_subdivisions: u32,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-14, max_subdivisions: 200 }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::domain(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::domain(format!("abs_tol must be >= 0, got {}", self.abs_tol)));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be >= 1".to_string()));
        }
        Ok(())
    }
}

/// Converged integral with diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOutcome {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

// 15-point Kronrod nodes on [-1, 1] (positive half) and the matching
// weights; wg are the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod_panel<F>(f: &mut F, a: f64, b: f64) -> Result<Panel>
where
    F: FnMut(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center)?;
    let mut res_gauss = f_center * WG[3];
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.abs();
    let mut values = [0.0_f64; 15];
    values[14] = f_center;

    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x)?;
        let f2 = f(center + x)?;
        values[2 * j] = f1;
        values[2 * j + 1] = f2;
        let sum = f1 + f2;
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * sum;
        }
        res_kronrod += WGK[j] * sum;
        res_abs += WGK[j] * (f1.abs() + f2.abs());
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((values[2 * j] - mean).abs() + (values[2 * j + 1] - mean).abs());
    }

    let value = res_kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    // QUADPACK-style error rescaling.
    let mut error = ((res_kronrod - res_gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }

    Ok(Panel { a, b, value, error })
}

/// Integrates `f` over `[a, b]`, bisecting adaptively until the summed error
/// estimate satisfies `max(rel_tol * |integral|, abs_tol)`.
///
/// Returns [`Error::NonConvergence`] when the subdivision budget is exhausted
/// first; errors from the integrand propagate immediately.
pub fn integrate<F>(mut f: F, a: f64, b: f64, settings: &QuadratureSettings) -> Result<QuadratureOutcome>
where
    F: FnMut(f64) -> Result<f64>,
{
    settings.validate()?;
    if !(a < b) {
        return Err(Error::domain(format!("invalid interval [{a}, {b}]")));
    }

    let mut evaluations: u64 = 15;
    let first = kronrod_panel(&mut f, a, b)?;
    let mut total_value = first.value;
    let mut total_error = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);

    for _ in 0..settings.max_subdivisions {
        let tolerance = settings.abs_tol.max(settings.rel_tol * total_value.abs());
        if total_error <= tolerance {
            return Ok(QuadratureOutcome { value: total_value, error_estimate: total_error, evaluations });
        }

        let worst = heap.pop().expect("heap cannot be empty while error > 0");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod_panel(&mut f, worst.a, mid)?;
        let right = kronrod_panel(&mut f, mid, worst.b)?;
        evaluations += 30;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    let tolerance = settings.abs_tol.max(settings.rel_tol * total_value.abs());
    if total_error <= tolerance {
        Ok(QuadratureOutcome { value: total_value, error_estimate: total_error, evaluations })
    } else {
        Err(Error::NonConvergence { error_estimate: total_error, evaluations })
    }
}
