//! Run configuration: a single strict JSON document describing one command.
//!
//! Unknown keys are rejected everywhere so that a typo in a resonance
//! parameter fails loudly instead of silently changing the physics.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::material::{LorentzResonance, MirrorModel, ReflectionTable, Sign};
use crate::quadrature::QuadratureSettings;

/// What the CLI should compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Torque versus the relative angle gamma; grid in radians.
    AngleScan,
    /// Torque versus the separation L; grid in `c / omega_ref`.
    DistanceScan,
    /// The torque integrand F(kappa); grid in `omega_ref / c`.
    IntegrandDump,
    /// Green's-function cross-validation of the integrand; grid of kappas.
    Validate,
    /// Reflection amplitudes of both mirrors; grid of kappas.
    MaterialShow,
}

/// One Lorentz resonance, as configured.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResonanceSpec {
    /// Resonance frequency in units of the reference frequency.
    pub omega0: f64,
    /// Plasma frequency (resonance strength), same units.
    pub omega_p: f64,
    /// Inverse lifetime, same units. Defaults to 0 (no damping).
    #[serde(default)]
    pub inv_tau: f64,
}

impl ResonanceSpec {
    fn build(&self) -> Result<LorentzResonance> {
        LorentzResonance::new(self.omega0, self.omega_p, self.inv_tau)
    }
}

/// One wall, as configured.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MirrorSpec {
    /// `r_x = sign, r_y = 0`.
    PerfectPolarizer {
        #[serde(default = "default_sign")]
        sign: i8,
    },
    /// `r_x = r, r_y = 0`.
    Lossy { r: f64 },
    /// Frequency-independent pair.
    Constant { r_x: f64, r_y: f64 },
    /// Semi-infinite medium, one Lorentz resonance per principal axis.
    Lorentz { res_x: ResonanceSpec, res_y: ResonanceSpec },
    /// Free-standing film; thickness in `c / omega_ref`.
    Slab { res_x: ResonanceSpec, res_y: ResonanceSpec, thickness: f64 },
    /// Three-column text file `kappa r_x r_y`; relative paths resolve
    /// against the config file's directory.
    Tabulated { path: PathBuf },
}

fn default_sign() -> i8 {
    1
}

impl MirrorSpec {
    /// Builds the mirror model, resolving tabulated paths against `base`.
    pub fn build(&self, base: Option<&Path>) -> Result<MirrorModel> {
        match self {
            MirrorSpec::PerfectPolarizer { sign } => {
                Ok(MirrorModel::perfect_polarizer(Sign::try_from(*sign)?))
            }
            MirrorSpec::Lossy { r } => MirrorModel::lossy_polarizer(*r),
            MirrorSpec::Constant { r_x, r_y } => MirrorModel::constant_pair(*r_x, *r_y),
            MirrorSpec::Lorentz { res_x, res_y } => {
                Ok(MirrorModel::semi_infinite_lorentz(res_x.build()?, res_y.build()?))
            }
            MirrorSpec::Slab { res_x, res_y, thickness } => {
                MirrorModel::lorentz_slab(res_x.build()?, res_y.build()?, *thickness)
            }
            MirrorSpec::Tabulated { path } => {
                let resolved = match base {
                    Some(dir) if path.is_relative() => dir.join(path),
                    _ => path.clone(),
                };
                Ok(MirrorModel::tabulated(ReflectionTable::from_path(&resolved)?))
            }
        }
    }
}

/// Grid point spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// Abscissa grid of a scan.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn linear(start: f64, stop: f64, count: usize) -> Self {
        Self { start, stop, count, spacing: Spacing::Linear }
    }

    pub fn log(start: f64, stop: f64, count: usize) -> Self {
        Self { start, stop, count, spacing: Spacing::Log }
    }

    fn validate(&self) -> Result<()> {
        if self.count < 1 {
            return Err(Error::config("grid.count must be >= 1"));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(Error::config("grid endpoints must be finite"));
        }
        if self.spacing == Spacing::Log && (self.start <= 0.0 || self.stop <= 0.0) {
            return Err(Error::config(format!(
                "log spacing requires positive endpoints, got [{}, {}]",
                self.start, self.stop
            )));
        }
        Ok(())
    }

    /// Expands to `count` points in grid order.
    pub fn expand(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let n = (self.count - 1) as f64;
        match self.spacing {
            Spacing::Linear => (0..self.count)
                .map(|i| self.start + (self.stop - self.start) * i as f64 / n)
                .collect(),
            Spacing::Log => {
                let (a, b) = (self.start.ln(), self.stop.ln());
                (0..self.count).map(|i| (a + (b - a) * i as f64 / n).exp()).collect()
            }
        }
    }
}

/// Output unit system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    /// Dimensionless torques; lengths in `c / omega_ref`.
    #[default]
    Natural,
    /// Adds an SI torque column in newton meters; requires `omega_p_ref_si`.
    Si,
}

/// The full run description.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    pub mirror1: MirrorSpec,
    pub mirror2: MirrorSpec,
    /// Relative angle in radians; fixed parameter for every command except
    /// `angle-scan`, where the grid supplies it.
    #[serde(default = "default_gamma")]
    pub gamma: f64,
    /// Separation in `c / omega_ref`; fixed parameter except for
    /// `distance-scan`.
    #[serde(rename = "L", default = "default_separation")]
    pub separation: f64,
    /// Scan grid; each command has a sensible default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub quadrature: QuadratureSettings,
    #[serde(default)]
    pub units: Units,
    /// Reference frequency in rad/s; required when `units` is `si`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_p_ref_si: Option<f64>,
    /// Output CSV path; stdout when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

fn default_gamma() -> f64 {
    std::f64::consts::FRAC_PI_4
}

fn default_separation() -> f64 {
    1.0
}

impl RunConfig {
    /// The grid actually used: the configured one, or the command default.
    ///
    /// Defaults: 97 linear points over [-pi, pi] for `angle-scan`, 60 log
    /// points over [0.01, 100] c/omega_ref for `distance-scan`, and 20 log
    /// points over kappa in [0.01, 10] omega_ref/c otherwise.
    pub fn effective_grid(&self) -> GridSpec {
        use std::f64::consts::PI;
        self.grid.unwrap_or(match self.command {
            Command::AngleScan => GridSpec::linear(-PI, PI, 97),
            Command::DistanceScan => GridSpec::log(0.01, 100.0, 60),
            Command::IntegrandDump | Command::Validate | Command::MaterialShow => {
                GridSpec::log(0.01, 10.0, 20)
            }
        })
    }

    /// Field-by-field validation beyond what the parser enforces.
    pub fn validate(&self) -> Result<()> {
        if !(self.separation > 0.0) || !self.separation.is_finite() {
            return Err(Error::config(format!("L must be > 0, got {}", self.separation)));
        }
        if !self.gamma.is_finite() {
            return Err(Error::config(format!("gamma must be finite, got {}", self.gamma)));
        }
        self.quadrature.validate().map_err(|e| Error::config(format!("quadrature: {e}")))?;
        let grid = self.effective_grid();
        grid.validate()?;
        match self.command {
            Command::DistanceScan => {
                if grid.expand().iter().any(|&l| l <= 0.0) {
                    return Err(Error::config("distance-scan grid must be positive"));
                }
            }
            Command::IntegrandDump | Command::Validate | Command::MaterialShow => {
                if grid.expand().iter().any(|&k| k <= 0.0) {
                    return Err(Error::config("kappa grid must be positive"));
                }
            }
            Command::AngleScan => {}
        }
        if self.units == Units::Si {
            match self.omega_p_ref_si {
                Some(w) if w > 0.0 && w.is_finite() => {}
                Some(w) => {
                    return Err(Error::config(format!(
                        "omega_p_ref_si must be > 0, got {w}"
                    )))
                }
                None => {
                    return Err(Error::config(
                        "units = \"si\" requires omega_p_ref_si (rad/s)",
                    ))
                }
            }
        }
        Ok(())
    }
}

/// Parses and validates a config document.
pub fn parse_config(document: &str) -> Result<RunConfig> {
    let cfg: RunConfig = serde_json::from_str(document)?;
    cfg.validate()?;
    Ok(cfg)
}

/// Reads, parses and validates a config file.
pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}
