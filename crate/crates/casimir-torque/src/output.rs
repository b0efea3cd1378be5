//! Command execution and CSV emission.
//!
//! Tables are comma-separated with a `#`-comment preamble that records the
//! fully resolved configuration, so every output file is reproducible from
//! itself. Numbers are printed with 17 significant digits, which round-trips
//! `f64` exactly; identical configurations produce byte-identical files.

use std::io::Write;
use std::path::Path;

use crate::config::{Command, RunConfig, Units};
use crate::error::{Error, Result};
use crate::greens;
use crate::material::MirrorModel;
use crate::torque::{self, CavityConfig, Normalization, ScanRow};

/// Reduced Planck constant, J s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Speed of light, m/s.
pub const C_SI: f64 = 2.997_924_58e8;

/// Converts a dimensionless torque to newton meters.
///
/// The scale depends on the normalization: the separation in meters for
/// [`Normalization::TauLOverHbarC`] (`tau_SI = tau * hbar c / L`), the
/// reference frequency in rad/s for [`Normalization::TauOverHbarOmegaRef`]
/// (`tau_SI = tau * hbar omega_ref`).
pub fn to_si(tau: f64, normalization: Normalization, scale: Option<f64>) -> Result<f64> {
    let scale = scale.ok_or(Error::MissingScale { normalization })?;
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::domain(format!("SI scale must be > 0, got {scale}")));
    }
    Ok(match normalization {
        Normalization::TauLOverHbarC => tau * HBAR_SI * C_SI / scale,
        Normalization::TauOverHbarOmegaRef => tau * HBAR_SI * scale,
    })
}

/// Validation numbers surfaced by the `validate` command.
#[derive(Debug, Clone, Copy)]
pub struct ValidationOutcome {
    pub c0: Option<f64>,
    pub max_deviation: f64,
    pub passed: bool,
}

/// What a run produced, for exit-status decisions.
#[derive(Debug, Clone, Copy)]
pub struct RunSummary {
    pub rows: usize,
    pub failed_rows: usize,
    pub validation: Option<ValidationOutcome>,
}

impl RunSummary {
    /// Full success: every row computed and, for `validate`, the deviation
    /// under threshold.
    pub fn success(&self) -> bool {
        self.failed_rows == 0 && self.validation.is_none_or(|v| v.passed)
    }
}

/// 17 significant digits: exact round trip for every finite f64.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

/// Error messages must not break the CSV shape.
fn fmt_error(e: &Error) -> String {
    e.to_string().replace(',', ";").replace('\n', " ")
}

struct Table<'w> {
    out: &'w mut dyn Write,
}

impl<'w> Table<'w> {
    fn preamble(&mut self, cfg: &RunConfig, normalization: Option<Normalization>) -> Result<()> {
        writeln!(self.out, "# casimir-torque table")?;
        writeln!(
            self.out,
            "# config: {}",
            serde_json::to_string(cfg).map_err(Error::Parse)?
        )?;
        if let Some(n) = normalization {
            let tag = match n {
                Normalization::TauLOverHbarC => "tauL_over_hbar_c",
                Normalization::TauOverHbarOmegaRef => "tau_over_hbar_omega_ref",
            };
            writeln!(self.out, "# normalization: {tag}")?;
        }
        Ok(())
    }

    fn header(&mut self, columns: &[&str]) -> Result<()> {
        writeln!(self.out, "{}", columns.join(","))?;
        Ok(())
    }

    fn row(&mut self, fields: &[String]) -> Result<()> {
        writeln!(self.out, "{}", fields.join(","))?;
        Ok(())
    }
}

/// The normalization a mirror pair will report, knowable before integrating.
fn normalization_of(m1: &MirrorModel, m2: &MirrorModel) -> Normalization {
    if m1.is_dispersive() || m2.is_dispersive() {
        Normalization::TauOverHbarOmegaRef
    } else {
        Normalization::TauLOverHbarC
    }
}

/// SI scale for one row, or `None` in natural units.
fn si_scale(cfg: &RunConfig, normalization: Normalization, separation: f64) -> Option<f64> {
    if cfg.units != Units::Si {
        return None;
    }
    let omega = cfg.omega_p_ref_si?;
    Some(match normalization {
        // L in meters: the natural-unit separation times c / omega_ref.
        Normalization::TauLOverHbarC => separation * C_SI / omega,
        Normalization::TauOverHbarOmegaRef => omega,
    })
}

fn write_scan_rows(
    table: &mut Table,
    rows: &[ScanRow],
    cfg: &RunConfig,
    normalization: Normalization,
    with_tau_l: bool,
) -> Result<usize> {
    let mut failed = 0;
    for row in rows {
        let mut fields = vec![fmt(row.abscissa)];
        match &row.outcome {
            Ok(result) => {
                fields.push(fmt(result.tau));
                if with_tau_l {
                    fields.push(fmt(result.tau_times_length(row.abscissa)));
                }
                fields.push(fmt(result.error_estimate));
                if cfg.units == Units::Si {
                    let separation = if with_tau_l { row.abscissa } else { cfg.separation };
                    let scale = si_scale(cfg, normalization, separation);
                    fields.push(fmt(to_si(result.tau, result.normalization, scale)?));
                }
                fields.push(String::new());
            }
            Err(e) => {
                failed += 1;
                let numeric = if with_tau_l { 3 } else { 2 };
                let numeric = numeric + usize::from(cfg.units == Units::Si);
                fields.extend(std::iter::repeat_n("nan".to_string(), numeric));
                fields.push(fmt_error(e));
            }
        }
        table.row(&fields)?;
    }
    Ok(failed)
}

/// Executes the configured command, writing the table to `out`.
///
/// `base_dir` resolves relative tabulated-mirror paths (usually the config
/// file's directory). Row-level computation failures are recorded in the
/// table and counted in the summary rather than aborting the run.
pub fn run(cfg: &RunConfig, base_dir: Option<&Path>, out: &mut dyn Write) -> Result<RunSummary> {
    cfg.validate()?;
    let mirror1 = cfg
        .mirror1
        .build(base_dir)
        .map_err(|e| Error::config(format!("mirror1: {e}")))?;
    let mirror2 = cfg
        .mirror2
        .build(base_dir)
        .map_err(|e| Error::config(format!("mirror2: {e}")))?;
    let normalization = normalization_of(&mirror1, &mirror2);
    let grid = cfg.effective_grid().expand();
    let cavity = CavityConfig::new(cfg.separation, cfg.gamma, mirror1, mirror2)
        .map_err(|e| Error::config(e.to_string()))?;

    let mut table = Table { out };
    let si = cfg.units == Units::Si;

    match cfg.command {
        Command::AngleScan => {
            table.preamble(cfg, Some(normalization))?;
            let mut columns = vec!["gamma", "tau", "error_estimate"];
            if si {
                columns.push("tau_si_newton_meter");
            }
            columns.push("error");
            table.header(&columns)?;
            let rows = torque::scan_angle(&cavity, &grid, &cfg.quadrature);
            let failed = write_scan_rows(&mut table, &rows, cfg, normalization, false)?;
            Ok(RunSummary { rows: rows.len(), failed_rows: failed, validation: None })
        }
        Command::DistanceScan => {
            table.preamble(cfg, Some(normalization))?;
            let mut columns = vec!["L", "tau", "tau_times_L", "error_estimate"];
            if si {
                columns.push("tau_si_newton_meter");
            }
            columns.push("error");
            table.header(&columns)?;
            let rows = torque::scan_distance(&cavity, &grid, &cfg.quadrature);
            let failed = write_scan_rows(&mut table, &rows, cfg, normalization, true)?;
            Ok(RunSummary { rows: rows.len(), failed_rows: failed, validation: None })
        }
        Command::IntegrandDump => {
            table.preamble(cfg, None)?;
            table.header(&["kappa", "integrand", "error"])?;
            let mut failed = 0;
            for &kappa in &grid {
                match torque::integrand(kappa, &cavity) {
                    Ok(f) => table.row(&[fmt(kappa), fmt(f), String::new()])?,
                    Err(e) => {
                        failed += 1;
                        table.row(&[fmt(kappa), "nan".to_string(), fmt_error(&e)])?;
                    }
                }
            }
            Ok(RunSummary { rows: grid.len(), failed_rows: failed, validation: None })
        }
        Command::MaterialShow => {
            table.preamble(cfg, None)?;
            table.header(&[
                "kappa", "r_x_1", "r_y_1", "delta_r_1", "r_x_2", "r_y_2", "delta_r_2", "error",
            ])?;
            let mut failed = 0;
            for &kappa in &grid {
                let pair = cavity
                    .mirror1
                    .reflection_pair(kappa)
                    .and_then(|p1| Ok((p1, cavity.mirror2.reflection_pair(kappa)?)));
                match pair {
                    Ok((p1, p2)) => table.row(&[
                        fmt(kappa),
                        fmt(p1.r_x),
                        fmt(p1.r_y),
                        fmt(p1.delta_r),
                        fmt(p2.r_x),
                        fmt(p2.r_y),
                        fmt(p2.delta_r),
                        String::new(),
                    ])?,
                    Err(e) => {
                        failed += 1;
                        let nan = "nan".to_string();
                        table.row(&[
                            fmt(kappa),
                            nan.clone(),
                            nan.clone(),
                            nan.clone(),
                            nan.clone(),
                            nan.clone(),
                            nan,
                            fmt_error(&e),
                        ])?;
                    }
                }
            }
            Ok(RunSummary { rows: grid.len(), failed_rows: failed, validation: None })
        }
        Command::Validate => {
            table.preamble(cfg, None)?;
            table.header(&["kappa", "kernel", "integrand", "deviation", "error"])?;
            let report = greens::validate(&cavity, &grid)?;
            for s in &report.samples {
                table.row(&[
                    fmt(s.kappa),
                    fmt(s.kernel),
                    fmt(s.integrand),
                    fmt(s.deviation),
                    String::new(),
                ])?;
            }
            match report.c0 {
                Some(c0) => writeln!(table.out, "# c0: {}", fmt(c0))?,
                None => writeln!(table.out, "# c0: unresolved (all samples below floor)")?,
            }
            writeln!(table.out, "# max_deviation: {}", fmt(report.max_deviation))?;
            writeln!(table.out, "# threshold: {}", fmt(greens::VALIDATION_THRESHOLD))?;
            writeln!(
                table.out,
                "# validation: {}",
                if report.passed() { "PASS" } else { "FAIL" }
            )?;
            let passed = report.passed();
            Ok(RunSummary {
                rows: report.samples.len(),
                failed_rows: 0,
                validation: Some(ValidationOutcome {
                    c0: report.c0,
                    max_deviation: report.max_deviation,
                    passed,
                }),
            })
        }
    }
}
