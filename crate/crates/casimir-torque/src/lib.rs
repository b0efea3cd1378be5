//! Casimir torque between two anisotropic planar walls, computed from their
//! reflection amplitudes alone.
//!
//! Two flat walls facing each other across a vacuum gap exchange angular
//! momentum through the fluctuating electromagnetic field whenever their
//! in-plane principal axes are rotated by an angle `gamma` with respect to
//! each other. With the walls described only by their normal-incidence
//! reflection amplitudes `(r_x, r_y)` along their principal axes, the torque
//! at zero temperature is the single imaginary-frequency integral implemented
//! in [`torque`], which works for any material model: ideal polarizers,
//! lossy mirrors, dispersive dichroic media, or tabulated data.
//!
//! The crate provides:
//!
//! - [`material`]: reflection models evaluated on the imaginary frequency
//!   axis, including a Lorentz-oscillator dielectric and film stacks;
//! - [`torque`]: the torque integrand, an adaptive quadrature for it, and
//!   the closed forms known for ideal and lossy polarizers;
//! - [`greens`]: an independent route to the same integrand through the
//!   cavity Green's matrix, used to cross-validate the closed form;
//! - [`config`] and [`output`]: a strict JSON run configuration and
//!   reproducible CSV tables, behind the `casimir-torque` binary.
//!
//! Units are natural: `hbar = c = 1`, frequencies in a reference
//! `omega_ref`, lengths in `c / omega_ref`. Results are dimensionless —
//! `tau L / (hbar c)` for frequency-independent mirror pairs,
//! `tau / (hbar omega_ref)` for dispersive ones — with SI conversion at the
//! output boundary only ([`output::to_si`]).

pub mod config;
mod error;
pub mod greens;
pub mod material;
pub mod output;
pub mod quadrature;
pub mod torque;

pub use error::{Error, Result};
