//! Error type shared by all modules of the crate.

use crate::torque::Normalization;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure modes of the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An ideal plasma response (no restoring force, no damping) diverges at
    /// zero frequency.
    #[error("static divergence: eps(0) is infinite for omega0 = 0 with 1/tau = 0")]
    StaticDivergence,

    /// A parameter fell outside the domain of an operation.
    #[error("domain error: {what}")]
    Domain { what: String },

    /// A tabulated reflection model was asked for a wavenumber outside its
    /// sample range. Extrapolating response data is refused.
    #[error("kappa = {kappa} outside tabulated range [{min}, {max}]")]
    OutOfRange { kappa: f64, min: f64, max: f64 },

    /// The torque integrand denominator underflowed the singularity guard.
    /// Only reachable for ideal |r| = 1 mirrors as kappa*L -> 0.
    #[error("singular integrand denominator at kappa = {kappa}")]
    SingularDenominator { kappa: f64 },

    /// A closed form was evaluated at a genuinely singular argument.
    #[error("singular argument: {what}")]
    SingularArgument { what: String },

    /// The adaptive quadrature exhausted its subdivision budget.
    #[error(
        "quadrature did not converge: error estimate {error_estimate:e} \
         after {evaluations} evaluations"
    )]
    NonConvergence { error_estimate: f64, evaluations: u64 },

    /// A 2x2 matrix inversion hit the determinant-magnitude guard.
    #[error("singular matrix in {what}: |det| = {det_magnitude:e}")]
    SingularMatrix { what: &'static str, det_magnitude: f64 },

    /// The kernel/integrand proportionality constant estimated from two
    /// reference points disagrees beyond tolerance.
    #[error("inconsistent proportionality constant: {first} vs {second}")]
    InconsistentConstant { first: f64, second: f64 },

    /// SI conversion was requested without the scale the normalization needs.
    #[error("missing SI scale for normalization {normalization:?}")]
    MissingScale { normalization: Normalization },

    /// A run configuration failed validation.
    #[error("config error: {message}")]
    Config { message: String },

    /// A run configuration document could not be parsed.
    #[error("config parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(what: impl Into<String>) -> Self {
        Error::Domain { what: what.into() }
    }

    pub(crate) fn config(message: impl Into<String>) -> Self {
        Error::Config { message: message.into() }
    }

    /// True for errors caused by a bad run configuration rather than by a
    /// failed computation. The CLI maps these to exit status 2.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config { .. } | Error::Parse(_))
    }
}
