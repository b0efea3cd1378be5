//! C ABI for the casimir-torque library.
//!
//! Mirrors are opaque handles created by the `ct_mirror_*` constructors and
//! released with [`ct_mirror_free`]. Every computation returns a [`CtStatus`]
//! and writes its results through out-pointers. The matching declarations
//! live in `include/casimir_torque.h`; a test keeps header and exports in
//! sync.

use std::ffi::CStr;
use std::os::raw::{c_char, c_int};
use std::path::Path;

use casimir_torque::material::{MirrorModel, ReflectionTable, Sign, TableSample};
use casimir_torque::output::to_si;
use casimir_torque::quadrature::QuadratureSettings;
use casimir_torque::torque::{
    integrand, small_r_approx, torque, torque_lossy, torque_perfect_polarizers, CavityConfig,
    Normalization,
};
use casimir_torque::{greens, Error};

/// Opaque mirror handle.
pub struct CtMirror {
    model: MirrorModel,
}

/// Status codes of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    Singular = 4,
    NoConvergence = 5,
    InconsistentConstant = 6,
    IoError = 7,
}

/// Which dimensionless number a torque result carries.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtNormalization {
    /// `tau L / (hbar c)`: kappa-independent mirror pairs.
    TauLOverHbarC = 0,
    /// `tau / (hbar omega_ref)`: dispersive mirror pairs.
    TauOverHbarOmegaRef = 1,
}

/// Quadrature tolerances; obtain defaults from [`ct_quadrature_defaults`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct CtQuadratureSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: u32,
}

/// Torque plus quadrature diagnostics.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct CtTorqueResult {
    pub tau: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
    pub normalization: CtNormalization,
}

fn status_of(err: &Error) -> CtStatus {
    match err {
        Error::OutOfRange { .. } => CtStatus::OutOfRange,
        Error::SingularDenominator { .. }
        | Error::SingularArgument { .. }
        | Error::SingularMatrix { .. } => CtStatus::Singular,
        Error::NonConvergence { .. } => CtStatus::NoConvergence,
        Error::InconsistentConstant { .. } => CtStatus::InconsistentConstant,
        Error::Io(_) => CtStatus::IoError,
        Error::StaticDivergence
        | Error::Domain { .. }
        | Error::MissingScale { .. }
        | Error::Config { .. }
        | Error::Parse(_) => CtStatus::InvalidArgument,
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ct_status_message(status: CtStatus) -> *const c_char {
    let message: &'static CStr = match status {
        CtStatus::Ok => c"ok",
        CtStatus::NullPointer => c"null pointer argument",
        CtStatus::InvalidArgument => c"invalid argument",
        CtStatus::OutOfRange => c"kappa outside tabulated range",
        CtStatus::Singular => c"singular configuration",
        CtStatus::NoConvergence => c"quadrature did not converge",
        CtStatus::InconsistentConstant => c"inconsistent proportionality constant",
        CtStatus::IoError => c"i/o error",
    };
    message.as_ptr()
}

/// Default quadrature settings (rel_tol 1e-10, abs_tol 1e-14, 200
/// subdivisions).
#[no_mangle]
pub extern "C" fn ct_quadrature_defaults() -> CtQuadratureSettings {
    let d = QuadratureSettings::default();
    CtQuadratureSettings {
        rel_tol: d.rel_tol,
        abs_tol: d.abs_tol,
        max_subdivisions: d.max_subdivisions,
    }
}

fn boxed(model: MirrorModel) -> *mut CtMirror {
    Box::into_raw(Box::new(CtMirror { model }))
}

/// Ideal polarizer `r_x = sign, r_y = 0`; `sign` must be +1 or -1.
/// Returns NULL on invalid input.
#[no_mangle]
pub extern "C" fn ct_mirror_perfect_polarizer(sign: c_int) -> *mut CtMirror {
    let sign = match sign {
        1 => Sign::Plus,
        -1 => Sign::Minus,
        _ => return std::ptr::null_mut(),
    };
    boxed(MirrorModel::perfect_polarizer(sign))
}

/// Lossy polarizer `r_x = r, r_y = 0`, |r| <= 1. Returns NULL on invalid
/// input.
#[no_mangle]
pub extern "C" fn ct_mirror_lossy(r: f64) -> *mut CtMirror {
    match MirrorModel::lossy_polarizer(r) {
        Ok(m) => boxed(m),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Frequency-independent amplitudes, |r| <= 1 each. Returns NULL on invalid
/// input.
#[no_mangle]
pub extern "C" fn ct_mirror_constant(r_x: f64, r_y: f64) -> *mut CtMirror {
    match MirrorModel::constant_pair(r_x, r_y) {
        Ok(m) => boxed(m),
        Err(_) => std::ptr::null_mut(),
    }
}

fn resonances(
    omega0_x: f64,
    omega_p_x: f64,
    inv_tau_x: f64,
    omega0_y: f64,
    omega_p_y: f64,
    inv_tau_y: f64,
) -> Option<(
    casimir_torque::material::LorentzResonance,
    casimir_torque::material::LorentzResonance,
)> {
    use casimir_torque::material::LorentzResonance;
    Some((
        LorentzResonance::new(omega0_x, omega_p_x, inv_tau_x).ok()?,
        LorentzResonance::new(omega0_y, omega_p_y, inv_tau_y).ok()?,
    ))
}

/// Semi-infinite medium with one Lorentz resonance per principal axis;
/// frequencies in units of the reference frequency. Returns NULL on invalid
/// input.
#[no_mangle]
pub extern "C" fn ct_mirror_lorentz(
    omega0_x: f64,
    omega_p_x: f64,
    inv_tau_x: f64,
    omega0_y: f64,
    omega_p_y: f64,
    inv_tau_y: f64,
) -> *mut CtMirror {
    match resonances(omega0_x, omega_p_x, inv_tau_x, omega0_y, omega_p_y, inv_tau_y) {
        Some((x, y)) => boxed(MirrorModel::semi_infinite_lorentz(x, y)),
        None => std::ptr::null_mut(),
    }
}

/// Free-standing Lorentz film of `thickness` (units of c/omega_ref).
/// Returns NULL on invalid input.
#[no_mangle]
pub extern "C" fn ct_mirror_slab(
    omega0_x: f64,
    omega_p_x: f64,
    inv_tau_x: f64,
    omega0_y: f64,
    omega_p_y: f64,
    inv_tau_y: f64,
    thickness: f64,
) -> *mut CtMirror {
    let Some((x, y)) = resonances(omega0_x, omega_p_x, inv_tau_x, omega0_y, omega_p_y, inv_tau_y)
    else {
        return std::ptr::null_mut();
    };
    match MirrorModel::lorentz_slab(x, y, thickness) {
        Ok(m) => boxed(m),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Tabulated amplitudes on a strictly increasing kappa grid of `len >= 2`
/// samples. Returns NULL on invalid input.
///
/// # Safety
/// `kappa`, `r_x` and `r_y` must point to `len` readable doubles each.
#[no_mangle]
pub unsafe extern "C" fn ct_mirror_tabulated(
    kappa: *const f64,
    r_x: *const f64,
    r_y: *const f64,
    len: usize,
) -> *mut CtMirror {
    if kappa.is_null() || r_x.is_null() || r_y.is_null() {
        return std::ptr::null_mut();
    }
    let kappa = std::slice::from_raw_parts(kappa, len);
    let r_x = std::slice::from_raw_parts(r_x, len);
    let r_y = std::slice::from_raw_parts(r_y, len);
    let samples = kappa
        .iter()
        .zip(r_x.iter().zip(r_y))
        .map(|(&kappa, (&r_x, &r_y))| TableSample { kappa, r_x, r_y })
        .collect();
    match ReflectionTable::new(samples) {
        Ok(table) => boxed(MirrorModel::tabulated(table)),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Tabulated amplitudes from a three-column text file `kappa r_x r_y`.
/// Returns NULL when the file cannot be read or parsed.
///
/// # Safety
/// `path` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ct_mirror_tabulated_from_file(path: *const c_char) -> *mut CtMirror {
    if path.is_null() {
        return std::ptr::null_mut();
    }
    let Ok(path) = CStr::from_ptr(path).to_str() else {
        return std::ptr::null_mut();
    };
    match ReflectionTable::from_path(Path::new(path)) {
        Ok(table) => boxed(MirrorModel::tabulated(table)),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Releases a mirror handle; NULL is allowed.
///
/// # Safety
/// `mirror` must be a pointer previously returned by a `ct_mirror_*`
/// constructor and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ct_mirror_free(mirror: *mut CtMirror) {
    if !mirror.is_null() {
        drop(Box::from_raw(mirror));
    }
}

/// True when the mirror's amplitudes depend on kappa (decides the torque
/// normalization).
///
/// # Safety
/// `mirror` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_mirror_is_dispersive(mirror: *const CtMirror) -> bool {
    if mirror.is_null() {
        return false;
    }
    (*mirror).model.is_dispersive()
}

/// Principal-axis amplitudes and anisotropy at `kappa > 0`.
///
/// # Safety
/// `mirror` must be a live handle; out-pointers must be writable or NULL
/// (NULL out-pointers are skipped).
#[no_mangle]
pub unsafe extern "C" fn ct_reflection_pair(
    mirror: *const CtMirror,
    kappa: f64,
    r_x: *mut f64,
    r_y: *mut f64,
    delta_r: *mut f64,
) -> CtStatus {
    if mirror.is_null() {
        return CtStatus::NullPointer;
    }
    match (*mirror).model.reflection_pair(kappa) {
        Ok(pair) => {
            if !r_x.is_null() {
                *r_x = pair.r_x;
            }
            if !r_y.is_null() {
                *r_y = pair.r_y;
            }
            if !delta_r.is_null() {
                *delta_r = pair.delta_r;
            }
            CtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

unsafe fn cavity(
    mirror1: *const CtMirror,
    mirror2: *const CtMirror,
    gamma: f64,
    separation: f64,
) -> Result<CavityConfig, CtStatus> {
    if mirror1.is_null() || mirror2.is_null() {
        return Err(CtStatus::NullPointer);
    }
    CavityConfig::new(separation, gamma, (*mirror1).model.clone(), (*mirror2).model.clone())
        .map_err(|e| status_of(&e))
}

/// The torque integrand F(kappa) for the given pair.
///
/// # Safety
/// `mirror1`, `mirror2` must be live handles and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn ct_integrand(
    mirror1: *const CtMirror,
    mirror2: *const CtMirror,
    gamma: f64,
    separation: f64,
    kappa: f64,
    value: *mut f64,
) -> CtStatus {
    if value.is_null() {
        return CtStatus::NullPointer;
    }
    let cfg = match cavity(mirror1, mirror2, gamma, separation) {
        Ok(cfg) => cfg,
        Err(status) => return status,
    };
    match integrand(kappa, &cfg) {
        Ok(f) => {
            *value = f;
            CtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Integrates the torque for the pair; `settings` may be NULL for defaults.
///
/// # Safety
/// `mirror1`, `mirror2` must be live handles; `settings` NULL or readable;
/// `result` writable.
#[no_mangle]
pub unsafe extern "C" fn ct_torque(
    mirror1: *const CtMirror,
    mirror2: *const CtMirror,
    gamma: f64,
    separation: f64,
    settings: *const CtQuadratureSettings,
    result: *mut CtTorqueResult,
) -> CtStatus {
    if result.is_null() {
        return CtStatus::NullPointer;
    }
    let cfg = match cavity(mirror1, mirror2, gamma, separation) {
        Ok(cfg) => cfg,
        Err(status) => return status,
    };
    let settings = if settings.is_null() {
        QuadratureSettings::default()
    } else {
        QuadratureSettings {
            rel_tol: (*settings).rel_tol,
            abs_tol: (*settings).abs_tol,
            max_subdivisions: (*settings).max_subdivisions,
        }
    };
    match torque(&cfg, &settings) {
        Ok(r) => {
            *result = CtTorqueResult {
                tau: r.tau,
                error_estimate: r.error_estimate,
                evaluations: r.evaluations,
                normalization: match r.normalization {
                    Normalization::TauLOverHbarC => CtNormalization::TauLOverHbarC,
                    Normalization::TauOverHbarOmegaRef => CtNormalization::TauOverHbarOmegaRef,
                },
            };
            CtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

fn write_scalar(out: *mut f64, value: Result<f64, Error>) -> CtStatus {
    if out.is_null() {
        return CtStatus::NullPointer;
    }
    match value {
        Ok(v) => {
            unsafe { *out = v };
            CtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Closed-form torque for two ideal polarizers, natural units.
///
/// # Safety
/// `tau` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_torque_perfect_polarizers(
    gamma: f64,
    separation: f64,
    tau: *mut f64,
) -> CtStatus {
    write_scalar(tau, torque_perfect_polarizers(gamma, separation))
}

/// Closed-form torque for two lossy polarizers of amplitude `r`, natural
/// units.
///
/// # Safety
/// `tau` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_torque_lossy(
    gamma: f64,
    separation: f64,
    r: f64,
    tau: *mut f64,
) -> CtStatus {
    write_scalar(tau, torque_lossy(gamma, separation, r))
}

/// Weak-reflector sinusoidal approximation, natural units.
///
/// # Safety
/// `tau` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_small_r_approx(
    gamma: f64,
    separation: f64,
    r: f64,
    tau: *mut f64,
) -> CtStatus {
    write_scalar(tau, small_r_approx(gamma, separation, r))
}

/// Cross-validates the Green's-function kernel against the integrand over
/// `len` kappa samples. Writes the maximum floored relative deviation and
/// the estimated proportionality constant (NaN when unresolved).
///
/// # Safety
/// `mirror1`, `mirror2` must be live handles; `kappas` must point to `len`
/// readable doubles; `max_deviation` and `c0` writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn ct_validate(
    mirror1: *const CtMirror,
    mirror2: *const CtMirror,
    gamma: f64,
    separation: f64,
    kappas: *const f64,
    len: usize,
    max_deviation: *mut f64,
    c0: *mut f64,
) -> CtStatus {
    if kappas.is_null() {
        return CtStatus::NullPointer;
    }
    let cfg = match cavity(mirror1, mirror2, gamma, separation) {
        Ok(cfg) => cfg,
        Err(status) => return status,
    };
    let kappas = std::slice::from_raw_parts(kappas, len);
    match greens::validate(&cfg, kappas) {
        Ok(report) => {
            if !max_deviation.is_null() {
                *max_deviation = report.max_deviation;
            }
            if !c0.is_null() {
                *c0 = report.c0.unwrap_or(f64::NAN);
            }
            CtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Converts a dimensionless torque to newton meters. The scale is the
/// separation in meters for `TauLOverHbarC`, the reference frequency in
/// rad/s for `TauOverHbarOmegaRef`.
///
/// # Safety
/// `newton_meters` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_to_si(
    tau: f64,
    normalization: CtNormalization,
    scale: f64,
    newton_meters: *mut f64,
) -> CtStatus {
    let normalization = match normalization {
        CtNormalization::TauLOverHbarC => Normalization::TauLOverHbarC,
        CtNormalization::TauOverHbarOmegaRef => Normalization::TauOverHbarOmegaRef,
    };
    write_scalar(newton_meters, to_si(tau, normalization, Some(scale)))
}
