//! Exercises the C ABI through the extern "C" functions themselves.

use std::ffi::CString;

use casimir_torque_ffi::*;

#[test]
fn torque_through_the_c_surface() {
    let m1 = ct_mirror_perfect_polarizer(1);
    let m2 = ct_mirror_perfect_polarizer(1);
    assert!(!m1.is_null() && !m2.is_null());

    let mut result = CtTorqueResult {
        tau: 0.0,
        error_estimate: 0.0,
        evaluations: 0,
        normalization: CtNormalization::TauLOverHbarC,
    };
    let status = unsafe {
        ct_torque(
            m1,
            m2,
            std::f64::consts::FRAC_PI_4,
            1.0,
            std::ptr::null(),
            &mut result,
        )
    };
    assert_eq!(status, CtStatus::Ok);
    assert_eq!(result.normalization, CtNormalization::TauLOverHbarC);
    assert!((result.tau - (-0.11031780007632581)).abs() < 1e-9);
    assert!(result.evaluations > 0);

    // Matches the closed form through the same surface.
    let mut closed = 0.0;
    let status =
        unsafe { ct_torque_perfect_polarizers(std::f64::consts::FRAC_PI_4, 1.0, &mut closed) };
    assert_eq!(status, CtStatus::Ok);
    assert!((result.tau - closed).abs() < 1e-9);

    unsafe {
        ct_mirror_free(m1);
        ct_mirror_free(m2);
    }
}

#[test]
fn reflection_pair_and_dispersive_flag() {
    let lorentz = ct_mirror_lorentz(1.0, 1.0, 0.0, std::f64::consts::SQRT_2, 1.0, 0.0);
    assert!(!lorentz.is_null());
    assert!(unsafe { ct_mirror_is_dispersive(lorentz) });

    let (mut rx, mut ry, mut dr) = (0.0, 0.0, 0.0);
    let status =
        unsafe { ct_reflection_pair(lorentz, 1e-9, &mut rx, &mut ry, &mut dr) };
    assert_eq!(status, CtStatus::Ok);
    assert!((rx - (-0.17157287525380996)).abs() < 1e-6);
    assert!((dr - (rx - ry)).abs() < 1e-15);

    // kappa <= 0 is invalid.
    let status = unsafe {
        ct_reflection_pair(lorentz, -1.0, &mut rx, std::ptr::null_mut(), std::ptr::null_mut())
    };
    assert_eq!(status, CtStatus::InvalidArgument);

    unsafe { ct_mirror_free(lorentz) };

    let constant = ct_mirror_constant(0.5, -0.2);
    assert!(!unsafe { ct_mirror_is_dispersive(constant) });
    unsafe { ct_mirror_free(constant) };
}

#[test]
fn invalid_constructor_arguments_return_null() {
    assert!(ct_mirror_perfect_polarizer(2).is_null());
    assert!(ct_mirror_lossy(1.5).is_null());
    assert!(ct_mirror_constant(2.0, 0.0).is_null());
    assert!(ct_mirror_lorentz(-1.0, 1.0, 0.0, 1.0, 1.0, 0.0).is_null());
    assert!(ct_mirror_slab(1.0, 1.0, 0.0, 1.0, 1.0, 0.0, -1.0).is_null());
    unsafe {
        assert!(ct_mirror_tabulated(std::ptr::null(), std::ptr::null(), std::ptr::null(), 0)
            .is_null());
        // One sample is too few.
        let k = [1.0];
        let r = [0.5];
        assert!(ct_mirror_tabulated(k.as_ptr(), r.as_ptr(), r.as_ptr(), 1).is_null());
    }
}

#[test]
fn tabulated_out_of_range_status() {
    let k = [0.5, 2.0];
    let rx = [-0.9, -0.8];
    let ry = [-0.1, -0.2];
    let m = unsafe { ct_mirror_tabulated(k.as_ptr(), rx.as_ptr(), ry.as_ptr(), 2) };
    assert!(!m.is_null());
    let mut out = 0.0;
    let status = unsafe {
        ct_reflection_pair(m, 5.0, &mut out, std::ptr::null_mut(), std::ptr::null_mut())
    };
    assert_eq!(status, CtStatus::OutOfRange);
    unsafe { ct_mirror_free(m) };
}

#[test]
fn tabulated_from_file() {
    use std::io::Write;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "0.5 -0.9 -0.1\n2.0 -0.8 -0.2").unwrap();
    drop(f);

    let c_path = CString::new(path.to_str().unwrap()).unwrap();
    let m = unsafe { ct_mirror_tabulated_from_file(c_path.as_ptr()) };
    assert!(!m.is_null());
    unsafe { ct_mirror_free(m) };

    let missing = CString::new("/nonexistent/table.txt").unwrap();
    assert!(unsafe { ct_mirror_tabulated_from_file(missing.as_ptr()) }.is_null());
}

#[test]
fn validate_and_statuses() {
    let m1 = ct_mirror_lossy(0.8);
    let m2 = ct_mirror_lossy(0.8);
    let kappas = [0.1, 1.0, 10.0];
    let (mut dev, mut c0) = (f64::NAN, f64::NAN);
    let status = unsafe {
        ct_validate(
            m1,
            m2,
            std::f64::consts::FRAC_PI_4,
            1.0,
            kappas.as_ptr(),
            kappas.len(),
            &mut dev,
            &mut c0,
        )
    };
    assert_eq!(status, CtStatus::Ok);
    assert!(dev <= 1e-8);
    assert!((c0 - (-1.0)).abs() < 1e-10);

    // Null mirror.
    let status = unsafe {
        ct_validate(
            std::ptr::null(),
            m2,
            0.5,
            1.0,
            kappas.as_ptr(),
            kappas.len(),
            &mut dev,
            &mut c0,
        )
    };
    assert_eq!(status, CtStatus::NullPointer);

    unsafe {
        ct_mirror_free(m1);
        ct_mirror_free(m2);
    }
}

#[test]
fn non_convergence_status() {
    let m1 = ct_mirror_perfect_polarizer(1);
    let m2 = ct_mirror_perfect_polarizer(1);
    let settings = CtQuadratureSettings { rel_tol: 1e-16, abs_tol: 0.0, max_subdivisions: 1 };
    let mut result = CtTorqueResult {
        tau: 0.0,
        error_estimate: 0.0,
        evaluations: 0,
        normalization: CtNormalization::TauLOverHbarC,
    };
    let status = unsafe {
        ct_torque(m1, m2, std::f64::consts::FRAC_PI_4, 1.0, &settings, &mut result)
    };
    assert_eq!(status, CtStatus::NoConvergence);
    unsafe {
        ct_mirror_free(m1);
        ct_mirror_free(m2);
    }
}

#[test]
fn si_conversion_and_closed_forms() {
    let mut v = 0.0;
    let status = unsafe { ct_to_si(0.1, CtNormalization::TauLOverHbarC, 10e-9, &mut v) };
    assert_eq!(status, CtStatus::Ok);
    assert!((v - 3.161526771559562e-19).abs() < 1e-27);

    let status = unsafe { ct_to_si(0.1, CtNormalization::TauLOverHbarC, -1.0, &mut v) };
    assert_eq!(status, CtStatus::InvalidArgument);

    let mut lossy = 0.0;
    let status = unsafe { ct_torque_lossy(std::f64::consts::FRAC_PI_4, 1.0, 0.6, &mut lossy) };
    assert_eq!(status, CtStatus::Ok);
    assert!((lossy - (-0.03158444785912569)).abs() < 1e-14);

    // Singular point of the lossy closed form.
    let status = unsafe { ct_torque_lossy(0.0, 1.0, 1.0, &mut lossy) };
    assert_eq!(status, CtStatus::Singular);

    let mut approx = 0.0;
    let status =
        unsafe { ct_small_r_approx(std::f64::consts::FRAC_PI_4, 1.0, 0.1, &mut approx) };
    assert_eq!(status, CtStatus::Ok);
    assert!((approx - (-7.957747154594768e-4)).abs() < 1e-18);
}

#[test]
fn status_messages_are_null_terminated_strings() {
    for status in [
        CtStatus::Ok,
        CtStatus::NullPointer,
        CtStatus::InvalidArgument,
        CtStatus::OutOfRange,
        CtStatus::Singular,
        CtStatus::NoConvergence,
        CtStatus::InconsistentConstant,
        CtStatus::IoError,
    ] {
        let ptr = ct_status_message(status);
        assert!(!ptr.is_null());
        let text = unsafe { std::ffi::CStr::from_ptr(ptr) }.to_str().unwrap();
        assert!(!text.is_empty());
    }
}

#[test]
fn header_declares_every_export() {
    // The header is hand-maintained; keep it in sync with the exports by
    // scanning this crate's source for #[no_mangle] functions.
    let header = include_str!("../include/casimir_torque.h");
    let source = include_str!("../src/lib.rs");
    let mut found = 0;
    for window in source.split("#[no_mangle]").skip(1) {
        let decl = window
            .split("fn ")
            .nth(1)
            .expect("a function must follow #[no_mangle]");
        let name: String = decl
            .chars()
            .take_while(|c| c.is_alphanumeric() || *c == '_')
            .collect();
        assert!(
            header.contains(&name),
            "exported function `{name}` missing from casimir_torque.h"
        );
        found += 1;
    }
    assert!(found >= 18, "expected at least 18 exports, scanned {found}");
}
