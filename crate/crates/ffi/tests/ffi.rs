use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use polylog_ffi::*;

fn text(cf: *const PlgClosedForm) -> String {
    unsafe {
        let mut needed = 0usize;
        assert_eq!(
            plg_closed_to_string(cf, ptr::null_mut(), 0, &mut needed),
            PlgStatus::BufferTooSmall
        );
        let mut buf = vec![0 as c_char; needed];
        assert_eq!(
            plg_closed_to_string(cf, buf.as_mut_ptr(), buf.len(), ptr::null_mut()),
            PlgStatus::Ok
        );
        CStr::from_ptr(buf.as_ptr()).to_str().unwrap().to_owned()
    }
}

fn last_error() -> String {
    unsafe {
        let mut buf = vec![0 as c_char; 512];
        plg_last_error(buf.as_mut_ptr(), buf.len(), ptr::null_mut());
        CStr::from_ptr(buf.as_ptr()).to_str().unwrap().to_owned()
    }
}

#[test]
fn inm_round_trip() {
    unsafe {
        let mut cf = ptr::null_mut();
        assert_eq!(plg_inm(1, 2, &mut cf), PlgStatus::Ok);
        assert_eq!(text(cf), "-6 + 1/3*pi^2 + 2*zeta3");
        let src = CString::new(text(cf)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(plg_closed_parse(src.as_ptr(), &mut back), PlgStatus::Ok);
        let mut eq = 0;
        assert_eq!(plg_closed_equal(cf, back, &mut eq), PlgStatus::Ok);
        assert_eq!(eq, 1);
        let mut v = 0.0;
        assert_eq!(plg_closed_eval(cf, &mut v), PlgStatus::Ok);
        assert!((v - (-6.0 + std::f64::consts::PI.powi(2) / 3.0 + 2.0 * 1.2020569031595942)).abs() < 1e-14);
        let mut num = 0.0;
        assert_eq!(plg_nielsen(1, 2, 1.0, &mut num), PlgStatus::Ok);
        assert!((num - 1.2020569031595942).abs() < 1e-12);
        plg_closed_free(cf);
        plg_closed_free(back);
    }
}

#[test]
fn arithmetic_and_json() {
    unsafe {
        let (mut a, mut b, mut s, mut p) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        let one = CString::new("2 - pi^2/6").unwrap();
        let two = CString::new("zeta3").unwrap();
        assert_eq!(plg_closed_parse(one.as_ptr(), &mut a), PlgStatus::Ok);
        assert_eq!(plg_closed_parse(two.as_ptr(), &mut b), PlgStatus::Ok);
        assert_eq!(plg_closed_add(a, b, &mut s), PlgStatus::Ok);
        assert_eq!(plg_closed_mul(a, b, &mut p), PlgStatus::Ok);
        assert_eq!(text(s), "2 - 1/6*pi^2 + zeta3");
        assert_eq!(text(p), "-1/6*pi^2*zeta3 + 2*zeta3");
        let mut needed = 0;
        plg_closed_to_json(p, ptr::null_mut(), 0, &mut needed);
        let mut buf = vec![0 as c_char; needed];
        assert_eq!(
            plg_closed_to_json(p, buf.as_mut_ptr(), needed, ptr::null_mut()),
            PlgStatus::Ok
        );
        let mut q = ptr::null_mut();
        assert_eq!(plg_closed_from_json(buf.as_ptr(), &mut q), PlgStatus::Ok);
        assert_eq!(text(q), text(p));
        for h in [a, b, s, p, q] {
            plg_closed_free(h);
        }
    }
}

#[test]
fn quantities() {
    unsafe {
        let mut cf = ptr::null_mut();
        assert_eq!(plg_ipq(PlgFamily::Plus, 2, 3, &mut cf), PlgStatus::Ok);
        assert_eq!(text(cf), "1/2*zeta3^2");
        plg_closed_free(cf);
        assert_eq!(plg_euler_sum(PlgSum::SPlus, 2, &mut cf), PlgStatus::Ok);
        assert_eq!(text(cf), "2*zeta3");
        plg_closed_free(cf);
        assert_eq!(plg_sigma_tilde(1, 1, &mut cf), PlgStatus::Ok);
        assert_eq!(text(cf), "-1/12*pi^2");
        plg_closed_free(cf);
        assert_eq!(plg_sigma_tilde(2, 4, &mut cf), PlgStatus::Ok);
        assert_eq!(text(cf), "sigma_2_4");
        plg_closed_free(cf);
        assert_eq!(plg_hnm(1, 1, &mut cf), PlgStatus::Ok);
        plg_closed_free(cf);
        assert_eq!(plg_s_minus_truncated(5, 10, &mut cf), PlgStatus::Ok);
        plg_closed_free(cf);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut cf = ptr::null_mut();
        assert_eq!(plg_inm(4, 3, &mut cf), PlgStatus::Capacity);
        assert!(last_error().contains("capacity"));
        assert_eq!(plg_inm(0, 0, &mut cf), PlgStatus::Domain);
        assert_eq!(plg_euler_sum(PlgSum::SPlus, 1, &mut cf), PlgStatus::Domain);
        assert_eq!(plg_sigma_tilde(0, 2, &mut cf), PlgStatus::Domain);
        let bad = CString::new("pi/ln2").unwrap();
        assert_eq!(plg_closed_parse(bad.as_ptr(), &mut cf), PlgStatus::Parse);
        assert_eq!(plg_closed_parse(ptr::null(), &mut cf), PlgStatus::NullPointer);
        assert_eq!(plg_inm(1, 1, ptr::null_mut()), PlgStatus::NullPointer);
        let mut v = 0.0;
        assert_eq!(plg_closed_eval(ptr::null(), &mut v), PlgStatus::NullPointer);
        assert!(cf.is_null());
        plg_closed_free(ptr::null_mut());
    }
}

#[test]
fn report_handle() {
    unsafe {
        let suite = CString::new("appendix").unwrap();
        let mut rep = ptr::null_mut();
        assert_eq!(plg_verify(suite.as_ptr(), 10.0, &mut rep), PlgStatus::Ok);
        let (mut passed, mut failed) = (0usize, 0usize);
        assert_eq!(plg_report_counts(rep, &mut passed, &mut failed), PlgStatus::Ok);
        assert!(passed > 0);
        assert_eq!(failed, 0);
        let mut needed = 0;
        assert_eq!(
            plg_report_to_json(rep, ptr::null_mut(), 0, &mut needed),
            PlgStatus::BufferTooSmall
        );
        assert!(needed > 100);
        plg_report_free(rep);
        let bogus = CString::new("everything").unwrap();
        assert_eq!(plg_verify(bogus.as_ptr(), 1.0, &mut rep), PlgStatus::Parse);
        assert_eq!(plg_verify(suite.as_ptr(), 0.0, &mut rep), PlgStatus::InvalidArgument);
    }
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/polylog.h")).unwrap();
    for name in [
        "plg_closed_parse",
        "plg_closed_free",
        "plg_inm",
        "plg_verify",
        "plg_report_free",
        "PLG_STATUS_CAPACITY",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    assert!(header.contains("typedef struct PlgClosedForm PlgClosedForm;"));
}

/// Compiles and runs a C program against the static library when a C compiler is present.
#[test]
fn c_program_links() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| dir.join("../../target"));
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib = target.join(profile).join("libpolylog_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let exe = tmp.path().join("smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("2 - 1/6*pi^2 = 0.355065933151"));
}
