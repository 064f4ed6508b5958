use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use superrep_ffi::*;

const A22: &str = r#"{"vertices":[{"id":1,"type":"K"},{"id":2,"type":"K"},{"id":3,"type":"D"},{"id":4,"type":"D"}],
"bimodules":[{"source":1,"target":2,"case":"KK","d0":1,"d1":0},{"source":2,"target":3,"case":"KtoD","rank":1},
{"source":3,"target":4,"case":"DD","plus":1,"minus":0}]}"#;

fn species(json: &str) -> Result<*mut SrSpecies, SrStatus> {
    let c = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    match unsafe { sr_species_from_json(c.as_ptr(), &mut out) } {
        SrStatus::Ok => Ok(out),
        e => Err(e),
    }
}

fn last_error() -> String {
    let p = sr_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn classify_and_dimensions() {
    let s = species(A22).unwrap();
    unsafe {
        let mut n = 0;
        assert_eq!(sr_species_vertex_count(s, &mut n), SrStatus::Ok);
        assert_eq!(n, 4);
        let mut t = SrRepType::Wild;
        assert_eq!(sr_species_classify(s, SrMethod::Both, &mut t), SrStatus::Ok);
        assert_eq!(t, SrRepType::Finite);
        let mut dim = ptr::null_mut();
        assert_eq!(sr_species_tensor_dim(s, &mut dim), SrStatus::Ok);
        assert_eq!(CStr::from_ptr(dim).to_str().unwrap(), "17");
        sr_string_free(dim);
        sr_species_free(s);
    }
}

#[test]
fn k3_is_wild_and_loop_is_cyclic() {
    let k3 = species(r#"{"vertices":[{"id":1,"type":"K"},{"id":2,"type":"K"}],
        "bimodules":[{"source":1,"target":2,"case":"KK","d0":3,"d1":0}]}"#)
    .unwrap();
    let lp = species(r#"{"vertices":[{"id":1,"type":"K"}],
        "bimodules":[{"source":1,"target":1,"case":"KK","d0":1,"d1":0}]}"#)
    .unwrap();
    unsafe {
        let mut t = SrRepType::Finite;
        assert_eq!(sr_species_classify(k3, SrMethod::Table, &mut t), SrStatus::Ok);
        assert_eq!(t, SrRepType::Wild);
        assert_eq!(sr_species_classify(lp, SrMethod::Quiver, &mut t), SrStatus::Cyclic);
        assert!(last_error().contains("cyclic"));
        let mut dim = ptr::null_mut();
        assert_eq!(sr_species_tensor_dim(lp, &mut dim), SrStatus::Ok);
        assert_eq!(CStr::from_ptr(dim).to_str().unwrap(), "infinite");
        sr_string_free(dim);
        sr_species_free(k3);
        sr_species_free(lp);
    }
}

#[test]
fn errors_and_null_pointers() {
    assert_eq!(species("{").unwrap_err(), SrStatus::Invalid);
    assert!(!last_error().is_empty());
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(sr_species_from_json(ptr::null(), &mut out), SrStatus::NullPointer);
        let mut n = 0;
        assert_eq!(sr_species_vertex_count(ptr::null(), &mut n), SrStatus::NullPointer);
        sr_species_free(ptr::null_mut());
        sr_string_free(ptr::null_mut());
    }
}

#[test]
fn superquiver_round_trip_and_realizability() {
    let s = species(A22).unwrap();
    unsafe {
        let mut q = ptr::null_mut();
        assert_eq!(sr_species_superquiver(s, &mut q), SrStatus::Ok);
        let mut ok = false;
        assert_eq!(sr_superquiver_is_realizable(q, &mut ok), SrStatus::Ok);
        assert!(ok);
        let mut back = ptr::null_mut();
        assert_eq!(sr_superquiver_species(q, &mut back), SrStatus::Ok);
        let mut n = 0;
        sr_species_vertex_count(back, &mut n);
        assert_eq!(n, 4);
        let mut dot = ptr::null_mut();
        assert_eq!(sr_superquiver_dot(q, &mut dot), SrStatus::Ok);
        assert!(CStr::from_ptr(dot).to_str().unwrap().starts_with("digraph"));
        sr_string_free(dot);
        sr_species_free(back);
        sr_superquiver_free(q);
        sr_species_free(s);

        // black → white with a single solid arrow
        let bad = CString::new(
            r#"{"vertices":[{"id":1,"color":"black"},{"id":2,"color":"white"}],
                "arrows":[{"id":"a","source":1,"target":2}]}"#,
        )
        .unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(sr_superquiver_from_json(bad.as_ptr(), &mut q), SrStatus::Ok);
        assert_eq!(sr_superquiver_is_realizable(q, &mut ok), SrStatus::Ok);
        assert!(!ok);
        let mut s = ptr::null_mut();
        assert_eq!(sr_superquiver_species(q, &mut s), SrStatus::Invalid);
        sr_superquiver_free(q);
    }
}

#[test]
fn counting_over_f2() {
    let kd = species(r#"{"vertices":[{"id":1,"type":"K"},{"id":2,"type":"D"}],
        "bimodules":[{"source":1,"target":2,"case":"KtoD","rank":1}]}"#)
    .unwrap();
    unsafe {
        let mut n = 0;
        assert_eq!(sr_species_count_indecomposables(kd, 2, &mut n), SrStatus::Ok);
        assert_eq!(n, 6);
        assert_eq!(sr_species_count_indecomposables(kd, 4, &mut n), SrStatus::UnsupportedField);
        sr_species_free(kd);
    }
}

fn find_static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let deps = exe.parent()?;
    [deps.parent()?.join("libsuperrep_ffi.a"), deps.join("libsuperrep_ffi.a")]
        .into_iter()
        .find(|p| p.exists())
}

#[test]
fn header_compiles_and_links_from_c() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = root.join("include/superrep.h");
    let text = std::fs::read_to_string(&header).expect("build script writes the header");
    for name in ["sr_species_from_json", "sr_species_classify", "SR_STATUS_BUDGET", "typedef struct SrSpecies SrSpecies"] {
        assert!(text.contains(name), "header lacks {name}");
    }
    let Some(lib) = find_static_lib() else {
        eprintln!("static library not found next to the test binary; skipping the C link step");
        return;
    };
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping the C link step");
        return;
    }
    let exe = Path::new(env!("CARGO_TARGET_TMPDIR")).join("superrep_smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "C smoke test exited with {:?}", out.status.code());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
