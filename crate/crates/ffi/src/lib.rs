//! C ABI over `superrep`.
//!
//! Species and superquivers are opaque handles created from JSON and released
//! with their `_free` function. Every fallible call returns an [`SrStatus`];
//! on failure [`sr_last_error`] describes the problem. Strings returned
//! through `char **` out-parameters are owned by the caller and released with
//! [`sr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use superrep::oracle::{self, Budget, Zp};
use superrep::quiver::classify_via_quiver;
use superrep::superquiver::classify_via_table;
use superrep::{Error, RepType, Superquiver, Superspecies};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Invalid = 3,
    Cyclic = 4,
    UnsupportedField = 5,
    Budget = 6,
    Undecided = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrRepType {
    Finite = 0,
    Tame = 1,
    Wild = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrMethod {
    Quiver = 0,
    Table = 1,
    Both = 2,
}

/// Opaque superspecies.
pub struct SrSpecies(Superspecies);

/// Opaque superquiver.
pub struct SrSuperquiver(Superquiver);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SrStatus, msg: impl Into<String>) -> SrStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> SrStatus {
    match e {
        Error::Cyclic(_) => SrStatus::Cyclic,
        Error::UnsupportedField { .. } => SrStatus::UnsupportedField,
        Error::Budget(_) => SrStatus::Budget,
        Error::Undecided(_) => SrStatus::Undecided,
        Error::Internal(_) => SrStatus::Internal,
        _ => SrStatus::Invalid,
    }
}

fn lib_error(e: Error) -> SrStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning panics into [`SrStatus::Panic`].
fn guard(f: impl FnOnce() -> SrStatus) -> SrStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SrStatus::Panic, "panic inside superrep"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SrStatus> {
    if s.is_null() {
        return Err(fail(SrStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(SrStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> SrStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SrStatus::Ok
        }
        Err(_) => fail(SrStatus::Internal, "output contains a nul byte"),
    }
}

fn rep_type(t: RepType) -> SrRepType {
    match t {
        RepType::Finite => SrRepType::Finite,
        RepType::Tame => SrRepType::Tame,
        RepType::Wild => SrRepType::Wild,
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            return fail(SrStatus::NullPointer, "null pointer argument");
        }
    };
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sr_species_from_json(json: *const c_char, out: *mut *mut SrSpecies) -> SrStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Superspecies::from_json(text) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(SrSpecies(s)));
                SrStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sr_species_free(s: *mut SrSpecies) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_species_vertex_count(s: *const SrSpecies, out: *mut usize) -> SrStatus {
    non_null!(s, out);
    *out = (*s).0.len();
    SrStatus::Ok
}

/// # Safety
/// Pointers must be valid; `*out` is released with [`sr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sr_species_to_json(s: *const SrSpecies, out: *mut *mut c_char) -> SrStatus {
    non_null!(s, out);
    write_string(out, (*s).0.to_json())
}

/// Representation type by the chosen route; `Both` fails with
/// [`SrStatus::Internal`] when the routes disagree.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_species_classify(s: *const SrSpecies, method: SrMethod, out: *mut SrRepType) -> SrStatus {
    guard(|| {
        non_null!(s, out);
        let s = &(*s).0;
        let t = match method {
            SrMethod::Quiver => classify_via_quiver(s),
            SrMethod::Table => classify_via_table(s),
            SrMethod::Both => match (classify_via_quiver(s), classify_via_table(s)) {
                (Ok(a), Ok(b)) if a == b => Ok(a),
                (Ok(a), Ok(b)) => Err(Error::Internal(format!("quiver route says {a}, table route says {b}"))),
                (Err(e), _) | (_, Err(e)) => Err(e),
            },
        };
        match t {
            Ok(t) => {
                *out = rep_type(t);
                SrStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}

/// Dimension of the tensor algebra as a decimal string or `"infinite"`.
///
/// # Safety
/// Pointers must be valid; `*out` is released with [`sr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sr_species_tensor_dim(s: *const SrSpecies, out: *mut *mut c_char) -> SrStatus {
    non_null!(s, out);
    write_string(out, (*s).0.tensor_algebra_dim().to_string())
}

/// Number of isomorphism classes of indecomposable representations over
/// F_p within the budget (`SUPERREP_BUDGET`, else the default).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_species_count_indecomposables(s: *const SrSpecies, p: u32, out: *mut usize) -> SrStatus {
    guard(|| {
        non_null!(s, out);
        let run = || -> superrep::Result<usize> {
            let field = Zp::new(p)?;
            let budget = Budget::from_env()?;
            Ok(oracle::count_species_indecomposables(&(*s).0, field, &budget)?.total)
        };
        match run() {
            Ok(n) => {
                *out = n;
                SrStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_species_superquiver(s: *const SrSpecies, out: *mut *mut SrSuperquiver) -> SrStatus {
    guard(|| {
        non_null!(s, out);
        *out = Box::into_raw(Box::new(SrSuperquiver((*s).0.superquiver_of())));
        SrStatus::Ok
    })
}

/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sr_superquiver_from_json(json: *const c_char, out: *mut *mut SrSuperquiver) -> SrStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Superquiver::from_json(text) {
            Ok(q) => {
                *out = Box::into_raw(Box::new(SrSuperquiver(q)));
                SrStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}

/// # Safety
/// `q` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sr_superquiver_free(q: *mut SrSuperquiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_superquiver_is_realizable(q: *const SrSuperquiver, out: *mut bool) -> SrStatus {
    non_null!(q, out);
    *out = (*q).0.is_realizable();
    SrStatus::Ok
}

/// A species realizing the superquiver; fails with [`SrStatus::Invalid`]
/// when it is not realizable.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sr_superquiver_species(q: *const SrSuperquiver, out: *mut *mut SrSpecies) -> SrStatus {
    guard(|| {
        non_null!(q, out);
        match (*q).0.species_from() {
            Ok(s) => {
                *out = Box::into_raw(Box::new(SrSpecies(s)));
                SrStatus::Ok
            }
            Err(e) => lib_error(e),
        }
    })
}

/// # Safety
/// Pointers must be valid; `*out` is released with [`sr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sr_superquiver_dot(q: *const SrSuperquiver, out: *mut *mut c_char) -> SrStatus {
    non_null!(q, out);
    write_string(out, (*q).0.dot())
}
