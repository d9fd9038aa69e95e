//! C ABI for the fixitylab toolkit.
//!
//! Groups travel across the boundary as opaque handles; every fallible call
//! returns an [`FxlStatus`], and structured results (profiles, classification
//! reports) are returned as JSON strings the caller frees with
//! [`fxl_string_free`]. No panic unwinds across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
#[cfg(test)]
use std::ptr;


use fixitylab::classify::{classify_fixity2, classify_fixity3, ClassifyError};
use fixitylab::fixity::{fixity_profile, ActionInstance};
use fixitylab::group::{Group, GroupError};
use fixitylab::io::parse_group_file;
use fixitylab::perm::Perm;

/// Status codes mirror the CLI exit codes where the concepts coincide.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FxlStatus {
    Ok = 0,
    PreconditionFailed = 1,
    ParseError = 2,
    TooLarge = 3,
    Violation = 4,
    NullArgument = 5,
    InvalidUtf8 = 6,
    InternalError = 7,
}

/// An opaque permutation group handle.
pub struct FxlGroup {
    group: Group,
}

fn group_error_status(e: &GroupError) -> FxlStatus {
    match e {
        GroupError::TooLarge { .. } => FxlStatus::TooLarge,
        _ => FxlStatus::ParseError,
    }
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, FxlStatus> {
    if ptr.is_null() {
        return Err(FxlStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| FxlStatus::InvalidUtf8)
}

fn into_out_string(text: String, out: *mut *mut c_char) -> FxlStatus {
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            FxlStatus::Ok
        }
        Err(_) => FxlStatus::InternalError,
    }
}

fn guarded(body: impl FnOnce() -> FxlStatus) -> FxlStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(FxlStatus::InternalError)
}

/// Parses a group file (line 1 `degree <n>`, then one generator per line in
/// cycle notation) into a new group handle. The handle must be released with
/// `fxl_group_free`.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fxl_group_parse(
    text: *const c_char,
    out: *mut *mut FxlGroup,
) -> FxlStatus {
    guarded(|| {
        if out.is_null() {
            return FxlStatus::NullArgument;
        }
        let text = match read_utf8(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_group_file(text) {
            Ok((group, _)) => {
                *out = Box::into_raw(Box::new(FxlGroup { group }));
                FxlStatus::Ok
            }
            Err(_) => FxlStatus::ParseError,
        }
    })
}

/// Builds a group handle from `len` generators in cycle notation at the
/// stated degree.
///
/// # Safety
/// `generators` must point to `len` valid NUL-terminated C strings and `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fxl_group_from_cycles(
    degree: u32,
    generators: *const *const c_char,
    len: usize,
    out: *mut *mut FxlGroup,
) -> FxlStatus {
    guarded(|| {
        if out.is_null() || (len > 0 && generators.is_null()) {
            return FxlStatus::NullArgument;
        }
        let mut gens = Vec::with_capacity(len);
        for i in 0..len {
            let text = match read_utf8(*generators.add(i)) {
                Ok(t) => t,
                Err(s) => return s,
            };
            match Perm::parse_cycles(text, degree) {
                Ok(p) => gens.push(p),
                Err(_) => return FxlStatus::ParseError,
            }
        }
        match Group::new(gens, degree) {
            Ok(group) => {
                *out = Box::into_raw(Box::new(FxlGroup { group }));
                FxlStatus::Ok
            }
            Err(e) => group_error_status(&e),
        }
    })
}

/// Releases a group handle. A null handle is a no-op.
///
/// # Safety
/// `group` must be null or a handle produced by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fxl_group_free(group: *mut FxlGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Releases a string produced by this library. A null pointer is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fxl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Degree of the natural domain.
///
/// # Safety
/// `group` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn fxl_group_degree(group: *const FxlGroup) -> u32 {
    if group.is_null() {
        return 0;
    }
    (*group).group.degree()
}

/// Exact group order. Returns `TooLarge` if the order does not fit in 64 bits.
///
/// # Safety
/// `group` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fxl_group_order(group: *const FxlGroup, out: *mut u64) -> FxlStatus {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return FxlStatus::NullArgument;
        }
        match u64::try_from((*group).group.order()) {
            Ok(order) => {
                *out = order;
                FxlStatus::Ok
            }
            Err(_) => FxlStatus::TooLarge,
        }
    })
}

/// Whether the group acts transitively on its natural domain.
///
/// # Safety
/// `group` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn fxl_group_is_transitive(group: *const FxlGroup) -> bool {
    !group.is_null() && (*group).group.is_transitive()
}

/// Whether the derived series reaches the trivial group.
///
/// # Safety
/// `group` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn fxl_group_is_soluble(group: *const FxlGroup) -> bool {
    !group.is_null() && (*group).group.is_soluble()
}

/// The fixity of the natural action: the maximum number of fixed points of a
/// nonidentity element.
///
/// # Safety
/// `group` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fxl_fixity(group: *const FxlGroup, out: *mut u32) -> FxlStatus {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return FxlStatus::NullArgument;
        }
        let action = ActionInstance::natural((*group).group.clone());
        match fixity_profile(&action) {
            Ok(profile) => {
                *out = profile.fixity;
                FxlStatus::Ok
            }
            Err(e) => group_error_status(&e),
        }
    })
}

/// The full fixed-point profile as JSON `{"fixity": .., "counts": {..}}`.
///
/// # Safety
/// `group` must be a valid handle and `out` a valid pointer; the returned
/// string is freed with `fxl_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fxl_fixity_profile_json(
    group: *const FxlGroup,
    out: *mut *mut c_char,
) -> FxlStatus {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return FxlStatus::NullArgument;
        }
        let action = ActionInstance::natural((*group).group.clone());
        match fixity_profile(&action) {
            Ok(profile) => into_out_string(
                serde_json::to_string_pretty(&profile).expect("profile serializes"),
                out,
            ),
            Err(e) => group_error_status(&e),
        }
    })
}

/// Classifies the natural action under the stated theorem (2 or 3) and
/// returns the report as JSON. `Ok` when at least one case matched,
/// `Violation` when the report is empty (with the JSON still written),
/// `PreconditionFailed` when the action is not transitive+soluble of the
/// stated fixity.
///
/// # Safety
/// `group` must be a valid handle and `out` a valid pointer; the returned
/// string is freed with `fxl_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fxl_classify_json(
    group: *const FxlGroup,
    theorem: u32,
    out: *mut *mut c_char,
) -> FxlStatus {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return FxlStatus::NullArgument;
        }
        let action = ActionInstance::natural((*group).group.clone());
        let result = match theorem {
            2 => classify_fixity2(&action),
            3 => classify_fixity3(&action),
            _ => return FxlStatus::PreconditionFailed,
        };
        match result {
            Ok(report) => {
                let status = if report.is_violation() {
                    FxlStatus::Violation
                } else {
                    FxlStatus::Ok
                };
                let write = into_out_string(report.to_json(), out);
                if write == FxlStatus::Ok {
                    status
                } else {
                    write
                }
            }
            Err(ClassifyError::Precondition { .. }) => FxlStatus::PreconditionFailed,
            Err(ClassifyError::Group(e)) => group_error_status(&e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn make_group(text: &str) -> *mut FxlGroup {
        let c = CString::new(text).unwrap();
        let mut out: *mut FxlGroup = ptr::null_mut();
        let status = unsafe { fxl_group_parse(c.as_ptr(), &mut out) };
        assert_eq!(status, FxlStatus::Ok);
        assert!(!out.is_null());
        out
    }

    #[test]
    fn parse_query_classify_roundtrip() {
        let g = make_group("degree 6\n(1,2,3)\n(2,5,3,6)(1,4)\n");
        unsafe {
            assert_eq!(fxl_group_degree(g), 6);
            let mut order = 0u64;
            assert_eq!(fxl_group_order(g, &mut order), FxlStatus::Ok);
            assert_eq!(order, 36);
            assert!(fxl_group_is_transitive(g));
            assert!(fxl_group_is_soluble(g));
            let mut fixity = 0u32;
            assert_eq!(fxl_fixity(g, &mut fixity), FxlStatus::Ok);
            assert_eq!(fixity, 3);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(fxl_classify_json(g, 3, &mut json), FxlStatus::Ok);
            let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
            fxl_string_free(json);
            let value: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(value["cases"][0], "Case3_Exceptional");
            fxl_group_free(g);
        }
    }

    #[test]
    fn from_cycles_and_profile() {
        let gens = [CString::new("(1,2,3,4)").unwrap(), CString::new("(1,3)").unwrap()];
        let ptrs: Vec<*const c_char> = gens.iter().map(|c| c.as_ptr()).collect();
        let mut g: *mut FxlGroup = ptr::null_mut();
        unsafe {
            let status = fxl_group_from_cycles(4, ptrs.as_ptr(), ptrs.len(), &mut g);
            assert_eq!(status, FxlStatus::Ok);
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(fxl_fixity_profile_json(g, &mut json), FxlStatus::Ok);
            let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
            fxl_string_free(json);
            let value: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(value["fixity"], 2);
            fxl_group_free(g);
        }
    }

    #[test]
    fn error_statuses() {
        unsafe {
            let mut out: *mut FxlGroup = ptr::null_mut();
            assert_eq!(
                fxl_group_parse(ptr::null(), &mut out),
                FxlStatus::NullArgument
            );
            let bad = CString::new("degree 4\n(1,9)\n").unwrap();
            assert_eq!(
                fxl_group_parse(bad.as_ptr(), &mut out),
                FxlStatus::ParseError
            );

            let a5 = make_group("degree 5\n(1,2,3,4,5)\n(1,2,3)\n");
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(
                fxl_classify_json(a5, 2, &mut json),
                FxlStatus::PreconditionFailed
            );
            fxl_group_free(a5);

            fxl_group_free(ptr::null_mut());
            fxl_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn header_is_generated() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("include")
            .join("fixitylab.h");
        let text = std::fs::read_to_string(header).unwrap();
        for symbol in [
            "fxl_group_parse",
            "fxl_group_from_cycles",
            "fxl_group_free",
            "fxl_group_order",
            "fxl_fixity",
            "fxl_classify_json",
            "fxl_string_free",
            "FxlStatus",
        ] {
            assert!(text.contains(symbol), "header is missing {symbol}");
        }
    }
}
