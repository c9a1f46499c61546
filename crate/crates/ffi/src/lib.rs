//! C interface to skeinlab.
//!
//! Diagrams and polynomials cross the boundary as opaque heap handles owned by the caller
//! and released with the matching `*_free`. Every fallible call returns a [`SkeinStatus`] and
//! writes its result through an out-pointer only on success. Strings handed out must be
//! released with [`skein_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use skeinlab::catalog::{Catalog, CatalogError};
use skeinlab::diagram::{LinkDiagram, Template};
use skeinlab::poly::LaurentPoly;
use skeinlab::select::{apply_binding, Invariant, SelectError};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeinStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownLink = 4,
    UnknownInvariant = 5,
    BindingError = 6,
    EvaluationError = 7,
    Panic = 8,
}

/// A link diagram.
pub struct SkeinDiagram(LinkDiagram);

/// A Laurent polynomial with Gaussian-integer coefficients.
pub struct SkeinPoly(LaurentPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: SkeinStatus, msg: impl Into<String>) -> SkeinStatus {
    set_error(msg);
    status
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SkeinStatus> {
    if p.is_null() {
        return Err(fail(SkeinStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SkeinStatus::InvalidUtf8, "argument is not UTF-8"))
}

fn guard(f: impl FnOnce() -> SkeinStatus) -> SkeinStatus {
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)).unwrap_or_else(|_| fail(SkeinStatus::Panic, "internal panic"))
}

fn catalog_status(e: CatalogError) -> SkeinStatus {
    match e {
        CatalogError::Unknown(_) => fail(SkeinStatus::UnknownLink, e.to_string()),
        _ => fail(SkeinStatus::ParseError, e.to_string()),
    }
}

fn select_status(e: SelectError) -> SkeinStatus {
    let s = match e {
        SelectError::UnknownInvariant(_) => SkeinStatus::UnknownInvariant,
        SelectError::BadBinding(_) | SelectError::Substitution(..) => SkeinStatus::BindingError,
        SelectError::Evaluation(_) => SkeinStatus::EvaluationError,
    };
    fail(s, e.to_string())
}

/// Message describing the most recent failure on this thread, or null. Valid until the next
/// call into the library on the same thread.
#[no_mangle]
pub extern "C" fn skein_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parse `PD[X(a,b,c,d), ...] loops=n` text or the JSON form.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_diagram_parse(text: *const c_char, out: *mut *mut SkeinDiagram) -> SkeinStatus {
    guard(|| {
        if out.is_null() {
            return fail(SkeinStatus::NullPointer, "null out pointer");
        }
        let s = match read_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match s.parse::<LinkDiagram>() {
            Ok(d) => {
                *out = Box::into_raw(Box::new(SkeinDiagram(d)));
                SkeinStatus::Ok
            }
            Err(e) => fail(SkeinStatus::ParseError, e.to_string()),
        }
    })
}

/// Look a diagram up in the catalog (honouring `SKEINLAB_CATALOG`).
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_diagram_from_catalog(name: *const c_char, out: *mut *mut SkeinDiagram) -> SkeinStatus {
    guard(|| {
        if out.is_null() {
            return fail(SkeinStatus::NullPointer, "null out pointer");
        }
        let name = match read_str(name) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let cat = match Catalog::load() {
            Ok(c) => c,
            Err(e) => return catalog_status(e),
        };
        match cat.get(name) {
            Some(d) => {
                *out = Box::into_raw(Box::new(SkeinDiagram(d.clone())));
                SkeinStatus::Ok
            }
            None => catalog_status(CatalogError::Unknown(name.to_string())),
        }
    })
}

/// # Safety
/// `d` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn skein_diagram_free(d: *mut SkeinDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of crossings, or -1 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn skein_diagram_crossings(d: *const SkeinDiagram) -> i64 {
    d.as_ref().map_or(-1, |d| d.0.crossing_count() as i64)
}

/// Number of components, or -1 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn skein_diagram_components(d: *const SkeinDiagram) -> i64 {
    d.as_ref().map_or(-1, |d| d.0.component_count() as i64)
}

/// Writhe; 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn skein_diagram_writhe(d: *const SkeinDiagram) -> i64 {
    d.as_ref().map_or(0, |d| d.0.writhe())
}

/// Evaluate an invariant by name (`hr`, `p`, `kq-formula`, ...). `template` may be null for
/// the default walk order, otherwise comma-separated edge labels.
///
/// # Safety
/// `d` must be a live handle, the strings valid or null where allowed, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn skein_compute(
    d: *const SkeinDiagram,
    invariant: *const c_char,
    template: *const c_char,
    out: *mut *mut SkeinPoly,
) -> SkeinStatus {
    guard(|| {
        if out.is_null() {
            return fail(SkeinStatus::NullPointer, "null out pointer");
        }
        let Some(d) = d.as_ref() else {
            return fail(SkeinStatus::NullPointer, "null diagram");
        };
        let inv = match read_str(invariant).map(|s| s.parse::<Invariant>()) {
            Ok(Ok(i)) => i,
            Ok(Err(e)) => return select_status(e),
            Err(st) => return st,
        };
        let template = if template.is_null() {
            None
        } else {
            let t = match read_str(template) {
                Ok(s) => s,
                Err(st) => return st,
            };
            match Template::parse(&d.0, t) {
                Ok(t) => Some(t),
                Err(e) => return fail(SkeinStatus::ParseError, e.to_string()),
            }
        };
        match inv.eval(&d.0, template.as_ref()) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(SkeinPoly(p)));
                SkeinStatus::Ok
            }
            Err(e) => select_status(e),
        }
    })
}

/// Parse a polynomial in canonical text form.
///
/// # Safety
/// `text` must be a valid string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_poly_parse(text: *const c_char, out: *mut *mut SkeinPoly) -> SkeinStatus {
    guard(|| {
        if out.is_null() {
            return fail(SkeinStatus::NullPointer, "null out pointer");
        }
        let s = match read_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match s.parse::<LaurentPoly>() {
            Ok(p) => {
                *out = Box::into_raw(Box::new(SkeinPoly(p)));
                SkeinStatus::Ok
            }
            Err(e) => fail(SkeinStatus::ParseError, e.to_string()),
        }
    })
}

/// Apply `jones`, `alexander` or `var=poly` to a polynomial, producing a new one.
///
/// # Safety
/// `p` must be a live handle, `binding` a valid string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_poly_specialize(
    p: *const SkeinPoly,
    binding: *const c_char,
    out: *mut *mut SkeinPoly,
) -> SkeinStatus {
    guard(|| {
        if out.is_null() {
            return fail(SkeinStatus::NullPointer, "null out pointer");
        }
        let Some(p) = p.as_ref() else {
            return fail(SkeinStatus::NullPointer, "null polynomial");
        };
        let b = match read_str(binding) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match apply_binding(&p.0, b) {
            Ok(q) => {
                *out = Box::into_raw(Box::new(SkeinPoly(q)));
                SkeinStatus::Ok
            }
            Err(e) => select_status(e),
        }
    })
}

/// Canonical text of a polynomial; free with [`skein_string_free`]. Null for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn skein_poly_to_string(p: *const SkeinPoly) -> *mut c_char {
    match p.as_ref() {
        Some(p) => CString::new(p.0.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// 1 if equal, 0 if not, -1 if either handle is null.
///
/// # Safety
/// Both pointers must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn skein_poly_equal(a: *const SkeinPoly, b: *const SkeinPoly) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => (a.0 == b.0) as i32,
        _ => -1,
    }
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn skein_poly_free(p: *mut SkeinPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn skein_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn hopf_round_trip() {
        unsafe {
            let mut d = ptr::null_mut();
            assert_eq!(skein_diagram_parse(cs("PD[X(1,3,2,4), X(3,1,4,2)] loops=0").as_ptr(), &mut d), SkeinStatus::Ok);
            assert_eq!(skein_diagram_crossings(d), 2);
            assert_eq!(skein_diagram_components(d), 2);
            assert_eq!(skein_diagram_writhe(d), 2);
            let mut p = ptr::null_mut();
            assert_eq!(skein_compute(d, cs("hr").as_ptr(), ptr::null(), &mut p), SkeinStatus::Ok);
            let s = skein_poly_to_string(p);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "a*z + a*w^-1*E^-1 - a^-1*w^-1*E^-1");
            skein_string_free(s);
            skein_poly_free(p);
            skein_diagram_free(d);
        }
    }

    #[test]
    fn errors_are_reported() {
        unsafe {
            let mut d = ptr::null_mut();
            assert_eq!(skein_diagram_parse(cs("PD[X(1,2").as_ptr(), &mut d), SkeinStatus::ParseError);
            assert!(d.is_null());
            assert!(!skein_last_error().is_null());
            assert_eq!(skein_diagram_parse(ptr::null(), &mut d), SkeinStatus::NullPointer);
            assert_eq!(skein_diagram_from_catalog(cs("nosuch").as_ptr(), &mut d), SkeinStatus::UnknownLink);
            assert_eq!(skein_diagram_from_catalog(cs("hopf+").as_ptr(), &mut d), SkeinStatus::Ok);
            let mut p = ptr::null_mut();
            assert_eq!(skein_compute(d, cs("homfly").as_ptr(), ptr::null(), &mut p), SkeinStatus::UnknownInvariant);
            assert_eq!(skein_compute(d, cs("hr").as_ptr(), cs("1,2").as_ptr(), &mut p), SkeinStatus::ParseError);
            assert_eq!(skein_compute(ptr::null(), cs("hr").as_ptr(), ptr::null(), &mut p), SkeinStatus::NullPointer);
            assert_eq!(skein_diagram_crossings(ptr::null()), -1);
            skein_diagram_free(d);
        }
    }

    #[test]
    fn specialize_and_compare() {
        unsafe {
            let mut d = ptr::null_mut();
            assert_eq!(skein_diagram_from_catalog(cs("trefoil-").as_ptr(), &mut d), SkeinStatus::Ok);
            let (mut p, mut v, mut want) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
            assert_eq!(skein_compute(d, cs("p").as_ptr(), ptr::null(), &mut p), SkeinStatus::Ok);
            assert_eq!(skein_poly_specialize(p, cs("jones").as_ptr(), &mut v), SkeinStatus::Ok);
            assert_eq!(skein_poly_parse(cs("t^-2 + t^-6 - t^-8").as_ptr(), &mut want), SkeinStatus::Ok);
            assert_eq!(skein_poly_equal(v, want), 1);
            assert_eq!(skein_poly_equal(p, want), 0);
            assert_eq!(skein_poly_equal(p, ptr::null()), -1);
            let mut bad = ptr::null_mut();
            assert_eq!(skein_poly_specialize(p, cs("q").as_ptr(), &mut bad), SkeinStatus::BindingError);
            for h in [p, v, want] {
                skein_poly_free(h);
            }
            skein_diagram_free(d);
        }
    }
}
