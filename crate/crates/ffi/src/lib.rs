//! C ABI over `g2_gaudin`.
//!
//! Every fallible call returns a `G2Status`; on failure the message is available from
//! `g2_last_error()` on the same thread. Strings returned to the caller are owned by
//! the caller and released with `g2_string_free`. Handles are released with their
//! matching `*_free` function; passing NULL to a free function is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use g2_gaudin::bethe::{appendix_solution, PolyPair};
use g2_gaudin::diffop::h2_casimir_check;
use g2_gaudin::repn::{invariant_dim, weyl_dim};
use g2_gaudin::rootdata::Weight;
use g2_gaudin::sgrass::{is_self_self_dual, polys_from_json, PolySpace, RamificationData};
use g2_gaudin::strat::{hasse_diagram, HasseDiagram};
use g2_gaudin::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G2Status {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    MathFailure = 3,
    Panic = 4,
}

/// Closed-form Bethe solution `(y1, y2)`.
pub struct G2PolyPair(PolyPair);

/// A 7-dimensional space of polynomials.
pub struct G2Space(PolySpace);

/// Hasse diagram of the strata for one degree.
pub struct G2Strata(HasseDiagram);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> G2Status {
    if e.is_usage() {
        G2Status::InvalidInput
    } else {
        G2Status::MathFailure
    }
}

/// Run `f`, recording any error or panic.
fn guard<F: FnOnce() -> Result<(), G2Status>>(f: F) -> G2Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => G2Status::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside g2_gaudin".into());
            G2Status::Panic
        }
    }
}

fn lift<T>(r: g2_gaudin::Result<T>) -> Result<T, G2Status> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn non_null<'a, T>(p: *const T) -> Result<&'a T, G2Status> {
    // SAFETY: callers pass either NULL or a pointer obtained from this library.
    unsafe { p.as_ref() }.ok_or_else(|| {
        set_error("null pointer argument".into());
        G2Status::NullPointer
    })
}

fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, G2Status> {
    // SAFETY: the caller provides writable storage for one `T`.
    unsafe { p.as_mut() }.ok_or_else(|| {
        set_error("null output pointer".into());
        G2Status::NullPointer
    })
}

fn c_str<'a>(p: *const c_char) -> Result<&'a str, G2Status> {
    if p.is_null() {
        set_error("null string argument".into());
        return Err(G2Status::NullPointer);
    }
    // SAFETY: non-null and NUL-terminated by contract.
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| {
        set_error("string is not valid UTF-8".into());
        G2Status::InvalidInput
    })
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn g2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn g2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Dimension of the irreducible module with highest weight `(a, b)`.
///
/// # Safety
/// `out` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn g2_weyl_dim(a: i64, b: i64, out: *mut u64) -> G2Status {
    guard(|| {
        let out = out_ptr(out)?;
        *out = lift(weyl_dim(Weight(a, b)))?;
        Ok(())
    })
}

/// Dimension of invariants in the tensor product of `n` modules; `weights` holds `2n` integers.
///
/// # Safety
/// `weights` must point to `2 * n` readable integers and `out` to writable storage.
#[no_mangle]
pub unsafe extern "C" fn g2_invariant_dim(weights: *const i64, n: usize, out: *mut u64) -> G2Status {
    guard(|| {
        let out = out_ptr(out)?;
        let ws: Vec<Weight> = if n == 0 {
            Vec::new()
        } else {
            non_null(weights)?;
            std::slice::from_raw_parts(weights, 2 * n).chunks(2).map(|c| Weight(c[0], c[1])).collect()
        };
        *out = lift(invariant_dim(&ws))?;
        Ok(())
    })
}

/// Closed-form Bethe solution for `lambda = (a, b)` and the given case.
///
/// # Safety
/// `out` must point to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn g2_bethe_solution(a: i64, b: i64, case_index: usize, out: *mut *mut G2PolyPair) -> G2Status {
    guard(|| {
        let out = out_ptr(out)?;
        let y = lift(appendix_solution(Weight(a, b), case_index))?;
        *out = Box::into_raw(Box::new(G2PolyPair(y)));
        Ok(())
    })
}

/// Render `y1` (`which == 1`) or `y2` (`which == 2`) as a string such as `x - 1/2`.
///
/// # Safety
/// `pair` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn g2_poly_pair_render(pair: *const G2PolyPair, which: u32, out: *mut *mut c_char) -> G2Status {
    guard(|| {
        let pair = non_null(pair)?;
        let out = out_ptr(out)?;
        let p = match which {
            1 => &pair.0.y1,
            2 => &pair.0.y2,
            _ => {
                set_error(format!("which must be 1 or 2, got {which}"));
                return Err(G2Status::InvalidInput);
            }
        };
        *out = give_string(p.to_string());
        Ok(())
    })
}

/// # Safety
/// `pair` must be NULL or a handle from `g2_bethe_solution` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn g2_poly_pair_free(pair: *mut G2PolyPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// Compare the residue of the fifth-order coefficient with the Gaudin eigenvalue.
/// Writes 1 to `ok` if they agree.
///
/// # Safety
/// `ok` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn g2_h2_check(a: i64, b: i64, case_index: usize, ok: *mut i32) -> G2Status {
    guard(|| {
        let ok = out_ptr(ok)?;
        *ok = lift(h2_casimir_check(Weight(a, b), case_index))?.ok as i32;
        Ok(())
    })
}

/// Parse a space from a JSON array of seven ascending coefficient arrays.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn g2_space_from_json(json: *const c_char, out: *mut *mut G2Space) -> G2Status {
    guard(|| {
        let out = out_ptr(out)?;
        let s = c_str(json)?;
        let x = lift(polys_from_json(s).and_then(PolySpace::new))?;
        *out = Box::into_raw(Box::new(G2Space(x)));
        Ok(())
    })
}

/// Whether the space is self-self-dual for the ramification data given as JSON
/// (`{"points": [...], "partitions": [...]}`). Writes 1 or 0 to `out`.
///
/// # Safety
/// `space` must be a live handle, `ramification` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn g2_space_is_self_self_dual(
    space: *const G2Space,
    ramification: *const c_char,
    out: *mut i32,
) -> G2Status {
    guard(|| {
        let space = non_null(space)?;
        let out = out_ptr(out)?;
        let r = lift(RamificationData::from_json(c_str(ramification)?))?;
        *out = lift(is_self_self_dual(&space.0, &r))? as i32;
        Ok(())
    })
}

/// # Safety
/// `space` must be NULL or a handle from `g2_space_from_json` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn g2_space_free(space: *mut G2Space) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Build the Hasse diagram of strata for degree `d`.
///
/// # Safety
/// `out` must point to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn g2_strata_new(d: i64, out: *mut *mut G2Strata) -> G2Status {
    guard(|| {
        let out = out_ptr(out)?;
        let h = lift(hasse_diagram(d))?;
        *out = Box::into_raw(Box::new(G2Strata(h)));
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn g2_strata_node_count(h: *const G2Strata) -> usize {
    h.as_ref().map_or(0, |h| h.0.nodes.len())
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn g2_strata_edge_count(h: *const G2Strata) -> usize {
    h.as_ref().map_or(0, |h| h.0.edges.len())
}

/// Label of node `i`, e.g. `((0,1)_1,(0,1))`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn g2_strata_node_label(h: *const G2Strata, i: usize, out: *mut *mut c_char) -> G2Status {
    guard(|| {
        let h = non_null(h)?;
        let out = out_ptr(out)?;
        let Some(node) = h.0.nodes.get(i) else {
            set_error(format!("node index {i} out of range"));
            return Err(G2Status::InvalidInput);
        };
        *out = give_string(node.to_string());
        Ok(())
    })
}

/// Edge `i` as node indices, from a stratum to a simple degeneration of it.
///
/// # Safety
/// `h` must be a live handle; `from` and `to` writable.
#[no_mangle]
pub unsafe extern "C" fn g2_strata_edge(h: *const G2Strata, i: usize, from: *mut usize, to: *mut usize) -> G2Status {
    guard(|| {
        let h = non_null(h)?;
        let (from, to) = (out_ptr(from)?, out_ptr(to)?);
        let Some(&(a, b)) = h.0.edges.get(i) else {
            set_error(format!("edge index {i} out of range"));
            return Err(G2Status::InvalidInput);
        };
        (*from, *to) = (a, b);
        Ok(())
    })
}

/// Graphviz rendering of the diagram.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn g2_strata_dot(h: *const G2Strata, out: *mut *mut c_char) -> G2Status {
    guard(|| {
        let h = non_null(h)?;
        let out = out_ptr(out)?;
        *out = give_string(h.0.to_dot());
        Ok(())
    })
}

/// # Safety
/// `h` must be NULL or a handle from `g2_strata_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn g2_strata_free(h: *mut G2Strata) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}
