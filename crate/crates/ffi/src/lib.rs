//! C ABI over the `mirhecke` kernel.
//!
//! Tables are opaque handles. Every fallible call returns an [`MhStatus`];
//! the message for the most recent failure on the calling thread is
//! available from [`mh_last_error_message`]. Strings handed out by this
//! library must be released with [`mh_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mirhecke::characters::{class_polynomials, CharacterTable, GVariant, MnEngine};
use mirhecke::combinatorics::{dimension, BasisIndex};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Computation = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MhGVariant {
    Oracle = 0,
    Paper = 1,
}

/// A computed character table.
pub struct MhCharacterTable {
    table: CharacterTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn guard(f: impl FnOnce() -> Result<(), (MhStatus, String)>) -> MhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MhStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside mirhecke");
            MhStatus::Panic
        }
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Writes `dim H_n(q)` to `out`. Fails if the value does not fit in 64 bits.
///
/// # Safety
/// `out` must be NULL or valid for a write of one `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn mh_dim(n: usize, out: *mut u64) -> MhStatus {
    guard(|| {
        if out.is_null() {
            return Err((MhStatus::NullPointer, "out is NULL".into()));
        }
        let d = u64::try_from(&dimension(n)).map_err(|_| (MhStatus::InvalidArgument, format!("dim H_{n} overflows 64 bits")))?;
        *out = d;
        Ok(())
    })
}

/// Computes the character table for rank `n`. On success `*out` owns a new
/// handle to be released with [`mh_table_free`].
///
/// # Safety
/// `out` must be NULL or valid for a write of one pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_table_new(n: usize, variant: MhGVariant, out: *mut *mut MhCharacterTable) -> MhStatus {
    guard(|| {
        if out.is_null() {
            return Err((MhStatus::NullPointer, "out is NULL".into()));
        }
        *out = ptr::null_mut();
        let variant = match variant {
            MhGVariant::Oracle => GVariant::Oracle,
            MhGVariant::Paper => GVariant::Paper,
        };
        let table = CharacterTable::compute(n, &MnEngine::new(variant), 1)
            .map_err(|e| (MhStatus::Computation, e.to_string()))?;
        *out = Box::into_raw(Box::new(MhCharacterTable { table }));
        Ok(())
    })
}

/// # Safety
/// `table` must be NULL or a handle from [`mh_table_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mh_table_free(table: *mut MhCharacterTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of rows (equal to the number of columns); 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mh_table_size(table: *const MhCharacterTable) -> usize {
    table.as_ref().map_or(0, |t| t.table.size())
}

/// Entry at (`row`, `col`) in canonical partition order, as a polynomial in
/// `q` such as `"q-1"`. NULL on error.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mh_table_entry_string(table: *const MhCharacterTable, row: usize, col: usize) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let t = table.as_ref().ok_or((MhStatus::NullPointer, "table is NULL".to_string()))?;
        let size = t.table.size();
        if row >= size || col >= size {
            return Err((MhStatus::InvalidArgument, format!("({row}, {col}) outside a {size}x{size} table")));
        }
        result = into_c_string(t.table.entries[row][col].to_poly_string());
        Ok(())
    });
    result
}

/// The whole table as CSV. NULL on error.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mh_table_csv(table: *const MhCharacterTable) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let t = table.as_ref().ok_or((MhStatus::NullPointer, "table is NULL".to_string()))?;
        result = into_c_string(t.table.to_csv());
        Ok(())
    });
    result
}

/// Class polynomials of the basis element `index` (`"A=..;B=..;w=.."`) as
/// JSON, using `r` tensor variables (`r >= n`). NULL on error.
///
/// # Safety
/// `table` must be NULL or a live handle; `index` must be NULL or a
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn mh_class_poly_json(table: *const MhCharacterTable, index: *const c_char, r: usize) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let t = table.as_ref().ok_or((MhStatus::NullPointer, "table is NULL".to_string()))?;
        if index.is_null() {
            return Err((MhStatus::NullPointer, "index is NULL".into()));
        }
        let idx: BasisIndex = CStr::from_ptr(index)
            .to_str()
            .map_err(|e| (MhStatus::InvalidArgument, e.to_string()))?
            .parse()
            .map_err(|e: mirhecke::Error| (MhStatus::InvalidArgument, e.to_string()))?;
        let f = class_polynomials(&t.table, &idx, r).map_err(|e| (MhStatus::Computation, e.to_string()))?;
        let json = serde_json::to_string(&f).map_err(|e| (MhStatus::Computation, e.to_string()))?;
        result = into_c_string(json);
        Ok(())
    });
    result
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
