use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use mirhecke_ffi::*;

unsafe fn take(s: *mut std::os::raw::c_char) -> String {
    assert!(!s.is_null(), "{:?}", last_error());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mh_string_free(s);
    out
}

fn last_error() -> Option<String> {
    let p = mh_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn dim_values() {
    let mut d = 0u64;
    for (n, want) in [(0, 1), (1, 2), (2, 7), (3, 34), (4, 209), (5, 1546)] {
        assert_eq!(unsafe { mh_dim(n, &mut d) }, MhStatus::Ok);
        assert_eq!(d, want);
    }
    assert_eq!(unsafe { mh_dim(3, ptr::null_mut()) }, MhStatus::NullPointer);
    assert_eq!(unsafe { mh_dim(40, &mut d) }, MhStatus::InvalidArgument);
    assert!(last_error().unwrap().contains("overflows"));
}

#[test]
fn table_round_trip() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(mh_table_new(2, MhGVariant::Oracle, &mut t), MhStatus::Ok);
        assert_eq!(mh_table_size(t), 4);
        let want = [["1", "1", "-1", "1"], ["0", "1", "q-1", "2"], ["0", "0", "-1", "1"], ["0", "0", "q", "1"]];
        for (i, row) in want.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                assert_eq!(take(mh_table_entry_string(t, i, j)), *w);
            }
        }
        assert!(mh_table_entry_string(t, 4, 0).is_null());
        assert!(last_error().unwrap().contains("outside"));
        assert!(take(mh_table_csv(t)).starts_with("lambda\\mu,0,1,2,1.1\n"));

        let idx = CString::new("A=2;B=2;w=1,2").unwrap();
        let json: serde_json::Value = serde_json::from_str(&take(mh_class_poly_json(t, idx.as_ptr(), 2))).unwrap();
        assert_eq!(json["f"]["1"]["coeffs"]["0"], "1");
        assert_eq!(json["f"].as_object().unwrap().len(), 1);

        let bad = CString::new("A=7;B=1;w=1,2").unwrap();
        assert!(mh_class_poly_json(t, bad.as_ptr(), 2).is_null());
        assert!(mh_class_poly_json(t, ptr::null(), 2).is_null());
        mh_table_free(t);
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        assert_eq!(mh_table_size(ptr::null()), 0);
        assert!(mh_table_csv(ptr::null()).is_null());
        mh_table_free(ptr::null_mut());
        mh_string_free(ptr::null_mut());
        assert_eq!(mh_table_new(1, MhGVariant::Paper, ptr::null_mut()), MhStatus::NullPointer);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/mirhecke.h");
    let src = format!("#include \"{header}\"\nint main(void) {{ MhCharacterTable *t = 0; return (int)mh_table_size(t); }}\n");
    let dir = std::env::temp_dir().join(format!("mirhecke-h-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("smoke.c");
    std::fs::write(&file, src).unwrap();
    match Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"]).arg(&file).status() {
        Ok(status) => assert!(status.success()),
        Err(_) => eprintln!("no C compiler; skipping header check"),
    }
}
