use std::ffi::{CStr, CString};
use std::ptr;

use g2_gaudin_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    g2_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = g2_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

#[test]
fn dimensions() {
    unsafe {
        let mut n = 0u64;
        assert_eq!(g2_weyl_dim(1, 0, &mut n), G2Status::Ok);
        assert_eq!(n, 14);
        assert_eq!(g2_weyl_dim(0, 1, &mut n), G2Status::Ok);
        assert_eq!(n, 7);
        let ws = [0i64, 1, 0, 1, 0, 1];
        assert_eq!(g2_invariant_dim(ws.as_ptr(), 3, &mut n), G2Status::Ok);
        assert_eq!(n, 1);
        assert_eq!(g2_weyl_dim(-1, 0, &mut n), G2Status::InvalidInput);
        assert!(last_error().contains("not dominant"));
        assert_eq!(g2_weyl_dim(0, 0, ptr::null_mut()), G2Status::NullPointer);
    }
}

#[test]
fn bethe_pair_handle() {
    unsafe {
        let mut pair = ptr::null_mut();
        assert_eq!(g2_bethe_solution(1, 1, 1, &mut pair), G2Status::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(g2_poly_pair_render(pair, 2, &mut s), G2Status::Ok);
        assert_eq!(take(s), "x - 1/2");
        assert_eq!(g2_poly_pair_render(pair, 3, &mut s), G2Status::InvalidInput);
        g2_poly_pair_free(pair);
        g2_poly_pair_free(ptr::null_mut());

        assert_eq!(g2_bethe_solution(0, 1, 2, &mut pair), G2Status::MathFailure);
        assert!(last_error().contains("not admissible"));
    }
}

#[test]
fn h2_check() {
    unsafe {
        let mut ok = 0;
        assert_eq!(g2_h2_check(2, 1, 3, &mut ok), G2Status::Ok);
        assert_eq!(ok, 1);
    }
}

#[test]
fn space_handle() {
    unsafe {
        // kernel for lambda = (0,1), trivial case
        let json = CString::new(
            r#"[["1"],["0","1"],["0","0","0","-2","1"],["0","0","0","-10/3","0","1"],["0","0","0","-5","0","0","1"],
               ["0","0","0","0","0","0","0","30/7","-9/2","1"],["0","0","0","0","0","0","0","225/14","-765/56","0","1"]]"#,
        )
        .unwrap();
        let ram = CString::new(r#"{"points": ["0", "1"], "partitions": [[0, 1], [0, 1]]}"#).unwrap();
        let mut x = ptr::null_mut();
        assert_eq!(g2_space_from_json(json.as_ptr(), &mut x), G2Status::Ok);
        let mut yes = 0;
        assert_eq!(g2_space_is_self_self_dual(x, ram.as_ptr(), &mut yes), G2Status::Ok);
        assert_eq!(yes, 1);
        g2_space_free(x);

        let bad = CString::new("[[1],[0,1]]").unwrap();
        assert_eq!(g2_space_from_json(bad.as_ptr(), &mut x), G2Status::InvalidInput);
        assert_eq!(g2_space_from_json(ptr::null(), &mut x), G2Status::NullPointer);
    }
}

#[test]
fn strata_handle() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(g2_strata_new(11, &mut h), G2Status::Ok);
        assert_eq!(g2_strata_node_count(h), 17);
        assert_eq!(g2_strata_edge_count(h), 29);
        let (mut a, mut b) = (0usize, 0usize);
        assert_eq!(g2_strata_edge(h, 0, &mut a, &mut b), G2Status::Ok);
        assert!(a < 17 && b < 17 && a != b);
        assert_eq!(g2_strata_edge(h, 29, &mut a, &mut b), G2Status::InvalidInput);
        let mut s = ptr::null_mut();
        let labels: Vec<String> = (0..17)
            .map(|i| {
                assert_eq!(g2_strata_node_label(h, i, &mut s), G2Status::Ok);
                take(s)
            })
            .collect();
        assert!(labels.contains(&"((0,0)_4)".to_string()));
        assert!(labels.contains(&"((0,1),(0,1),(0,1),(0,1))".to_string()));
        assert_eq!(g2_strata_node_label(h, 17, &mut s), G2Status::InvalidInput);
        assert_eq!(g2_strata_dot(h, &mut s), G2Status::Ok);
        let dot = take(s);
        assert!(dot.starts_with("digraph strata_d11 {"));
        assert_eq!(dot.matches(" -> ").count(), 29);
        g2_strata_free(h);
        assert_eq!(g2_strata_node_count(ptr::null()), 0);
    }
}

#[test]
fn header_is_current_and_compiles() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/g2_gaudin.h")).unwrap();
    for f in ["g2_last_error", "g2_string_free", "g2_weyl_dim", "g2_invariant_dim", "g2_bethe_solution",
              "g2_poly_pair_render", "g2_h2_check", "g2_space_from_json", "g2_space_is_self_self_dual",
              "g2_strata_new", "g2_strata_dot", "g2_strata_free"] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    let Ok(status) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", "-"])
        .arg("-I")
        .arg(dir.join("include"))
        .stdin(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            use std::io::Write;
            c.stdin.take().unwrap().write_all(b"#include \"g2_gaudin.h\"\nint main(void) { uint64_t n; return (int)g2_weyl_dim(0, 1, &n); }\n")?;
            c.wait()
        })
    else {
        eprintln!("no C compiler; skipped the syntax check");
        return;
    };
    assert!(status.success());
}
