use std::ffi::{CStr, CString};
use std::ptr;

use pentacover_ffi::*;

fn build(name: &str, m: u64, p: u64, e: u32) -> Result<*mut PcGraph, (PcStatus, String)> {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { pc_family_build(name.as_ptr(), m, p, e, &mut g) };
    if status == PcStatus::Ok {
        Ok(g)
    } else {
        Err((status, last_error()))
    }
}

fn last_error() -> String {
    let p = pc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn k6_round_trip_and_order() {
    let g = build("k6", 0, 0, 0).unwrap();
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { pc_graph_to_graph6(g, &mut text) }, PcStatus::Ok);
    let encoded = unsafe { CStr::from_ptr(text) }.to_owned();
    assert_eq!(encoded.to_str().unwrap(), "E~~w");
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { pc_graph_from_graph6(encoded.as_ptr(), &mut h) }, PcStatus::Ok);
    let (mut order, mut iso, mut n) = (0u64, false, 0usize);
    unsafe {
        assert_eq!(pc_graph_aut_order(h, &mut order), PcStatus::Ok);
        assert_eq!(pc_graphs_isomorphic(g, h, &mut iso), PcStatus::Ok);
        assert_eq!(pc_graph_vertex_count(h, &mut n), PcStatus::Ok);
        pc_string_free(text);
        pc_graph_free(g);
        pc_graph_free(h);
    }
    assert_eq!((order, iso, n), (720, true, 6));
    assert!(pc_last_error_message().is_null());
}

#[test]
fn sparse6_and_non_isomorphism() {
    let a = build("cgd4", 1, 11, 1).unwrap();
    let b = build("cgd5", 1, 11, 1).unwrap();
    let mut text = ptr::null_mut();
    let mut iso = true;
    unsafe {
        assert_eq!(pc_graph_to_sparse6(a, &mut text), PcStatus::Ok);
        assert_eq!(*text as u8, b':');
        assert_eq!(pc_graphs_isomorphic(a, b, &mut iso), PcStatus::Ok);
        let mut order = 0;
        assert_eq!(pc_graph_aut_order(b, &mut order), PcStatus::Ok);
        assert_eq!(order, 1210);
        pc_string_free(text);
        pc_graph_free(a);
        pc_graph_free(b);
    }
    assert!(!iso);
}

#[test]
fn errors_carry_status_and_message() {
    let (status, msg) = build("cgd4", 1, 7, 1).unwrap_err();
    assert_eq!(status, PcStatus::SideCondition);
    assert!(msg.contains("p = 5 or 5 | (p + 1) or 5 | (p - 1)"), "{msg}");
    assert_eq!(build("nonsense", 0, 0, 0).unwrap_err().0, PcStatus::InvalidArgument);

    let bad = CString::new("not a graph!").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pc_graph_from_graph6(bad.as_ptr(), &mut g) }, PcStatus::Parse);
    assert!(g.is_null());
    let mut order = 0;
    assert_eq!(unsafe { pc_graph_aut_order(ptr::null(), &mut order) }, PcStatus::NullPointer);
    assert!(last_error().contains("null"));
    unsafe {
        pc_graph_free(ptr::null_mut());
        pc_string_free(ptr::null_mut());
    }
}

#[test]
fn solve_eq1_buffer_protocol() {
    let mut count = 0;
    assert_eq!(unsafe { pc_solve_eq1(11, ptr::null_mut(), 0, &mut count) }, PcStatus::BufferTooSmall);
    assert_eq!(count, 4);
    let mut roots = vec![0u64; count];
    assert_eq!(unsafe { pc_solve_eq1(11, roots.as_mut_ptr(), roots.len(), &mut count) }, PcStatus::Ok);
    assert_eq!(roots, [3, 4, 5, 9]);
    assert_eq!(unsafe { pc_solve_eq1(7, ptr::null_mut(), 0, &mut count) }, PcStatus::Ok);
    assert_eq!(count, 0);
    assert_eq!(unsafe { pc_solve_eq1(0, ptr::null_mut(), 0, &mut count) }, PcStatus::InvalidArgument);
}
