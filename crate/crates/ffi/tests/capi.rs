use std::ffi::{c_char, CStr};
use std::ptr;

use schubert_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    schubert_string_free(p);
    s
}

unsafe fn new_instance(n: usize, w: &[usize], tau: &[usize]) -> Result<*mut SchubertInstance, SchubertStatus> {
    let mut out = ptr::null_mut();
    match schubert_instance_new(n, w.len(), w.as_ptr(), tau.as_ptr(), &mut out) {
        SchubertStatus::Ok => Ok(out),
        s => Err(s),
    }
}

#[test]
fn quadric_through_the_c_abi() {
    unsafe {
        let inst = new_instance(4, &[2, 4], &[1, 2]).unwrap();
        assert_eq!(schubert_instance_d(inst), 2);
        for method in [SCHUBERT_METHOD_DETERMINANT, SCHUBERT_METHOD_PATHS, SCHUBERT_METHOD_REFLECTIONS] {
            let mut s = ptr::null_mut();
            assert_eq!(schubert_multiplicity(inst, method, 32, &mut s), SchubertStatus::Ok);
            assert_eq!(take_string(s), "2");
        }
        assert_eq!(schubert_pole_order(inst), 3);
        let mut s = ptr::null_mut();
        assert_eq!(schubert_hilbert_numerator(inst, &mut s), SchubertStatus::Ok);
        assert_eq!(take_string(s), "1,1");
        for (m, expected) in ["1", "4", "9", "16", "25"].iter().enumerate() {
            assert_eq!(schubert_hilbert_function(inst, m, &mut s), SchubertStatus::Ok);
            assert_eq!(take_string(s), *expected);
        }
        schubert_instance_free(inst);
    }
}

#[test]
fn figure_one_kappa_and_sigma() {
    unsafe {
        let inst = new_instance(21, &[4, 6, 7, 13, 14, 17, 19, 20, 21], &[1, 2, 4, 7, 10, 12, 13, 15, 16]).unwrap();
        let mut buf = [0usize; 9];
        assert_eq!(schubert_instance_kappa(inst, buf.as_mut_ptr(), 9), SchubertStatus::Ok);
        assert_eq!(buf, [6, 6, 5, 2, 2, 0, 0, 0, 0]);
        assert_eq!(schubert_instance_sigma(inst, buf.as_mut_ptr(), 9), SchubertStatus::Ok);
        assert_eq!(buf, [6, 7, 4, 5, 8, 3, 1, 2, 9]);
        assert_eq!(schubert_instance_sigma(inst, buf.as_mut_ptr(), 3), SchubertStatus::BufferTooSmall);
        schubert_instance_free(inst);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        assert_eq!(new_instance(4, &[2, 4], &[3, 4]).unwrap_err(), SchubertStatus::NotOnVariety);
        assert_eq!(new_instance(4, &[2, 2], &[1, 2]).unwrap_err(), SchubertStatus::InvalidInput);
        let msg = CStr::from_ptr(schubert_last_error_message()).to_str().unwrap();
        assert!(msg.contains("increasing"), "{msg}");

        assert_eq!(
            schubert_instance_new(4, 2, ptr::null(), ptr::null(), ptr::null_mut()),
            SchubertStatus::NullPointer
        );
        let mut out = ptr::null_mut();
        assert_eq!(schubert_instance_new(4, 2, ptr::null(), ptr::null(), &mut out), SchubertStatus::NullPointer);
        assert_eq!(schubert_instance_new(3, 0, ptr::null(), ptr::null(), &mut out), SchubertStatus::Ok);
        schubert_instance_free(out);

        let inst = new_instance(4, &[2, 4], &[1, 2]).unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(schubert_multiplicity(inst, SCHUBERT_METHOD_REFLECTIONS, 1, &mut s), SchubertStatus::BudgetExceeded);
        assert_eq!(schubert_multiplicity(inst, 7, 32, &mut s), SchubertStatus::InvalidInput);
        assert_eq!(schubert_multiplicity(ptr::null(), 0, 32, &mut s), SchubertStatus::NullPointer);
        schubert_instance_free(inst);
        schubert_instance_free(ptr::null_mut());
        schubert_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_entry_point() {
    assert_eq!(schubert_verify(4), SchubertStatus::Ok);
    assert_eq!(schubert_verify(1000), SchubertStatus::InvalidInput);
}
