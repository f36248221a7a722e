#![cfg_attr(not(test), no_std)]

extern crate alloc;

use alloc::vec::Vec;

pub fn probe() -> Vec<f64> {
    let mut v = Vec::new();
    v.push(libm::sqrt(2.0));
    v.push(num_complex::Complex64::new(0.0, 1.0).norm());
    v
}
