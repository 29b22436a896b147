#![allow(dead_code)]

//! Shared oracles for the integration suites: adaptive quadrature and
//! finite differences, both deliberately independent of the evaluation
//! paths they check.

use ellik_core::real::{Dd, Real};

/// Adaptive Simpson quadrature with interval halving.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, m: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
    }
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, 0.5 * (a + m), m);
        let right = simpson(f, m, 0.5 * (m + b), b);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            recurse(f, a, m, left, tol / 2.0, depth - 1)
                + recurse(f, m, b, right, tol / 2.0, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    recurse(f, a, b, simpson(f, a, m, b), tol, 48)
}

/// Central first difference in double-double.
pub fn central_diff_dd(f: &dyn Fn(Dd) -> Dd, x: f64, h: f64) -> f64 {
    let (x, h) = (Dd::from_f64(x), Dd::from_f64(h));
    ((f(x + h) - f(x - h)) / (Dd::from_f64(2.0) * h)).to_f64()
}

/// Central second difference in double-double.
pub fn central_diff2_dd(f: &dyn Fn(Dd) -> Dd, x: f64, h: f64) -> f64 {
    let (x, h) = (Dd::from_f64(x), Dd::from_f64(h));
    ((f(x + h) - Dd::from_f64(2.0) * f(x) + f(x - h)) / (h * h)).to_f64()
}
