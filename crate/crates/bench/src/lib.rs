//! Shared fixtures for the criterion benchmarks.

use monocurve_core::curve::{build_matrix, cal_i, f_poly};
use monocurve_core::{CurveParams, PolyIdeal, PolyMatrix, Rational};

/// `X` for `m = 1`, optionally reduced modulo `x1`.
pub fn curve_matrix(d: usize, mod_x1: bool) -> PolyMatrix<Rational> {
    build_matrix(&CurveParams::new(d, 1).expect("valid d"), mod_x1).expect("matrix builds")
}

/// `calI_n` together with `f_1, ..., f_k`.
pub fn cal_i_with_f(d: usize, n: i64, k: usize) -> PolyIdeal<Rational> {
    let ideal = cal_i(d, n).expect("valid d");
    ideal.with_generators((1..=k).map(|i| f_poly(d, i).expect("valid i"))).expect("same ring")
}
