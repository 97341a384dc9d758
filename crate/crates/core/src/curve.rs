//! The structured matrix `X` of a monomial curve and the ideal families built from it.
//!
//! Everything except [`build_matrix`] with `mod_x1 = false` lives in
//! `T' = k[x2, ..., xd]`: variable `x_v` sits at monomial position `v - 2`.
//! The full-ring matrix uses `d` variables with `x_v` at position `v - 1`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rat, Rational};
use crate::groebner::PolyIdeal;
use crate::matrix::PolyMatrix;
use crate::monideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial, MAX_VARS};
use crate::poly::Polynomial;

/// Largest supported embedding dimension (the full ring needs `d` variables).
pub const MAX_D: usize = MAX_VARS;

/// Parameters of the curve `x_i -> t^(d + (i-1) m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveParams {
    pub d: usize,
    pub m: usize,
}

impl CurveParams {
    pub fn new(d: usize, m: usize) -> Result<Self> {
        check_d(d)?;
        if m == 0 {
            return Err(Error::Range("m must be at least 1".into()));
        }
        if num_integer::gcd(d, m) != 1 {
            return Err(Error::Precondition(format!("gcd(d, m) = gcd({d}, {m}) must be 1")));
        }
        Ok(CurveParams { d, m })
    }

    /// Exponents `n_i = d + (i-1) m` of the parametrization.
    pub fn semigroup_generators(&self) -> Vec<usize> {
        (0..self.d).map(|i| self.d + i * self.m).collect()
    }
}

pub fn check_d(d: usize) -> Result<()> {
    if !(2..=MAX_D).contains(&d) {
        return Err(Error::Range(format!("d = {d} outside 2..={MAX_D}")));
    }
    Ok(())
}

fn check_index(name: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::Range(format!("{name} = {value} outside {lo}..={hi}")));
    }
    Ok(())
}

/// Number of variables of `T'`.
pub fn tvars(d: usize) -> usize {
    d - 1
}

/// The variable `x_v` of `T'`, `2 <= v <= d`.
pub fn var(d: usize, v: usize) -> Monomial {
    Monomial::var(tvars(d), v - 2)
}

/// `x_v^e` in `T'`.
pub fn var_power(d: usize, v: usize, e: u16) -> Monomial {
    Monomial::pure_power(tvars(d), v - 2, e)
}

/// `M_{r,s}^l`: the monomials of degree `l` in `x_r, ..., x_s`, `2 <= r <= s <= d`.
pub fn block(d: usize, r: usize, s: usize, l: u32) -> Vec<Monomial> {
    debug_assert!(2 <= r && r <= s && s <= d);
    monomials_of_degree(tvars(d), r - 2..s - 1, l)
}

/// The `d x d` matrix with `X_ij = x_(i+j-1)` for `j <= d-i+1` and `x1^m x_(i+j-d-1)` otherwise.
///
/// With `mod_x1` every entry involving `x1` is zero and the matrix lives in `T'`.
pub fn build_matrix(p: &CurveParams, mod_x1: bool) -> Result<PolyMatrix<Rational>> {
    let d = p.d;
    check_d(d)?;
    let nvars = if mod_x1 { tvars(d) } else { d };
    let entry = |i: usize, j: usize| -> Polynomial<Rational> {
        let (index, wraps) = if j <= d - i + 1 { (i + j - 1, false) } else { (i + j - d - 1, true) };
        if mod_x1 {
            if wraps || index == 1 {
                return Polynomial::zero(nvars);
            }
            return Polynomial::monomial(Monomial::var(nvars, index - 2), rat(1));
        }
        let mut exps = vec![0u16; nvars];
        exps[index - 1] += 1;
        if wraps {
            exps[0] += p.m as u16;
        }
        Polynomial::monomial(Monomial::from_exps(&exps), rat(1))
    };
    let rows = (1..=d).map(|i| (1..=d).map(|j| entry(i, j)).collect()).collect();
    PolyMatrix::from_rows(rows)
}

fn mod_x1_matrix(d: usize) -> Result<PolyMatrix<Rational>> {
    build_matrix(&CurveParams { d, m: 1 }, true)
}

/// Column selections `1 <= j_1 < ... < j_size <= d` in lexicographic order.
pub fn column_selections(d: usize, size: usize) -> Vec<Vec<usize>> {
    (1..=d).combinations(size).collect()
}

/// `det` of the first `cols.len()` rows of `x` and the given 1-based columns.
pub fn leading_rows_minor(x: &PolyMatrix<Rational>, cols: &[usize]) -> Result<Polynomial<Rational>> {
    let rows: Vec<usize> = (0..cols.len()).collect();
    let cols: Vec<usize> = cols.iter().map(|c| c - 1).collect();
    Ok(x.submatrix(&rows, &cols)?.determinant())
}

/// `f_i`: the leading principal `(i+1) x (i+1)` minor of `X` mod `x1`, `1 <= i <= d-1`.
pub fn f_poly(d: usize, i: usize) -> Result<Polynomial<Rational>> {
    check_d(d)?;
    check_index("i", i, 1, d - 1)?;
    let cols: Vec<usize> = (1..=i + 1).collect();
    leading_rows_minor(&mod_x1_matrix(d)?, &cols)
}

/// Nonzero `(i+1)`-minors of the first `i+1` rows of `X` mod `x1`, column selections in lex order.
pub fn cal_j_minors(d: usize, i: usize) -> Result<Vec<Polynomial<Rational>>> {
    check_d(d)?;
    check_index("i", i, 1, d - 1)?;
    let x = mod_x1_matrix(d)?;
    let mut out = Vec::new();
    for cols in column_selections(d, i + 1) {
        let m = leading_rows_minor(&x, &cols)?;
        if !m.is_zero() {
            out.push(m);
        }
    }
    Ok(out)
}

pub fn cal_j(d: usize, i: usize) -> Result<PolyIdeal<Rational>> {
    PolyIdeal::new(tvars(d), cal_j_minors(d, i)?)
}

/// `sum over weight-n compositions a of prod_i calJ_i^(a_i)` mod `x1`; the unit ideal for `n <= 0`.
///
/// Each power contributes the products over multisets of minors, so generators
/// are enumerated by composition (colex), then by multiset (lex) per index.
pub fn cal_i(d: usize, n: i64) -> Result<PolyIdeal<Rational>> {
    check_d(d)?;
    let nv = tvars(d);
    if n <= 0 {
        return PolyIdeal::new(nv, [Polynomial::monomial(Monomial::one(nv), rat(1))]);
    }
    let minors: Vec<Vec<Polynomial<Rational>>> = (1..d).map(|i| cal_j_minors(d, i)).collect::<Result<_>>()?;
    let mut gens = Vec::new();
    for a in weighted_compositions(d - 1, n as u32) {
        let factor_lists: Vec<Vec<Polynomial<Rational>>> = a
            .parts
            .iter()
            .enumerate()
            .filter(|(_, &ai)| ai > 0)
            .map(|(idx, &ai)| multiset_products(&minors[idx], ai as usize, nv))
            .collect();
        for choice in factor_lists.iter().map(|l| l.iter()).multi_cartesian_product() {
            let mut acc = Polynomial::monomial(Monomial::one(nv), rat(1));
            for f in choice {
                acc = &acc * f;
            }
            if !acc.is_zero() {
                gens.push(acc);
            }
        }
    }
    PolyIdeal::new(nv, gens)
}

fn multiset_products(polys: &[Polynomial<Rational>], size: usize, nv: usize) -> Vec<Polynomial<Rational>> {
    (0..polys.len())
        .combinations_with_replacement(size)
        .map(|idx| idx.iter().fold(Polynomial::monomial(Monomial::one(nv), rat(1)), |acc, &k| &acc * &polys[k]))
        .collect()
}

/// `J_i = (x_(i+1), ..., x_d)^(i+1)`.
pub fn mono_j(d: usize, i: usize) -> Result<MonomialIdeal> {
    check_d(d)?;
    check_index("i", i, 1, d - 1)?;
    Ok(MonomialIdeal::minimalize(tvars(d), block(d, i + 1, d, (i + 1) as u32)))
}

/// `J_1^(a_1) ... J_(d-1)^(a_(d-1))` for `parts = (a_1, ...)`.
///
/// A monomial of the right total degree lies in this product exactly when, for
/// every `l`, its degree in `x_(l+1), ..., x_d` is at least the total degree
/// `sum_(i >= l) (i+1) a_i` demanded by the factors confined to those variables.
pub fn composition_ideal(d: usize, parts: &[u32]) -> Result<MonomialIdeal> {
    check_d(d)?;
    if parts.len() > d - 1 {
        return Err(Error::Range(format!("composition of length {} for d = {d}", parts.len())));
    }
    let nv = tvars(d);
    // demand[l-1] = sum_{i >= l} (i+1) a_i
    let mut demand = vec![0u32; parts.len() + 1];
    for l in (1..=parts.len()).rev() {
        demand[l - 1] = demand[l] + (l as u32 + 1) * parts[l - 1];
    }
    let gens = monomials_of_degree(nv, 0..nv, demand[0]).into_iter().filter(|m| {
        // position l - 1 holds x_(l+1)
        let e = m.exponents();
        (1..=parts.len()).all(|l| e[l - 1..].iter().map(|&x| u32::from(x)).sum::<u32>() >= demand[l - 1])
    });
    Ok(MonomialIdeal::minimalize(nv, gens))
}

/// `I_n = sum over weight-n compositions of J^a`; the unit ideal for `n <= 0`.
pub fn mono_i(d: usize, n: i64) -> Result<MonomialIdeal> {
    check_d(d)?;
    if n <= 0 {
        return Ok(MonomialIdeal::unit(tvars(d)));
    }
    let mut gens = Vec::new();
    for a in weighted_compositions(d - 1, n as u32) {
        gens.extend_from_slice(composition_ideal(d, &a.parts)?.gens());
    }
    Ok(MonomialIdeal::minimalize(tvars(d), gens))
}

/// `(x2^2, x3^3, ..., x_(k+1)^(k+1))`, the zero ideal for `k = 0`.
pub fn pure_powers(d: usize, k: usize) -> Result<MonomialIdeal> {
    check_d(d)?;
    check_index("k", k, 0, d - 1)?;
    Ok(MonomialIdeal::minimalize(tvars(d), (2..=k + 1).map(|v| var_power(d, v, v as u16))))
}

/// Product of the antidiagonal entries of rows `1..=i+1`, columns `cols` of `X` mod `x1`:
/// `prod_k x_(j_k + i - k + 1)`.
pub fn antidiagonal_monomial(d: usize, cols: &[usize]) -> Monomial {
    let i = cols.len() - 1;
    cols.iter()
        .enumerate()
        .fold(Monomial::one(tvars(d)), |acc, (k0, &j)| acc.mul(&var(d, j + i - k0)))
}

/// A tuple `(a_1, ..., a_len)` together with its weight `sum i a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedComposition {
    pub parts: Vec<u32>,
    pub weight: u32,
}

impl WeightedComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        let weight = parts.iter().enumerate().map(|(i, a)| (i as u32 + 1) * a).sum();
        WeightedComposition { parts, weight }
    }
}

impl std::fmt::Display for WeightedComposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// All `(a_1, ..., a_len)` of weight `n`, in colex order (compare the last entry first).
pub fn weighted_compositions(len: usize, n: u32) -> Vec<WeightedComposition> {
    let mut out = Vec::new();
    let mut parts = vec![0u32; len];
    compositions_rec(&mut parts, len, n, &mut out);
    out
}

// Fills parts[..upto] from the top index down; ascending values at each index give colex order.
fn compositions_rec(parts: &mut Vec<u32>, upto: usize, remaining: u32, out: &mut Vec<WeightedComposition>) {
    if upto == 0 {
        if remaining == 0 {
            out.push(WeightedComposition::new(parts.clone()));
        }
        return;
    }
    let w = upto as u32;
    for a in 0..=remaining / w {
        parts[upto - 1] = a;
        compositions_rec(parts, upto - 1, remaining - a * w, out);
    }
    parts[upto - 1] = 0;
}

/// `Lambda_{j,n}`: weight-`n` tuples `(a_1, ..., a_j)` with `a_j != 0`, colex ordered.
pub fn lambda_set(j: usize, n: u32) -> Vec<WeightedComposition> {
    if j == 0 {
        return Vec::new();
    }
    weighted_compositions(j, n).into_iter().filter(|a| a.parts[j - 1] != 0).collect()
}

/// Shared memo of `I_n` keyed by `(d, n)`.
#[derive(Debug, Default)]
pub struct CurveCache {
    mono_i: RwLock<HashMap<(usize, i64), Arc<MonomialIdeal>>>,
}

impl CurveCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mono_i(&self, d: usize, n: i64) -> Result<Arc<MonomialIdeal>> {
        let n = n.max(0);
        if let Some(hit) = self.mono_i.read().expect("cache lock").get(&(d, n)) {
            return Ok(Arc::clone(hit));
        }
        let ideal = Arc::new(mono_i(d, n)?);
        let mut w = self.mono_i.write().expect("cache lock");
        Ok(Arc::clone(w.entry((d, n)).or_insert(ideal)))
    }
}
