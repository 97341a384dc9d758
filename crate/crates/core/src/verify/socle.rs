//! Socle of the Artinian reduction `B = sum_n I_n / (I_(n+1) + sum_j x_(j+1)^(j+1) I_(n-j))`.

use std::collections::HashMap;

use crate::curve::{check_d, mono_j, tvars, var, var_power, CurveCache};
use crate::error::{Error, Result};
use crate::field::{rat, Rational};
use crate::linalg::{Echelon, SparseRow};
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::verify::formulas::binomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleResult {
    /// `dim B_n` for `n = 0, 1, ...` up to the last nonzero piece.
    pub piece_dims: Vec<usize>,
    /// Basis classes `(n, monomial)` killed by every generator.
    pub socle_classes: Vec<(u32, Monomial)>,
    pub dimension: usize,
}

/// Denominator `I_(n+1) + sum_(j=1)^(d-1) x_(j+1)^(j+1) I_(n-j)` of the piece `B_n`.
fn piece_denominator(d: usize, n: i64, cache: &CurveCache) -> Result<MonomialIdeal> {
    let mut acc = (*cache.mono_i(d, n + 1)?).clone();
    for j in 1..d {
        let shifted = cache.mono_i(d, n - j as i64)?;
        let pw = MonomialIdeal::principal(var_power(d, j + 1, (j + 1) as u16));
        acc = acc.sum(&pw.product(&shifted)?)?;
    }
    Ok(acc)
}

/// Computes `B` piece by piece and the dimension of its socle.
///
/// Multiplication uses the variables `x2..xd` in filtration degree 0 and the
/// minimal generators of `J_j` in filtration degree `j`. Each class maps to a
/// class or to zero, and the socle dimension is the corank of the stacked
/// multiplication maps. Pieces are computed until `d - 1` consecutive pieces
/// vanish; needing more than `C(d, 2) + d` pieces is reported as an error.
pub fn socle_dimension_artinian_reduction(d: usize, cache: &CurveCache) -> Result<SocleResult> {
    check_d(d)?;
    let cap = binomial(d as i64, 2) as i64 + d as i64;
    let mut pieces: Vec<(Vec<Monomial>, MonomialIdeal)> = Vec::new();
    let mut zero_run = 0;
    let mut n = 0i64;
    while zero_run < d - 1 {
        if n > cap {
            return Err(Error::InvariantViolation(format!("B_n still nonzero past n = {cap} for d = {d}")));
        }
        let den = piece_denominator(d, n, cache)?;
        let num = cache.mono_i(d, n)?;
        let basis: Vec<Monomial> = den.standard_monomials()?.into_iter().filter(|m| num.contains(m)).collect();
        zero_run = if basis.is_empty() { zero_run + 1 } else { 0 };
        pieces.push((basis, den));
        n += 1;
    }
    let last = pieces.iter().rposition(|(b, _)| !b.is_empty()).map_or(0, |p| p + 1);
    pieces.truncate(last);

    let mut multipliers: Vec<(Monomial, usize)> = (2..=d).map(|v| (var(d, v), 0)).collect();
    for j in 1..d {
        multipliers.extend(mono_j(d, j)?.gens().iter().map(|g| (*g, j)));
    }

    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    for (pn, (basis, _)) in pieces.iter().enumerate() {
        for m in basis {
            let next = index.len();
            index.insert((pn, *m), next);
        }
    }
    let total = index.len();
    let mut ech: Echelon<Rational> = Echelon::new(multipliers.len() * total.max(1));
    let mut socle_classes = Vec::new();
    for (pn, (basis, _)) in pieces.iter().enumerate() {
        for m in basis {
            let mut row: SparseRow<Rational> = SparseRow::new();
            for (t, (u, shift)) in multipliers.iter().enumerate() {
                if let Some(&target) = index.get(&(pn + shift, u.mul(m))) {
                    row.insert(t * total + target, rat(1));
                }
            }
            if row.is_empty() {
                socle_classes.push((pn as u32, *m));
            }
            ech.insert(row);
        }
    }
    debug_assert!(socle_classes.iter().all(|(_, m)| m.nvars() == tvars(d)));
    Ok(SocleResult {
        piece_dims: pieces.iter().map(|(b, _)| b.len()).collect(),
        dimension: total - ech.rank(),
        socle_classes,
    })
}
