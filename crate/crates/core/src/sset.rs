//! The monomial sets `S(a_j)` spanning `I_(n-1)` modulo `(I_n : x_d)`.

use std::collections::BTreeSet;

use crate::curve::{block, check_d, lambda_set, tvars, var_power, WeightedComposition};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// `S(a_1, ..., a_j)` for `a_j != 0`.
///
/// `S = {x_(j+1)^((j+1) a_j - j)}` when no earlier entry is nonzero, and otherwise
/// `{x_(j+1)^((j+1) a_j - j)} * S(a_1..a_k) * M_{k+1,j+1}^k` with `k` the last
/// nonzero index before `j`.
pub fn s_set(d: usize, parts: &[u32]) -> Result<BTreeSet<Monomial>> {
    check_d(d)?;
    let j = parts.len();
    if j == 0 || j > d - 1 {
        return Err(Error::Range(format!("S-set index j = {j} outside 1..={}", d - 1)));
    }
    let aj = parts[j - 1];
    if aj == 0 {
        return Err(Error::Precondition(format!("last entry of {parts:?} must be nonzero")));
    }
    let head = var_power(d, j + 1, ((j as u32 + 1) * aj - j as u32) as u16);
    let Some(k) = (1..j).rev().find(|&i| parts[i - 1] != 0) else {
        return Ok(BTreeSet::from([head]));
    };
    let inner = s_set(d, &parts[..k])?;
    let blk = block(d, k + 1, j + 1, k as u32);
    let mut out = BTreeSet::new();
    for s in &inner {
        let hs = head.mul(s);
        for b in &blk {
            out.insert(hs.mul(b));
        }
    }
    Ok(out)
}

/// `sum over a in Lambda_{j,n-1} of #S(a)`.
pub fn s_count(d: usize, j: usize, n: u32) -> Result<usize> {
    if n < 1 {
        return Ok(0);
    }
    lambda_set(j, n - 1).iter().map(|a| s_set(d, &a.parts).map(|s| s.len())).sum()
}

/// All monomials of `S(a_j) * M_{j+1,d}^j` over `1 <= j <= d-1`, `a_j in Lambda_{j,n-1}`, deduplicated.
pub fn spanning_monomials(d: usize, n: u32) -> Result<Vec<Monomial>> {
    check_d(d)?;
    let mut out = BTreeSet::new();
    if n < 1 {
        return Ok(Vec::new());
    }
    for j in 1..d {
        let blk = block(d, j + 1, d, j as u32);
        for a in lambda_set(j, n - 1) {
            for s in s_set(d, &a.parts)? {
                out.extend(blk.iter().map(|b| s.mul(b)));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Total degree `sum (l+1) a_l` of the minimal generators of `J^a`.
pub fn composition_degree(a: &WeightedComposition) -> u32 {
    a.parts.iter().enumerate().map(|(l, &al)| (l as u32 + 2) * al).sum()
}

/// Monomials of `S(a_j) * M_{j+1,d}^j` for one composition.
pub fn s_products(d: usize, a: &WeightedComposition) -> Result<Vec<Monomial>> {
    let j = a.parts.len();
    let blk = block(d, j + 1, d, j as u32);
    let mut out = BTreeSet::new();
    for s in s_set(d, &a.parts)? {
        out.extend(blk.iter().map(|b| s.mul(b)));
    }
    debug_assert!(out.iter().all(|m| m.nvars() == tvars(d)));
    Ok(out.into_iter().collect())
}
