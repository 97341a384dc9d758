//! Explicit witnesses that `(prod M_j) : x_i^i` lands in `I_(n-i+1)`.
//!
//! Given monomials `M_j` of degree `(j+1) a_j` in `x_(j+1), ..., x_d`, the
//! construction redistributes the exponent of `x_i` removed by the colon among
//! the factors, producing `M'_j` in `J_j^(a'_j)`, a leftover monomial `N`, and a
//! new composition `a'` whose weight drops by at most `i - 1`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::curve::{check_d, tvars};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// The unique `(q, r)` with `value = modulus * q - r` and `0 <= r <= modulus - 1`.
pub fn solve_step(value: i64, modulus: i64) -> (i64, i64) {
    debug_assert!(modulus > 0);
    let q = value.div_euclid(modulus) + i64::from(value.rem_euclid(modulus) != 0);
    (q, modulus * q - value)
}

/// Output of the quotient/remainder recursion on the `x_i`-valuations `b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientRecursion {
    pub k: usize,
    pub g: i64,
    pub c: i64,
    /// `(q_j, r_j)` for `j = k-1, ..., i-1`; `j = 0` appears when `k = 1`.
    pub qr: BTreeMap<usize, (i64, i64)>,
}

impl QuotientRecursion {
    pub fn q(&self, j: usize) -> i64 {
        self.qr.get(&j).map_or(0, |p| p.0)
    }

    pub fn r(&self, j: usize) -> i64 {
        self.qr.get(&j).map_or(0, |p| p.1)
    }
}

/// Runs the recursion for `b = (b_1, ..., b_(i-1))`.
///
/// `k = min { l : b_l + ... + b_(i-1) <= i-1 }` and `g = min(i, sum b)`; then
/// for `j = i-1` down to `k`, `(q_j, r_j) = (0, r_(j+1))` if `b_j = 0` and
/// otherwise `b_j - r_(j+1) = (j+1) q_j - r_j`. Finally `c = g - sum_(j>=k) b_j`
/// determines `(q_(k-1), r_(k-1))` through `c - r_k = k q_(k-1) - r_(k-1)`.
pub fn quotient_recursion(b: &[u32], i: usize) -> Result<QuotientRecursion> {
    if i < 2 || b.len() != i - 1 {
        return Err(Error::Precondition(format!("need i >= 2 and i - 1 valuations, got i = {i}, {} values", b.len())));
    }
    let bj = |j: usize| i64::from(b[j - 1]);
    let total: i64 = b.iter().map(|&x| i64::from(x)).sum();
    let g = total.min(i as i64);
    let k = (1..=i)
        .find(|&l| (l..i).map(bj).sum::<i64>() < i as i64)
        .expect("l = i gives an empty sum");
    let mut qr = BTreeMap::new();
    let mut r_next = 0i64;
    for j in (k..i).rev() {
        // a zero valuation carries r_(j+1) unchanged, which may exceed j; the
        // next solved step then has a negative q_j
        let (q, r) = if bj(j) == 0 { (0, r_next) } else { solve_step(bj(j) - r_next, j as i64 + 1) };
        if bj(j) != 0 && !(0..=j as i64).contains(&r) {
            return Err(Error::InvariantViolation(format!("no admissible (q, r) at j = {j}")));
        }
        qr.insert(j, (q, r));
        r_next = r;
    }
    let c = g - (k..i).map(bj).sum::<i64>();
    if c < 0 {
        return Err(Error::InvariantViolation(format!("c = {c} < 0")));
    }
    let (q, r) = if c == 0 {
        (0, r_next)
    } else {
        let (q, r) = solve_step(c - r_next, k as i64);
        if q < 0 || !(0..k as i64).contains(&r) {
            return Err(Error::InvariantViolation(format!("no admissible (q, r) at j = {}", k - 1)));
        }
        (q, r)
    };
    qr.insert(k - 1, (q, r));
    Ok(QuotientRecursion { k, g, c, qr })
}

/// A decomposition `(prod_(j<i) M_j) / x_i^g = (prod_(j<i) M'_j) * N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonWitness {
    pub g: u32,
    pub recursion: Option<QuotientRecursion>,
    /// `a'_j` for `j = 1, ..., i-1`.
    pub aprime: Vec<u32>,
    /// `M'_j` for `j = 1, ..., i-1`.
    pub mprime: Vec<Monomial>,
    pub n: Monomial,
    /// `sum_(j<i) j a'_j + sum_(j>=i) j a_j`.
    pub weight: i64,
}

// A divisor of `m` of degree `deg`, taking exponents from the highest variable down.
fn divisor_of_degree(m: &Monomial, deg: u32) -> Option<Monomial> {
    if m.degree() < deg {
        return None;
    }
    let mut exps = vec![0u16; m.nvars()];
    let mut left = deg;
    for v in (0..m.nvars()).rev() {
        let take = u32::from(m.exponent(v)).min(left);
        exps[v] = take as u16;
        left -= take;
    }
    Some(Monomial::from_exps(&exps))
}

fn supported_from(m: &Monomial, first_var: usize) -> bool {
    // positions hold x2, x3, ...; x_v sits at v - 2
    m.support().all(|p| p + 2 >= first_var)
}

/// Builds and checks the witness for `M = (M_1, ..., M_(d-1))`, `a`, and `2 <= i <= d`.
///
/// Before returning, verifies that each `M'_j` has degree `(j+1) a'_j` with support
/// in `x_(j+1), ..., x_d`, that the product identity holds, and that the
/// weight is at least `n - i + 1` with `n = sum j a_j`.
pub fn colon_witness(d: usize, m: &[Monomial], a: &[u32], i: usize) -> Result<ColonWitness> {
    check_d(d)?;
    if m.len() != d - 1 || a.len() != d - 1 {
        return Err(Error::Precondition(format!("need {} factors and entries", d - 1)));
    }
    if !(2..=d).contains(&i) {
        return Err(Error::Range(format!("i = {i} outside 2..={d}")));
    }
    for (idx, mj) in m.iter().enumerate() {
        let j = idx + 1;
        if mj.nvars() != tvars(d) || mj.degree() != (j as u32 + 1) * a[idx] || !supported_from(mj, j + 1) {
            return Err(Error::Precondition(format!("M_{j} = {mj} is not a degree-{} monomial in x{}..x{d}", (j + 1) as u32 * a[idx], j + 1)));
        }
    }
    let n: i64 = a.iter().enumerate().map(|(idx, &x)| (idx as i64 + 1) * i64::from(x)).sum();
    let high_weight: i64 = (i..d).map(|j| j as i64 * i64::from(a[j - 1])).sum();
    let xi = i - 2;
    let b: Vec<u32> = (1..i).map(|j| u32::from(m[j - 1].exponent(xi))).collect();

    let witness = if b.iter().all(|&x| x == 0) {
        ColonWitness {
            g: 0,
            recursion: None,
            aprime: a[..i - 1].to_vec(),
            mprime: m[..i - 1].to_vec(),
            n: Monomial::one(tvars(d)),
            weight: n,
        }
    } else {
        build(d, m, a, i, &b, high_weight)?
    };
    verify(d, m, a, i, &witness, n)?;
    Ok(witness)
}

fn build(d: usize, m: &[Monomial], a: &[u32], i: usize, b: &[u32], high_weight: i64) -> Result<ColonWitness> {
    let nv = tvars(d);
    let alg = quotient_recursion(b, i)?;
    let k = alg.k;
    let xi_pow = |e: i64| Monomial::pure_power(nv, i - 2, e as u16);
    let bj = |j: usize| i64::from(b[j - 1]);
    let mj = |j: usize| if j == 0 { Monomial::one(nv) } else { m[j - 1] };
    let bad = |what: String| Error::InvariantViolation(what);

    // N_j for j = i, i-1, ..., k-1
    let mut nmap: BTreeMap<usize, Monomial> = BTreeMap::new();
    nmap.insert(i, Monomial::one(nv));
    for j in (k..i).rev() {
        let next = nmap[&(j + 1)];
        let nj = if bj(j) == 0 {
            next
        } else {
            let quotient = mj(j).mul(&next).div(&xi_pow(bj(j))).ok_or_else(|| bad(format!("x_i^b_{j} does not divide M_{j} N_{}", j + 1)))?;
            divisor_of_degree(&quotient, alg.r(j) as u32).ok_or_else(|| bad(format!("no divisor of degree r_{j}")))?
        };
        nmap.insert(j, nj);
    }
    let nk = nmap[&k];
    let top = mj(k - 1).mul(&nk).div(&xi_pow(alg.c)).ok_or_else(|| bad("x_i^c does not divide M_(k-1) N_k".into()))?;
    let n_km1 = divisor_of_degree(&top, alg.r(k - 1) as u32).ok_or_else(|| bad("no divisor of degree r_(k-1)".into()))?;
    nmap.insert(k - 1, n_km1);

    let r_km1 = alg.r(k - 1);
    let special = (r_km1 >= 2).then(|| (r_km1 - 1) as usize);
    let mut aprime = Vec::with_capacity(i - 1);
    let mut mprime = Vec::with_capacity(i - 1);
    for j in 1..i {
        let (aj, mpj) = if Some(j) == special {
            (i64::from(a[j - 1]) + 1, mj(j).mul(&n_km1))
        } else if j >= k {
            let num = mj(j).mul(&nmap[&(j + 1)]);
            let den = xi_pow(bj(j)).mul(&nmap[&j]);
            (i64::from(a[j - 1]) - alg.q(j), num.div(&den).ok_or_else(|| bad(format!("M'_{j} is not a monomial")))?)
        } else if j + 1 == k {
            let den = xi_pow(alg.c).mul(&n_km1);
            (i64::from(a[j - 1]) - alg.q(j), mj(j).mul(&nk).div(&den).ok_or_else(|| bad(format!("M'_{j} is not a monomial")))?)
        } else {
            (i64::from(a[j - 1]), mj(j))
        };
        if aj < 0 {
            return Err(bad(format!("a'_{j} = {aj} < 0")));
        }
        aprime.push(aj as u32);
        mprime.push(mpj);
    }
    let n = if r_km1 <= 1 { n_km1 } else { Monomial::one(nv) };
    let weight = aprime.iter().enumerate().map(|(idx, &x)| (idx as i64 + 1) * i64::from(x)).sum::<i64>() + high_weight;
    Ok(ColonWitness { g: alg.g as u32, recursion: Some(alg), aprime, mprime, n, weight })
}

fn verify(d: usize, m: &[Monomial], a: &[u32], i: usize, w: &ColonWitness, n: i64) -> Result<()> {
    let nv = tvars(d);
    let bad = |what: String| Err(Error::InvariantViolation(what));
    for (idx, mp) in w.mprime.iter().enumerate() {
        let j = idx + 1;
        if mp.degree() != (j as u32 + 1) * w.aprime[idx] || !supported_from(mp, j + 1) {
            return bad(format!("M'_{j} = {mp} is not in J_{j}^{}", w.aprime[idx]));
        }
    }
    let lhs = m[..i - 1].iter().fold(Monomial::one(nv), |acc, x| acc.mul(x));
    let rhs = w.mprime.iter().fold(w.n, |acc, x| acc.mul(x));
    if lhs.div(&Monomial::pure_power(nv, i - 2, w.g as u16)) != Some(rhs) {
        return bad(format!("product identity fails for a = {a:?}, i = {i}"));
    }
    if w.weight < n - i as i64 + 1 {
        return bad(format!("weight {} below n - i + 1 = {}", w.weight, n - i as i64 + 1));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{var, var_power};

    #[test]
    fn solve_step_examples() {
        assert_eq!(solve_step(5, 3), (2, 1));
        assert_eq!(solve_step(6, 3), (2, 0));
        assert_eq!(solve_step(0, 3), (0, 0));
        assert_eq!(solve_step(-2, 3), (0, 2));
    }

    #[test]
    fn zero_valuation_carries_remainder() {
        // total valuation 2 <= i - 1, so k = 1 and c = 0
        let alg = quotient_recursion(&[0, 2, 0], 4).unwrap();
        assert_eq!(alg.k, 1);
        assert_eq!(alg.qr[&3], (0, 0));
        assert_eq!(alg.qr[&2], solve_step(2, 3));
        assert_eq!(alg.c, 0);
        assert_eq!(alg.qr[&0], (0, alg.r(1)));
    }

    #[test]
    fn worked_example() {
        let d = 3;
        let m1 = var_power(d, 2, 3).mul(&var(d, 3));
        let m2 = Monomial::one(2);
        let w = colon_witness(d, &[m1, m2], &[2, 0], 2).unwrap();
        let alg = w.recursion.as_ref().unwrap();
        assert_eq!((alg.k, alg.g, alg.c), (2, 2, 2));
        assert_eq!(alg.qr[&1], (1, 0));
        assert_eq!(w.aprime, vec![1]);
        assert_eq!(w.mprime, vec![var(d, 2).mul(&var(d, 3))]);
        assert!(w.n.is_one());
        assert!(w.weight >= 1);
    }

    #[test]
    fn identity_witness() {
        let d = 3;
        let m1 = var_power(d, 3, 2);
        let w = colon_witness(d, &[m1, Monomial::one(2)], &[1, 0], 2).unwrap();
        assert_eq!(w.g, 0);
        assert_eq!(w.mprime, vec![m1]);
        assert_eq!(w.aprime, vec![1]);
    }

    #[test]
    fn rejects_bad_factors() {
        let d = 3;
        let m1 = var_power(d, 2, 3);
        assert!(matches!(colon_witness(d, &[m1, Monomial::one(2)], &[2, 0], 2), Err(Error::Precondition(_))));
        assert!(matches!(colon_witness(d, &[m1, Monomial::one(2)], &[1, 0], 4), Err(Error::Precondition(_)) | Err(Error::Range(_))));
    }
}
