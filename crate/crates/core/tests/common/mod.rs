//! Strategies and law checks shared by the property tests and the acceptance harness.
#![allow(dead_code)]

use std::cmp::Ordering;

use monocurve_core::curve::{block, tvars, var_power};
use monocurve_core::field::rat;
use monocurve_core::monomial::monomials_of_degree;
use monocurve_core::{MonomialIdeal, MonomialOrder, Monomial, Polynomial, Rational};
use proptest::prelude::*;

pub fn monomial(nvars: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(|e| Monomial::from_exps(&e))
}

pub fn polynomial(nvars: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec((monomial(nvars, 3), -5i64..=5), 0..5)
        .prop_map(move |terms| {
            let mut p = Polynomial::zero(nvars);
            for (m, c) in terms {
                p = &p + &Polynomial::monomial(m, rat(c));
            }
            p
        })
}

pub fn ideal(nvars: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(nvars, 4), 1..5).prop_map(move |g| MonomialIdeal::minimalize(nvars, g))
}

/// `(d, j, a)` with `1 <= j <= d - 1 <= 5`, `1 <= a <= 4`.
pub fn powers_one_params() -> impl Strategy<Value = (usize, usize, u32)> {
    (2usize..=6).prop_flat_map(|d| (Just(d), 1..d, 1u32..=4))
}

/// `(d, k, j, a, b)` with `1 <= k < j <= d - 1 <= 5`, `1 <= a, b <= 4`.
pub fn powers_two_params() -> impl Strategy<Value = (usize, usize, usize, u32, u32)> {
    (3usize..=6)
        .prop_flat_map(|d| (Just(d), 2..d))
        .prop_flat_map(|(d, j)| (Just(d), 1..j, Just(j), 1u32..=4, 1u32..=4))
}

/// Totality, antisymmetry, transitivity, multiplicativity, and gradedness on one triple.
pub fn order_axioms<O: MonomialOrder>(o: &O, a: &Monomial, b: &Monomial, c: &Monomial) -> Result<(), String> {
    let ab = o.cmp(a, b);
    if ab != o.cmp(b, a).reverse() {
        return Err(format!("antisymmetry fails for {a:?}, {b:?}"));
    }
    if (ab == Ordering::Equal) != (a == b) {
        return Err(format!("Equal on distinct monomials {a:?}, {b:?}"));
    }
    if ab != o.cmp(&a.mul(c), &b.mul(c)) {
        return Err(format!("not multiplicative: {a:?}, {b:?}, {c:?}"));
    }
    if a.degree() > b.degree() && ab != Ordering::Greater {
        return Err(format!("not graded: {a:?}, {b:?}"));
    }
    if ab != Ordering::Greater && o.cmp(b, c) != Ordering::Greater && o.cmp(a, c) == Ordering::Greater {
        return Err(format!("not transitive: {a:?}, {b:?}, {c:?}"));
    }
    if !a.is_one() && o.cmp(a, &Monomial::one(a.nvars())) != Ordering::Greater {
        return Err(format!("1 is not the minimum against {a:?}"));
    }
    Ok(())
}

/// `((I : m) : m') = (I : m m')`, `(I + J) : m = (I : m) + (J : m)`, and `I subset (I : m)`.
pub fn colon_laws(i: &MonomialIdeal, j: &MonomialIdeal, m: &Monomial, m2: &Monomial) -> Result<(), String> {
    let twice = i.colon_monomial(m).and_then(|x| x.colon_monomial(m2)).map_err(|e| e.to_string())?;
    let once = i.colon_monomial(&m.mul(m2)).map_err(|e| e.to_string())?;
    if twice != once {
        return Err(format!("((I:m):m') != (I:mm') for I = {i}, m = {m}, m' = {m2}"));
    }
    let lhs = i.sum(j).and_then(|s| s.colon_monomial(m)).map_err(|e| e.to_string())?;
    let rhs = i
        .colon_monomial(m)
        .and_then(|a| a.sum(&j.colon_monomial(m)?))
        .map_err(|e| e.to_string())?;
    if lhs != rhs {
        return Err(format!("(I+J):m != (I:m)+(J:m) for I = {i}, J = {j}, m = {m}"));
    }
    if !i.colon_monomial(m).map_err(|e| e.to_string())?.contains_ideal(i) {
        return Err(format!("I not contained in (I:m) for I = {i}, m = {m}"));
    }
    Ok(())
}

/// The ideal `(x_r, ..., x_d)` of `T'`; zero when `r > d`.
pub fn var_ideal(d: usize, r: usize) -> MonomialIdeal {
    if r > d {
        return MonomialIdeal::zero(tvars(d));
    }
    MonomialIdeal::minimalize(tvars(d), block(d, r, d, 1))
}

fn segment_ideal(d: usize, r: usize, s: usize) -> MonomialIdeal {
    MonomialIdeal::minimalize(tvars(d), block(d, r, s, 1))
}

fn prod(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    a.product(b).expect("same ring")
}

fn add(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    a.sum(b).expect("same ring")
}

/// `(x_(j+1..d))^((j+1)a) = x_(j+1)^((j+1)a - j) (x_(j+1..d))^j + (x_(j+2..d))^(j+1) (x_(j+1..d))^((j+1)(a-1))`.
pub fn powers_identity_one(d: usize, j: usize, a: u32) -> Result<(), String> {
    let m = var_ideal(d, j + 1);
    let j32 = j as u32;
    let lhs = m.power((j32 + 1) * a);
    let head = MonomialIdeal::principal(var_power(d, j + 1, ((j32 + 1) * a - j32) as u16));
    let rhs = add(&prod(&head, &m.power(j32)), &prod(&var_ideal(d, j + 2).power(j32 + 1), &m.power((j32 + 1) * (a - 1))));
    if lhs != rhs {
        return Err(format!("first identity fails at d = {d}, j = {j}, a = {a}"));
    }
    Ok(())
}

/// `(x_(k+1..d))^a (x_(j+1..d))^b = (x_(k+1..j+1))^a (x_(j+1..d))^b + (x_(k+1..d))^(a-1) (x_(j+2..d))^(b+1)`.
pub fn powers_identity_two(d: usize, k: usize, j: usize, a: u32, b: u32) -> Result<(), String> {
    let lhs = prod(&var_ideal(d, k + 1).power(a), &var_ideal(d, j + 1).power(b));
    let first = prod(&segment_ideal(d, k + 1, j + 1).power(a), &var_ideal(d, j + 1).power(b));
    let second = prod(&var_ideal(d, k + 1).power(a - 1), &var_ideal(d, j + 2).power(b + 1));
    if lhs != add(&first, &second) {
        return Err(format!("second identity fails at d = {d}, k = {k}, j = {j}, a = {a}, b = {b}"));
    }
    Ok(())
}

/// Number of monomials outside `i` of degree at most the sum of generator degrees.
pub fn brute_force_length(i: &MonomialIdeal) -> u64 {
    let cap: u32 = i.gens().iter().map(|g| g.degree()).sum();
    (0..=cap)
        .flat_map(|e| monomials_of_degree(i.nvars(), 0..i.nvars(), e))
        .filter(|m| !i.contains(m))
        .count() as u64
}

/// `C(n, k)` with zero outside `0 <= k <= n`.
pub fn choose(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `d * sum over j_1 < ... < j_i <= k of (-1)^i C(n - sum j + d - 2, d - 1)`.
pub fn alternating_closed_form(d: usize, n: i64, k: usize) -> i64 {
    let d = d as i64;
    (0u32..1 << k)
        .map(|mask| {
            let s: i64 = (0..k).filter(|b| mask & (1 << b) != 0).map(|b| b as i64 + 1).sum();
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            sign * choose(n - s + d - 2, d - 1)
        })
        .sum::<i64>()
        * d
}

/// Homogeneous polynomial of the given degree with up to four terms; possibly zero.
pub fn homogeneous(nvars: usize, degree: u32) -> impl Strategy<Value = Polynomial<Rational>> {
    let mons = monomials_of_degree(nvars, 0..nvars, degree);
    prop::collection::vec((0..mons.len(), -4i64..=4), 1..5).prop_map(move |terms| {
        Polynomial::from_terms(nvars, terms.into_iter().map(|(i, c)| (mons[i], rat(c))))
    })
}

/// Two or three homogeneous generators of degree 1..=3 in three variables.
pub fn homogeneous_gens() -> impl Strategy<Value = Vec<Polynomial<Rational>>> {
    prop::collection::vec((1u32..=3).prop_flat_map(|e| homogeneous(3, e)), 2..4)
}
