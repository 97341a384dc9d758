//! Exponent vectors with a cached total degree.

use std::fmt;

use crate::error::{Error, Result};

/// Largest number of variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 8;

/// A monomial `x^a`, stored inline.
///
/// Position `0` is the first variable of the ambient ring: `x2` for the
/// quotient ring `T' = k[x2..xd]`, `x1` for the full ring. The derived `Ord` is
/// a structural order used for storage only; monomial orders live in
/// [`crate::order`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Structural(format!(
                "{} variables requested, at most {MAX_VARS} supported",
                exps.len()
            )));
        }
        let mut buf = [0u16; MAX_VARS];
        buf[..exps.len()].copy_from_slice(exps);
        Ok(Monomial {
            exps: buf,
            nvars: exps.len() as u8,
            degree: exps.iter().map(|&e| u32::from(e)).sum(),
        })
    }

    /// Panicking constructor for literals in tests and internal code.
    pub fn from_exps(exps: &[u16]) -> Self {
        Self::new(exps).expect("monomial arity within MAX_VARS")
    }

    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, degree: 0 }
    }

    /// The variable at position `idx` raised to `exp`.
    pub fn pure_power(nvars: usize, idx: usize, exp: u16) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut m = Self::one(nvars);
        m.exps[idx] = exp;
        m.degree = u32::from(exp);
        m
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        Self::pure_power(nvars, idx, 1)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, idx: usize) -> u16 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Positions with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// The single variable this monomial is a power of, if any.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.support();
        let first = support.next()?;
        support.next().is_none().then_some(first)
    }

    /// Panics on an exponent overflow (exponents are `u16`).
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        out.degree = self.degree + other.degree;
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] = u16::try_from(u32::from(self.exps[i]) * e).expect("exponent overflow");
        }
        out.degree = self.degree * e;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree
            && self.exps[..self.nvars as usize]
                .iter()
                .zip(&other.exps[..self.nvars as usize])
                .all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] -= other.exps[i];
        }
        out.degree = self.degree - other.degree;
        Some(out)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.zip_with(other, u16::min)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.zip_with(other, u16::max)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exponents().iter().zip(other.exponents()).all(|(&a, &b)| a == 0 || b == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u16, u16) -> u16) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        let mut degree = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = f(self.exps[i], other.exps[i]);
            degree += u32::from(out.exps[i]);
        }
        out.degree = degree;
        out
    }

    /// Renders with variable names `x{first_index}`, `x{first_index + 1}`, ...
    pub fn render(&self, first_index: usize) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.support()
            .map(|i| match self.exps[i] {
                1 => format!("x{}", i + first_index),
                e => format!("x{}^{}", i + first_index, e),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Displays in the `T'` convention, position 0 printed as `x2`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(2))
    }
}

impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.exponents())
    }
}

/// All monomials of total degree `degree` supported on positions `vars` (a contiguous range).
pub fn monomials_of_degree(nvars: usize, vars: std::ops::Range<usize>, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if vars.is_empty() {
        if degree == 0 {
            out.push(Monomial::one(nvars));
        }
        return out;
    }
    let mut current = Monomial::one(nvars);
    fill(&mut out, &mut current, vars.start, vars.end, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Monomial, pos: usize, end: usize, remaining: u32) {
    if pos + 1 == end {
        current.exps[pos] = remaining as u16;
        current.degree += remaining;
        out.push(*current);
        current.degree -= remaining;
        current.exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current.exps[pos] = e as u16;
        current.degree += e;
        fill(out, current, pos + 1, end, remaining - e);
        current.degree -= e;
    }
    current.exps[pos] = 0;
}
