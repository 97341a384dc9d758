//! Sparse multivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Coeff, Fp, Rational};
use crate::monomial::Monomial;
use crate::order::{Grevelex, MonomialOrder};

/// A polynomial as a finite map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Coeff> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "term arity differs from polynomial arity");
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F> {
        self.terms.get(m)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Structural(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &c.neg());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect(),
        }
    }

    pub fn map_coeffs<G: Coeff>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Polynomial<G>> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let g = f(c)?;
            if !g.is_zero() {
                out.terms.insert(*m, g);
            }
        }
        Ok(out)
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms<O: MonomialOrder + ?Sized>(&self, order: &O) -> Vec<(Monomial, F)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Text form with terms descending under `order` and variables named from `x{first_index}`.
    pub fn render<O: MonomialOrder + ?Sized>(&self, order: &O, first_index: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { c.neg() } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&m.render(first_index));
            } else {
                out.push_str(&format!("{}*{}", magnitude, m.render(first_index)));
            }
        }
        out
    }
}

impl Polynomial<Rational> {
    pub fn to_prime(&self, p: u32) -> Result<Polynomial<Fp>> {
        self.map_coeffs(|c| Fp::from_rational(c, p))
    }
}

/// Renders in the `T'` convention (`x2..xd`) under [`Grevelex`].
impl<F: Coeff> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Grevelex, 2))
    }
}

// Operator forms panic on an arity mismatch; use the `checked_*` methods to get an error instead.
impl<F: Coeff> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl<F: Coeff> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl<F: Coeff> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl<F: Coeff> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
}

/// Univariate polynomial in `t`, keyed by exponent.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UnivariatePoly<F> {
    pub terms: BTreeMap<u64, F>,
}

impl<F: Coeff> UnivariatePoly<F> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Coeff> fmt::Display for UnivariatePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                _ if c.is_one() => format!("t^{e}"),
                _ => format!("{c}*t^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Substitutes `x_i -> t^(d + (i-1) m)` into a polynomial over the full ring `x1..xd`.
pub fn substitute_parametrization<F: Coeff>(f: &Polynomial<F>, d: usize, m: usize) -> Result<UnivariatePoly<F>> {
    if num_integer::gcd(d, m) != 1 {
        return Err(Error::Precondition(format!("gcd(d, m) = gcd({d}, {m}) must be 1")));
    }
    if f.nvars() != d {
        return Err(Error::Structural(format!(
            "expected a polynomial in x1..x{d}, got {} variables",
            f.nvars()
        )));
    }
    let weights: Vec<u64> = (0..d).map(|i| (d + i * m) as u64).collect();
    let mut out: UnivariatePoly<F> = UnivariatePoly { terms: BTreeMap::new() };
    for (mono, c) in f.terms() {
        let e: u64 = mono.exponents().iter().zip(&weights).map(|(&a, &w)| u64::from(a) * w).sum();
        let entry = out.terms.remove(&e);
        let s = match entry {
            Some(prev) => Coeff::add(&prev, c),
            None => c.clone(),
        };
        if !s.is_zero() {
            out.terms.insert(e, s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn var(nvars: usize, i: usize) -> Polynomial<Rational> {
        Polynomial::monomial(Monomial::var(nvars, i), rat(1))
    }

    #[test]
    fn additive_identity() {
        let g = &var(2, 0) + &var(2, 1);
        assert_eq!(&Polynomial::zero(2) + &g, g);
    }

    #[test]
    fn monomial_product() {
        let p = &var(2, 0) * &var(2, 1);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coefficient(&Monomial::from_exps(&[1, 1])), Some(&rat(1)));
    }

    #[test]
    fn difference_of_squares() {
        let (x2, x3) = (var(2, 0), var(2, 1));
        let p = &(&x2 + &x3) * &(&x2 - &x3);
        let expected = &(&x2 * &x2) - &(&x3 * &x3);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "-x3^2 + x2^2");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = var(3, 1);
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).len(), 0);
    }

    #[test]
    fn arity_mismatch() {
        assert!(matches!(var(2, 0).checked_add(&var(3, 0)), Err(Error::Structural(_))));
        assert!(var(2, 0).checked_mul(&var(3, 0)).is_err());
    }

    #[test]
    fn rendering() {
        let x2x4 = Polynomial::monomial(Monomial::from_exps(&[1, 0, 1]), rat(1));
        let x3sq = Polynomial::monomial(Monomial::from_exps(&[0, 2, 0]), rat(1));
        assert_eq!((&x2x4 - &x3sq).to_string(), "-x3^2 + x2*x4");
        let p = Polynomial::from_terms(2, vec![(Monomial::one(2), rat(-3)), (Monomial::from_exps(&[2, 0]), rat(2))]);
        assert_eq!(p.to_string(), "2*x2^2 - 3");
        assert_eq!(Polynomial::<Rational>::zero(2).to_string(), "0");
    }

    #[test]
    fn substitution() {
        // x1*x3 - x2^2 with d = 3, m = 1: t^3 t^5 - (t^4)^2 = 0
        let f = Polynomial::from_terms(
            3,
            vec![(Monomial::from_exps(&[1, 0, 1]), rat(1)), (Monomial::from_exps(&[0, 2, 0]), rat(-1))],
        );
        assert!(substitute_parametrization(&f, 3, 1).unwrap().is_zero());
        let x2 = var(3, 1);
        let s = substitute_parametrization(&x2, 3, 1).unwrap();
        assert_eq!(s.terms.iter().collect::<Vec<_>>(), vec![(&4u64, &rat(1))]);
        for (d, m) in [(2, 1), (3, 2), (5, 3), (4, 7)] {
            let x1 = var(d, 0);
            let s = substitute_parametrization(&x1, d, m).unwrap();
            assert_eq!(s.terms.keys().copied().collect::<Vec<_>>(), vec![d as u64]);
        }
        assert!(matches!(substitute_parametrization(&x2, 3, 3), Err(Error::Precondition(_))));
    }
}
