//! Monomial orders on `T' = k[x2..xd]`.

use std::cmp::Ordering;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// A total, graded, multiplicative order on monomials.
pub trait MonomialOrder: Debug + Send + Sync {
    fn name(&self) -> &'static str;

    /// Compares monomials of equal arity.
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering;

    fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Structural(format!(
                "comparing monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(self.cmp(a, b))
    }
}

/// The order used throughout: degree first, then `a > b` when the left-most
/// nonzero entry of `a - b` is negative. This makes `x2 < x3 < ... < xd`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Grevelex;

impl MonomialOrder for Grevelex {
    fn name(&self) -> &'static str {
        "grevelex"
    }

    #[inline]
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (x, y) in a.exponents().iter().zip(b.exponents()) {
            if x != y {
                // a - b negative at the first difference means a is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    }
}

/// Standard graded lexicographic order with `x2 > x3 > ... > xd`, for differential tests.
#[derive(Debug, Clone, Copy, Default)]
pub struct GradedLex;

impl MonomialOrder for GradedLex {
    fn name(&self) -> &'static str {
        "graded-lex"
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents()))
    }
}

/// The order-maximal monomial of `f` together with its coefficient.
pub fn leading_term<'a, F: Coeff, O: MonomialOrder + ?Sized>(
    f: &'a Polynomial<F>,
    order: &O,
) -> Result<(Monomial, &'a F)> {
    f.terms()
        .max_by(|a, b| order.cmp(a.0, b.0))
        .map(|(m, c)| (*m, c))
        .ok_or_else(|| Error::Domain("leading monomial of the zero polynomial".into()))
}

pub fn leading_monomial<F: Coeff, O: MonomialOrder + ?Sized>(f: &Polynomial<F>, order: &O) -> Result<Monomial> {
    leading_term(f, order).map(|(m, _)| m)
}
