//! Square matrices of polynomials and their determinants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poly::Polynomial;

/// Square matrix with polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F> {
    size: usize,
    nvars: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Coeff> PolyMatrix<F> {
    pub fn from_rows(rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Structural("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Structural("matrix is not square".into()));
        }
        let nvars = rows[0][0].nvars();
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.nvars() != nvars) {
            return Err(Error::Structural("entries in different rings".into()));
        }
        Ok(PolyMatrix { size, nvars, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Polynomial<F> {
        &self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial<F>>> {
        self.entries.chunks(self.size).map(<[_]>::to_vec).collect()
    }

    /// Submatrix on the given 0-based rows and columns (equal counts).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::Structural("submatrix selection is not square".into()));
        }
        Self::from_rows(
            rows.iter()
                .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
                .collect(),
        )
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.size {
            self.entries.swap(a * self.size + c, b * self.size + c);
        }
    }

    /// Product of the entries with `row + col = size - 1` (0-based).
    pub fn antidiagonal_product(&self) -> Polynomial<F> {
        let mut acc = self.get(0, self.size - 1).clone();
        for r in 1..self.size {
            acc = &acc * self.get(r, self.size - 1 - r);
        }
        acc
    }

    /// Laplace expansion along successive rows, memoized on the set of unused columns.
    pub fn determinant(&self) -> Polynomial<F> {
        let mut memo: HashMap<u64, Polynomial<F>> = HashMap::new();
        let all = if self.size == 64 { u64::MAX } else { (1u64 << self.size) - 1 };
        self.minor_from(all, &mut memo)
    }

    // Determinant of the rows size - |cols| .. size restricted to the column set `cols`.
    fn minor_from(&self, cols: u64, memo: &mut HashMap<u64, Polynomial<F>>) -> Polynomial<F> {
        let k = cols.count_ones() as usize;
        if k == 0 {
            return unit_like(self);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = self.size - k;
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_negative = false;
        for c in 0..self.size {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let sub = self.minor_from(cols & !(1 << c), memo);
                let term = entry * &sub;
                acc = if sign_negative { &acc - &term } else { &acc + &term };
            }
            sign_negative = !sign_negative;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

// The constant polynomial 1, built without a free-standing field constructor.
fn unit_like<F: Coeff>(m: &PolyMatrix<F>) -> Polynomial<F> {
    let c = m
        .entries
        .iter()
        .flat_map(|e| e.terms())
        .next()
        .map(|(_, c)| c.one_like());
    match c {
        Some(one) => Polynomial::monomial(crate::monomial::Monomial::one(m.nvars), one),
        // an all-zero matrix never reaches the empty minor with a nonzero multiplier
        None => Polynomial::zero(m.nvars),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};
    use crate::monomial::Monomial;

    fn x(nvars: usize, i: usize) -> Polynomial<Rational> {
        Polynomial::monomial(Monomial::var(nvars, i), rat(1))
    }

    #[test]
    fn one_by_one() {
        let m = PolyMatrix::from_rows(vec![vec![x(3, 1)]]).unwrap();
        assert_eq!(m.determinant(), x(3, 1));
    }

    #[test]
    fn two_by_two() {
        let (x2, x3, x4) = (x(3, 0), x(3, 1), x(3, 2));
        let m = PolyMatrix::from_rows(vec![vec![x2.clone(), x3.clone()], vec![x3.clone(), x4.clone()]]).unwrap();
        assert_eq!(m.determinant(), &(&x2 * &x4) - &(&x3 * &x3));
    }

    #[test]
    fn non_square_rejected() {
        let r = PolyMatrix::from_rows(vec![vec![x(2, 0), x(2, 1)], vec![x(2, 0)]]);
        assert!(matches!(r, Err(Error::Structural(_))));
    }

    #[test]
    fn antidiagonal() {
        let (a, b) = (x(2, 0), x(2, 1));
        let m = PolyMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![a.clone(), a.clone()]]).unwrap();
        assert_eq!(m.antidiagonal_product(), &b * &a);
    }
}
