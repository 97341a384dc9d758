//! Incremental row echelon form over a field, for rank computations.

use std::collections::BTreeMap;

use crate::field::Coeff;

/// Sparse row: column index -> nonzero entry, sorted by column.
pub type SparseRow<F> = BTreeMap<usize, F>;

/// Rows in echelon form keyed by pivot column; every stored row has pivot entry 1.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Coeff> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    /// Reduces `row` against the stored pivots; stores it if it is independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow<F>) -> bool {
        loop {
            let Some((&col, lead)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = lead.clone();
                    for (c, v) in pivot {
                        let delta = v.mul(&factor);
                        let updated = match row.get(c) {
                            Some(old) => old.sub(&delta),
                            None => delta.neg(),
                        };
                        if updated.is_zero() {
                            row.remove(c);
                        } else {
                            row.insert(*c, updated);
                        }
                    }
                }
                None => {
                    let inv = lead.inv().expect("nonzero lead");
                    for v in row.values_mut() {
                        *v = v.mul(&inv);
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }
}

/// Rank of a list of sparse rows with `ncols` columns.
pub fn rank<F: Coeff>(ncols: usize, rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        if e.is_full() {
            break;
        }
        e.insert(r);
    }
    e.rank()
}
