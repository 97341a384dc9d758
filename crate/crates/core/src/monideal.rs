//! Monomial ideals of `T'` given by their minimal generators.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::{Grevelex, MonomialOrder};

/// A monomial ideal stored by its (unique) minimal generating set.
///
/// Generators are kept sorted in the structural monomial order so that
/// equality of ideals is equality of values. The zero ideal has no generators,
/// the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal { nvars: m.nvars(), gens: vec![m] }
    }

    /// The ideal generated by `gens`, with every generator divisible by another removed.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|g| g.nvars() == nvars));
        all.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        // only a generator of strictly smaller degree can properly divide another
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        let mut lower_end = 0;
        let mut current_degree = None;
        for g in all {
            if current_degree != Some(g.degree()) {
                current_degree = Some(g.degree());
                lower_end = kept.len();
            }
            if !kept[..lower_end].iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_unstable();
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Structural(format!(
                "monomial ideals in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(Self::minimalize(self.nvars, self.gens.iter().chain(&other.gens).copied()))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut prods = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.insert(a.mul(b));
            }
        }
        Ok(Self::minimalize(self.nvars, prods))
    }

    /// `self^e`; the zeroth power is the unit ideal.
    pub fn power(&self, e: u32) -> Self {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..e {
            acc = acc.product(self).expect("same arity");
        }
        acc
    }

    /// Sum of a family; the empty sum is the zero ideal.
    pub fn sum_all<'a>(nvars: usize, ideals: impl IntoIterator<Item = &'a MonomialIdeal>) -> Result<Self> {
        let mut gens = Vec::new();
        for i in ideals {
            if i.nvars != nvars {
                return Err(Error::Structural("sum of ideals in different rings".into()));
            }
            gens.extend_from_slice(&i.gens);
        }
        Ok(Self::minimalize(nvars, gens))
    }

    /// Product of a family; the empty product is the unit ideal.
    pub fn product_all<'a>(nvars: usize, ideals: impl IntoIterator<Item = &'a MonomialIdeal>) -> Result<Self> {
        let mut acc = Self::unit(nvars);
        for i in ideals {
            acc = acc.product(i)?;
        }
        Ok(acc)
    }

    /// `(I : m)`, generated by `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<Self> {
        if m.nvars() != self.nvars {
            return Err(Error::Structural("colon by a monomial of different arity".into()));
        }
        Ok(Self::minimalize(
            self.nvars,
            self.gens.iter().map(|g| g.div(&g.gcd(m)).expect("gcd divides")),
        ))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut lcms = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                lcms.insert(a.lcm(b));
            }
        }
        Ok(Self::minimalize(self.nvars, lcms))
    }

    /// `(I : J)` as the intersection of `(I : g)` over the generators of `J`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut gens = other.gens.iter();
        let first = gens
            .next()
            .ok_or_else(|| Error::Domain("colon by the zero ideal".into()))?;
        let mut acc = self.colon_monomial(first)?;
        for g in gens {
            acc = acc.intersection(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (both sides are minimal, so this is generator equality).
    pub fn equals(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// True when every variable has a pure power among the generators.
    pub fn is_artinian(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let mut seen = vec![false; self.nvars];
        for g in &self.gens {
            if let Some(v) = g.pure_power_var() {
                seen[v] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Standard monomials (monomials outside `I`) grouped by degree, degrees `0..=max_degree`.
    ///
    /// Each monomial of degree `e + 1` is produced from exactly one standard monomial of
    /// degree `e` by multiplying with a variable at or after its last support position.
    pub fn standard_monomials_by_degree(&self, max_degree: Option<u32>) -> Vec<Vec<Monomial>> {
        let mut levels = Vec::new();
        let one = Monomial::one(self.nvars);
        if self.contains(&one) {
            return levels;
        }
        let mut level = vec![one];
        loop {
            let next_degree = levels.len() as u32 + 1;
            let mut next = Vec::new();
            for s in &level {
                let start = s.support().last().unwrap_or(0);
                for v in start..self.nvars {
                    let m = s.mul(&Monomial::var(self.nvars, v));
                    if !self.contains(&m) {
                        next.push(m);
                    }
                }
            }
            levels.push(level);
            if next.is_empty() || max_degree.is_some_and(|d| next_degree > d) {
                break;
            }
            level = next;
        }
        levels
    }

    /// All standard monomials; requires an Artinian ideal.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        self.require_artinian()?;
        Ok(self.standard_monomials_by_degree(None).into_iter().flatten().collect())
    }

    /// `dim_k T'/I`, by enumerating the staircase level by level.
    pub fn length_quotient(&self) -> Result<u64> {
        self.require_artinian()?;
        Ok(self
            .standard_monomials_by_degree(None)
            .iter()
            .map(|l| l.len() as u64)
            .sum())
    }

    /// Number of standard monomials in each degree `0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<u64> {
        let mut counts: Vec<u64> = self
            .standard_monomials_by_degree(Some(max_degree))
            .iter()
            .map(|l| l.len() as u64)
            .collect();
        counts.resize(max_degree as usize + 1, 0);
        counts
    }

    fn require_artinian(&self) -> Result<()> {
        if self.is_artinian() {
            Ok(())
        } else {
            Err(Error::Domain(format!("ideal ({self}) is not Artinian")))
        }
    }

    /// Generators sorted by degree, and within a degree descending under `order`.
    pub fn sorted_gens<O: MonomialOrder + ?Sized>(&self, order: &O) -> Vec<Monomial> {
        let mut g = self.gens.clone();
        g.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(b, a)));
        g
    }

    /// Comma-joined generator list in printing order, variables named from `x2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.sorted_gens(&Grevelex).iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
    }

    pub fn render_gens(&self) -> Vec<String> {
        self.sorted_gens(&Grevelex).iter().map(|m| m.to_string()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
