//! Buchberger's algorithm, leading ideals, and quotient lengths.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree, ties broken
//! by the monomial order and then by index) and pruned with the Gebauer-Moeller
//! criteria. Input generators are fed in by degree alongside the pairs, which
//! keeps the working basis small for homogeneous inputs. The linear-algebra
//! [`hilbert_oracle`] computes the same lengths without any Groebner basis.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Coeff, Fp, Rational};
use crate::linalg::{Echelon, SparseRow};
use crate::monideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// An ideal given by a list of nonzero generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal<F> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
}

impl<F: Coeff> PolyIdeal<F> {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::Structural(format!(
                "generator in {} variables added to an ideal in {nvars}",
                g.nvars()
            )));
        }
        Ok(PolyIdeal { nvars, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generator lists concatenated.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        Self::new(self.nvars, self.gens.iter().cloned().chain(extra))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }
}

impl PolyIdeal<Rational> {
    pub fn to_prime(&self, p: u32) -> Result<PolyIdeal<Fp>> {
        PolyIdeal::new(self.nvars, self.gens.iter().map(|g| g.to_prime(p)).collect::<Result<Vec<_>>>()?)
    }
}

/// A Groebner basis together with the leading monomials of its elements.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F> {
    nvars: usize,
    elements: Vec<Polynomial<F>>,
    leading: Vec<Monomial>,
    order: &'static str,
    reduced: bool,
}

impl<F: Coeff> GroebnerBasis<F> {
    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn order_name(&self) -> &'static str {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.nvars, self.leading.iter().copied())
    }
}

// Terms sorted descending under the active order.
type Terms<F> = Vec<(Monomial, F)>;

fn sorted<F: Coeff, O: MonomialOrder + ?Sized>(f: &Polynomial<F>, order: &O) -> Terms<F> {
    f.sorted_terms(order)
}

fn to_poly<F: Coeff>(nvars: usize, t: Terms<F>) -> Polynomial<F> {
    Polynomial::from_terms(nvars, t)
}

/// `f - c * u * g` for sorted term lists; `u * g` stays sorted since orders are multiplicative.
fn sub_mul<F: Coeff, O: MonomialOrder + ?Sized>(f: &[(Monomial, F)], c: &F, u: &Monomial, g: &[(Monomial, F)], order: &O) -> Terms<F> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() || j < g.len() {
        if j == g.len() {
            out.extend_from_slice(&f[i..]);
            break;
        }
        let gm = g[j].0.mul(u);
        if i == f.len() {
            out.push((gm, g[j].1.mul(c).neg()));
            j += 1;
            continue;
        }
        match order.cmp(&f[i].0, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, g[j].1.mul(c).neg()));
                j += 1;
            }
            Ordering::Equal => {
                let v = f[i].1.sub(&g[j].1.mul(c));
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `f` by monic divisors with the given leading monomials.
fn reduce_terms<F: Coeff, O: MonomialOrder + ?Sized>(
    mut p: Terms<F>,
    divisors: &[&Terms<F>],
    order: &O,
) -> Terms<F> {
    let mut rem: Terms<F> = Vec::new();
    loop {
        let Some((lm, lc)) = p.first().cloned() else {
            return rem;
        };
        match divisors.iter().find(|g| g[0].0.divides(&lm)) {
            Some(g) => {
                let u = lm.div(&g[0].0).expect("divides");
                let c = lc.mul(&g[0].1.inv().expect("nonzero lead"));
                p = sub_mul(&p[1..], &c, &u, &g[1..], order);
            }
            None => {
                rem.push((lm, lc));
                p.remove(0);
            }
        }
    }
}

fn make_monic<F: Coeff>(t: &mut Terms<F>) {
    if let Some(inv) = t.first().and_then(|(_, c)| c.inv()) {
        for (_, c) in t.iter_mut() {
            *c = c.mul(&inv);
        }
    }
}

/// Remainder of multivariate division of `f` by `divisors`: no monomial of the
/// result is divisible by a leading monomial of a divisor.
pub fn normal_form<F: Coeff, O: MonomialOrder + ?Sized>(f: &Polynomial<F>, divisors: &[Polynomial<F>], order: &O) -> Polynomial<F> {
    let sorted_divs: Vec<Terms<F>> = divisors.iter().filter(|g| !g.is_zero()).map(|g| sorted(g, order)).collect();
    let refs: Vec<&Terms<F>> = sorted_divs.iter().collect();
    to_poly(f.nvars(), reduce_terms(sorted(f, order), &refs, order))
}

fn s_poly<F: Coeff, O: MonomialOrder + ?Sized>(f: &Terms<F>, g: &Terms<F>, order: &O) -> Terms<F> {
    let l = f[0].0.lcm(&g[0].0);
    let uf = l.div(&f[0].0).expect("lcm");
    let ug = l.div(&g[0].0).expect("lcm");
    let cf = f[0].1.inv().expect("nonzero lead");
    let cg = g[0].1.inv().expect("nonzero lead");
    let a: Terms<F> = f[1..].iter().map(|(m, c)| (m.mul(&uf), c.mul(&cf))).collect();
    sub_mul(&a, &cg, &ug, &g[1..], order)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder<'o, F, O: ?Sized> {
    order: &'o O,
    polys: Vec<Terms<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'o, F: Coeff, O: MonomialOrder + ?Sized> Builder<'o, F, O> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn reduce(&self, p: Terms<F>) -> Terms<F> {
        let divs: Vec<&Terms<F>> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect();
        reduce_terms(p, &divs, self.order)
    }

    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        a.lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| self.order.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
    }

    fn next_pair_index(&self) -> Option<usize> {
        (0..self.pairs.len()).min_by(|&a, &b| self.pair_cmp(&self.pairs[a], &self.pairs[b]))
    }

    /// Adds a reduced, monic `h` and updates pairs with the Gebauer-Moeller criteria.
    fn insert(&mut self, h: Terms<F>) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        let hlm = *self.lm(hi);

        let mut candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| Pair { i: g, j: hi, lcm: hlm.lcm(self.lm(g)) })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = (!candidates.is_empty()).then(|| candidates.remove(0)) {
            let coprime = hlm.is_coprime(self.lm(p.i));
            let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !hlm.is_coprime(self.lm(p.i)));

        let lms: Vec<Monomial> = self.polys.iter().map(|p| p[0].0).collect();
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm) && hlm.lcm(&lms[p.i]) != p.lcm && hlm.lcm(&lms[p.j]) != p.lcm)
        });
        self.pairs.extend(kept);

        for (active, lm) in self.active[..hi].iter_mut().zip(&lms) {
            if *active && hlm.divides(lm) {
                *active = false;
            }
        }
        self.active[hi] = true;
    }
}

/// Reduced Groebner basis of `ideal` under `order`.
pub fn buchberger<F: Coeff, O: MonomialOrder + ?Sized>(ideal: &PolyIdeal<F>, order: &O) -> GroebnerBasis<F> {
    let nvars = ideal.nvars();
    let mut inputs: Vec<Terms<F>> = ideal.gens().iter().map(|g| sorted(g, order)).collect();
    // stable: equal leading monomials keep their generator order
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut inputs = inputs.into_iter().peekable();

    let mut b = Builder { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    loop {
        let pair_idx = b.next_pair_index();
        let take_input = match (inputs.peek(), pair_idx) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(f), Some(k)) => f[0].0.degree() <= b.pairs[k].lcm.degree(),
        };
        let candidate = if take_input {
            inputs.next().expect("peeked")
        } else {
            let p = b.pairs.swap_remove(pair_idx.expect("pair"));
            s_poly(&b.polys[p.i], &b.polys[p.j], order)
        };
        let mut h = b.reduce(candidate);
        if !h.is_empty() {
            make_monic(&mut h);
            b.insert(h);
        }
    }

    // inter-reduce the surviving elements
    let survivors: Vec<Terms<F>> = b
        .polys
        .iter()
        .zip(&b.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    let mut reduced: Vec<Terms<F>> = Vec::with_capacity(survivors.len());
    for (k, p) in survivors.iter().enumerate() {
        let others: Vec<&Terms<F>> = survivors.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q).collect();
        let head = p[0].clone();
        let mut t = vec![head];
        t.extend(reduce_terms(p[1..].to_vec(), &others, order));
        make_monic(&mut t);
        reduced.push(t);
    }
    reduced.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let leading = reduced.iter().map(|t| t[0].0).collect();
    GroebnerBasis {
        nvars,
        elements: reduced.into_iter().map(|t| to_poly(nvars, t)).collect(),
        leading,
        order: order.name(),
        reduced: true,
    }
}

/// Buchberger's criterion: every S-polynomial reduces to zero modulo `basis`.
pub fn is_groebner_basis<F: Coeff, O: MonomialOrder + ?Sized>(basis: &[Polynomial<F>], order: &O) -> bool {
    let polys: Vec<Terms<F>> = basis.iter().filter(|g| !g.is_zero()).map(|g| sorted(g, order)).collect();
    let refs: Vec<&Terms<F>> = polys.iter().collect();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if !reduce_terms(s_poly(&polys[i], &polys[j], order), &refs, order).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Ideal of leading monomials of `ideal`.
pub fn leading_ideal<F: Coeff, O: MonomialOrder + ?Sized>(ideal: &PolyIdeal<F>, order: &O) -> MonomialIdeal {
    if ideal.is_zero() {
        return MonomialIdeal::zero(ideal.nvars());
    }
    buchberger(ideal, order).leading_ideal()
}

/// `dim_k T'/I`, read off the leading ideal.
pub fn quotient_length_poly<F: Coeff, O: MonomialOrder + ?Sized>(ideal: &PolyIdeal<F>, order: &O) -> Result<u64> {
    leading_ideal(ideal, order).length_quotient()
}

/// `dim_k T'/I` for a homogeneous ideal by linear algebra in each degree, without Groebner bases.
///
/// The degree-`e` count is the number of degree-`e` monomials minus the rank of
/// all products `m * g` of degree `e`. Summation stops after three consecutive
/// zero levels.
pub fn hilbert_oracle<F: Coeff>(ideal: &PolyIdeal<F>) -> Result<u64> {
    if !ideal.is_homogeneous() {
        return Err(Error::Precondition("hilbert_oracle needs homogeneous generators".into()));
    }
    let nvars = ideal.nvars();
    let max_gen_degree = ideal.gens().iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    let cap = 4 * (nvars as u32 + 1) * (max_gen_degree + 1) + 16;
    let mut total = 0u64;
    let mut zero_run = 0;
    for e in 0..=cap {
        let basis = monomials_of_degree(nvars, 0..nvars, e);
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let mut ech: Echelon<F> = Echelon::new(basis.len());
        'gens: for g in ideal.gens() {
            let gd = g.degree().expect("nonzero generator");
            if gd > e {
                continue;
            }
            for u in monomials_of_degree(nvars, 0..nvars, e - gd) {
                if ech.is_full() {
                    break 'gens;
                }
                let row: SparseRow<F> = g.terms().map(|(m, c)| (index[&m.mul(&u)], c.clone())).collect();
                ech.insert(row);
            }
        }
        let count = (basis.len() - ech.rank()) as u64;
        total += count;
        if count == 0 {
            zero_run += 1;
            if zero_run == 3 {
                return Ok(total);
            }
        } else {
            zero_run = 0;
        }
    }
    Err(Error::Domain(format!("quotient still nonzero in degree {cap}; ideal is not Artinian")))
}
