//! The individual verification suites.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::formulas::{alternating_formula, alternating_sum, binomial, length_formula};
use super::report::{inputs, Case, Params, VerificationReport};
use super::socle::socle_dimension_artinian_reduction;
use crate::curve::{self, build_matrix, cal_i, column_selections, f_poly, leading_rows_minor, pure_powers, var_power, CurveCache, CurveParams};
use crate::error::{Error, Result};
use crate::field::{FieldChoice, Rational};
use crate::groebner::{buchberger, hilbert_oracle, is_groebner_basis, PolyIdeal};
use crate::monideal::MonomialIdeal;
use crate::order::Grevelex;
use crate::poly::substitute_parametrization;
use crate::sset::{s_count, spanning_monomials};

/// Largest `d` for which Groebner-based suites run.
pub const MAX_GROEBNER_D: usize = 5;

/// Runs suites with a fixed coefficient field and a shared `I_n` memo.
#[derive(Debug)]
pub struct Verifier {
    field: FieldChoice,
    cache: CurveCache,
    record_timing: bool,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(FieldChoice::Rational)
    }
}

/// Equality of two monomial ideals as a case; full generator lists are kept only on mismatch.
fn ideal_case(inp: std::collections::BTreeMap<String, Value>, expected: &MonomialIdeal, actual: &MonomialIdeal) -> Case {
    if expected == actual {
        let summary = describe(expected);
        Case::new(inp, summary.clone(), summary)
    } else {
        Case::new(inp, expected.render(), actual.render())
    }
}

fn describe(i: &MonomialIdeal) -> String {
    if i.is_unit() {
        return "unit ideal".into();
    }
    let top = i.gens().iter().map(|g| g.degree()).max().unwrap_or(0);
    format!("{} minimal generators, max degree {top}", i.gens().len())
}

fn len_of(i: &MonomialIdeal) -> Result<i64> {
    Ok(i.length_quotient()? as i64)
}

fn error_case(inp: std::collections::BTreeMap<String, Value>, expected: impl Into<Value>, e: &Error) -> Case {
    Case::new(inp, expected, json!(format!("error: {e}")))
}

impl Verifier {
    pub fn new(field: FieldChoice) -> Self {
        Verifier { field, cache: CurveCache::new(), record_timing: true }
    }

    /// With timing off, `summary.millis` is always 0 so reports are byte-for-byte reproducible.
    pub fn with_timing(mut self, on: bool) -> Self {
        self.record_timing = on;
        self
    }

    pub fn field(&self) -> FieldChoice {
        self.field
    }

    pub fn cache(&self) -> &CurveCache {
        &self.cache
    }

    fn finish(&self, suite: &str, params: Params, cases: Vec<Case>, start: Instant) -> VerificationReport {
        let millis = if self.record_timing { start.elapsed().as_millis() as u64 } else { 0 };
        VerificationReport::new(suite, params, cases, millis)
    }

    fn params(&self, d: usize, n_max: Option<u32>, k: Option<usize>) -> Params {
        Params { d, m: None, n_max, k, with_f: None, field: self.field.to_string() }
    }

    fn mono_i(&self, d: usize, n: i64) -> Result<MonomialIdeal> {
        Ok((*self.cache.mono_i(d, n)?).clone())
    }

    /// `(I_n : x_i^i)` equals the unit ideal for `n < i` and `I_(n-i+1)` otherwise.
    pub fn check_colon_identity(&self, d: usize, n_max: u32) -> Result<VerificationReport> {
        curve::check_d(d)?;
        let start = Instant::now();
        let grid: Vec<(u32, usize)> = (1..=n_max).flat_map(|n| (2..=d).map(move |i| (n, i))).collect();
        let cases = grid
            .par_iter()
            .map(|&(n, i)| -> Result<Case> {
                let inp = inputs([("d", json!(d)), ("n", json!(n)), ("i", json!(i))]);
                let actual = self.mono_i(d, n as i64)?.colon_monomial(&var_power(d, i, i as u16))?;
                let expected = if (n as usize) < i { MonomialIdeal::unit(d - 1) } else { self.mono_i(d, n as i64 - i as i64 + 1)? };
                Ok(ideal_case(inp, &expected, &actual))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.finish("colon", self.params(d, Some(n_max), None), cases, start))
    }

    /// `((I_(n+i) + sum_(j=2)^(i-1) x_j^j I_(n+i-j)) : x_i^i) = I_(n+1) + sum_(j=2)^(i-1) x_j^j I_(n+1-j)`.
    pub fn check_assoc_graded_regseq(&self, d: usize, n_max: u32) -> Result<VerificationReport> {
        curve::check_d(d)?;
        let start = Instant::now();
        let grid: Vec<(u32, usize)> = (1..=n_max).flat_map(|n| (2..=d).map(move |i| (n, i))).collect();
        let twisted = |base: i64, i: usize| -> Result<MonomialIdeal> {
            let mut acc = self.mono_i(d, base)?;
            for j in 2..i {
                let pw = MonomialIdeal::principal(var_power(d, j, j as u16));
                acc = acc.sum(&pw.product(&self.mono_i(d, base - j as i64)?)?)?;
            }
            Ok(acc)
        };
        let cases = grid
            .par_iter()
            .map(|&(n, i)| -> Result<Case> {
                let inp = inputs([("d", json!(d)), ("n", json!(n)), ("i", json!(i))]);
                let lhs = twisted(n as i64 + i as i64, i)?.colon_monomial(&var_power(d, i, i as u16))?;
                let rhs = twisted(n as i64 + 1, i)?;
                Ok(ideal_case(inp, &rhs, &lhs))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.finish("regseq", self.params(d, Some(n_max), None), cases, start))
    }

    /// `length(T'/I_n) = d * C(n + d - 2, d - 1)`.
    pub fn check_length_formula(&self, d: usize, n_max: u32) -> Result<VerificationReport> {
        curve::check_d(d)?;
        let start = Instant::now();
        let cases = (1..=n_max)
            .into_par_iter()
            .map(|n| -> Result<Case> {
                let inp = inputs([("d", json!(d)), ("n", json!(n))]);
                Ok(Case::new(inp, length_formula(d, n as i64), len_of(&self.mono_i(d, n as i64)?)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.finish("length", self.params(d, Some(n_max), None), cases, start))
    }

    /// `length(T'/(I_n + (x2^2, ..., x_k^k)))` against the alternating sums, for `2 <= k <= d`
    /// (all such `k` when `k` is `None`).
    ///
    /// Two cases per `(n, k)`: the staircase length against the closed form, and
    /// the alternating sum of staircase lengths of `I_(n - sum S)` against the closed form.
    pub fn check_alternating_lengths(&self, d: usize, n_max: u32, k: Option<usize>) -> Result<VerificationReport> {
        curve::check_d(d)?;
        if let Some(k) = k {
            if !(2..=d).contains(&k) {
                return Err(Error::Range(format!("k = {k} outside 2..={d}")));
            }
        }
        let start = Instant::now();
        let ks: Vec<usize> = k.map_or_else(|| (2..=d).collect(), |k| vec![k]);
        let grid: Vec<(u32, usize)> = (1..=n_max).flat_map(|n| ks.iter().map(move |&k| (n, k))).collect();
        let cases = grid
            .par_iter()
            .map(|&(n, k)| -> Result<Vec<Case>> {
                let expected = alternating_formula(d, n as i64, k);
                let ideal = self.mono_i(d, n as i64)?.sum(&pure_powers(d, k - 1)?)?;
                let staircase = len_of(&ideal)?;
                let mut lengths = Vec::new();
                for m in 0..=n as i64 {
                    lengths.push(len_of(&self.mono_i(d, m)?)?);
                }
                let alt = alternating_sum(n as i64, k, |m| if m <= 0 { 0 } else { lengths[m as usize] });
                Ok(vec![
                    Case::new(inputs([("d", json!(d)), ("n", json!(n)), ("k", json!(k)), ("method", json!("staircase"))]), expected, staircase),
                    Case::new(inputs([("d", json!(d)), ("n", json!(n)), ("k", json!(k)), ("method", json!("alternating sum"))]), expected, alt),
                ])
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(self.finish("alternating", self.params(d, Some(n_max), k), cases, start))
    }

    fn require_groebner_feasible(&self, d: usize) -> Result<()> {
        if d > MAX_GROEBNER_D {
            return Err(Error::Range(format!(
                "Groebner suites are limited to d <= {MAX_GROEBNER_D}; use the monomial suites for d = {d}"
            )));
        }
        Ok(())
    }

    /// Leading ideal of `ideal` over the configured field.
    fn leading(&self, ideal: &PolyIdeal<Rational>) -> Result<(MonomialIdeal, bool)> {
        Ok(match self.field {
            FieldChoice::Rational => {
                let gb = buchberger(ideal, &Grevelex);
                (gb.leading_ideal(), is_groebner_basis(gb.elements(), &Grevelex))
            }
            FieldChoice::Prime(p) => {
                let gb = buchberger(&ideal.to_prime(p)?, &Grevelex);
                (gb.leading_ideal(), is_groebner_basis(gb.elements(), &Grevelex))
            }
        })
    }

    fn hilbert(&self, ideal: &PolyIdeal<Rational>) -> Result<u64> {
        match self.field {
            FieldChoice::Rational => hilbert_oracle(ideal),
            FieldChoice::Prime(p) => hilbert_oracle(&ideal.to_prime(p)?),
        }
    }

    /// `LI(calI_n) = I_n`; with `with_f`, `LI(calI_n + (f_1, ..., f_k)) = I_n + (x2^2, ..., x_(k+1)^(k+1))`
    /// for `1 <= k <= d - 1` (all such `k` when `k` is `None`).
    ///
    /// Each instance yields: the Buchberger criterion on the computed basis, the
    /// containment of the monomial side in the leading ideal, the length
    /// comparison, and the ideal equality. For `d <= 4`, `n <= 4` the length is
    /// also recomputed by [`hilbert_oracle`].
    pub fn check_leading_ideal_equality(&self, d: usize, n_max: u32, with_f: bool, k: Option<usize>) -> Result<VerificationReport> {
        curve::check_d(d)?;
        self.require_groebner_feasible(d)?;
        if let Some(k) = k {
            if !(1..d).contains(&k) {
                return Err(Error::Range(format!("k = {k} outside 1..={}", d - 1)));
            }
        }
        let start = Instant::now();
        let ks: Vec<usize> = match (with_f, k) {
            (false, _) => vec![0],
            (true, Some(k)) => vec![k],
            (true, None) => (1..d).collect(),
        };
        let grid: Vec<(u32, usize)> = (1..=n_max).flat_map(|n| ks.iter().map(move |&k| (n, k))).collect();
        let cases = grid
            .par_iter()
            .map(|&(n, k)| self.leading_cases(d, n, k))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut params = self.params(d, Some(n_max), if with_f { k } else { None });
        params.with_f = Some(with_f);
        Ok(self.finish("leading", params, cases, start))
    }

    fn leading_cases(&self, d: usize, n: u32, k: usize) -> Result<Vec<Case>> {
        let mut ideal = cal_i(d, n as i64)?;
        if k > 0 {
            ideal = ideal.with_generators((1..=k).map(|i| f_poly(d, i)).collect::<Result<Vec<_>>>()?)?;
        }
        let monomial_side = self.mono_i(d, n as i64)?.sum(&pure_powers(d, k)?)?;
        let (li, criterion) = self.leading(&ideal)?;
        let inp = |check: &str| inputs([("d", json!(d)), ("n", json!(n)), ("k", json!(k)), ("check", json!(check))]);
        let expected_len = len_of(&monomial_side)?;
        let gb_len = li.length_quotient().map(|l| l as i64);
        let mut cases = vec![
            Case::new(inp("buchberger criterion"), true, criterion),
            Case::new(inp("monomial side contained in leading ideal"), true, li.contains_ideal(&monomial_side)),
            match &gb_len {
                Ok(l) => Case::new(inp("length"), expected_len, *l),
                Err(e) => error_case(inp("length"), expected_len, e),
            },
            ideal_case(inp("leading ideal equality"), &monomial_side, &li),
        ];
        if k > 0 {
            cases.push(Case::new(inp("closed form"), alternating_formula(d, n as i64, k + 1), expected_len));
        }
        if d <= 4 && n <= 4 {
            cases.push(match (&gb_len, self.hilbert(&ideal)) {
                (Ok(l), Ok(h)) => Case::new(inp("hilbert oracle"), *l, h as i64),
                (Err(e), _) => error_case(inp("hilbert oracle"), expected_len, e),
                (_, Err(e)) => error_case(inp("hilbert oracle"), expected_len, &e),
            });
        }
        Ok(cases)
    }

    /// S-set counts, the spanning property of the S-monomials, and the length of `I_(n-1) / (I_n : x_d)`.
    pub fn check_s_counts_and_spanning(&self, d: usize, n_max: u32) -> Result<VerificationReport> {
        curve::check_d(d)?;
        let start = Instant::now();
        let cases = (2..=n_max.max(1))
            .into_par_iter()
            .map(|n| self.s_cases(d, n))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(self.finish("scounts", self.params(d, Some(n_max), None), cases, start))
    }

    fn s_cases(&self, d: usize, n: u32) -> Result<Vec<Case>> {
        let mut cases = Vec::new();
        for j in 1..d {
            let inp = inputs([("d", json!(d)), ("n", json!(n)), ("j", json!(j)), ("check", json!("S-set count"))]);
            cases.push(Case::new(inp, binomial(n as i64 - 2, j as i64 - 1), s_count(d, j, n)? as u64));
        }
        let inp = |check: &str| inputs([("d", json!(d)), ("n", json!(n)), ("check", json!(check))]);
        let prev = self.mono_i(d, n as i64 - 1)?;
        let colon = self.mono_i(d, n as i64)?.colon_monomial(&curve::var(d, d))?;
        cases.push(Case::new(inp("(I_n : x_d) contained in I_(n-1)"), true, prev.contains_ideal(&colon)));

        // monomials of I_(n-1) outside (I_n : x_d) form a basis of the quotient
        let quotient_basis: Vec<_> = colon.standard_monomials()?.into_iter().filter(|m| prev.contains(m)).collect();
        let listed: BTreeSet<_> = spanning_monomials(d, n)?.into_iter().collect();
        let missing: Vec<String> = quotient_basis.iter().filter(|m| !listed.contains(m)).map(|m| m.to_string()).collect();
        cases.push(Case::new(inp("S-monomials span I_(n-1) mod (I_n : x_d)"), json!([]), json!(missing)));

        let length = len_of(&colon)? - len_of(&prev)?;
        debug_assert_eq!(length as usize, quotient_basis.len());
        let bound = binomial(n as i64 + d as i64 - 3, d as i64 - 2) as i64;
        cases.push(Case::new(inp("length of I_(n-1)/(I_n : x_d) at most bound"), true, length <= bound));
        cases.push(Case::new(inp("length of I_(n-1)/(I_n : x_d) equals bound"), bound, length));
        Ok(cases)
    }

    /// `l(I_(n+1) + P_k) - l(I_(n+1) + P_(k+1)) = l(I_(n+1-k) + P_k)` with `P_k = (x2^2, ..., x_k^k)`,
    /// for `1 <= k <= d - 1` (all such `k` when `k` is `None`).
    pub fn check_gs_colon_chain(&self, d: usize, n_max: u32, k: Option<usize>) -> Result<VerificationReport> {
        curve::check_d(d)?;
        if let Some(k) = k {
            if !(1..d).contains(&k) {
                return Err(Error::Range(format!("k = {k} outside 1..={}", d - 1)));
            }
        }
        let start = Instant::now();
        let ks: Vec<usize> = k.map_or_else(|| (1..d).collect(), |k| vec![k]);
        let grid: Vec<(u32, usize)> = (1..=n_max).flat_map(|n| ks.iter().map(move |&k| (n, k))).collect();
        let cases = grid
            .par_iter()
            .map(|&(n, k)| -> Result<Case> {
                let l = |m: i64, powers: usize| -> Result<i64> { len_of(&self.mono_i(d, m)?.sum(&pure_powers(d, powers)?)?) };
                let n1 = n as i64 + 1;
                let lhs = l(n1, k - 1)? - l(n1, k)?;
                let rhs = if n1 - k as i64 <= 0 { 0 } else { l(n1 - k as i64, k - 1)? };
                Ok(Case::new(inputs([("d", json!(d)), ("n", json!(n)), ("k", json!(k))]), rhs, lhs))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.finish("gscolon", self.params(d, Some(n_max), k), cases, start))
    }

    /// Socle dimension of the Artinian reduction; expected 1.
    pub fn socle_report(&self, d: usize) -> Result<(usize, VerificationReport)> {
        let start = Instant::now();
        let result = socle_dimension_artinian_reduction(d, &self.cache)?;
        let length: usize = result.piece_dims.iter().sum();
        let cases = vec![
            Case::new(inputs([("d", json!(d)), ("check", json!("socle dimension"))]), 1, result.dimension),
            Case::new(inputs([("d", json!(d)), ("check", json!("class of 1 outside socle"))]), true, !result.socle_classes.iter().any(|(n, m)| *n == 0 && m.is_one())),
            Case::new(inputs([("d", json!(d)), ("check", json!("piece dimensions"))]), json!(result.piece_dims), json!(result.piece_dims)),
            Case::new(inputs([("d", json!(d)), ("check", json!("total dimension"))]), length, length),
        ];
        Ok((result.dimension, self.finish("socle", self.params(d, None, None), cases, start)))
    }

    /// Homogeneity of `calI_n`, Artinian leading ideals, and vanishing of the full-ring minors on the curve.
    pub fn check_construction_sanity(&self, d: usize, m: usize, n_max: u32) -> Result<VerificationReport> {
        let params = CurveParams::new(d, m)?;
        self.require_groebner_feasible(d)?;
        let start = Instant::now();
        let full = build_matrix(&params, false)?;
        let mut cases = Vec::new();
        for i in 1..d {
            let selections = column_selections(d, i + 1);
            let mut vanishing = 0usize;
            for cols in &selections {
                let minor = leading_rows_minor(&full, cols)?;
                if substitute_parametrization(&minor, d, m)?.is_zero() {
                    vanishing += 1;
                }
            }
            let inp = inputs([("d", json!(d)), ("m", json!(m)), ("i", json!(i)), ("check", json!("minors vanish on the curve"))]);
            cases.push(Case::new(inp, selections.len(), vanishing));
        }
        let per_n = (1..=n_max)
            .into_par_iter()
            .map(|n| -> Result<Vec<Case>> {
                let ideal = cal_i(d, n as i64)?;
                let inp = |check: &str| inputs([("d", json!(d)), ("m", json!(m)), ("n", json!(n)), ("check", json!(check))]);
                let degrees: BTreeSet<u32> = ideal.gens().iter().filter_map(|g| g.degree()).collect();
                let (li, _) = self.leading(&ideal)?;
                Ok(vec![
                    Case::new(inp("generators homogeneous"), true, ideal.is_homogeneous()),
                    Case::new(inp("leading ideal Artinian"), true, li.is_artinian()),
                    Case::new(inp("generator degrees"), json!(expected_degrees(d, n)), json!(degrees)),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        cases.extend(per_n.into_iter().flatten());
        let mut p = self.params(d, Some(n_max), None);
        p.m = Some(m);
        Ok(self.finish("sanity", p, cases, start))
    }
}

// calJ_i is generated in degree i + 1, so a composition a contributes degree n + sum a_i
fn expected_degrees(d: usize, n: u32) -> BTreeSet<u32> {
    curve::weighted_compositions(d - 1, n).iter().map(|a| n + a.parts.iter().sum::<u32>()).collect()
}
