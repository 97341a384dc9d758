mod common;

use common::choose;
use itertools::Itertools;
use monocurve_core::curve::{
    antidiagonal_monomial, block, cal_j, column_selections, composition_ideal, f_poly, lambda_set, mono_i, mono_j,
    pure_powers, tvars, var_power, weighted_compositions,
};
use monocurve_core::field::rat;
use monocurve_core::poly::substitute_parametrization;
use monocurve_core::sset::{composition_degree, s_count, s_products, s_set, spanning_monomials};
use monocurve_core::{colon_witness, CurveParams, Error, Grevelex, Monomial, MonomialIdeal, Polynomial};

#[test]
fn rendered_examples() {
    assert_eq!(mono_i(3, 2).unwrap().render(), "x3^3, x2^2*x3^2, x2^3*x3, x2^4");
    assert_eq!(mono_i(2, 5).unwrap().render(), "x2^10");
    assert_eq!(f_poly(3, 1).unwrap().render(&Grevelex, 2), "-x2^2");
    assert!(mono_i(4, 0).unwrap().is_unit());
    assert!(mono_i(4, -3).unwrap().is_unit());
}

#[test]
fn i_n_is_sum_of_products_of_powers() {
    for d in 2..=5 {
        for n in 1..=6u32 {
            let mut acc = MonomialIdeal::zero(tvars(d));
            for a in weighted_compositions(d - 1, n) {
                let mut term = MonomialIdeal::unit(tvars(d));
                for (idx, &ai) in a.parts.iter().enumerate() {
                    term = term.product(&mono_j(d, idx + 1).unwrap().power(ai)).unwrap();
                }
                acc = acc.sum(&term).unwrap();
            }
            assert_eq!(mono_i(d, i64::from(n)).unwrap(), acc, "d = {d}, n = {n}");
        }
    }
}

#[test]
fn length_of_small_cases() {
    for d in 2..=6 {
        assert_eq!(mono_i(d, 1).unwrap().length_quotient().unwrap(), d as u64);
    }
    for n in 1..=10 {
        assert_eq!(mono_i(2, n).unwrap().length_quotient().unwrap(), 2 * n as u64);
    }
    assert_eq!(mono_i(3, 2).unwrap().length_quotient().unwrap(), 9);
}

#[test]
fn j_is_generated_by_antidiagonals() {
    for d in 2..=6 {
        for i in 1..d {
            let anti = MonomialIdeal::minimalize(
                tvars(d),
                column_selections(d, i + 1).iter().map(|c| antidiagonal_monomial(d, c)),
            );
            assert_eq!(mono_j(d, i).unwrap(), anti, "d = {d}, i = {i}");
        }
    }
}

#[test]
fn cal_j_generator_counts() {
    for d in 2..=5 {
        for i in 1..d {
            let gens = cal_j(d, i).unwrap();
            assert!(gens.gens().len() as i64 <= choose(d as i64, i as i64 + 1));
            assert!(gens.is_homogeneous());
        }
    }
}

#[test]
fn colon_by_pure_powers() {
    for d in 2..=6 {
        for n in 1..=7i64 {
            let i_n = mono_i(d, n).unwrap();
            for i in 2..=d {
                let colon = i_n.colon_monomial(&var_power(d, i, i as u16)).unwrap();
                let expected = mono_i(d, n - i as i64 + 1).unwrap();
                assert_eq!(colon, expected, "d = {d}, n = {n}, i = {i}");
                if n < i as i64 {
                    assert!(colon.is_unit());
                }
            }
        }
    }
}

#[test]
fn pure_powers_shape() {
    assert!(pure_powers(4, 0).unwrap().is_zero());
    assert_eq!(pure_powers(4, 3).unwrap().render(), "x2^2, x3^3, x4^4");
    assert!(pure_powers(4, 4).is_err());
}

#[test]
fn minors_vanish_on_the_curve() {
    for (d, m) in [(3, 1), (3, 2), (4, 1), (4, 3), (5, 2)] {
        let x = monocurve_core::curve::build_matrix(&CurveParams::new(d, m).unwrap(), false).unwrap();
        for cols in column_selections(d, 2) {
            for rows in (0..d).combinations(2) {
                let minor = x.submatrix(&rows, &cols.iter().map(|c| c - 1).collect_vec()).unwrap().determinant();
                assert!(substitute_parametrization(&minor, d, m).unwrap().is_zero(), "d = {d}, m = {m}");
            }
        }
    }
}

#[test]
fn parametrization_examples() {
    let x = |v: usize| Polynomial::monomial(Monomial::var(3, v), rat(1));
    let f = &(&x(0) * &x(2)) - &(&x(1) * &x(1));
    assert!(substitute_parametrization(&f, 3, 1).unwrap().is_zero());
    assert_eq!(substitute_parametrization(&x(1), 3, 1).unwrap().to_string(), "t^4");
    assert_eq!(substitute_parametrization(&x(0), 3, 2).unwrap().to_string(), "t^3");
    assert!(matches!(CurveParams::new(3, 3), Err(Error::Precondition(_))));
}

#[test]
fn witnesses_exhaustive() {
    let mut cases = 0;
    for d in 2..=5 {
        let nv = tvars(d);
        for n in 1..=4u32 {
            let target_cache: Vec<MonomialIdeal> = (0..=n as i64).map(|k| mono_i(d, k).unwrap()).collect();
            for a in weighted_compositions(d - 1, n) {
                let choices: Vec<Vec<Monomial>> = a
                    .parts
                    .iter()
                    .enumerate()
                    .map(|(idx, &aj)| block(d, idx + 2, d, (idx as u32 + 2) * aj))
                    .collect();
                for m in choices.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
                    let full = m.iter().fold(Monomial::one(nv), |acc, x| acc.mul(x));
                    for i in 2..=d {
                        let w = colon_witness(d, &m, &a.parts, i).unwrap();
                        let xi = var_power(d, i, 1);
                        let v = u32::from(full.exponent(i - 2)).min(i as u32);
                        assert_eq!(w.g, v.min(m[..i - 1].iter().map(|x| u32::from(x.exponent(i - 2))).sum()));
                        let reduced = full.div(&xi.pow(w.g)).unwrap();
                        let rebuilt = w.mprime.iter().chain(&m[i - 1..]).fold(w.n, |acc, x| acc.mul(x));
                        assert_eq!(reduced, rebuilt);
                        for (idx, mp) in w.mprime.iter().enumerate() {
                            let mut parts = vec![0; idx + 1];
                            parts[idx] = w.aprime[idx];
                            assert!(composition_ideal(d, &parts).unwrap().contains(mp));
                        }
                        let level = (i64::from(n) - i as i64 + 1).max(0) as usize;
                        assert!(target_cache[level].contains(&reduced), "d = {d}, a = {:?}, i = {i}", a.parts);
                        cases += 1;
                    }
                }
            }
        }
    }
    assert!(cases > 1000);
}

#[test]
fn s_sets_have_generator_degree() {
    for d in 2..=6 {
        for j in 1..d {
            for n in 1..=7 {
                for a in lambda_set(j, n) {
                    let prod = composition_ideal(d, &a.parts).unwrap();
                    for s in s_products(d, &a).unwrap() {
                        assert_eq!(s.degree(), composition_degree(&a));
                        assert!(prod.contains(&s));
                    }
                }
            }
        }
    }
}

#[test]
fn s_set_counts() {
    for d in 2..=6 {
        for j in 1..d {
            for n in 2..=12u32 {
                assert_eq!(s_count(d, j, n).unwrap() as i64, choose(i64::from(n) - 2, j as i64 - 1), "d = {d}, j = {j}, n = {n}");
            }
        }
    }
}

#[test]
fn spanning_and_reduction() {
    for d in 2..=5 {
        for n in 2..=7i64 {
            let colon = mono_i(d, n).unwrap().colon_monomial(&var_power(d, d, 1)).unwrap();
            let prev = mono_i(d, n - 1).unwrap();
            assert!(prev.contains_ideal(&colon));
            let listed = spanning_monomials(d, n as u32).unwrap();
            let span = colon.sum(&MonomialIdeal::minimalize(tvars(d), listed)).unwrap();
            assert_eq!(span, prev, "d = {d}, n = {n}");
            let gap = colon.length_quotient().unwrap() - prev.length_quotient().unwrap();
            assert_eq!(gap as i64, choose(n + d as i64 - 3, d as i64 - 2));
        }
    }
}

#[test]
fn s_set_errors() {
    assert!(matches!(s_set(3, &[1, 0]), Err(Error::Precondition(_))));
    assert!(matches!(s_set(3, &[]), Err(Error::Range(_))));
}
