//! Seeded property checks shared by the integration tests and the acceptance target.
#![allow(dead_code)]

use lieherm::complex_structures::{build_nonregular_q, build_sl3_family, sl2_product_structure, ComplexStructure};
use lieherm::exterior::{Coframe, ExtForm};
use lieherm::flag::{dbeta, wedge_power_topform, WeightCombo};
use lieherm::lie::{Chevalley, LieAlgebra};
use lieherm::metrics::{is_p_kahler_closed, metric_report, HermMetric};
use lieherm::numeric::{rat, ExactMatrix, Rational, Vector, GQ};
use lieherm::positivity::{power_semidefiniteness, volume_unit, PowerClass};
use lieherm::real_forms::RealForms;
use lieherm::scenarios::sl3_subalgebra;
use num_traits::{One, Signed};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub const CASES: u32 = 64;

pub fn runner(cases: u32, seed: u8) -> TestRunner {
    let cfg = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(cfg, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

pub fn small_gq() -> impl Strategy<Value = GQ> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, d)| GQ::new(rat(a, d), rat(b, d)))
}

fn vector_of(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(small_gq(), dim).prop_map(|v| Vector::from_dense(&v))
}

/// Pool of integrable structures used by the form-level properties.
pub fn structure(k: usize, re: i64, im: i64) -> ComplexStructure {
    match k % 5 {
        0 => build_sl3_family(&GQ::new(rat(re, 3), rat(im, 3))).expect("|λ| < 1"),
        1 => build_nonregular_q(2).expect("m = 2").1,
        2 => sl2_product_structure(2).expect("n = 2"),
        3 => sl2_product_structure(3).expect("n = 3"),
        _ => sl3_subalgebra(3).expect("m = 3"),
    }
}

fn random_form(n: usize, terms: &[(u64, GQ)]) -> ExtForm {
    let bits = 2 * n as u32;
    let mut f = ExtForm::zero(n);
    for (m, c) in terms {
        f.add_term(m % (1u64 << bits), c.clone());
    }
    f
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `d² = 0` and the graded Leibniz rule on Lie algebra coframes.
pub fn prop_d_squared(cases: u32, seed: u8) -> Result<(), String> {
    let strat = (0usize..5, -2i64..=2, -2i64..=2, any::<u64>(), small_gq(), proptest::collection::vec((any::<u64>(), small_gq()), 1..5));
    runner(cases, seed)
        .run(&strat, |(k, re, im, mono, c, terms)| {
            let cs = structure(k, re, im);
            let cf = Coframe::from_structure(&cs);
            let n = cf.n();
            let g = random_form(n, &terms);
            prop_assert!(cf.d(&cf.d(&g)).is_zero());
            let f = random_form(n, &[(mono, c)]);
            let deg = f.terms().next().map(|(m, _)| m.count_ones()).unwrap_or(0);
            let lhs = cf.d(&f.wedge(&g).unwrap());
            let sign = if deg % 2 == 0 { GQ::one() } else { -GQ::one() };
            let rhs = cf.d(&f).wedge(&g).unwrap().add(&f.wedge(&cf.d(&g)).unwrap().scale(&sign)).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(err)
}

/// Jacobi identity on random triples in sl(N), gl(N) and the I_λ algebras.
pub fn prop_jacobi(cases: u32, seed: u8) -> Result<(), String> {
    let mut algebras: Vec<LieAlgebra> = Vec::new();
    for n in 2..=4 {
        algebras.push(Chevalley::sl(n).unwrap().algebra.as_ref().clone());
        algebras.push(Chevalley::gl(n).unwrap().algebra.as_ref().clone());
    }
    let dims: Vec<usize> = algebras.iter().map(LieAlgebra::dim).chain([8]).collect();
    let strat = (0usize..7).prop_flat_map(move |k| {
        let d = dims[k];
        (Just(k), -2i64..=2, -2i64..=2, vector_of(d), vector_of(d), vector_of(d))
    });
    runner(cases, seed)
        .run(&strat, |(k, re, im, x, y, z)| {
            let alg = if k == 6 {
                build_sl3_family(&GQ::new(rat(re, 3), rat(im, 3))).unwrap().algebra().as_ref().clone()
            } else {
                algebras[k].clone()
            };
            let t1 = alg.bracket(&x, &alg.bracket(&y, &z));
            let t2 = alg.bracket(&y, &alg.bracket(&z, &x));
            let t3 = alg.bracket(&z, &alg.bracket(&x, &y));
            prop_assert!(t1.add(&t2).add(&t3).is_zero());
            prop_assert!(alg.bracket(&x, &y).add(&alg.bracket(&y, &x)).is_zero());
            Ok(())
        })
        .map_err(err)
}

/// σ and τ are involutive antilinear automorphisms.
pub fn prop_sigma_involution(cases: u32, seed: u8) -> Result<(), String> {
    let forms: Vec<RealForms> = (2..=5).map(|n| RealForms::for_rank(n).unwrap()).collect();
    let dims: Vec<usize> = forms.iter().map(|f| f.chevalley.dim()).collect();
    let strat = (0usize..4).prop_flat_map(move |k| (Just(k), vector_of(dims[k]), vector_of(dims[k]), small_gq()));
    runner(cases, seed)
        .run(&strat, |(k, x, y, c)| {
            let rf = &forms[k];
            let alg = &rf.chevalley.algebra;
            for inv in [&rf.sigma, &rf.tau] {
                prop_assert_eq!(inv.apply(&inv.apply(&x)), x.clone());
                prop_assert_eq!(inv.apply(&alg.bracket(&x, &y)), alg.bracket(&inv.apply(&x), &inv.apply(&y)));
                prop_assert_eq!(inv.apply(&x.scale(&c)), inv.apply(&x).scale(&c.conj()));
            }
            Ok(())
        })
        .map_err(err)
}

fn hermitian(n: usize, diag: &[i64], off: &[GQ]) -> ExactMatrix {
    let mut h = ExactMatrix::zeros(n, n);
    let mut it = off.iter();
    for r in 0..n {
        h.set(r, r, GQ::from_int(diag[r]));
        for c in r + 1..n {
            let z = it.next().cloned().unwrap_or_else(GQ::zero);
            h.set(r, c, z.clone());
            h.set(c, r, z.conj());
        }
    }
    h
}

/// Invertible `P` as (unit lower) × (upper with nonzero diagonal).
fn invertible(n: usize, diag: &[i64], entries: &[GQ]) -> ExactMatrix {
    let mut l = ExactMatrix::identity(n);
    let mut u = ExactMatrix::zeros(n, n);
    let mut it = entries.iter().cycle();
    for r in 0..n {
        u.set(r, r, GQ::from_int(if diag[r] == 0 { 1 } else { diag[r] }));
        for c in 0..n {
            if c < r {
                l.set(r, c, it.next().unwrap().clone());
            } else if c > r {
                u.set(r, c, it.next().unwrap().clone());
            }
        }
    }
    l.mul(&u).unwrap()
}

/// Signature of `P* H P` equals that of `H`.
pub fn prop_signature_congruence(cases: u32, seed: u8) -> Result<(), String> {
    let strat = (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(-3i64..=3, n),
            proptest::collection::vec(small_gq(), n * n),
            proptest::collection::vec(-3i64..=3, n),
            proptest::collection::vec(small_gq(), n * n),
        )
    });
    runner(cases, seed)
        .run(&strat, |(n, d, off, pd, pe)| {
            let h = hermitian(n, &d, &off);
            let p = invertible(n, &pd, &pe);
            let c = p.adjoint().mul(&h).unwrap().mul(&p).unwrap();
            prop_assert!(c.is_hermitian());
            prop_assert_eq!(h.hermitian_signature().unwrap(), c.hermitian_signature().unwrap());
            Ok(())
        })
        .map_err(err)
}

fn diag_form(n: usize, d: &[Rational]) -> ExtForm {
    d.iter().enumerate().fold(ExtForm::zero(n), |acc, (k, c)| {
        acc.add(&ExtForm::eta_eta_bar(n, k, k).scale(&GQ::i().scale(c))).unwrap()
    })
}

fn unit_of(n: usize, set: u64) -> (u64, GQ) {
    let idx: Vec<usize> = (0..n).filter(|k| set >> k & 1 == 1).collect();
    let f = idx.iter().fold(ExtForm::one(n), |acc, &k| acc.wedge(&ExtForm::eta_eta_bar(n, k, k).scale(&GQ::i())).unwrap());
    let t = f.terms().next().map(|(m, c)| (m, c.clone())).expect("nonzero");
    t
}

/// Subset-product classification of `F^j` equals the sign pattern of the expanded power,
/// and the top-degree product of diagonal forms equals the expanded wedge.
pub fn prop_wedge_power(cases: u32, seed: u8) -> Result<(), String> {
    let strat = (1usize..=5).prop_flat_map(|n| (Just(n), proptest::collection::vec(-3i64..=3, n), 1..=n));
    runner(cases, seed)
        .run(&strat, |(n, d, j)| {
            let d: Vec<Rational> = d.into_iter().map(|x| rat(x, 1)).collect();
            let rep = power_semidefiniteness(&d, j).unwrap();
            let pw = diag_form(n, &d).power(j);
            let mut fact = Rational::one();
            for k in 1..=j as i64 {
                fact *= rat(k, 1);
            }
            let (mut pos, mut neg) = (0u128, 0u128);
            for set in 0u64..(1 << n) {
                if set.count_ones() as usize != j {
                    continue;
                }
                let (mask, u) = unit_of(n, set);
                let ratio = pw.coefficient(mask).checked_div(&u).unwrap();
                prop_assert!(ratio.is_real());
                let prod: Rational = (0..n).filter(|k| set >> k & 1 == 1).map(|k| d[k].clone()).product();
                prop_assert_eq!(ratio, GQ::real(&fact * &prod));
                if prod.is_positive() {
                    pos += 1;
                } else if prod.is_negative() {
                    neg += 1;
                }
            }
            prop_assert_eq!(pw.len() as u128, pos + neg);
            let want = match (pos > 0, neg > 0) {
                (true, false) => PowerClass::PositiveSemiDef,
                (false, true) => PowerClass::NegativeSemiDef,
                (false, false) => PowerClass::Zero,
                (true, true) => PowerClass::Indefinite,
            };
            prop_assert_eq!(rep.classification, want);
            prop_assert_eq!((rep.positive_products, rep.negative_products), (pos, neg));
            Ok(())
        })
        .map_err(err)?;

    let strat = (3usize..=4).prop_flat_map(|nn| {
        (Just(nn), proptest::collection::vec(-3i64..=3, nn - 1), proptest::collection::vec(-3i64..=3, nn - 1), 0..=nn * (nn - 1) / 2)
    });
    runner(cases, seed.wrapping_add(1))
        .run(&strat, |(nn, a, b, e1)| {
            let f1 = dbeta(&WeightCombo::from_ints(&a));
            let f2 = dbeta(&WeightCombo::from_ints(&b));
            let m = f1.generators();
            let e2 = m - e1;
            let got = wedge_power_topform(&[(f1.clone(), e1), (f2.clone(), e2)]).unwrap();
            let oracle = diag_form(m, &f1.coeffs).power(e1).wedge(&diag_form(m, &f2.coeffs).power(e2)).unwrap();
            let top = oracle.top_coefficient().checked_div(&volume_unit(m)).unwrap();
            prop_assert_eq!(GQ::real(got), top);
            let _ = nn;
            Ok(())
        })
        .map_err(err)
}

fn positive_metric(n: usize, diag: &[i64], entries: &[GQ]) -> HermMetric {
    // P* D P with D > 0 and P unipotent upper triangular
    let mut p = ExactMatrix::identity(n);
    let mut it = entries.iter().cycle();
    for r in 0..n {
        for c in r + 1..n {
            p.set(r, c, it.next().unwrap().clone());
        }
    }
    let mut d = ExactMatrix::zeros(n, n);
    for r in 0..n {
        d.set(r, r, GQ::from_int(diag[r % diag.len()].abs() + 1));
    }
    HermMetric::new(p.adjoint().mul(&d).unwrap().mul(&p).unwrap()).expect("positive definite")
}

/// Implication chain in every produced metric report.
pub fn prop_metric_implications(cases: u32, seed: u8) -> Result<(), String> {
    let strat = (
        0usize..5,
        -2i64..=2,
        -2i64..=2,
        proptest::collection::vec(0i64..=4, 4),
        proptest::collection::vec(small_gq(), 6),
        any::<bool>(),
    );
    runner(cases, seed)
        .run(&strat, |(k, re, im, d, off, diagonal)| {
            let cs = structure(k, re, im);
            let cf = Coframe::from_structure(&cs);
            let n = cf.n();
            let metric = if diagonal { positive_metric(n, &d, &[GQ::zero()]) } else { positive_metric(n, &d, &off) };
            let rep = metric_report(&cf, &metric).unwrap();
            prop_assert!(rep.implications_hold(n));
            prop_assert_eq!(rep.balanced, is_p_kahler_closed(&cf, &metric.fundamental_form(), n - 1));
            Ok(())
        })
        .map_err(err)
}

/// Two-step nilpotent coframe: `dη⁰ = dη¹ = 0`, `dη²` of type (1,1).
pub fn nilpotent_model(c: &[GQ]) -> Coframe {
    let n = 3;
    let mut d2 = ExtForm::zero(n);
    for (idx, (j, k)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        d2 = d2.add(&ExtForm::eta_eta_bar(n, j, k).scale(&c[idx])).unwrap();
    }
    Coframe::from_differentials(vec![ExtForm::zero(n), ExtForm::zero(n), d2]).unwrap()
}

/// `−dd^c(β∧Jβ) = (dβ)² + (dJβ)²` for `β = Re η²`.
pub fn prop_ddc_convention(cases: u32, seed: u8) -> Result<(), String> {
    let strat = proptest::collection::vec(small_gq(), 4);
    runner(cases, seed)
        .run(&strat, |c| {
            let cf = nilpotent_model(&c);
            let half = GQ::from_frac(1, 2);
            let beta = cf.eta(2).add(&cf.eta_bar(2)).unwrap().scale(&half);
            let jb = beta.apply_j();
            let lhs = cf.ddc(&beta.wedge(&jb).unwrap()).neg();
            let db = cf.d(&beta);
            let djb = cf.d(&jb);
            let rhs = db.wedge(&db).unwrap().add(&djb.wedge(&djb).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(err)
}

pub fn all_properties(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    vec![
        ("d^2 = 0 and Leibniz", prop_d_squared(cases, 11)),
        ("Jacobi", prop_jacobi(cases, 12)),
        ("sigma^2 = id", prop_sigma_involution(cases, 13)),
        ("signature under congruence", prop_signature_congruence(cases, 14)),
        ("wedge-power subset products", prop_wedge_power(cases, 15)),
        ("metric report implications", prop_metric_implications(cases, 16)),
        ("ddc convention identity", prop_ddc_convention(cases, 17)),
    ]
}
