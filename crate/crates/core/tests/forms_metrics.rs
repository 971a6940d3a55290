mod common;

use lieherm::complex_structures::{
    abelian_structure, build_nonregular_q, build_regular_morimoto, build_sl3_family, nonregular_basis, sl2_product_structure,
    ComplexStructure,
};
use lieherm::exterior::{Coframe, ExtForm};
use lieherm::metrics::{
    self, balanced_basis_sl2m1, balanced_frame_criterion, compact_example, ddc_degenerate_form, frame_coframe,
    highest_root_form, metric_report, obstruction_scan, HermMetric,
};
use lieherm::numeric::{rat, ExactMatrix, Vector, GQ};
use lieherm::positivity::herm_rep;
use lieherm::real_forms::RealForms;
use lieherm::scenarios::{ddbar_pattern, match_orderings, sl3_reference_equations};
use proptest::prelude::*;

fn sl3_coframe() -> Coframe {
    let (_, q) = build_nonregular_q(2).unwrap();
    let found = match_orderings(&q, &sl3_reference_equations()).unwrap().expect("ordering exists");
    Coframe::from_structure(&found.structure)
}

#[test]
fn sl3_equations_match_after_rescaling() {
    let cf = sl3_coframe();
    let target = sl3_reference_equations();
    assert_eq!(cf.structure_equations(), target);
    let da1 = ExtForm::monomial(4, &[1], &[0], GQ::from_int(-3))
        .add(&ExtForm::monomial(4, &[3], &[1], GQ::from_int(-1)))
        .unwrap();
    assert_eq!(cf.d_generator(1), &da1);
}

#[test]
fn sl3_ddbar_values_agree_with_displayed_equations() {
    // independent oracle: the coframe defined by the displayed equations alone
    let oracle = Coframe::from_differentials(sl3_reference_equations()).unwrap();
    let ours = sl3_coframe();
    let a11 = ExtForm::eta_eta_bar(4, 1, 1);
    let a0011 = ExtForm::eta_eta_bar(4, 0, 0).wedge(&a11).unwrap();
    assert_eq!(ours.del_delbar(&a11), oracle.del_delbar(&a11));
    assert_eq!(ours.del_delbar(&a0011), oracle.del_delbar(&a0011));
    let want = ExtForm::monomial(4, &[0, 1], &[0, 1], GQ::from_int(-9))
        .add(&ExtForm::monomial(4, &[1, 3], &[1, 3], GQ::from_int(-1)))
        .unwrap();
    assert_eq!(ours.del_delbar(&a11), want);
    let pat = ddbar_pattern(&ours);
    assert!(pat.reproduces());
    assert_eq!(pat.second.len(), 1);
}

#[test]
fn ddbar_of_top_form_vanishes() {
    let cf = sl3_coframe();
    let top = ExtForm::monomial(4, &[0, 1, 2, 3], &[0, 1, 2, 3], GQ::one());
    assert!(cf.del_delbar(&top).is_zero());
    assert!(cf.d(&top).is_zero());
}

#[test]
fn pluriclosed_fails_for_diagonal_metrics_on_sl3() {
    let cf = sl3_coframe();
    for d in [[1, 1, 1, 1], [2, 1, 3, 1], [1, 5, 1, 2]] {
        let d: Vec<_> = d.iter().map(|&x| rat(x, 1)).collect();
        let rep = metric_report(&cf, &HermMetric::diagonal(&d).unwrap()).unwrap();
        assert!(!rep.pluriclosed);
        assert!(!rep.kahler);
    }
}

#[test]
fn raw_lemma_frame_is_not_balanced() {
    let (_, q) = build_nonregular_q(2).unwrap();
    let res = balanced_frame_criterion(&q, q.basis()).unwrap();
    assert!(!res.is_zero());
    let rf = RealForms::build(3).unwrap();
    let (basis, labels) = nonregular_basis(&rf);
    let q3 = q_from(&rf, basis.clone(), labels);
    assert!(!balanced_frame_criterion(&q3, &basis).unwrap().is_zero());
}

fn q_from(rf: &RealForms, basis: Vec<Vector>, labels: Vec<String>) -> ComplexStructure {
    ComplexStructure::new(rf.chevalley.algebra.clone(), rf.sigma.clone(), basis, labels, Some(rf.chevalley.cartan_basis())).unwrap()
}

#[test]
fn balanced_frame_m2_explicit_vectors() {
    let f = balanced_basis_sl2m1(2).unwrap();
    let lab: Vec<&str> = f.vectors.iter().map(|v| v.label.as_str()).collect();
    assert!(lab.contains(&"f[e0]"));
    let third = f.vectors.iter().find(|v| v.label == "fe[1,2]").unwrap();
    assert_eq!(third.coefficient, GQ::from_frac(-1, 3));
}

/// Frames on algebras with complex dimension at most four.
fn frames() -> Vec<(ComplexStructure, Vec<Vector>)> {
    let mut out = Vec::new();
    for l in ["0", "1/2", "-1/3", "i/2", "1/4+1/4i"] {
        let cs = build_sl3_family(&l.parse().unwrap()).unwrap();
        let e = |k| Vector::basis(8, k);
        out.push((cs.clone(), vec![e(0), e(1), e(1).sub(&e(2)), e(3)]));
        out.push((cs.clone(), vec![e(0), e(1), e(2), e(3)]));
        out.push((cs, vec![e(0), e(1).add(&e(2)), e(2), e(3)]));
    }
    let (_, q) = build_nonregular_q(2).unwrap();
    out.push((q.clone(), q.basis().to_vec()));
    let f = balanced_basis_sl2m1(2).unwrap();
    out.push((f.structure.clone(), f.frame()));
    let (_, m) = build_regular_morimoto(2).unwrap();
    out.push((m.clone(), m.basis().to_vec()));
    for n in [2, 3] {
        let cs = sl2_product_structure(n).unwrap();
        out.push((cs.clone(), cs.basis().to_vec()));
    }
    let ab = abelian_structure(2);
    out.push((ab.clone(), ab.basis().to_vec()));
    out
}

#[test]
fn balanced_criterion_agrees_with_metric_report() {
    let mut seen = [false; 2];
    for (cs, frame) in frames() {
        let crit = balanced_frame_criterion(&cs, &frame).unwrap().is_zero();
        let cf = frame_coframe(&cs, &frame).unwrap();
        let rep = metric_report(&cf, &HermMetric::identity(cs.n())).unwrap();
        assert_eq!(crit, rep.balanced, "{:?}", cs.labels());
        seen[usize::from(crit)] = true;
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn obstruction_soundness_on_random_metrics() {
    // dξ on su(3) obstructs p = n − 1, so no metric can be balanced
    let (chev, cs) = compact_example(3, &GQ::i()).unwrap();
    let cf = Coframe::from_structure(&cs);
    let xi = highest_root_form(&chev, &cs);
    let recs = obstruction_scan(&cf, &[xi], 1, &[]);
    assert!(recs.iter().any(|r| r.obstructed.contains(&(cf.n() - 1))));
    let strat = (proptest::collection::vec(1i64..=6, 4), proptest::collection::vec(common::small_gq(), 6));
    common::runner(50, 21)
        .run(&strat, |(d, off)| {
            let mut p = ExactMatrix::identity(4);
            let mut it = off.iter();
            for r in 0..4 {
                for c in r + 1..4 {
                    p.set(r, c, it.next().unwrap().clone());
                }
            }
            let mut dm = ExactMatrix::zeros(4, 4);
            for r in 0..4 {
                dm.set(r, r, GQ::from_int(d[r]));
            }
            let h = p.adjoint().mul(&dm).unwrap().mul(&p).unwrap();
            let rep = metric_report(&cf, &HermMetric::new(h).unwrap()).unwrap();
            prop_assert!(!rep.balanced);
            Ok(())
        })
        .unwrap();
}

#[test]
fn abelian_scan_is_empty() {
    let cs = abelian_structure(2);
    let cf = Coframe::from_structure(&cs);
    let cands: Vec<ExtForm> = (0..2).map(|k| cf.eta(k).add(&cf.eta_bar(k)).unwrap()).collect();
    let gammas = vec![ExtForm::eta_eta_bar(2, 0, 0)];
    assert!(obstruction_scan(&cf, &cands, 2, &gammas).is_empty());
}

fn su3() -> (lieherm::lie::Chevalley, ComplexStructure) {
    compact_example(3, &GQ::new(rat(1, 1), rat(1, 1))).unwrap()
}

fn table(h: &ExactMatrix) -> Vec<(((usize, usize), (usize, usize)), GQ)> {
    let (chev, cs) = su3();
    let t = ddc_degenerate_form(&chev, &cs, h).unwrap();
    assert!(t.stray.is_empty());
    t.quadruples.into_iter().map(|(a, b, v, _)| ((a, b), v)).collect()
}

#[test]
fn ddc_degenerate_is_bilinear_and_symmetric() {
    let strat = proptest::collection::vec(-3i64..=3, 6);
    common::runner(50, 22)
        .run(&strat, |v| {
            let h1 = ExactMatrix::from_int_rows(&[&[v[0], v[1]], &[v[1], v[2]]]);
            let h2 = ExactMatrix::from_int_rows(&[&[v[3], v[4]], &[v[4], v[5]]]);
            let sum = ExactMatrix::from_int_rows(&[&[v[0] + v[3], v[1] + v[4]], &[v[1] + v[4], v[2] + v[5]]]);
            let (t1, t2, ts) = (table(&h1), table(&h2), table(&sum));
            for ((k1, a), ((k2, b), (k3, c))) in t1.iter().zip(t2.iter().zip(&ts)) {
                prop_assert!(k1 == k2 && k2 == k3);
                prop_assert_eq!(&(a + b), c);
            }
            for ((a, b), x) in &t1 {
                let swapped = t1.iter().find(|(k, _)| *k == (*b, *a)).map(|(_, y)| y.clone());
                prop_assert_eq!(Some(x.clone()), swapped);
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn ddc_excludes_opposite_roots_and_vanishes_for_zero_h() {
    let (chev, cs) = su3();
    let t = ddc_degenerate_form(&chev, &cs, &metrics::su3_degenerate_h(&GQ::one())).unwrap();
    assert!(t.all_match());
    assert!(t.quadruples.iter().all(|(a, b, _, _)| a != b));
    assert!(t.quadruples.iter().any(|(a, b, v, _)| *a == (1, 1) && *b == (2, 1) && *v == GQ::from_int(-2)));
    let z = ddc_degenerate_form(&chev, &cs, &metrics::su3_degenerate_h(&GQ::zero())).unwrap();
    assert!(z.quadruples.iter().all(|(_, _, v, _)| v.is_zero()));
}

#[test]
fn ddc_rejects_nonregular_structure() {
    let (_, q) = build_nonregular_q(2).unwrap();
    let chev = lieherm::lie::Chevalley::sl(3).unwrap();
    let h = metrics::su3_degenerate_h(&GQ::one());
    assert!(matches!(ddc_degenerate_form(&chev, &q, &h), Err(lieherm::Error::NotRegularStructure(_))));
}

#[test]
fn sl2_products() {
    let r2 = metrics::sl2_product_check(2).unwrap();
    assert!(r2.metric.pluriclosed && r2.metric.gauduchon && !r2.metric.kahler);
    assert!(r2.kahler.infeasible());
    let r3 = metrics::sl2_product_check(3).unwrap();
    assert!(r3.top_pluriclosed);
    assert!(r3.kahler.infeasible());
}

#[test]
fn hermitian_rep_of_rank_one_form() {
    let f = ExtForm::eta_eta_bar(3, 0, 0).scale(&GQ::i());
    let r = herm_rep(&f).unwrap();
    assert_eq!((r.rank, r.signature.pos, r.signature.neg, r.signature.zero), (1, 1, 0, 2));
}

#[test]
fn flipped_dc_convention_fails_identity() {
    let c = vec![GQ::from_int(1), GQ::i(), -GQ::i(), GQ::from_int(2)];
    let cf = common::nilpotent_model(&c);
    let beta = cf.eta(2).add(&cf.eta_bar(2)).unwrap().scale(&GQ::from_frac(1, 2));
    let jb = beta.apply_j();
    let bj = beta.wedge(&jb).unwrap();
    let db = cf.d(&beta);
    let djb = cf.d(&jb);
    let rhs = db.wedge(&db).unwrap().add(&djb.wedge(&djb).unwrap()).unwrap();
    assert!(!rhs.is_zero());
    assert_eq!(cf.ddc(&bj).neg(), rhs);
    let flipped = cf.del(&bj).sub(&cf.delbar(&bj)).unwrap().scale(&GQ::i());
    assert_ne!(cf.d(&flipped).neg(), rhs);
    // dβ and dJβ are of type (1,1)
    assert!(db.component(2, 0).is_zero() && djb.component(2, 0).is_zero());
}
