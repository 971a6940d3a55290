use lieherm::flag::{
    astheno_c2, bundle_dimension, dbeta, fundamental_weights, obstructed_union, scan_csv, scan_json, semidef_scan,
    wedge_power_topform, weight_root_pairing, WeightCombo,
};
use lieherm::numeric::{rat, Rational};
use lieherm::positivity::{power_semidefiniteness, PowerClass};
use lieherm::Error;

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x, 1)).collect()
}

#[test]
fn weights_and_pairing() {
    let w = fundamental_weights(5).unwrap();
    assert_eq!(w[1], ints(&[1, 1, 0, 0, 0]));
    let p = weight_root_pairing(5).unwrap();
    for (j, row) in p.iter().enumerate() {
        for (l, x) in row.iter().enumerate() {
            assert_eq!(*x, rat(i64::from(j == l), 1));
        }
    }
    assert_eq!(fundamental_weights(2).unwrap().len(), 1);
    assert!(matches!(fundamental_weights(1), Err(Error::InvalidRank(1))));
    assert_eq!(bundle_dimension(5), 11);
}

#[test]
fn dbeta_coefficients() {
    let all = dbeta(&WeightCombo::from_ints(&[1, 1, 1, 1]));
    for j in 1..=5 {
        for l in j + 1..=5 {
            assert_eq!(*all.get(j, l), rat((l - j) as i64, 1));
        }
    }
    let first = dbeta(&WeightCombo::from_ints(&[1, 0, 0, 0]));
    assert_eq!(first.rank(), 4);
    assert!((2..=5).all(|l| *first.get(1, l) == rat(1, 1)));
    assert!(dbeta(&WeightCombo::from_ints(&[0, 0, 0, 0])).is_zero());
    let b = dbeta(&WeightCombo::from_ints(&[1, 0, 0, -3]));
    assert_eq!(b.coeffs, ints(&[1, 1, 1, -2, 0, 0, -3, 0, -3, -3]));
    assert_eq!(b.rank(), 7);
}

#[test]
fn top_form_values() {
    let all = dbeta(&WeightCombo::from_ints(&[1, 1, 1, 1]));
    let fact10: i64 = (1..=10).product();
    assert_eq!(wedge_power_topform(&[(all.clone(), 10)]).unwrap(), rat(fact10 * 288, 1));
    let first = dbeta(&WeightCombo::from_ints(&[1, 0, 0, 0]));
    assert_eq!(wedge_power_topform(&[(first.clone(), 5), (all.clone(), 5)]).unwrap(), rat(0, 1));
    assert!(matches!(wedge_power_topform(&[(first, 3)]), Err(Error::DegreeMismatch { .. })));
}

#[test]
fn power_classes() {
    let d7 = ints(&[1, 1, 1, -2, 0, 0, -3, 0, -3, -3]);
    let r = power_semidefiniteness(&d7, 7).unwrap();
    assert_eq!(r.nonzero_subset_count, 1);
    assert!(r.classification.is_semi_definite_nonzero());
    let d4 = ints(&[0, 1, 1, 0, 0, 0, 0, -1, -1, 0]);
    assert_eq!(power_semidefiniteness(&d4, 4).unwrap().classification, PowerClass::PositiveSemiDef);
    assert_eq!(power_semidefiniteness(&ints(&[1, 2, 3]), 1).unwrap().classification, PowerClass::PositiveSemiDef);
    assert!(matches!(power_semidefiniteness(&ints(&[1, 2]), 3), Err(Error::InvalidExponent { .. })));
}

#[test]
fn astheno_coefficients() {
    let k = WeightCombo::sum_all(4);
    let p = |s| WeightCombo::parse(s, 4).unwrap();
    assert_eq!(astheno_c2(&p("a1"), &p("a1-a2"), &k).unwrap(), rat(7, 4));
    assert_eq!(astheno_c2(&p("a1-3a4"), &p("a2-a3"), &k).unwrap(), rat(7, 5));
    assert!(matches!(astheno_c2(&p("a1+a2"), &p("a1+a2"), &k), Err(Error::NoPositiveSolution(_))));
}

#[test]
fn scan_exports() {
    let p = |s| WeightCombo::parse(s, 4).unwrap();
    let rows = semidef_scan(&p("a1-3a4"), &p("a2-a3"), 10).unwrap();
    assert_eq!(rows.len(), 21 * 21 - 1);
    assert_eq!(obstructed_union(&rows), vec![2, 3, 4, 7]);
    let csv = scan_csv(&rows);
    assert!(csv.starts_with("A,C,classification,rank,obstructed_p"));
    assert_eq!(csv.lines().count(), rows.len() + 1);
    assert_eq!(scan_json(&rows).as_array().unwrap().len(), rows.len());
}
