//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::time::Instant;

use lieherm::complex_structures::build_nonregular_q;
use lieherm::flag::{self, astheno_c2, scan_row, semidef_scan, WeightCombo};
use lieherm::metrics::{self, balanced_basis_sl2m1};
use lieherm::numeric::{rat, GQ};
use lieherm::positivity::PowerClass;
use lieherm::scenarios::{run_scenario, Scenario};

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err(e: lieherm::Error) -> String {
    e.to_string()
}

fn subalgebra_and_complement() -> Outcome {
    let t = Instant::now();
    for m in 2..=5 {
        let (_, q) = build_nonregular_q(m).map_err(err)?;
        let c = q.check();
        ensure(c.closed && c.complement, format!("m = {m}: closed {}, complement {}", c.closed, c.complement))?;
    }
    let s = t.elapsed().as_secs_f64();
    ensure(s < 10.0, format!("took {s:.2}s"))?;
    Ok(format!("m = 2..5 in {s:.2}s"))
}

fn nonregularity() -> Outcome {
    for m in 2..=4 {
        let r = run_scenario(&Scenario::new("sl2m1-nonregular").with("m", &m.to_string()), 0).map_err(err)?;
        for k in ["normalizer_in_cartan", "witness_found", "certificate"] {
            ensure(r.verdicts[k], format!("m = {m}: {k} false"))?;
        }
        ensure(!r.verdicts["ad_stable"], format!("m = {m}: split Cartan is ad-stable"))?;
    }
    Ok("m = 2..4, witness [H_{m-1}, e0]".into())
}

fn balanced_frames() -> Outcome {
    let seventh = GQ::from_frac(1, 7);
    for m in 2..=4 {
        let f = balanced_basis_sl2m1(m).map_err(err)?;
        ensure(f.residual().map_err(err)?.is_zero(), format!("m = {m}: residual nonzero"))?;
        for k in f.corrected() {
            let bad = f.perturbed(k, &seventh).residual().map_err(err)?;
            ensure(!bad.is_zero(), format!("m = {m}: perturbing {} leaves residual zero", f.vectors[k].label))?;
        }
    }
    Ok("m = 2..4 residual 0, all perturbations detected".into())
}

fn sl3_equations() -> Outcome {
    let r = run_scenario(&Scenario::new("sl3-structure-eqs"), 0).map_err(err)?;
    ensure(r.as_expected(), format!("contradicts: {:?}", r.contradictions))?;
    Ok(format!("scales {}, ratio {}", r.values["scales"], r.values["ddbar_ratio"]))
}

fn sl3_subalgebras() -> Outcome {
    for m in [3, 4] {
        let r = run_scenario(&Scenario::new("sl2m1-skt").with("m", &m.to_string()), 0).map_err(err)?;
        for k in ["subalgebra_closes", "ddbar_pattern", "no_pluriclosed_metric"] {
            ensure(r.verdicts[k], format!("m = {m}: {k} false"))?;
        }
    }
    Ok("m = 3, 4".into())
}

fn pairs() -> [(WeightCombo, WeightCombo); 2] {
    let p = |s: &str| WeightCombo::parse(s, 4).expect("valid combination");
    [(p("a1"), p("a1-a2")), (p("a1-3a4"), p("a2-a3"))]
}

fn astheno() -> Outcome {
    let omega = WeightCombo::sum_all(4);
    let mut out = Vec::new();
    for ((b1, b2), want) in pairs().iter().zip([rat(7, 4), rat(7, 5)]) {
        let t = Instant::now();
        let c2 = astheno_c2(b1, b2, &omega).map_err(err)?;
        let s = t.elapsed().as_secs_f64();
        ensure(c2 == want, format!("c2 = {c2}, expected {want}"))?;
        ensure(s < 1.0, format!("took {s:.2}s"))?;
        out.push(c2.to_string());
    }
    Ok(format!("c2 = {}", out.join(", ")))
}

fn scans() -> Outcome {
    let [(a1, a2), (b1, b2)] = pairs();
    let rows = semidef_scan(&a1, &a2, 10).map_err(err)?;
    let full: Vec<usize> = (4..=10).collect();
    let hit = rows.iter().find(|r| r.rank == 7 && r.classification.is_semi_definite_nonzero() && r.obstructed_p == full);
    let hit = hit.ok_or("no rank-7 semi-definite row obstructing 4..10")?;
    let rows2 = semidef_scan(&b1, &b2, 10).map_err(err)?;
    ensure(flag::semidefinite_rows(&rows2).is_empty(), "second pair has a semi-definite row")?;
    let p7 = scan_row(&b1, &b2, 1, 0).map_err(err)?;
    let p4 = scan_row(&b1, &b2, 0, 1).map_err(err)?;
    let sign = |row: &flag::ScanRow, j: usize| row.semidefinite_powers.iter().find(|(k, _)| *k == j).map(|(_, c)| *c);
    let (s7, s4) = (sign(&p7, 7), sign(&p4, 4));
    let single = |c: Option<PowerClass>| c.is_some_and(PowerClass::is_semi_definite_nonzero);
    ensure(single(s7) && single(s4), format!("powers: {s7:?}, {s4:?}"))?;
    Ok(format!("(A, C) = ({}, {}) rank 7; second pair none; (dβ1)^7 {:?}, (dβ2)^4 {:?}", hit.a, hit.c, s7.unwrap(), s4.unwrap()))
}

fn compact_dxi() -> Outcome {
    let mut notes = Vec::new();
    let mut failed = Vec::new();
    for n in [3, 4] {
        let r = metrics::compact_dxi(n).map_err(err)?;
        let dim = r.record.as_ref().map(|x| x.form.n()).unwrap_or(0);
        let want: Vec<usize> = (1..=r.expected_rank).map(|k| dim - k).filter(|&p| p >= 1).rev().collect();
        let got = r.record.as_ref().map(|x| x.obstructed.clone()).unwrap_or_default();
        notes.push(format!("N = {n}: rank {} of {}", r.rank, r.expected_rank));
        if !(r.semi_positive && r.rank == r.expected_rank && got == want) {
            failed.push(format!("N = {n}: rank {} vs {}, semi-positive {}, p {got:?} vs {want:?}", r.rank, r.expected_rank, r.semi_positive));
        }
    }
    if failed.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(failed.join("; "))
    }
}

fn reductive_ddc() -> Outcome {
    let r = run_scenario(&Scenario::new("reductive-ddc"), 0).map_err(err)?;
    ensure(r.verdicts["quadruples_match"], "a quadruple differs from -2h")?;
    ensure(r.verdicts["other_components_vanish"], "stray components")?;
    let (chev, cs) = metrics::compact_example(3, &GQ::new(rat(1, 1), rat(1, 1))).map_err(err)?;
    let zero = metrics::ddc_degenerate_form(&chev, &cs, &metrics::su3_degenerate_h(&GQ::zero())).map_err(err)?;
    ensure(zero.quadruples.iter().all(|(_, _, v, _)| v.is_zero()) && zero.stray.is_empty(), "h = 0 gives nonzero ddc")?;
    Ok(format!("{} quadruples", r.witnesses["table"].as_array().map_or(0, Vec::len)))
}

fn ilambda() -> Outcome {
    for l in ["0", "1/2", "-1/3", "i/2"] {
        let r = run_scenario(&Scenario::new("sl3-Ilambda").with("lambda", l), 0).map_err(err)?;
        for k in ["jacobi", "residual_zero", "coefficient_pattern"] {
            ensure(r.verdicts[k], format!("lambda = {l}: {k} false"))?;
        }
    }
    for l in ["2/3+1/4i", "-3/4", "1/5-4/5i"] {
        let r = run_scenario(&Scenario::new("sl3-Ilambda").with("lambda", l), 0).map_err(err)?;
        ensure(r.verdicts["jacobi"] && r.verdicts["coefficient_pattern"], format!("lambda = {l}"))?;
    }
    Ok("4 residuals zero, 7 parameters checked".into())
}

fn property_suites() -> Outcome {
    let t = Instant::now();
    let results = common::all_properties(common::CASES);
    let s = t.elapsed().as_secs_f64();
    let bad: Vec<String> = results.iter().filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}"))).collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    ensure(s < 60.0, format!("took {s:.1}s"))?;
    Ok(format!("{} suites x {} cases in {s:.1}s", results.len(), common::CASES))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("non-regular q: subalgebra and complement", subalgebra_and_complement),
        ("non-regular q: sigma-normalizer certificate", nonregularity),
        ("balanced frame on sl(2m-1,R)", balanced_frames),
        ("sl(3,R) structure equations and ddbar", sl3_equations),
        ("sl(3,R) subalgebras: no pluriclosed metric", sl3_subalgebras),
        ("astheno-Kahler c^2", astheno),
        ("definiteness scans on SU(5)/T^2", scans),
        ("d(xi) rank on compact forms", compact_dxi),
        ("ddc of degenerate omega on su(3)", reductive_ddc),
        ("I_lambda family", ilambda),
        ("property suites", property_suites),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("PASS {:>2} {name}: {note}", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
}
