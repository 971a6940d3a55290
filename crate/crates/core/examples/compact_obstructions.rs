//! d(xi) on compact forms and ddc of a degenerate form on su(3).
use lieherm::metrics::{compact_dxi, compact_example, ddc_degenerate_form, su3_degenerate_h};
use lieherm::numeric::{rat, GQ};

fn main() -> lieherm::Result<()> {
    for n in [3, 4] {
        let r = compact_dxi(n)?;
        let p = r.record.as_ref().map(|x| x.obstructed.clone()).unwrap_or_default();
        println!("N = {n}: rank {} (positive roots {}), semi-positive {}, obstructs p in {p:?}", r.rank, r.expected_rank, r.semi_positive);
    }
    let (chev, cs) = compact_example(3, &GQ::new(rat(1, 1), rat(1, 1)))?;
    let tab = ddc_degenerate_form(&chev, &cs, &su3_degenerate_h(&GQ::one()))?;
    for (a, b, v, e) in &tab.quadruples {
        println!("  alpha {a:?}, beta {b:?}: {v} (predicted {e})");
    }
    println!("other components vanish: {}", tab.stray.is_empty());
    Ok(())
}
