//! Astheno-Kahler coefficient and definiteness scan on a T^2-bundle over SU(5)/T.
use lieherm::flag::{astheno_c2, bundle_dimension, obstructed_union, scan_csv, semidef_scan, semidefinite_rows, WeightCombo};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1);
    let omega = WeightCombo::sum_all(4);
    println!("complex dimension {}", bundle_dimension(5));
    for (b1, b2) in [("a1", "a1-a2"), ("a1-3a4", "a2-a3")] {
        let (w1, w2) = (WeightCombo::parse(b1, 4)?, WeightCombo::parse(b2, 4)?);
        let c2 = astheno_c2(&w1, &w2, &omega)?;
        let rows = semidef_scan(&w1, &w2, 10)?;
        let sd = semidefinite_rows(&rows);
        println!("beta1 = {b1}, beta2 = {b2}: c^2 = {c2}; {} semi-definite rows; obstructed p {:?}", sd.len(), obstructed_union(&rows));
        if let Some(dir) = &out {
            let path = std::path::Path::new(dir).join(format!("scan_{b1}_{b2}.csv"));
            std::fs::write(&path, scan_csv(&rows))?;
            println!("  wrote {}", path.display());
        }
    }
    Ok(())
}
