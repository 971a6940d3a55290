//! The involutions theta, tau, sigma and the constants B_j^k.
use lieherm::real_forms::{fixed_algebra_signature, RealForms, SigmaConstants};

fn main() -> lieherm::Result<()> {
    for m in 2..=4 {
        let rf = RealForms::build(m)?;
        let sig = fixed_algebra_signature(&rf)?;
        let expect = RealForms::split_signature(rf.n());
        println!("sl({},R): Killing signature ({}, {}, {}), split form expects ({}, {}, {})", rf.n(), sig.pos, sig.neg, sig.zero, expect.pos, expect.neg, expect.zero);
        let b = SigmaConstants::compute(&rf)?;
        let row: Vec<String> = (1..m).map(|j| format!("B_{j} = {}", b.simple(j))).collect();
        println!("  {}; invariants hold: {}", row.join(", "), b.all_invariants_hold());
    }
    Ok(())
}
