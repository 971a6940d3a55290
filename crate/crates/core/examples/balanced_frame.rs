//! An explicit unitary frame giving a balanced metric on sl(2m-1,R).
use lieherm::metrics::{balanced_basis_sl2m1, balanced_basis_with, CorrectionSigns};
use lieherm::numeric::GQ;
use lieherm::real_forms::RealForms;

fn main() -> lieherm::Result<()> {
    for m in 2..=4 {
        let f = balanced_basis_sl2m1(m)?;
        println!("m = {m}: residual zero {}", f.residual()?.is_zero());
        for &k in &f.corrected() {
            let v = &f.vectors[k];
            let off = f.perturbed(k, &GQ::from_frac(1, 7)).residual()?.is_zero();
            println!("  {} coefficient {} (off by 1/7 still balanced: {off})", v.label, v.coefficient);
        }
        let lit = balanced_basis_with(&RealForms::build(m)?, CorrectionSigns::Literal)?;
        println!("  opposite signs balanced: {}", lit.residual()?.is_zero());
    }
    Ok(())
}
