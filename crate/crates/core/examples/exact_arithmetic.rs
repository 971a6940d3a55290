//! Exact Gaussian rationals, matrices and Hermitian signatures.
use lieherm::numeric::{ExactMatrix, GQ};

fn main() -> lieherm::Result<()> {
    let z: GQ = "3/4-2i".parse()?;
    let w = GQ::from_frac(1, 3).mul_i();
    println!("z = {z}, w = {w}, z*w = {}, z/w = {}", &z * &w, z.checked_div(&w)?);
    println!("|z|^2 = {}", z.norm_sqr());

    let h = ExactMatrix::from_rows(vec![
        vec![GQ::from_int(2), GQ::i()],
        vec![-GQ::i(), GQ::from_int(1)],
    ])?;
    let sig = h.hermitian_signature()?;
    println!("det = {}, signature = ({}, {}, {})", h.determinant()?, sig.pos, sig.neg, sig.zero);
    println!("inverse = {:?}", h.inverse()?.row(0).iter().map(|x| x.to_string()).collect::<Vec<_>>());
    Ok(())
}
