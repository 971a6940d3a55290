//! A complex structure on sl(2m-1,R) that is not regular, with certificate.
use lieherm::complex_structures::build_nonregular_q;

fn main() -> lieherm::Result<()> {
    let m: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let (rf, q) = build_nonregular_q(m)?;
    let check = q.check();
    println!("q has dimension {} in sl({}); closed {}, complement {}", q.n(), rf.n(), check.closed, check.complement);
    let reg = q.h_regularity_check(&rf.chevalley.cartan_basis())?;
    println!("split Cartan ad-stable on q: {} ({} failing brackets)", reg.ad_stable, reg.failures.len());
    let cert = q.nonregularity_certificate()?;
    println!("sigma-normalizer dim {}, inside Cartan {}, certified non-regular {}", q.sigma_normalizer().dimension(), cert.normalizer_in_cartan, cert.certified);
    let j = q.induced_j();
    println!("J^2 = -1: {}, Nijenhuis tensor vanishes: {}", j.squares_to_minus_identity(), j.nijenhuis_defect().is_none());
    Ok(())
}
