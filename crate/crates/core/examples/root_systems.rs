//! Chevalley bases, Jacobi checks and invariant forms for sl(N) and gl(N).
use lieherm::lie::{root_data, Chevalley};

fn main() -> lieherm::Result<()> {
    for n in 2..=5 {
        let rs = root_data(n)?;
        let c = Chevalley::sl(n)?;
        c.algebra.verify_jacobi()?;
        println!("sl({n}): dim {}, {} positive roots, Cartan matrix {:?}", c.dim(), rs.positive_roots.len(), rs.cartan_matrix);
    }
    let c = Chevalley::sl(3)?;
    let b = c.algebra.bracket(&c.pos_vec(1, 1), &c.neg_vec(1, 1));
    println!("[e_a1, e_-a1] = {:?}", b.iter().map(|(k, x)| format!("{x} {}", c.algebra.label(k))).collect::<Vec<_>>());
    let gl = Chevalley::gl(3)?;
    println!("gl(3): dim {}, centre index {:?}", gl.dim(), gl.center());
    Ok(())
}
