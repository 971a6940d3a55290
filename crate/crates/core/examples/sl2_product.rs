//! sl(2,R) x R^(2n-3): a pluriclosed metric and no Kahler metric.
use lieherm::metrics::sl2_product_check;

fn main() -> lieherm::Result<()> {
    for n in [2, 3] {
        let r = sl2_product_check(n)?;
        println!("n = {n}: {}", r.metric.to_json());
        println!("  (n-1)-pluriclosed {}, closed Hermitian (1,1)-forms {}, Kahler excluded {}", r.top_pluriclosed, r.kahler.closed_hermitian.len(), r.kahler.infeasible());
    }
    Ok(())
}
