//! Structure equations of sl(3,R) and the ddbar forms ruling out SKT metrics.
use lieherm::exterior::Coframe;
use lieherm::scenarios::{ddbar_pattern, match_orderings, sl3_reference_equations};
use lieherm::complex_structures::build_nonregular_q;

fn main() -> lieherm::Result<()> {
    let (_, q) = build_nonregular_q(2)?;
    let Some(found) = match_orderings(&q, &sl3_reference_equations())? else {
        println!("no ordering matches the reference equations");
        return Ok(());
    };
    let scales: Vec<String> = found.rescaling.scales.iter().map(|c| c.to_string()).collect();
    println!("ordering {:?}, scales {:?}", found.structure.labels(), scales);
    let cf = Coframe::from_structure(&found.structure).with_names((0..4).map(|k| format!("a{k}")).collect());
    for line in cf.structure_equations_text() {
        println!("  {line}");
    }
    let pat = ddbar_pattern(&cf);
    println!("ddbar(a^11bar) = {}", pat.first.render(cf.names()));
    println!("ddbar(a^00bar11bar) = {}", pat.second.render(cf.names()));
    println!("ratio {:?}, same sign {}", pat.ratio.map(|r| r.to_string()), pat.same_sign);
    Ok(())
}
