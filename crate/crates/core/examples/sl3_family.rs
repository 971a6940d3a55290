//! The family I_lambda on sl(3,R) and its balanced frame.
use lieherm::complex_structures::build_sl3_family;
use lieherm::exterior::Coframe;
use lieherm::metrics::{balanced_frame_criterion, frame_coframe, metric_report, HermMetric};
use lieherm::numeric::{GQ, Vector};

fn main() -> lieherm::Result<()> {
    for s in ["0", "1/2", "-1/3", "1/2i", "2/3+1/4i"] {
        let lambda: GQ = s.parse()?;
        let cs = build_sl3_family(&lambda)?;
        let e = |k| Vector::basis(8, k);
        let frame = vec![e(0), e(1), e(1).sub(&e(2)), e(3)];
        let res = balanced_frame_criterion(&cs, &frame)?;
        let rep = metric_report(&frame_coframe(&cs, &frame)?, &HermMetric::identity(4))?;
        println!("lambda = {lambda}: integrable {}, residual zero {}, balanced {}", Coframe::from_structure(&cs).is_integrable(), res.is_zero(), rep.balanced);
    }
    if let Err(e) = build_sl3_family(&GQ::from_int(1)) {
        println!("lambda = 1 rejected: {e}");
    }
    Ok(())
}
