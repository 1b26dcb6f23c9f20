//! Two-sample energy test of the joint law at two probe points against the
//! law at the rotated points.

use isofield::field::CoefficientLaw;
use isofield::stats::pilot::{invariance_arm, torus_invariance_arm, CALIBRATED_N_INVARIANCE};
use isofield::stats::run_batch;

fn main() -> isofield::Result<()> {
    let n = CALIBRATED_N_INVARIANCE;
    let runs = 20;
    println!("{:<22} {:>8} {:>8}", "law", "sphere", "circle");
    for law in CoefficientLaw::ALL {
        let sphere = run_batch(&invariance_arm(law, n, 0.05, 300), runs)?;
        let circle = run_batch(&torus_invariance_arm(law, n, 0.05, 400), runs)?;
        println!("{:<22} {:>8.2} {:>8.2}", law.name(), sphere.rejection_rate, circle.rejection_rate);
    }
    println!("rejection rates over {runs} runs at alpha = 0.05, {n} realizations per batch");
    Ok(())
}
