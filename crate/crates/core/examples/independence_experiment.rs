//! Rotated coefficients stay independent only for Gaussian laws.
//!
//! Runs the degree-2 sphere arm and the circle arm under each coefficient law.

use isofield::field::CoefficientLaw;
use isofield::stats::pilot::{independence_arm, torus_independence_arm, CALIBRATED_N_INDEPENDENCE};
use isofield::stats::run_batch;

fn main() -> isofield::Result<()> {
    let n = CALIBRATED_N_INDEPENDENCE;
    let runs = 20;
    println!("{:<22} {:>8} {:>8}", "law", "sphere", "circle");
    for law in CoefficientLaw::ALL {
        let sphere = run_batch(&independence_arm(law, n, 0.05, 100), runs)?;
        let circle = run_batch(&torus_independence_arm(law, n, 0.05, 200), runs)?;
        println!("{:<22} {:>8.2} {:>8.2}", law.name(), sphere.rejection_rate, circle.rejection_rate);
    }
    println!("rejection rates over {runs} runs at alpha = 0.05, n = {n}");
    Ok(())
}
