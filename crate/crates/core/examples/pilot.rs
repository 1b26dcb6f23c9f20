//! Power pilot for the non-Gaussian arms.
//!
//! Finds the smallest sample size at which the FixedModulusPhase arms of the
//! independence and invariance experiments reject at level 0.05 in at least
//! 95% of 50 seeded runs. The results are the constants committed in
//! `isofield::stats::pilot`.
//!
//! ```text
//! cargo run --release --example pilot
//! ```

use isofield::field::CoefficientLaw;
use isofield::stats::pilot::{independence_arm, invariance_arm, run_pilot, PilotConfig, PILOT_SEED};

fn main() -> isofield::Result<()> {
    let arms = [
        ("independence", independence_arm(CoefficientLaw::FixedModulusPhase, 0, 0.05, PILOT_SEED)),
        ("invariance", invariance_arm(CoefficientLaw::FixedModulusPhase, 0, 0.05, PILOT_SEED)),
    ];
    for (name, arm) in arms {
        let cfg = PilotConfig {
            experiment: arm,
            candidates: vec![100, 150, 200, 300, 400, 500, 600, 800, 1000, 1500, 2000, 3000],
            runs: 50,
            target_power: 0.95,
        };
        let out = run_pilot(&cfg)?;
        println!("{name}:");
        for row in &out.rows {
            println!("  n={:>5}  rejections={:>2}/{}  power={:.2}", row.n, row.rejections, row.runs, row.power);
        }
        match out.calibrated_n {
            Some(n) => println!("  calibrated n = {n}"),
            None => println!("  target power not reached"),
        }
    }
    Ok(())
}
