//! Jarque-Bera tests on coefficient real parts and on point values.

use isofield::field::CoefficientLaw;
use isofield::rotation::SpherePoint;
use isofield::stats::experiment::GaussianityConfig;
use isofield::stats::{ExperimentSpec, SpectrumSpec};

fn main() -> isofield::Result<()> {
    for law in CoefficientLaw::ALL {
        let spec = ExperimentSpec::Gaussianity(GaussianityConfig {
            l_max: 3,
            spectrum: SpectrumSpec::Flat,
            include_monopole: false,
            law,
            coefficients: vec![(2, 1), (3, 0)],
            probes: vec![SpherePoint::new(1.0, 0.5)?],
            n_realizations: 3000,
            alpha: 0.05,
            seed: 11,
        });
        let report = spec.run()?;
        println!("{:<22} JB = {:>10.2}  p = {:.3e}  reject = {}", law.name(), report.statistic, report.p_value, report.reject);
    }
    Ok(())
}
