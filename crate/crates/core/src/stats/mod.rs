//! Hypothesis tests and the seeded experiments built on them.

pub mod calibration;
pub mod dcov;
pub mod energy;
pub mod experiment;
pub mod jb;
pub mod ks;
pub mod permutation;
pub mod pilot;
pub mod sample;

pub use calibration::{binomial_band, BinomialBand};
pub use dcov::{distance_covariance, independence_test};
pub use energy::energy_two_sample;
pub use experiment::{
    run_batch, run_gaussianity_experiment, run_independence_experiment, run_invariance_experiment, BatchSummary,
    ExperimentSpec, GaussianityConfig, IndependenceConfig, InvarianceConfig, OrderSelection, ProbePoint,
    RotationSpec, Space, SpectrumSpec,
};
pub use jb::jarque_bera;
pub use ks::ks_two_sample;
pub use pilot::{run_pilot, PilotConfig, PilotOutcome, CALIBRATED_N_INDEPENDENCE, CALIBRATED_N_INVARIANCE};
pub use sample::{SampleMatrix, TestReport};
