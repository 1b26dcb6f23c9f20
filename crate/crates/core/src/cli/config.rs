//! JSON configuration documents of the command-line tool.
//!
//! Unknown keys are rejected everywhere. The config hash embedded in every
//! output is the SHA-256 of the normalized document (the parsed config
//! re-serialized after command-line overrides).

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::CoefficientLaw;
use crate::stats::{ExperimentSpec, PilotConfig, Space, SpectrumSpec};

fn default_spectrum() -> SpectrumSpec {
    SpectrumSpec::Flat
}

fn default_runs() -> usize {
    1
}

/// `simulate` input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateConfig {
    pub space: Space,
    /// Bandlimit `l_max` on the sphere, `k_max` on the circle.
    pub l_max: usize,
    #[serde(default = "default_spectrum")]
    pub spectrum: SpectrumSpec,
    /// Keep the trivial-representation coefficient (off by default).
    #[serde(default)]
    pub include_monopole: bool,
    pub law: CoefficientLaw,
    pub seed: u64,
    /// Output file stem inside the output directory.
    #[serde(default)]
    pub output: Option<String>,
}

/// `test` input: an experiment repeated over `runs` seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TestConfig {
    pub experiment: ExperimentSpec,
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default)]
    pub output: Option<String>,
}

/// `pilot` input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PilotFile {
    pub pilot: PilotConfig,
    #[serde(default)]
    pub output: Option<String>,
}

/// Parses a config; malformed or unknown content is a validation error.
pub fn parse_config<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Validation(e.to_string()))
}

pub fn load_config<T: DeserializeOwned>(path: &Path) -> Result<T> {
    parse_config(&std::fs::read_to_string(path)?)
}

/// Lower-case hex SHA-256 of the normalized JSON form of `config`.
pub fn config_hash<T: Serialize>(config: &T) -> Result<String> {
    let bytes = serde_json::to_vec(config)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}
