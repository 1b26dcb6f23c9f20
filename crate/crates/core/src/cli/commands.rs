use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::{config_hash, load_config, PilotFile, SimulateConfig, TestConfig};
use super::{Cli, Command};
use crate::conj_basis::{fundamental_column, split_invariant_subspace, SplitOptions, SplitReport, SubspaceBasis};
use crate::error::{Error, Result};
use crate::field::{evaluate_torus, field_energy, sample_coefficients, sample_torus_coefficients};
use crate::grid::{build_grid, synthesize};
use crate::repr::assumption::{search_witness, zero_set_probe, AssumptionReport};
use crate::rng::{stream, Domain};
use crate::stats::{run_batch, run_pilot, BatchSummary, ExperimentSpec, PilotOutcome, RotationSpec, Space};

/// Draws allowed per degree in `check-assumption`.
pub const WITNESS_DRAWS: usize = 10;

pub fn dispatch(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Simulate { config, seed } => {
            let mut cfg: SimulateConfig = load_config(config)?;
            if let Some(s) = seed {
                cfg.seed = *s;
            }
            cmd_simulate(&cfg, &cli.out_dir).map(|_| ())
        }
        Command::Test { config, runs, seed, search_rotation } => {
            let mut cfg: TestConfig = load_config(config)?;
            if let Some(r) = runs {
                cfg.runs = *r;
            }
            if let Some(s) = seed {
                cfg.experiment = cfg.experiment.with_seed(*s);
            }
            if *search_rotation {
                match &mut cfg.experiment {
                    ExperimentSpec::Independence(c) => c.rotation = RotationSpec::Search,
                    _ => return Err(Error::Validation("--search-rotation applies to independence experiments".into())),
                }
            }
            let summary = cmd_test(&cfg, &cli.out_dir)?;
            println!(
                "{}: {} of {} runs rejected at alpha={} (rate {:.3})",
                summary.experiment, summary.rejections, summary.n_runs, summary.alpha, summary.rejection_rate
            );
            Ok(())
        }
        Command::CheckAssumption { degree, samples, seed } => {
            let report = cmd_check_assumption(*degree, *samples, *seed, &cli.out_dir)?;
            print!("{}", render_assumption(&report));
            Ok(())
        }
        Command::ConjBasisDemo { quadrature_order, seed } => {
            let report = cmd_conj_basis_demo(*quadrature_order, *seed, &cli.out_dir)?;
            print!("{}", render_split(&report));
            if !report.certified() {
                return Err(Error::numeric("split certificates failed"));
            }
            Ok(())
        }
        Command::Pilot { config } => {
            let cfg: PilotFile = load_config(config)?;
            let out = cmd_pilot(&cfg, &cli.out_dir)?;
            for row in &out.rows {
                println!("n={:>6}  rejections={:>3}/{}  power={:.3}", row.n, row.rejections, row.runs, row.power);
            }
            match out.calibrated_n {
                Some(n) => println!("calibrated n = {n}"),
                None => println!("target power not reached"),
            }
            Ok(())
        }
    }
}

fn output_path(out_dir: &Path, stem: &str, suffix: &str) -> Result<PathBuf> {
    fs::create_dir_all(out_dir)?;
    Ok(out_dir.join(format!("{stem}{suffix}")))
}

#[derive(Serialize)]
struct Stamped<'a, T: Serialize> {
    config_hash: &'a str,
    seed: u64,
    #[serde(flatten)]
    body: &'a T,
}

fn write_json<T: Serialize>(path: &Path, hash: &str, seed: u64, body: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(&Stamped { config_hash: hash, seed, body })?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn stamp_line(hash: &str, seed: u64) -> String {
    format!("config_hash={hash} seed={seed}")
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulateSummary {
    pub space: Space,
    pub l_max: usize,
    /// `Σ |a|²` over all coefficients.
    pub coefficient_power: f64,
    /// Quadrature `∫ T² dm` (sphere) or grid mean of `T²` (circle).
    pub field_energy: f64,
    pub parseval_gap: f64,
    pub files: Vec<String>,
}

/// Writes `<stem>.coeffs.json`, `<stem>.field.csv` and `<stem>.summary.json`.
pub fn cmd_simulate(cfg: &SimulateConfig, out_dir: &Path) -> Result<SimulateSummary> {
    let hash = config_hash(cfg)?;
    let stem = cfg.output.clone().unwrap_or_else(|| "simulate".into());
    let spectrum = cfg.spectrum.build(cfg.l_max, cfg.include_monopole)?;
    let mut rng = stream(cfg.seed, Domain::Realization, 0);
    let coeff_path = output_path(out_dir, &stem, ".coeffs.json")?;
    let field_path = output_path(out_dir, &stem, ".field.csv")?;
    let summary_path = output_path(out_dir, &stem, ".summary.json")?;

    let (coefficient_power, field_energy_value) = match cfg.space {
        Space::Sphere => {
            let coeffs = sample_coefficients(&spectrum, cfg.law, cfg.l_max, &mut rng)?;
            let mut file = coeffs.to_file();
            file.seed = Some(cfg.seed);
            file.config_hash = Some(hash.clone());
            fs::write(&coeff_path, serde_json::to_string_pretty(&file)? + "\n")?;
            let grid = build_grid(cfg.l_max);
            let values = synthesize(&coeffs, &grid)?;
            let mut out = fs::File::create(&field_path)?;
            values.write_csv(&mut out, &[stamp_line(&hash, cfg.seed)])?;
            (coeffs.block_power().iter().sum::<f64>(), field_energy(&values)?)
        }
        Space::Torus => {
            let coeffs = sample_torus_coefficients(&spectrum, cfg.law, cfg.l_max, &mut rng)?;
            #[derive(Serialize)]
            struct TorusFile {
                k_max: usize,
                coefficients: Vec<[f64; 2]>,
                seed: u64,
                config_hash: String,
            }
            let k_max = coeffs.k_max() as i64;
            let file = TorusFile {
                k_max: coeffs.k_max(),
                coefficients: (0..=k_max).map(|k| [coeffs.get(k).re, coeffs.get(k).im]).collect(),
                seed: cfg.seed,
                config_hash: hash.clone(),
            };
            fs::write(&coeff_path, serde_json::to_string_pretty(&file)? + "\n")?;
            let n = 2 * coeffs.k_max() + 1;
            let mut out = fs::File::create(&field_path)?;
            writeln!(out, "# {}", stamp_line(&hash, cfg.seed))?;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["theta", "weight", "value"])?;
            let mut energy = 0.0;
            for j in 0..n {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                let v = evaluate_torus(&coeffs, theta)?;
                energy += v * v / n as f64;
                w.serialize((theta, 1.0 / n as f64, v))?;
            }
            w.flush()?;
            let power = (-k_max..=k_max).map(|k| coeffs.get(k).norm_sqr()).sum::<f64>();
            (power, energy)
        }
    };
    let summary = SimulateSummary {
        space: cfg.space,
        l_max: cfg.l_max,
        coefficient_power,
        field_energy: field_energy_value,
        parseval_gap: (coefficient_power - field_energy_value).abs(),
        files: [&coeff_path, &field_path]
            .iter()
            .map(|p| p.file_name().unwrap_or_default().to_string_lossy().into_owned())
            .collect(),
    };
    write_json(&summary_path, &hash, cfg.seed, &summary)?;
    Ok(summary)
}

/// Writes `<stem>.report.json` (batch summary with every run) and
/// `<stem>.runs.csv` (one row per run).
pub fn cmd_test(cfg: &TestConfig, out_dir: &Path) -> Result<BatchSummary> {
    let hash = config_hash(cfg)?;
    let stem = cfg.output.clone().unwrap_or_else(|| format!("test_{}", cfg.experiment.name()));
    let summary = run_batch(&cfg.experiment, cfg.runs)?;
    let seed = cfg.experiment.seed();
    write_json(&output_path(out_dir, &stem, ".report.json")?, &hash, seed, &summary)?;
    let mut out = fs::File::create(output_path(out_dir, &stem, ".runs.csv")?)?;
    writeln!(out, "# {}", stamp_line(&hash, seed))?;
    summary.write_csv(out)?;
    Ok(summary)
}

#[derive(Debug, Clone, Serialize)]
pub struct AssumptionRow {
    pub degree: usize,
    pub witness_found: bool,
    pub search: AssumptionReport,
    pub zero_set_fraction: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AssumptionSummary {
    pub max_degree: usize,
    pub samples: usize,
    pub witness_draws: usize,
    pub rows: Vec<AssumptionRow>,
}

/// Witness search and zero-set probe for every degree `1..=degree`; writes
/// `check_assumption.json`. Degrees without a witness are reported, not
/// treated as errors.
pub fn cmd_check_assumption(degree: usize, samples: usize, seed: u64, out_dir: &Path) -> Result<AssumptionSummary> {
    if degree == 0 {
        return Err(Error::Validation("degree must be at least 1".into()));
    }
    if samples == 0 {
        return Err(Error::Validation("samples must be at least 1".into()));
    }
    let rows = (1..=degree)
        .map(|l| {
            let search = search_witness(l, None, WITNESS_DRAWS, seed)?;
            Ok(AssumptionRow {
                degree: l,
                witness_found: search.witness.is_some(),
                zero_set_fraction: zero_set_probe(l, samples, seed)?,
                search,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = AssumptionSummary { max_degree: degree, samples, witness_draws: WITNESS_DRAWS, rows };
    let hash = config_hash(&(degree, samples, seed))?;
    write_json(&output_path(out_dir, "check_assumption", ".json")?, &hash, seed, &summary)?;
    Ok(summary)
}

pub fn render_assumption(s: &AssumptionSummary) -> String {
    let mut out = String::from("degree  witness  orders    min_gap     draws  zero_set\n");
    for r in &s.rows {
        let g = r.search.rotation;
        out += &format!(
            "{:>6}  {:>7}  ({:>2},{:>2})  {:>10.3e}  {:>5}  {:.4}\n",
            r.degree,
            if r.witness_found { "yes" } else { "no" },
            r.search.orders.0,
            r.search.orders.1,
            r.search.min_gap,
            r.search.samples_tried,
            r.zero_set_fraction
        );
        out += &format!("        g = (alpha {:.6}, beta {:.6}, gamma {:.6})\n", g.alpha, g.beta, g.gamma);
    }
    out
}

/// Splits the fundamental representation `span{a, c}`; writes
/// `conj_basis_report.json`.
pub fn cmd_conj_basis_demo(quadrature_order: usize, seed: u64, out_dir: &Path) -> Result<SplitReport> {
    let opts = SplitOptions { quadrature_order, seed, ..SplitOptions::default() };
    let h = SubspaceBasis::new(fundamental_column(0), vec!["a".into(), "c".into()], quadrature_order)?;
    let (_, report) = split_invariant_subspace(&h, &opts)?;
    let hash = config_hash(&opts)?;
    write_json(&output_path(out_dir, "conj_basis_report", ".json")?, &hash, seed, &report)?;
    Ok(report)
}

pub fn render_split(r: &SplitReport) -> String {
    let fmt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.3e}"));
    let mut out = format!("status: {:?}\nH = span{{{}}}, dim V = {}\n", r.status, r.labels.join(", "), r.dim_v);
    if let Some(z) = r.isotropic_vector {
        out += &format!("isotropic vector: ({:+.6}{:+.6}i, {:+.6}{:+.6}i)\n", z[0][0], z[0][1], z[1][0], z[1][1]);
    }
    out += &format!("max |<k_i, conj k_j>|    {}\n", fmt(r.orthogonality));
    out += &format!("|z^T B z|                {}\n", fmt(r.isotropic_residual));
    out += &format!("invariance residual      {}\n", fmt(r.invariance_residual));
    out += &format!("reconstruction residual  {}\n", fmt(r.reconstruction_residual));
    out += &format!("certified: {}\n", r.certified());
    out
}

/// Runs the pilot; writes `<stem>.json`.
pub fn cmd_pilot(cfg: &PilotFile, out_dir: &Path) -> Result<PilotOutcome> {
    let hash = config_hash(cfg)?;
    let stem = cfg.output.clone().unwrap_or_else(|| "pilot".into());
    let out = run_pilot(&cfg.pilot)?;
    write_json(&output_path(out_dir, &stem, ".json")?, &hash, cfg.pilot.experiment.seed(), &out)?;
    Ok(out)
}
