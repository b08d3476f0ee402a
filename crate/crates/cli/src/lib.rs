//! Job runner behind the `qprep` binary.

pub mod input;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use qprep_core::circuit::emit_qasm;
use qprep_core::encoder::encode_naive_with;
use qprep_core::{
    encode_schmidt_with, normalize, Circuit, EncodeReport, EncoderConfig, Error, GateCounts,
    SynthMode, SynthPath, DEFAULT_RANK_TOL,
};

pub use input::InputFormat;

/// Above this width `--verify auto` skips simulation.
pub const AUTO_VERIFY_MAX_QUBITS: usize = 16;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Synthesis(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Synthesis(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Synthesis(_) | Error::NotLowerable { .. } => CliError::Synthesis(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Schmidt,
    Naive,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SynthArg {
    Exact,
    Opaque,
}

impl From<SynthArg> for SynthMode {
    fn from(s: SynthArg) -> Self {
        match s {
            SynthArg::Exact => SynthMode::Exact,
            SynthArg::Opaque => SynthMode::Opaque,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyArg {
    /// Simulate when the register has at most 16 qubits.
    Auto,
    On,
    Off,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub input: PathBuf,
    pub format: InputFormat,
    pub mode: ModeArg,
    pub synth: SynthArg,
    pub emit_qasm: Option<PathBuf>,
    /// Report destination; stdout when absent.
    pub report: Option<PathBuf>,
    pub verify: VerifyArg,
    pub rank_tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobReport {
    pub input_norm: f64,
    pub qubits: usize,
    pub mode: ModeArg,
    pub synth: &'static str,
    pub rank_tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schmidt_ranks: Option<Vec<usize>>,
    pub gate_counts: BTreeMap<&'static str, GateCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fidelity: Option<BTreeMap<&'static str, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub synthesis_paths: Option<Vec<SynthPath>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qasm: Option<PathBuf>,
    pub circuits: BTreeMap<&'static str, Circuit>,
}

/// Runs one job and returns the report that was written.
pub fn run_job(cfg: &JobConfig) -> Result<JobReport, CliError> {
    if cfg.emit_qasm.is_some() && cfg.synth == SynthArg::Opaque {
        return Err(CliError::Input(
            "--emit-qasm needs --synth exact: opaque gates have no OpenQASM 2.0 form".into(),
        ));
    }
    let rank_tol = cfg.rank_tol.unwrap_or(DEFAULT_RANK_TOL);
    let raw = input::read_values(&cfg.input, cfg.format)?;
    let data = normalize(&raw)?;
    let q = data.qubits();
    let verify = match cfg.verify {
        VerifyArg::On => true,
        VerifyArg::Off => false,
        VerifyArg::Auto => q <= AUTO_VERIFY_MAX_QUBITS,
    };
    let encoder_cfg = EncoderConfig {
        synth: cfg.synth.into(),
        rank_tol,
        verify,
    };

    let mut runs: Vec<(&'static str, Circuit, EncodeReport)> = Vec::new();
    if matches!(cfg.mode, ModeArg::Schmidt | ModeArg::Both) {
        let (c, r) = encode_schmidt_with(&data, &encoder_cfg)?;
        runs.push(("schmidt", c, r));
    }
    if matches!(cfg.mode, ModeArg::Naive | ModeArg::Both) {
        let (c, r) = encode_naive_with(&data, verify)?;
        runs.push(("naive", c, r));
    }

    if let Some(path) = &cfg.emit_qasm {
        // the first run is the Schmidt circuit whenever one was built
        let text = emit_qasm(&runs[0].1)?;
        std::fs::write(path, text)
            .map_err(|e| CliError::Synthesis(format!("cannot write {}: {e}", path.display())))?;
    }

    let schmidt = runs.iter().find(|(name, ..)| *name == "schmidt");
    let report = JobReport {
        input_norm: data.norm(),
        qubits: q,
        mode: cfg.mode,
        synth: match cfg.synth {
            SynthArg::Exact => "exact",
            SynthArg::Opaque => "opaque",
        },
        rank_tol,
        schmidt_ranks: schmidt.map(|(_, _, r)| r.schmidt_ranks.clone()),
        gate_counts: runs.iter().map(|(n, _, r)| (*n, r.counts)).collect(),
        fidelity: verify.then(|| {
            runs.iter()
                .filter_map(|(n, _, r)| r.fidelity.map(|f| (*n, f)))
                .collect()
        }),
        synthesis_paths: schmidt.map(|(_, _, r)| r.synthesis_paths.clone()),
        qasm: cfg.emit_qasm.clone(),
        circuits: runs.iter().map(|(n, c, _)| (*n, c.clone())).collect(),
    };

    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Synthesis(format!("cannot serialize report: {e}")))?;
    match &cfg.report {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| CliError::Synthesis(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{json}"),
    }
    Ok(report)
}
