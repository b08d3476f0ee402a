use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use qprep_cli::{run_job, InputFormat, JobConfig, ModeArg, SynthArg, VerifyArg};

/// Compile a real data vector into an amplitude-encoding circuit.
#[derive(Debug, Parser)]
#[command(name = "qprep", version)]
struct Args {
    /// Data file holding 2^q real values.
    #[arg(long)]
    input: PathBuf,

    #[arg(long, value_enum, default_value_t = InputFormat::JsonArray)]
    format: InputFormat,

    #[arg(long, value_enum, default_value_t = ModeArg::Schmidt)]
    mode: ModeArg,

    /// `opaque` keeps basis changes as matrix gates (no QASM output).
    #[arg(long, value_enum, default_value_t = SynthArg::Exact)]
    synth: SynthArg,

    /// Write the Schmidt circuit (or the naive one in naive mode) as OpenQASM 2.0.
    #[arg(long, value_name = "PATH")]
    emit_qasm: Option<PathBuf>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,

    /// Simulate the circuit and report its fidelity. A bare `--verify` means `on`.
    #[arg(
        long,
        value_enum,
        default_value_t = VerifyArg::Auto,
        num_args = 0..=1,
        default_missing_value = "on"
    )]
    verify: VerifyArg,

    /// Relative cutoff below which a Schmidt coefficient counts as zero.
    #[arg(long, value_name = "TOL")]
    rank_tol: Option<f64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = JobConfig {
        input: args.input,
        format: args.format,
        mode: args.mode,
        synth: args.synth,
        emit_qasm: args.emit_qasm,
        report: args.report,
        verify: args.verify,
        rank_tol: args.rank_tol,
    };
    match run_job(&cfg) {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
