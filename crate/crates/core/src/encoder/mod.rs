//! State preparation by recursive Schmidt decomposition, plus a
//! multiplexed-rotation baseline.
//!
//! For `q ≥ 2` qubits the amplitudes are reshaped into a `2^⌈q/2⌉ × 2^⌊q/2⌋`
//! matrix `C = U Σ Vᵀ` and the circuit is built as:
//!
//! 1. prepare `Σ λ_j |j⟩` on the low qubits of the leading register
//!    (recursively, on `⌈log₂ rank⌉` qubits),
//! 2. CNOT each of those qubits onto its partner in the trailing register,
//! 3. apply `U` to the leading register,
//! 4. apply `V` to the trailing register.
//!
//! A rank-1 split skips the fan entirely and prepares the two factors
//! independently. A single qubit is one ROT.

mod data;
mod naive;

use serde::{Deserialize, Serialize};

pub use data::{normalize, schmidt_split, schmidt_split_with, DataVector, SchmidtSplit};

use crate::circuit::{count_gates, Circuit, Gate, GateCounts};
use crate::error::{Error, Result};
use crate::numerics::RealMatrix;
use crate::simulator::{fidelity, run, StateVector};
use crate::synth::{synthesize_orthogonal, SynthMode, SynthPath};

/// Rotations with a smaller angle are dropped.
pub const ANGLE_EPS: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodeMode {
    Schmidt,
    Naive,
}

impl EncodeMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EncodeMode::Schmidt => "schmidt",
            EncodeMode::Naive => "naive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EncoderConfig {
    pub synth: SynthMode,
    /// Relative threshold below which a Schmidt coefficient counts as zero.
    pub rank_tol: f64,
    /// Simulate the circuit and record its fidelity.
    pub verify: bool,
}

impl Default for EncoderConfig {
    fn default() -> Self {
        Self {
            synth: SynthMode::Exact,
            rank_tol: crate::DEFAULT_RANK_TOL,
            verify: true,
        }
    }
}

impl EncoderConfig {
    fn check(&self) -> Result<()> {
        if !(self.rank_tol.is_finite() && (0.0..1.0).contains(&self.rank_tol)) {
            return Err(Error::InvalidInput(format!(
                "rank tolerance must lie in [0, 1), got {}",
                self.rank_tol
            )));
        }
        Ok(())
    }
}

/// Gate positions that close each stage of the outermost split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepBoundaries {
    pub prepare: usize,
    pub fan: usize,
    pub left_basis: usize,
    pub right_basis: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EncodeReport {
    pub mode: EncodeMode,
    pub qubits: usize,
    /// `|⟨data|circuit⟩|²`, present when the circuit was simulated.
    pub fidelity: Option<f64>,
    pub counts: GateCounts,
    /// Schmidt rank of every split, in the order the splits were made
    /// (outermost first, then the coefficient register, then the bases).
    pub schmidt_ranks: Vec<usize>,
    pub synthesis_paths: Vec<SynthPath>,
    /// Stage ends of the outermost split; `None` when it had rank 1.
    pub steps: Option<StepBoundaries>,
}

pub fn encode_schmidt(d: &DataVector, synth: SynthMode) -> Result<(Circuit, EncodeReport)> {
    encode_schmidt_with(
        d,
        &EncoderConfig {
            synth,
            ..EncoderConfig::default()
        },
    )
}

pub fn encode_schmidt_with(d: &DataVector, cfg: &EncoderConfig) -> Result<(Circuit, EncodeReport)> {
    cfg.check()?;
    let q = d.qubits();
    let register: Vec<usize> = (0..q).collect();
    let mut builder = Builder {
        cfg,
        gates: Vec::new(),
        ranks: Vec::new(),
        paths: Vec::new(),
        steps: None,
    };
    builder.prepare(d.values(), &register, 0)?;
    let circuit = Circuit::from_gates(q, builder.gates)?;
    let report = EncodeReport {
        mode: EncodeMode::Schmidt,
        qubits: q,
        fidelity: verify(cfg.verify, &circuit, d)?,
        counts: count_gates(&circuit),
        schmidt_ranks: builder.ranks,
        synthesis_paths: builder.paths,
        steps: builder.steps,
    };
    Ok((circuit, report))
}

pub fn encode_naive(d: &DataVector) -> Result<(Circuit, EncodeReport)> {
    encode_naive_with(d, true)
}

pub fn encode_naive_with(d: &DataVector, verify_fidelity: bool) -> Result<(Circuit, EncodeReport)> {
    let q = d.qubits();
    let circuit = Circuit::from_gates(q, naive::naive_gates(d.values())?)?;
    let report = EncodeReport {
        mode: EncodeMode::Naive,
        qubits: q,
        fidelity: verify(verify_fidelity, &circuit, d)?,
        counts: count_gates(&circuit),
        schmidt_ranks: Vec::new(),
        synthesis_paths: Vec::new(),
        steps: None,
    };
    Ok((circuit, report))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub schmidt: EncodeReport,
    pub naive: EncodeReport,
}

/// Runs both encoders on the same data.
pub fn compare(d: &DataVector, synth: SynthMode) -> Result<Comparison> {
    if d.qubits() < 2 {
        return Err(Error::InvalidInput(
            "comparison needs at least two qubits".into(),
        ));
    }
    let (_, schmidt) = encode_schmidt(d, synth)?;
    let (_, naive) = encode_naive(d)?;
    Ok(Comparison { schmidt, naive })
}

fn verify(enabled: bool, circuit: &Circuit, d: &DataVector) -> Result<Option<f64>> {
    if !enabled {
        return Ok(None);
    }
    let target = StateVector::from_real(d.values())?;
    Ok(Some(fidelity(&run(circuit)?, &target)?))
}

struct Builder<'a> {
    cfg: &'a EncoderConfig,
    gates: Vec<Gate>,
    ranks: Vec<usize>,
    paths: Vec<SynthPath>,
    steps: Option<StepBoundaries>,
}

impl Builder<'_> {
    /// Appends gates taking `|0…0⟩` on `register` to the unit vector `values`.
    fn prepare(&mut self, values: &[f64], register: &[usize], depth: usize) -> Result<()> {
        if register.len() == 1 {
            let theta = values[1].atan2(values[0]);
            if theta.abs() > ANGLE_EPS {
                self.gates.push(Gate::rot(theta, register[0]));
            }
            return Ok(());
        }
        let split = schmidt_split_with(values, self.cfg.rank_tol)?;
        let rank = split.rank.max(1);
        self.ranks.push(rank);
        let (left, right) = register.split_at(split.left_qubits);

        if rank == 1 {
            let u0 = unit(split.svd.u.column(0));
            let v0 = unit(split.svd.v.column(0));
            self.prepare(&u0, left, depth + 1)?;
            return self.prepare(&v0, right, depth + 1);
        }

        let mut u = split.svd.u.clone();
        let mut v = split.svd.v.clone();
        let mut lambda: Vec<f64> = split.lambda[..rank].to_vec();
        if self.cfg.synth == SynthMode::Exact {
            fix_determinants(&mut u, &mut v, &mut lambda, left.len(), right.len());
        }

        // Step 1: Σ λ_j |j⟩ on the lowest `bits` qubits of the leading register
        let bits = usize::BITS as usize - (rank - 1).leading_zeros() as usize;
        let mut coeffs = vec![0.0; 1 << bits];
        coeffs[..rank].copy_from_slice(&lambda);
        let coeffs = unit(coeffs);
        self.prepare(&coeffs, &left[left.len() - bits..], depth + 1)?;
        let prepare_end = self.gates.len();

        // Step 2: copy the label, |j⟩|0⟩ → |j⟩|j⟩
        for p in 0..bits {
            self.gates
                .push(Gate::cnot(left[left.len() - 1 - p], right[right.len() - 1 - p]));
        }
        let fan_end = self.gates.len();

        // Steps 3 and 4: |j⟩|j⟩ → u_j ⊗ v_j
        self.basis_change(&u, left)?;
        let left_end = self.gates.len();
        self.basis_change(&v, right)?;

        if depth == 0 {
            self.steps = Some(StepBoundaries {
                prepare: prepare_end,
                fan: fan_end,
                left_basis: left_end,
                right_basis: self.gates.len(),
            });
        }
        Ok(())
    }

    fn basis_change(&mut self, m: &RealMatrix, register: &[usize]) -> Result<()> {
        if m.max_abs_diff(&RealMatrix::identity(m.rows())) <= ANGLE_EPS {
            return Ok(());
        }
        let out = synthesize_orthogonal(m, register, self.cfg.synth)?;
        self.paths.push(out.path);
        self.gates.extend(out.gates);
        Ok(())
    }
}

/// Keeps `Σ λ_j u_j ⊗ v_j` fixed while making `det U = det V = +1` on
/// registers of three or more qubits, where no gate sequence has determinant −1.
fn fix_determinants(
    u: &mut RealMatrix,
    v: &mut RealMatrix,
    lambda: &mut [f64],
    left_qubits: usize,
    right_qubits: usize,
) {
    let rank = lambda.len();
    let bad_u = left_qubits >= 3 && u.determinant() < 0.0;
    let bad_v = right_qubits >= 3 && v.determinant() < 0.0;
    match (bad_u, bad_v) {
        (true, true) => {
            u.negate_column(rank - 1);
            v.negate_column(rank - 1);
        }
        (true, false) => flip_one(u, lambda),
        (false, true) => flip_one(v, lambda),
        (false, false) => {}
    }
}

/// Negates a column nobody reads, or else a paired one together with its coefficient.
fn flip_one(m: &mut RealMatrix, lambda: &mut [f64]) {
    let rank = lambda.len();
    if rank < m.cols() {
        m.negate_column(m.cols() - 1);
    } else {
        m.negate_column(rank - 1);
        lambda[rank - 1] = -lambda[rank - 1];
    }
}

fn unit(mut v: Vec<f64>) -> Vec<f64> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= n);
    v
}
