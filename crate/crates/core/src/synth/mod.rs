//! Gate synthesis for real orthogonal matrices.
//!
//! [`synthesize_orthogonal`] tries the cheap structural recognizers before the
//! generic two-level path, and checks every result against the simulator.
//!
//! On three or more qubits every ROT, X, CNOT and SWAP has determinant +1, so
//! an orthogonal matrix of determinant −1 on such a register has no exact
//! circuit in this gate set and is reported as a synthesis error.

mod affine;
mod givens;
mod kronecker;
mod multiplex;

use serde::{Deserialize, Serialize};

pub use affine::{as_permutation, recognize_affine_permutation};
pub use givens::{controlled_rot, givens_decompose, two_level_to_gates, GivensDecomposition};
pub use kronecker::{
    factor_gates, kronecker_factors, recognize_kronecker_rotations, recognize_permuted_kronecker,
    MAX_PERMUTED_WIDTH,
};
pub use multiplex::multiplexed_rot;

use crate::circuit::Gate;
use crate::error::{Error, Result};
use crate::numerics::{matmul, RealMatrix};
use crate::simulator::gate_matrix;

/// Orthogonality required of synthesis inputs.
pub const INPUT_TOL: f64 = 1e-10;
/// Recognizer results must reproduce the target this closely.
pub const RECOGNIZER_TOL: f64 = 1e-10;
/// Bound on the residual of any exact synthesis.
pub const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SynthMode {
    #[default]
    Exact,
    Opaque,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SynthPath {
    AffinePermutation,
    KroneckerProduct,
    GivensFallback,
    Opaque,
}

impl SynthPath {
    pub fn as_str(self) -> &'static str {
        match self {
            SynthPath::AffinePermutation => "affine-permutation",
            SynthPath::KroneckerProduct => "kronecker-product",
            SynthPath::GivensFallback => "givens-fallback",
            SynthPath::Opaque => "opaque",
        }
    }
}

impl std::fmt::Display for SynthPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthesisOutcome {
    /// Gates on the caller's `targets`.
    pub gates: Vec<Gate>,
    pub path: SynthPath,
    /// Largest entrywise deviation of the composed gates from the target.
    pub residual: f64,
}

/// Compiles `m` into gates acting on `targets` (`targets[0]` is the most
/// significant bit of `m`'s row index).
pub fn synthesize_orthogonal(
    m: &RealMatrix,
    targets: &[usize],
    mode: SynthMode,
) -> Result<SynthesisOutcome> {
    let k = targets.len();
    if !m.is_square() || !m.rows().is_power_of_two() || m.rows() < 2 {
        return Err(Error::NotPowerOfTwo(m.rows().max(m.cols())));
    }
    if m.rows() != 1usize.checked_shl(k as u32).unwrap_or(0) {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix on {k} target qubits",
            m.rows(),
            m.cols()
        )));
    }
    m.check_orthogonal(INPUT_TOL)?;
    for (i, q) in targets.iter().enumerate() {
        if targets[..i].contains(q) {
            return Err(Error::DuplicateQubit(*q));
        }
    }

    let place = |gates: Vec<Gate>| -> Vec<Gate> {
        gates.iter().map(|g| g.remap(|q| targets[q])).collect()
    };

    if mode == SynthMode::Opaque {
        return Ok(SynthesisOutcome {
            gates: vec![Gate::opaque(targets.to_vec(), m.clone())?],
            path: SynthPath::Opaque,
            residual: 0.0,
        });
    }

    type Recognizer = fn(&RealMatrix) -> Option<Vec<Gate>>;
    let recognizers: [(SynthPath, Recognizer); 2] = [
        (SynthPath::AffinePermutation, recognize_affine_permutation),
        (SynthPath::KroneckerProduct, recognize_permuted_kronecker),
    ];
    for (path, recognize) in recognizers {
        if let Some(local) = recognize(m) {
            let residual = residual(&local, k, m)?;
            if residual <= RECOGNIZER_TOL {
                return Ok(SynthesisOutcome {
                    gates: place(local),
                    path,
                    residual,
                });
            }
        }
    }

    let local = givens_gates(m, k)?;
    let residual = residual(&local, k, m)?;
    if residual > RESIDUAL_TOL {
        return Err(Error::Synthesis(format!(
            "two-level synthesis residual {residual:e} exceeds {RESIDUAL_TOL:e}"
        )));
    }
    Ok(SynthesisOutcome {
        gates: place(local),
        path: SynthPath::GivensFallback,
        residual,
    })
}

fn residual(local: &[Gate], k: usize, m: &RealMatrix) -> Result<f64> {
    Ok(gate_matrix(local, k)?.max_abs_diff(m))
}

/// Generic path in local indices; a determinant −1 is absorbed by a leading
/// X (one qubit) or CNOT (two qubits).
fn givens_gates(m: &RealMatrix, k: usize) -> Result<Vec<Gate>> {
    let mut prefix = Vec::new();
    let mut body = m.clone();
    if m.determinant() < 0.0 {
        let flip = match k {
            1 => Gate::x(0),
            2 => Gate::cnot(0, 1),
            _ => {
                return Err(Error::Synthesis(format!(
                    "determinant -1 orthogonal matrix on {k} qubits is outside the \
                     group generated by ROT, X, CNOT and SWAP"
                )))
            }
        };
        // m = body · P with P an involution
        body = matmul(m, &gate_matrix(std::slice::from_ref(&flip), k)?)?;
        prefix.push(flip);
    }
    let decomposition = givens_decompose(&body)?;
    if decomposition.reflected {
        return Err(Error::Synthesis(
            "sign correction left a reflection behind".into(),
        ));
    }
    let targets: Vec<usize> = (0..k).collect();
    let mut gates = prefix;
    for &(i, j, theta) in &decomposition.rotations {
        gates.extend(two_level_to_gates(i, j, theta, &targets)?);
    }
    Ok(gates)
}
