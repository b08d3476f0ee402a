use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::RealMatrix;

/// Tolerance used when validating the matrix of an opaque gate.
pub const OPAQUE_ORTHOGONALITY_TOL: f64 = 1e-10;

/// A gate in the circuit IR.
///
/// `Rot` is the real rotation `[[cos θ, -sin θ], [sin θ, cos θ]]`, which is
/// the standard `ry(2θ)`. `Opaque` carries an orthogonal matrix acting on
/// `targets`, with `targets[0]` as the most significant bit of the local
/// index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Gate {
    Rot { theta: f64, target: usize },
    X { target: usize },
    Cnot { control: usize, target: usize },
    Swap { a: usize, b: usize },
    Opaque { targets: Vec<usize>, matrix: RealMatrix },
}

impl Gate {
    pub fn rot(theta: f64, target: usize) -> Self {
        Gate::Rot { theta, target }
    }

    pub fn x(target: usize) -> Self {
        Gate::X { target }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::Swap { a, b }
    }

    /// Opaque gate; the matrix must be `2^k × 2^k` and orthogonal.
    pub fn opaque(targets: Vec<usize>, matrix: RealMatrix) -> Result<Self> {
        let dim = 1usize
            .checked_shl(targets.len() as u32)
            .filter(|_| !targets.is_empty())
            .ok_or_else(|| Error::InvalidInput("opaque gate needs 1..=24 targets".into()))?;
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "opaque gate on {} qubits needs a {dim}x{dim} matrix, got {}x{}",
                targets.len(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        matrix.check_orthogonal(OPAQUE_ORTHOGONALITY_TOL)?;
        let g = Gate::Opaque { targets, matrix };
        g.check_distinct()?;
        Ok(g)
    }

    /// Qubits touched by the gate, in gate order.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::Rot { target, .. } | Gate::X { target } => vec![*target],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::Swap { a, b } => vec![*a, *b],
            Gate::Opaque { targets, .. } => targets.clone(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Gate::Rot { .. } | Gate::X { .. } => 1,
            Gate::Cnot { .. } | Gate::Swap { .. } => 2,
            Gate::Opaque { targets, .. } => targets.len(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::Rot { .. } => "rot",
            Gate::X { .. } => "x",
            Gate::Cnot { .. } => "cnot",
            Gate::Swap { .. } => "swap",
            Gate::Opaque { .. } => "opaque",
        }
    }

    /// Relabels every qubit index through `f`.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Gate {
        match self {
            Gate::Rot { theta, target } => Gate::Rot {
                theta: *theta,
                target: f(*target),
            },
            Gate::X { target } => Gate::X { target: f(*target) },
            Gate::Cnot { control, target } => Gate::Cnot {
                control: f(*control),
                target: f(*target),
            },
            Gate::Swap { a, b } => Gate::Swap { a: f(*a), b: f(*b) },
            Gate::Opaque { targets, matrix } => Gate::Opaque {
                targets: targets.iter().map(|&t| f(t)).collect(),
                matrix: matrix.clone(),
            },
        }
    }

    pub(crate) fn check_distinct(&self) -> Result<()> {
        let qs = self.qubits();
        for (i, q) in qs.iter().enumerate() {
            if qs[..i].contains(q) {
                return Err(Error::DuplicateQubit(*q));
            }
        }
        Ok(())
    }

    /// Validates indices against a circuit of `width` qubits.
    pub fn validate(&self, width: usize) -> Result<()> {
        if let Some(&index) = self.qubits().iter().find(|&&q| q >= width) {
            return Err(Error::QubitOutOfRange { index, width });
        }
        self.check_distinct()?;
        if let Gate::Rot { theta, .. } = self {
            if !theta.is_finite() {
                return Err(Error::InvalidInput(format!("rotation angle {theta} is not finite")));
            }
        }
        if let Gate::Opaque { targets, matrix } = self {
            let dim = 1usize << targets.len();
            if matrix.rows() != dim || matrix.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "opaque gate on {} qubits carries a {}x{} matrix",
                    targets.len(),
                    matrix.rows(),
                    matrix.cols()
                )));
            }
        }
        Ok(())
    }

    /// The 2×2 matrix of a rotation, row-major.
    pub fn rot_matrix(theta: f64) -> [[f64; 2]; 2] {
        let (s, c) = theta.sin_cos();
        [[c, -s], [s, c]]
    }
}
