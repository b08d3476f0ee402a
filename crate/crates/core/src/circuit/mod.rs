//! Gate-level IR, SWAP lowering, gate counting and OpenQASM 2.0 emission.

mod gate;
mod qasm;

use serde::{Deserialize, Serialize};

pub use gate::{Gate, OPAQUE_ORTHOGONALITY_TOL};
pub use qasm::{emit_qasm, format_angle};

use crate::error::{Error, Result};

/// Ordered gate list over `width` qubits (qubit 0 is the most significant bit).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(width: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Self::new(width);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn into_gates(self) -> Vec<Gate> {
        self.gates
    }

    /// Returns a copy of the circuit with `gate` appended.
    pub fn append(&self, gate: Gate) -> Result<Circuit> {
        let mut next = self.clone();
        next.push(gate)?;
        Ok(next)
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    /// Circuit holding the first `n` gates.
    pub fn prefix(&self, n: usize) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates[..n.min(self.gates.len())].to_vec(),
        }
    }

    pub fn has_opaque(&self) -> bool {
        self.gates.iter().any(|g| matches!(g, Gate::Opaque { .. }))
    }
}

/// Rewrites every SWAP as three CNOTs; the result only holds ROT, X and CNOT.
pub fn lower(c: &Circuit) -> Result<Circuit> {
    let mut gates = Vec::with_capacity(c.gates.len());
    for (position, g) in c.gates.iter().enumerate() {
        match g {
            Gate::Swap { a, b } => {
                gates.push(Gate::cnot(*a, *b));
                gates.push(Gate::cnot(*b, *a));
                gates.push(Gate::cnot(*a, *b));
            }
            Gate::Opaque { .. } => return Err(Error::NotLowerable { position }),
            other => gates.push(other.clone()),
        }
    }
    Ok(Circuit {
        width: c.width,
        gates,
    })
}

/// Per-kind gate tallies plus two-qubit costs before and after lowering.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateCounts {
    pub rot: usize,
    pub x: usize,
    pub cnot: usize,
    pub swap: usize,
    pub opaque: usize,
    pub total: usize,
    /// CNOT + SWAP + opaque gates on two or more qubits.
    pub two_qubit_raw: usize,
    /// CNOTs after lowering; `None` when opaque gates make lowering impossible.
    pub two_qubit_lowered: Option<usize>,
}

pub fn count_gates(c: &Circuit) -> GateCounts {
    let mut k = GateCounts::default();
    let mut multi_opaque = 0;
    for g in &c.gates {
        match g {
            Gate::Rot { .. } => k.rot += 1,
            Gate::X { .. } => k.x += 1,
            Gate::Cnot { .. } => k.cnot += 1,
            Gate::Swap { .. } => k.swap += 1,
            Gate::Opaque { targets, .. } => {
                k.opaque += 1;
                if targets.len() >= 2 {
                    multi_opaque += 1;
                }
            }
        }
    }
    k.total = c.gates.len();
    k.two_qubit_raw = k.cnot + k.swap + multi_opaque;
    k.two_qubit_lowered = (k.opaque == 0).then_some(k.cnot + 3 * k.swap);
    k
}
