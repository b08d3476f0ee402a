//! Two-level (Givens) elimination and its expansion into ROT/X/CNOT gates.

use super::affine::qubit_bit;
use crate::circuit::Gate;
use crate::error::{Error, Result};
use crate::numerics::RealMatrix;

const ZERO_TOL: f64 = 1e-15;

/// Factorization `m = G(r_p) ⋯ G(r_1) · D` of an orthogonal matrix.
///
/// `G(i, j, θ)` maps `|i⟩ ↦ cos θ |i⟩ + sin θ |j⟩` and `|j⟩ ↦ −sin θ |i⟩ + cos θ |j⟩`.
/// `rotations` is listed in application order. `D` is the identity, or when
/// `reflected` is set, the identity with the last diagonal entry negated.
#[derive(Debug, Clone, PartialEq)]
pub struct GivensDecomposition {
    pub rotations: Vec<(usize, usize, f64)>,
    pub reflected: bool,
}

impl GivensDecomposition {
    /// Dense product of the factors, the reconstruction oracle.
    pub fn reconstruct(&self, n: usize) -> RealMatrix {
        let mut m = RealMatrix::identity(n);
        if self.reflected {
            m[(n - 1, n - 1)] = -1.0;
        }
        for &(i, j, theta) in &self.rotations {
            apply_rows(&mut m, i, j, theta);
        }
        m
    }
}

/// Left-multiplies `m` by `G(i, j, θ)`.
fn apply_rows(m: &mut RealMatrix, i: usize, j: usize, theta: f64) {
    let (s, c) = theta.sin_cos();
    for col in 0..m.cols() {
        let (a, b) = (m[(i, col)], m[(j, col)]);
        m[(i, col)] = c * a - s * b;
        m[(j, col)] = s * a + c * b;
    }
}

pub fn givens_decompose(m: &RealMatrix) -> Result<GivensDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "Givens decomposition needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    m.check_orthogonal(1e-10)?;
    let n = m.rows();
    let mut work = m.clone();
    // eliminated[t] = (c, r, φ) with G(c, r, φ)ᵀ applied at step t
    let mut eliminated = Vec::new();
    for c in 0..n.saturating_sub(1) {
        for r in c + 1..n {
            if work[(r, c)].abs() <= ZERO_TOL {
                continue;
            }
            let phi = work[(r, c)].atan2(work[(c, c)]);
            apply_rows(&mut work, c, r, -phi);
            eliminated.push((c, r, phi));
        }
        if work[(c, c)] < 0.0 {
            // pivot is −1: a π rotation with the last row flips it and the last sign
            apply_rows(&mut work, c, n - 1, std::f64::consts::PI);
            eliminated.push((c, n - 1, -std::f64::consts::PI));
        }
    }
    let reflected = work[(n - 1, n - 1)] < 0.0;
    eliminated.reverse();
    Ok(GivensDecomposition {
        rotations: eliminated,
        reflected,
    })
}

/// Gates for `G(i, j, θ)` on the register `targets` (`targets[0]` most significant).
pub fn two_level_to_gates(i: usize, j: usize, theta: f64, targets: &[usize]) -> Result<Vec<Gate>> {
    let k = targets.len();
    if k == 0 || k >= usize::BITS as usize {
        return Err(Error::InvalidInput("two-level rotation needs a register".into()));
    }
    let dim = 1usize << k;
    if i >= dim || j >= dim {
        return Err(Error::InvalidInput(format!(
            "basis index out of range for {k} qubits: ({i}, {j})"
        )));
    }
    if i == j {
        return Err(Error::InvalidInput(format!("two-level rotation on a single state {i}")));
    }
    let diff = i ^ j;
    let t = k - 1 - diff.trailing_zeros() as usize;
    // G(i, j, θ) = G(j, i, −θ); orient so |i⟩ has the target bit clear
    let (i, theta) = if i & qubit_bit(k, t) != 0 {
        (j, -theta)
    } else {
        (i, theta)
    };
    let conj: Vec<Gate> = (0..k)
        .filter(|&q| q != t && diff & qubit_bit(k, q) != 0)
        .map(|q| Gate::cnot(targets[t], targets[q]))
        .collect();
    let controls: Vec<usize> = (0..k).filter(|&q| q != t).map(|q| targets[q]).collect();
    let flips: Vec<Gate> = (0..k)
        .filter(|&q| q != t && i & qubit_bit(k, q) == 0)
        .map(|q| Gate::x(targets[q]))
        .collect();

    let mut gates = conj.clone();
    gates.extend(flips.iter().cloned());
    gates.extend(controlled_rot(theta, &controls, targets[t]));
    gates.extend(flips);
    gates.extend(conj.into_iter().rev());
    Ok(gates)
}

/// ROT(θ) on `target` when every control is 1, identity otherwise.
pub fn controlled_rot(theta: f64, controls: &[usize], target: usize) -> Vec<Gate> {
    let Some((&last, rest)) = controls.split_last() else {
        return vec![Gate::rot(theta, target)];
    };
    let mut gates = controlled_rot(theta / 2.0, rest, target);
    gates.push(Gate::cnot(last, target));
    gates.extend(controlled_rot(-theta / 2.0, rest, target));
    gates.push(Gate::cnot(last, target));
    gates
}
