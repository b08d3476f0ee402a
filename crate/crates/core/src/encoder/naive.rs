//! Baseline encoder: a cascade of uniformly controlled rotations.
//!
//! Qubit `k` is rotated by a multiplexor controlled on qubits `0..k`, with
//! angles bisecting the amplitude tree. The last level uses signed
//! amplitudes, every other level uses subtree norms.

use crate::circuit::Gate;
use crate::error::Result;
use crate::synth::multiplexed_rot;

/// Angles for qubit `level`, indexed by the prefix on qubits `0..level`.
pub(crate) fn level_angles(values: &[f64], level: usize) -> Vec<f64> {
    let q = values.len().trailing_zeros() as usize;
    let prefixes = 1usize << level;
    let half = values.len() >> (level + 1);
    (0..prefixes)
        .map(|b| {
            let start = b * 2 * half;
            if level + 1 == q {
                values[start + 1].atan2(values[start])
            } else {
                let norm = |s: &[f64]| s.iter().map(|v| v * v).sum::<f64>().sqrt();
                let n0 = norm(&values[start..start + half]);
                let n1 = norm(&values[start + half..start + 2 * half]);
                n1.atan2(n0)
            }
        })
        .collect()
}

pub(crate) fn naive_gates(values: &[f64]) -> Result<Vec<Gate>> {
    let q = values.len().trailing_zeros() as usize;
    let mut gates = vec![Gate::rot(level_angles(values, 0)[0], 0)];
    for level in 1..q {
        let controls: Vec<usize> = (0..level).collect();
        gates.extend(multiplexed_rot(&level_angles(values, level), &controls, level)?);
    }
    Ok(gates)
}
