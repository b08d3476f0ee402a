//! Uniformly controlled rotations in the Gray-code CNOT form.

use crate::circuit::Gate;
use crate::error::{Error, Result};

/// Rotation on `target` by `angles[b]` when the controls read `b`
/// (`controls[0]` is the most significant bit of `b`).
///
/// Emits `2^m` ROTs interleaved with `2^m` CNOTs. The ROT angles are
/// `θ_i = 2^{-m} Σ_b (−1)^{b·g_i} angles[b]` where `g_i` is the `i`-th Gray code.
pub fn multiplexed_rot(angles: &[f64], controls: &[usize], target: usize) -> Result<Vec<Gate>> {
    let m = controls.len();
    if m == 0 {
        return Err(Error::InvalidInput("multiplexor needs at least one control".into()));
    }
    if m >= usize::BITS as usize - 1 || angles.len() != 1 << m {
        return Err(Error::DimensionMismatch(format!(
            "{} angles for {m} controls",
            angles.len()
        )));
    }
    let n = angles.len();
    let gray = |i: usize| i ^ (i >> 1);
    let scale = 1.0 / n as f64;
    let mut gates = Vec::with_capacity(2 * n);
    for i in 0..n {
        let g = gray(i);
        let theta = scale
            * angles
                .iter()
                .enumerate()
                .map(|(b, a)| if (b & g).count_ones() % 2 == 0 { *a } else { -*a })
                .sum::<f64>();
        gates.push(Gate::rot(theta, target));
        let flipped = g ^ gray((i + 1) % n);
        let control = m - 1 - flipped.trailing_zeros() as usize;
        gates.push(Gate::cnot(controls[control], target));
    }
    Ok(gates)
}
