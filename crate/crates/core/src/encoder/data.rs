use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{rank_with_tolerance, svd, RealMatrix, SvdResult};
use crate::simulator::MAX_WIDTH;

/// A unit-norm amplitude vector of length `2^q`, plus the norm of the raw input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DataVector {
    values: Vec<f64>,
    norm: f64,
}

impl DataVector {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Euclidean norm of the data before normalization.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn qubits(&self) -> usize {
        self.values.len().trailing_zeros() as usize
    }
}

/// Scales `raw` to unit Euclidean norm.
pub fn normalize(raw: &[f64]) -> Result<DataVector> {
    let len = raw.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let q = len.trailing_zeros() as usize;
    if q > MAX_WIDTH {
        return Err(Error::WidthOutOfRange(q));
    }
    if let Some(pos) = raw.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "entry {pos} is not finite ({})",
            raw[pos]
        )));
    }
    // scale first so huge or tiny inputs do not overflow the sum of squares
    let peak = raw.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if peak == 0.0 {
        return Err(Error::ZeroVector);
    }
    let scaled_norm = raw.iter().map(|v| (v / peak).powi(2)).sum::<f64>().sqrt();
    let values = raw.iter().map(|v| (v / peak) / scaled_norm).collect();
    Ok(DataVector {
        values,
        norm: peak * scaled_norm,
    })
}

/// Bipartition of a `q`-qubit amplitude vector into a leading register of
/// `⌈q/2⌉` qubits (rows of `c`) and a trailing one of `⌊q/2⌋` qubits (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSplit {
    pub left_qubits: usize,
    pub right_qubits: usize,
    /// Row-major reshape: `c[(r, s)] = values[r · 2^right + s]`.
    pub c: RealMatrix,
    pub svd: SvdResult,
    /// Schmidt coefficients, descending; equal to `svd.sigma`.
    pub lambda: Vec<f64>,
    pub rank: usize,
}

pub fn schmidt_split(d: &DataVector) -> Result<SchmidtSplit> {
    schmidt_split_with(d.values(), crate::DEFAULT_RANK_TOL)
}

/// Split of a unit vector with a relative rank tolerance.
pub fn schmidt_split_with(values: &[f64], rank_tol: f64) -> Result<SchmidtSplit> {
    let len = values.len();
    if len < 4 || !len.is_power_of_two() {
        return Err(Error::InvalidInput(format!(
            "a Schmidt split needs at least two qubits, got {len} amplitudes"
        )));
    }
    let q = len.trailing_zeros() as usize;
    let right_qubits = q / 2;
    let left_qubits = q - right_qubits;
    let c = RealMatrix::new(1 << left_qubits, 1 << right_qubits, values.to_vec())?;
    let svd = svd(&c)?;
    let lambda = svd.sigma.clone();
    let rank = rank_with_tolerance(&lambda, rank_tol);
    Ok(SchmidtSplit {
        left_qubits,
        right_qubits,
        c,
        svd,
        lambda,
        rank,
    })
}
