//! Dense statevector simulator, the correctness oracle for compiled circuits.
//!
//! Amplitudes are complex even though every gate in the IR is real; keeping
//! the imaginary parts around lets tests check that they stay at zero.

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::numerics::RealMatrix;

pub const MAX_WIDTH: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    width: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Real parts of the amplitudes.
    pub fn real_parts(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.re).collect()
    }

    pub fn max_imaginary(&self) -> f64 {
        self.amps.iter().map(|a| a.im.abs()).fold(0.0, f64::max)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// State with the given real amplitudes (not renormalized).
    pub fn from_real(values: &[f64]) -> Result<Self> {
        let width = width_for_len(values.len())?;
        Ok(Self {
            width,
            amps: values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(width: usize, index: usize) -> Result<Self> {
        let mut s = zero_state(width)?;
        if index >= s.amps.len() {
            return Err(Error::InvalidInput(format!(
                "basis index {index} out of range for width {width}"
            )));
        }
        s.amps[0] = Complex64::new(0.0, 0.0);
        s.amps[index] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Value-semantic gate application.
    pub fn apply(&self, g: &Gate) -> Result<StateVector> {
        let mut next = self.clone();
        next.apply_in_place(g)?;
        Ok(next)
    }

    pub fn apply_in_place(&mut self, g: &Gate) -> Result<()> {
        g.validate(self.width)?;
        match g {
            Gate::Rot { theta, target } => self.rot(*theta, *target),
            Gate::X { target } => {
                let bit = self.bit(*target);
                for i in 0..self.amps.len() {
                    if i & bit == 0 {
                        self.amps.swap(i, i | bit);
                    }
                }
            }
            Gate::Cnot { control, target } => {
                let (cb, tb) = (self.bit(*control), self.bit(*target));
                for i in 0..self.amps.len() {
                    if i & cb != 0 && i & tb == 0 {
                        self.amps.swap(i, i | tb);
                    }
                }
            }
            Gate::Swap { a, b } => {
                let (ab, bb) = (self.bit(*a), self.bit(*b));
                for i in 0..self.amps.len() {
                    if i & ab != 0 && i & bb == 0 {
                        self.amps.swap(i, (i & !ab) | bb);
                    }
                }
            }
            Gate::Opaque { targets, matrix } => self.opaque(targets, matrix),
        }
        Ok(())
    }

    pub fn run_gates<'a>(&mut self, gates: impl IntoIterator<Item = &'a Gate>) -> Result<()> {
        for g in gates {
            self.apply_in_place(g)?;
        }
        Ok(())
    }

    #[inline]
    fn bit(&self, qubit: usize) -> usize {
        1 << (self.width - 1 - qubit)
    }

    fn rot(&mut self, theta: f64, target: usize) {
        let (s, c) = theta.sin_cos();
        let bit = self.bit(target);
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let a0 = self.amps[i];
                let a1 = self.amps[i | bit];
                self.amps[i] = a0 * c - a1 * s;
                self.amps[i | bit] = a0 * s + a1 * c;
            }
        }
    }

    fn opaque(&mut self, targets: &[usize], m: &RealMatrix) {
        let k = targets.len();
        let dim = 1usize << k;
        // offsets[local] = global index bits for local basis state `local`
        let offsets: Vec<usize> = (0..dim)
            .map(|local| {
                (0..k)
                    .filter(|j| local & (1 << (k - 1 - j)) != 0)
                    .map(|j| self.bit(targets[j]))
                    .sum()
            })
            .collect();
        let mask: usize = targets.iter().map(|&t| self.bit(t)).sum();
        let mut gathered = vec![Complex64::new(0.0, 0.0); dim];
        for base in 0..self.amps.len() {
            if base & mask != 0 {
                continue;
            }
            for (l, off) in offsets.iter().enumerate() {
                gathered[l] = self.amps[base | off];
            }
            for (r, off) in offsets.iter().enumerate() {
                let row = m.row(r);
                self.amps[base | off] = row
                    .iter()
                    .zip(&gathered)
                    .map(|(mr, a)| a * *mr)
                    .sum();
            }
        }
    }
}

fn width_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let width = len.trailing_zeros() as usize;
    if width > MAX_WIDTH {
        return Err(Error::WidthOutOfRange(width));
    }
    Ok(width)
}

/// `|0…0⟩` on `width` qubits.
pub fn zero_state(width: usize) -> Result<StateVector> {
    if !(1..=MAX_WIDTH).contains(&width) {
        return Err(Error::WidthOutOfRange(width));
    }
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
    amps[0] = Complex64::new(1.0, 0.0);
    Ok(StateVector { width, amps })
}

/// Simulates `c` starting from the all-zero state.
pub fn run(c: &Circuit) -> Result<StateVector> {
    let mut s = zero_state(c.width())?;
    s.run_gates(c.gates())?;
    Ok(s)
}

/// `|⟨s|t⟩|²`.
pub fn fidelity(s: &StateVector, t: &StateVector) -> Result<f64> {
    if s.width != t.width {
        return Err(Error::DimensionMismatch(format!(
            "fidelity between widths {} and {}",
            s.width, t.width
        )));
    }
    let overlap: Complex64 = s.amps.iter().zip(&t.amps).map(|(a, b)| a.conj() * b).sum();
    Ok(overlap.norm_sqr().clamp(0.0, 1.0))
}

/// Real matrix implemented by `gates` on a `width`-qubit register, found by
/// simulating every basis state. Column `j` is the image of `|j⟩`.
pub fn gate_matrix(gates: &[Gate], width: usize) -> Result<RealMatrix> {
    let dim = 1usize << width;
    let mut m = RealMatrix::zeros(dim, dim);
    for j in 0..dim {
        let mut s = StateVector::basis(width, j)?;
        s.run_gates(gates)?;
        for (i, a) in s.amps.iter().enumerate() {
            m[(i, j)] = a.re;
        }
    }
    Ok(m)
}
