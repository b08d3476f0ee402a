//! Tensor-product recognition by recursive nearest-Kronecker rank-1 fits.
//!
//! Each 2×2 factor is orthogonal: a rotation becomes one ROT, a reflection
//! becomes ROT followed by X. The permuted variant additionally tries every
//! reordering of the wires, which covers products preceded by SWAPs.

use itertools::Itertools;

use super::affine::{qubit_bit, swap_network};
use crate::circuit::Gate;
use crate::numerics::{matmul, svd, RealMatrix};

const FIT_TOL: f64 = 1e-10;
const ANGLE_EPS: f64 = 1e-15;

/// Wire reorderings are only searched up to this register width.
pub const MAX_PERMUTED_WIDTH: usize = 4;

/// Splits `m` into 2×2 orthogonal factors, qubit 0 first.
pub fn kronecker_factors(m: &RealMatrix) -> Option<Vec<RealMatrix>> {
    let n = m.rows();
    if !m.is_square() || n < 2 || !n.is_power_of_two() {
        return None;
    }
    let mut factors = Vec::new();
    let mut rest = m.clone();
    while rest.rows() > 2 {
        let (a, b) = split_leading(&rest)?;
        factors.push(a);
        rest = b;
    }
    if !rest.is_orthogonal(FIT_TOL) {
        return None;
    }
    factors.push(rest);
    let product = factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| acc.kron(f));
    (product.max_abs_diff(m) <= FIT_TOL).then_some(factors)
}

/// Best `m ≈ A ⊗ B` with `A` 2×2 orthogonal, or `None` if the fit is off.
fn split_leading(m: &RealMatrix) -> Option<(RealMatrix, RealMatrix)> {
    let h = m.rows() / 2;
    // r[(a1,b1), (ar,br)] = m[a1·h + ar, b1·h + br], rank 1 for a product
    let r = RealMatrix::from_fn(4, h * h, |row, col| {
        let (a1, b1) = (row / 2, row % 2);
        let (ar, br) = (col / h, col % h);
        m[(a1 * h + ar, b1 * h + br)]
    });
    let gram = matmul(&r, &r.transpose()).ok()?;
    let u0 = svd(&gram).ok()?.u.column(0);
    let w: Vec<f64> = (0..h * h)
        .map(|c| (0..4).map(|i| r[(i, c)] * u0[i]).sum())
        .collect();
    for i in 0..4 {
        for c in 0..h * h {
            if (r[(i, c)] - u0[i] * w[c]).abs() > FIT_TOL {
                return None;
            }
        }
    }
    let root2 = std::f64::consts::SQRT_2;
    let mut a = RealMatrix::from_fn(2, 2, |i, j| u0[i * 2 + j] * root2);
    let mut b = RealMatrix::from_fn(h, h, |i, j| w[i * h + j] / root2);
    // the pair is fixed up to a common sign; prefer a nonnegative leading column
    if a[(0, 0)] < -FIT_TOL || (a[(0, 0)].abs() <= FIT_TOL && a[(1, 0)] < 0.0) {
        a = a.scale(-1.0);
        b = b.scale(-1.0);
    }
    a.is_orthogonal(FIT_TOL).then_some((a, b))
}

/// Gates realizing a 2×2 orthogonal factor on `target`.
pub fn factor_gates(f: &RealMatrix, target: usize) -> Vec<Gate> {
    if f.determinant() > 0.0 {
        let theta = f[(1, 0)].atan2(f[(0, 0)]);
        if theta.abs() <= ANGLE_EPS {
            vec![]
        } else {
            vec![Gate::rot(theta, target)]
        }
    } else {
        // X·ROT(φ) = [[sin φ, cos φ], [cos φ, −sin φ]]
        let phi = f[(0, 0)].atan2(f[(1, 0)]);
        let mut gates = Vec::with_capacity(2);
        if phi.abs() > ANGLE_EPS {
            gates.push(Gate::rot(phi, target));
        }
        gates.push(Gate::x(target));
        gates
    }
}

/// Gates for `m` if it is a product of 2×2 orthogonal factors, in local indices.
pub fn recognize_kronecker_rotations(m: &RealMatrix) -> Option<Vec<Gate>> {
    let factors = kronecker_factors(m)?;
    Some(
        factors
            .iter()
            .enumerate()
            .flat_map(|(q, f)| factor_gates(f, q))
            .collect(),
    )
}

/// Like [`recognize_kronecker_rotations`] but also accepts `m = K·P` where
/// `P` permutes wires; the SWAPs for `P` come first.
pub fn recognize_permuted_kronecker(m: &RealMatrix) -> Option<Vec<Gate>> {
    if let Some(gates) = recognize_kronecker_rotations(m) {
        return Some(gates);
    }
    let n = m.rows();
    if !m.is_square() || n < 4 || !n.is_power_of_two() {
        return None;
    }
    let k = n.trailing_zeros() as usize;
    if k > MAX_PERMUTED_WIDTH {
        return None;
    }
    for dest in (0..k).permutations(k) {
        if dest.iter().enumerate().all(|(i, &d)| i == d) {
            continue;
        }
        // P|x⟩ = |moved(x)⟩; column y of K = m·Pᵀ is column moved⁻¹(y) of m
        let mut preimage = vec![0usize; n];
        for x in 0..n {
            let moved = (0..k)
                .filter(|&q| x & qubit_bit(k, q) != 0)
                .map(|q| qubit_bit(k, dest[q]))
                .sum::<usize>();
            preimage[moved] = x;
        }
        let kmat = m.select_columns(&preimage);
        if let Some(factors) = kronecker_factors(&kmat) {
            let mut gates: Vec<Gate> = swap_network(&dest)
                .into_iter()
                .map(|(a, b)| Gate::swap(a, b))
                .collect();
            for (q, f) in factors.iter().enumerate() {
                gates.extend(factor_gates(f, q));
            }
            return Some(gates);
        }
    }
    None
}
