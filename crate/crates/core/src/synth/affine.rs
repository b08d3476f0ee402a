//! Permutation matrices whose index map is affine over GF(2).
//!
//! A basis permutation `x ↦ A·x ⊕ b` is realized as X gates for `A⁻¹·b`
//! followed by a reversible linear circuit for `A`: SWAPs when `A` only
//! permutes wires, otherwise CNOTs from Gaussian elimination.

use crate::circuit::Gate;
use crate::numerics::RealMatrix;

const ENTRY_TOL: f64 = 1e-10;

/// Bit of qubit `q` in a `k`-qubit big-endian index.
#[inline]
pub(crate) fn qubit_bit(k: usize, q: usize) -> usize {
    1 << (k - 1 - q)
}

/// Reads `m` as a 0/1 permutation: `map[j]` is the row holding the 1 of column `j`.
pub fn as_permutation(m: &RealMatrix) -> Option<Vec<usize>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut map = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for j in 0..n {
        let mut hit = None;
        for r in 0..n {
            let v = m[(r, j)];
            if (v - 1.0).abs() <= ENTRY_TOL {
                if hit.is_some() {
                    return None;
                }
                hit = Some(r);
            } else if v.abs() > ENTRY_TOL {
                return None;
            }
        }
        let r = hit?;
        if seen[r] {
            return None;
        }
        seen[r] = true;
        map.push(r);
    }
    Some(map)
}

/// Gates for `m` if it is a permutation with an affine index map, else `None`.
/// Gate indices are local: qubit `q` of the `log2(dim)`-qubit register.
pub fn recognize_affine_permutation(m: &RealMatrix) -> Option<Vec<Gate>> {
    let map = as_permutation(m)?;
    let n = map.len();
    if !n.is_power_of_two() || n < 2 {
        return None;
    }
    let k = n.trailing_zeros() as usize;
    let offset = map[0];
    // columns[q]: image of the unit vector on qubit q under the linear part
    let columns: Vec<usize> = (0..k).map(|q| map[qubit_bit(k, q)] ^ offset).collect();
    let linear = |x: usize| -> usize {
        (0..k)
            .filter(|&q| x & qubit_bit(k, q) != 0)
            .fold(0, |acc, q| acc ^ columns[q])
    };
    if (0..n).any(|x| map[x] != linear(x) ^ offset) {
        return None;
    }

    // x ↦ A(x ⊕ c) with A·c = offset, i.e. c is the preimage of |0…0⟩
    let pre_flip = map.iter().position(|&y| y == 0)?;
    let mut gates: Vec<Gate> = (0..k)
        .filter(|&q| pre_flip & qubit_bit(k, q) != 0)
        .map(Gate::x)
        .collect();
    gates.extend(linear_gates(k, &columns));
    Some(gates)
}

/// Reversible circuit for the invertible GF(2) map with the given columns.
fn linear_gates(k: usize, columns: &[usize]) -> Vec<Gate> {
    if let Some(dest) = wire_destinations(k, columns) {
        return swap_network(&dest)
            .into_iter()
            .map(|(a, b)| Gate::swap(a, b))
            .collect();
    }
    // a[r][c]: bit r of the image of unit vector c
    let mut a: Vec<Vec<bool>> = (0..k)
        .map(|r| (0..k).map(|c| columns[c] & qubit_bit(k, r) != 0).collect())
        .collect();
    // row additions (target, control) that reduce `a` to the identity
    let mut ops: Vec<(usize, usize)> = Vec::new();
    let mut add_row = |a: &mut Vec<Vec<bool>>, target: usize, control: usize| {
        let src = a[control].clone();
        a[target].iter_mut().zip(src).for_each(|(t, v)| *t ^= v);
        ops.push((target, control));
    };
    for col in 0..k {
        if !a[col][col] {
            let r = (col + 1..k)
                .find(|&r| a[r][col])
                .expect("invertible map has a pivot");
            add_row(&mut a, col, r);
        }
        for r in 0..k {
            if r != col && a[r][col] {
                add_row(&mut a, r, col);
            }
        }
    }
    // A = E_1 ⋯ E_p, so the circuit applies E_p first
    ops.iter()
        .rev()
        .map(|&(target, control)| Gate::cnot(control, target))
        .collect()
}

/// `Some(dest)` when the linear map only moves wire `q` to wire `dest[q]`.
fn wire_destinations(k: usize, columns: &[usize]) -> Option<Vec<usize>> {
    columns
        .iter()
        .map(|&col| {
            (col.count_ones() == 1).then(|| k - 1 - col.trailing_zeros() as usize)
        })
        .collect()
}

/// SWAPs moving the content of wire `q` to wire `dest[q]`, in application order.
pub(crate) fn swap_network(dest: &[usize]) -> Vec<(usize, usize)> {
    let k = dest.len();
    // holder[w]: original wire whose content currently sits on wire w
    let mut holder: Vec<usize> = (0..k).collect();
    let mut swaps = Vec::new();
    for t in 0..k {
        let origin = dest.iter().position(|&d| d == t).expect("dest is a permutation");
        let at = holder.iter().position(|&h| h == origin).unwrap();
        if at != t {
            swaps.push((at.min(t), at.max(t)));
            holder.swap(at, t);
        }
    }
    swaps
}
