//! Shared fixtures and oracles for the integration tests. Nothing here calls
//! into the numerics or simulator code it is used to check.

#![allow(dead_code)]

use qprep_core::{Gate, RealMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_vec(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.sample(StandardNormal)).collect()
}

pub fn unit_vec(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    loop {
        let v = gaussian_vec(rng, len);
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// Haar-distributed orthogonal matrix: Gram-Schmidt on Gaussian columns.
pub fn haar_orthogonal(rng: &mut impl Rng, n: usize) -> RealMatrix {
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = gaussian_vec(rng, n);
        for _ in 0..2 {
            for c in &cols {
                let dot: f64 = v.iter().zip(c).map(|(a, b)| a * b).sum();
                v.iter_mut().zip(c).for_each(|(a, b)| *a -= dot * b);
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    RealMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Haar sample conditioned on determinant +1.
pub fn haar_special_orthogonal(rng: &mut impl Rng, n: usize) -> RealMatrix {
    let mut m = haar_orthogonal(rng, n);
    if det(&m) < 0.0 {
        for i in 0..n {
            m[(i, 0)] = -m[(i, 0)];
        }
    }
    m
}

/// Determinant by Laplace-free Gaussian elimination on a copy.
pub fn det(m: &RealMatrix) -> f64 {
    let n = m.rows();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n)
            .max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs()))
            .unwrap();
        if a[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            let pivot = a[c].clone();
            a[r][c..].iter_mut().zip(&pivot[c..]).for_each(|(x, p)| *x -= f * p);
        }
    }
    d
}

pub fn dense_mul(a: &RealMatrix, b: &RealMatrix) -> RealMatrix {
    RealMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).map(|k| a[(i, k)] * b[(k, j)]).sum()
    })
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Image of a real state under `gates`, computed from first principles.
pub fn apply_oracle(gates: &[Gate], width: usize, state: &[f64]) -> Vec<f64> {
    let bit = |q: usize| 1usize << (width - 1 - q);
    let mut s = state.to_vec();
    for g in gates {
        let mut next = vec![0.0; s.len()];
        match g {
            Gate::Rot { theta, target } => {
                let (sn, cs) = theta.sin_cos();
                let b = bit(*target);
                for (i, &a) in s.iter().enumerate() {
                    if i & b == 0 {
                        next[i] += cs * a;
                        next[i | b] += sn * a;
                    } else {
                        next[i & !b] -= sn * a;
                        next[i] += cs * a;
                    }
                }
            }
            Gate::X { target } => {
                for (i, &a) in s.iter().enumerate() {
                    next[i ^ bit(*target)] = a;
                }
            }
            Gate::Cnot { control, target } => {
                for (i, &a) in s.iter().enumerate() {
                    let j = if i & bit(*control) != 0 { i ^ bit(*target) } else { i };
                    next[j] = a;
                }
            }
            Gate::Swap { a: qa, b: qb } => {
                for (i, &a) in s.iter().enumerate() {
                    let (x, y) = (i & bit(*qa) != 0, i & bit(*qb) != 0);
                    let mut j = i & !bit(*qa) & !bit(*qb);
                    if x {
                        j |= bit(*qb);
                    }
                    if y {
                        j |= bit(*qa);
                    }
                    next[j] = a;
                }
            }
            Gate::Opaque { targets, matrix } => {
                let k = targets.len();
                for (i, &a) in s.iter().enumerate() {
                    let local: usize = (0..k)
                        .filter(|&t| i & bit(targets[t]) != 0)
                        .map(|t| 1 << (k - 1 - t))
                        .sum();
                    let rest = targets.iter().fold(i, |acc, &t| acc & !bit(t));
                    for r in 0..(1 << k) {
                        let j = (0..k)
                            .filter(|&t| r & (1 << (k - 1 - t)) != 0)
                            .fold(rest, |acc, t| acc | bit(targets[t]));
                        next[j] += matrix[(r, local)] * a;
                    }
                }
            }
        }
        s = next;
    }
    s
}

/// Matrix of `gates` on `width` qubits via the oracle.
pub fn oracle_matrix(gates: &[Gate], width: usize) -> RealMatrix {
    let n = 1usize << width;
    let cols: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            apply_oracle(gates, width, &e)
        })
        .collect();
    RealMatrix::from_fn(n, n, |i, j| cols[j][i])
}

pub fn overlap_sq(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    dot * dot
}

pub fn count_cnots(gates: &[Gate]) -> usize {
    gates.iter().filter(|g| matches!(g, Gate::Cnot { .. })).count()
}

/// The two-qubit example data, already unit norm.
pub fn two_qubit_data() -> Vec<f64> {
    let a = (3.0f64 / 5.0).sqrt();
    let b = 1.0 / 5f64.sqrt();
    vec![a, b, a / 2.0, b / 2.0]
}

/// The sixteen raw values of the four-qubit example.
pub fn four_qubit_raw() -> Vec<f64> {
    let r3 = 3f64.sqrt();
    vec![
        3.0 * r3,
        -r3,
        -9.0,
        3.0,
        -2.0 * r3,
        -6.0 * r3,
        6.0,
        18.0,
        -3.0 * r3,
        r3,
        -3.0,
        1.0,
        2.0 * r3,
        6.0 * r3,
        2.0,
        6.0,
    ]
}

/// Closed-form normalized amplitudes of the four-qubit example.
pub fn four_qubit_amplitudes() -> Vec<f64> {
    let a = 1.5f64.sqrt();
    let r2 = 2f64.sqrt();
    vec![
        3.0 * a / 20.0,
        -a / 20.0,
        -9.0 / (20.0 * r2),
        3.0 / (20.0 * r2),
        -a / 10.0,
        -3.0 * a / 10.0,
        3.0 / (10.0 * r2),
        9.0 / (10.0 * r2),
        -3.0 * a / 20.0,
        a / 20.0,
        -3.0 / (20.0 * r2),
        1.0 / (20.0 * r2),
        a / 10.0,
        3.0 * a / 10.0,
        1.0 / (10.0 * r2),
        3.0 / (10.0 * r2),
    ]
}

/// Schmidt coefficients of the four-qubit example.
pub fn four_qubit_lambda() -> Vec<f64> {
    let a = (3.0f64 / 5.0).sqrt();
    let b = 1.0 / 5f64.sqrt();
    vec![a, b, a / 2.0, b / 2.0]
}

/// Minimal OpenQASM 2.0 reader for the subset the emitter produces.
/// Returns the register width and the gates (`ry(φ)` becomes `Rot(φ/2)`).
pub fn parse_qasm(text: &str) -> Result<(usize, Vec<Gate>), String> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    if lines.next() != Some("OPENQASM 2.0;") {
        return Err("missing version header".into());
    }
    if lines.next() != Some("include \"qelib1.inc\";") {
        return Err("missing include".into());
    }
    let width = lines
        .next()
        .and_then(|l| l.strip_prefix("qreg q[")?.strip_suffix("];")?.parse().ok())
        .ok_or("missing qreg")?;
    let qubit = |s: &str| -> Result<usize, String> {
        let idx: usize = s
            .trim()
            .strip_prefix("q[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| format!("bad operand {s}"))?
            .parse()
            .map_err(|e| format!("{e}"))?;
        if idx >= width {
            return Err(format!("qubit {idx} outside register"));
        }
        Ok(idx)
    };
    let mut gates = Vec::new();
    for line in lines {
        let body = line.strip_suffix(';').ok_or_else(|| format!("no semicolon: {line}"))?;
        if let Some(rest) = body.strip_prefix("ry(") {
            let (angle, operand) = rest.split_once(')').ok_or("unclosed ry")?;
            let phi: f64 = angle.parse().map_err(|e| format!("angle {angle}: {e}"))?;
            gates.push(Gate::rot(phi / 2.0, qubit(operand)?));
        } else if let Some(operand) = body.strip_prefix("x ") {
            gates.push(Gate::x(qubit(operand)?));
        } else if let Some(operands) = body.strip_prefix("cx ") {
            let (c, t) = operands.split_once(',').ok_or("cx needs two operands")?;
            gates.push(Gate::cnot(qubit(c)?, qubit(t)?));
        } else {
            return Err(format!("unexpected statement: {line}"));
        }
    }
    Ok((width, gates))
}
