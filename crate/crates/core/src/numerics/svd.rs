//! One-sided (Hestenes) Jacobi SVD.
//!
//! The matrices handled here are small (Schmidt reshapes of at most a few
//! thousand amplitudes) and dense, so a cyclic Jacobi sweep is accurate
//! enough and has no external dependencies. The result is canonicalized:
//! singular values descending, and every column of `u` has its
//! largest-magnitude entry nonnegative (lowest row index on ties), with the
//! paired column of `v` carrying the compensating sign.

use serde::{Deserialize, Serialize};

use super::matrix::RealMatrix;
use crate::error::{Error, Result};

const SWEEP_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 60;

/// `a = u · diag(sigma) · vᵀ` with orthogonal `u` (m×m) and `v` (n×n).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvdResult {
    pub u: RealMatrix,
    pub sigma: Vec<f64>,
    pub v: RealMatrix,
}

impl SvdResult {
    /// Rebuilds `u · diag(sigma) · vᵀ`.
    pub fn reconstruct(&self) -> RealMatrix {
        let (m, n) = (self.u.rows(), self.v.rows());
        RealMatrix::from_fn(m, n, |r, c| {
            self.sigma
                .iter()
                .enumerate()
                .map(|(k, s)| self.u[(r, k)] * s * self.v[(c, k)])
                .sum()
        })
    }

    pub fn rank(&self, rel_tol: f64) -> usize {
        rank_with_tolerance(&self.sigma, rel_tol)
    }
}

/// Number of singular values above `rel_tol · sigma[0]`.
pub fn rank_with_tolerance(sigma: &[f64], rel_tol: f64) -> usize {
    match sigma.first() {
        Some(&top) if top > 0.0 => sigma.iter().filter(|&&s| s > rel_tol * top).count(),
        _ => 0,
    }
}

pub fn svd(a: &RealMatrix) -> Result<SvdResult> {
    if let Some(x) = a.as_slice().iter().find(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(format!("non-finite entry {x} in SVD input")));
    }
    let mut out = if a.rows() >= a.cols() {
        tall_svd(a)
    } else {
        let t = tall_svd(&a.transpose());
        SvdResult {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        }
    };
    canonicalize_signs(&mut out);
    Ok(out)
}

/// SVD for `rows >= cols`, before sign canonicalization.
fn tall_svd(a: &RealMatrix) -> SvdResult {
    let (m, n) = (a.rows(), a.cols());
    // column-major working copies
    let mut w: Vec<Vec<f64>> = (0..n).map(|c| a.column(c)).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|c| (0..n).map(|r| if r == c { 1.0 } else { 0.0 }).collect())
        .collect();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (alpha, beta, gamma) = gram(&w[p], &w[q]);
                let scale = (alpha * beta).sqrt();
                if scale == 0.0 || gamma.abs() <= SWEEP_TOL * scale {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_pair(&mut w, p, q, c, s);
                rotate_pair(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = w.iter().map(|col| norm(col)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]).then(i.cmp(&j)));

    let sigma: Vec<f64> = order.iter().map(|&k| norms[k]).collect();
    let top = sigma[0];
    // columns whose singular value is at rounding level carry no direction
    let cutoff = top * (m.max(n) as f64) * f64::EPSILON;

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m);
    for &k in &order {
        if norms[k] > cutoff && norms[k] > 0.0 {
            let col: Vec<f64> = w[k].iter().map(|x| x / norms[k]).collect();
            if let Some(u) = orthonormalize_against(&basis, col) {
                basis.push(u);
                continue;
            }
        }
        basis.push(complete_one(&basis, m));
    }
    while basis.len() < m {
        basis.push(complete_one(&basis, m));
    }

    let u = RealMatrix::from_fn(m, m, |r, c| basis[c][r]);
    let v = RealMatrix::from_fn(n, n, |r, c| v[order[c]][r]);
    SvdResult { u, sigma, v }
}

fn gram(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let mut a = 0.0;
    let mut b = 0.0;
    let mut g = 0.0;
    for (xi, yi) in x.iter().zip(y) {
        a += xi * xi;
        b += yi * yi;
        g += xi * yi;
    }
    (a, b, g)
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (lo, hi) = cols.split_at_mut(q);
    for (xp, xq) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
        let (a, b) = (*xp, *xq);
        *xp = c * a - s * b;
        *xq = s * a + c * b;
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Two rounds of modified Gram-Schmidt; `None` if the vector collapses.
fn orthonormalize_against(basis: &[Vec<f64>], mut x: Vec<f64>) -> Option<Vec<f64>> {
    let start = norm(&x);
    for _ in 0..2 {
        for b in basis {
            let d: f64 = b.iter().zip(&x).map(|(p, q)| p * q).sum();
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi -= d * bi;
            }
        }
    }
    let n = norm(&x);
    if n <= 0.5 * start {
        return None;
    }
    x.iter_mut().for_each(|xi| *xi /= n);
    Some(x)
}

/// Standard basis vector with the largest component outside `span(basis)`,
/// orthonormalized. Some `e_i` keeps at least `sqrt((m - k) / m)` of its norm.
fn complete_one(basis: &[Vec<f64>], m: usize) -> Vec<f64> {
    let residual = |i: usize| -> Vec<f64> {
        let mut x = vec![0.0; m];
        x[i] = 1.0;
        for _ in 0..2 {
            for b in basis {
                let d: f64 = b.iter().zip(&x).map(|(p, q)| p * q).sum();
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi -= d * bi;
                }
            }
        }
        x
    };
    let (best, _) = (0..m)
        .map(|i| (i, norm(&residual(i))))
        .fold((0, -1.0), |acc, (i, n)| if n > acc.1 { (i, n) } else { acc });
    let mut x = residual(best);
    let n = norm(&x);
    x.iter_mut().for_each(|xi| *xi /= n);
    x
}

fn canonicalize_signs(res: &mut SvdResult) {
    let paired = res.sigma.len();
    for c in 0..res.u.cols() {
        let col = res.u.column(c);
        let peak = col.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
        let lead = col
            .iter()
            .position(|x| x.abs() >= peak - 1e-12 * peak.max(1.0))
            .unwrap_or(0);
        if col[lead] < 0.0 {
            res.u.negate_column(c);
            if c < paired {
                res.v.negate_column(c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &RealMatrix) -> SvdResult {
        let s = svd(a).unwrap();
        assert!(s.u.orthogonality_defect() <= 1e-10);
        assert!(s.v.orthogonality_defect() <= 1e-10);
        assert!(s.sigma.windows(2).all(|w| w[0] >= w[1]));
        assert!(s.sigma.iter().all(|&x| x >= 0.0));
        assert!(s.reconstruct().max_abs_diff(a) <= 1e-10);
        s
    }

    #[test]
    fn identity_is_its_own_svd() {
        let s = check(&RealMatrix::identity(2));
        assert_eq!(s.u, RealMatrix::identity(2));
        assert_eq!(s.v, RealMatrix::identity(2));
        assert_eq!(s.sigma, vec![1.0, 1.0]);
    }

    #[test]
    fn wide_and_tall_shapes() {
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]).unwrap();
        let s = check(&a);
        assert_eq!(s.u.rows(), 2);
        assert_eq!(s.v.rows(), 3);
        check(&a.transpose());
    }

    #[test]
    fn rank_deficient_and_zero() {
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0], vec![3.0, 6.0]]).unwrap();
        let s = check(&a);
        assert_eq!(s.rank(1e-12), 1);
        let z = check(&RealMatrix::zeros(3, 2));
        assert_eq!(z.sigma, vec![0.0, 0.0]);
        assert_eq!(z.rank(1e-12), 0);
    }

    #[test]
    fn sign_convention_on_u_columns() {
        let a = RealMatrix::from_rows(&[vec![-3.0, 0.0], vec![0.0, -1.0]]).unwrap();
        let s = check(&a);
        for c in 0..2 {
            let col = s.u.column(c);
            let lead = col
                .iter()
                .max_by(|x, y| x.abs().total_cmp(&y.abs()))
                .unwrap();
            assert!(*lead >= 0.0);
        }
        assert_eq!(s.sigma, vec![3.0, 1.0]);
    }

    #[test]
    fn rejects_non_finite() {
        // from_fn skips the finiteness check that RealMatrix::new performs
        let a = RealMatrix::from_fn(2, 2, |r, _| if r == 0 { f64::INFINITY } else { 1.0 });
        assert!(matches!(svd(&a), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn rank_tolerance_cases() {
        assert_eq!(rank_with_tolerance(&[1.0, 0.0, 0.0, 0.0], 1e-12), 1);
        assert_eq!(rank_with_tolerance(&[1.0, 1.0, 1.0, 1.0], 1e-12), 4);
        assert_eq!(rank_with_tolerance(&[1.0, 1e-16], 1e-12), 1);
        assert_eq!(rank_with_tolerance(&[0.0, 0.0], 1e-12), 0);
        assert_eq!(rank_with_tolerance(&[], 1e-12), 0);
    }
}
