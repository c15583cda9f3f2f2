//! Cyclic Jacobi eigenvalue iteration for real symmetric matrices.

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix in ascending order.
pub fn eigenvalues_sym(m: &ExactMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(jacobi_f64(m.to_f64_rows()))
}

/// Jacobi iteration on a dense symmetric `f64` matrix.
pub fn jacobi_f64(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    let norm: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-12 * norm.max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off < tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Largest pairwise distance after sorting both multisets, or infinity when
/// their sizes differ.
pub fn multiset_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64]) -> bool {
        multiset_distance(a, b) < 1e-9
    }

    #[test]
    fn triangle_spectra() {
        let pos = ExactMatrix::from_i64_rows(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        assert!(close(&eigenvalues_sym(&pos).unwrap(), &[-1.0, -1.0, 2.0]));
        let one_neg = ExactMatrix::from_i64_rows(&[&[0, 1, 1], &[1, 0, -1], &[1, -1, 0]]).unwrap();
        assert!(close(&eigenvalues_sym(&one_neg).unwrap(), &[-2.0, 1.0, 1.0]));
    }

    #[test]
    fn identity_and_asymmetric() {
        assert!(close(&eigenvalues_sym(&ExactMatrix::identity(3)).unwrap(), &[1.0; 3]));
        let a = ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]).unwrap();
        assert_eq!(eigenvalues_sym(&a), Err(Error::NotSymmetric));
    }
}
