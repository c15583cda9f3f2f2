use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coronal::MatrixKind;
use crate::error::{Error, Result};
use crate::exactalg::ExactMatrix;
use crate::graph::SignedGraph;

fn first_isolated(g: &SignedGraph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) == 0)
}

/// Exact matrix of the requested kind.
///
/// `A`, `L = D - A` and `Q = D + A` are integral. `P = D^{-1} A` is rational.
/// The normalized Laplacian is returned as `I - P`, which equals it when the
/// graph is regular and is similar to it (through `D^{1/2}`) otherwise, so
/// its characteristic polynomial is always the right one.
pub fn build_matrix(g: &SignedGraph, kind: MatrixKind) -> Result<ExactMatrix> {
    let n = g.n();
    let mut m = ExactMatrix::zeros(n, n);
    match kind {
        MatrixKind::Adjacency | MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let off = if kind == MatrixKind::Laplacian { -1 } else { 1 };
            for e in g.edges() {
                m.set_i64(e.u, e.v, off * e.s as i64);
                m.set_i64(e.v, e.u, off * e.s as i64);
            }
            if kind != MatrixKind::Adjacency {
                for v in 0..n {
                    m.set_i64(v, v, g.degree(v) as i64);
                }
            }
        }
        MatrixKind::RandomWalk | MatrixKind::NormalizedLaplacian => {
            if let Some(v) = first_isolated(g) {
                return Err(Error::ZeroDegree(v));
            }
            let off = if kind == MatrixKind::RandomWalk { 1 } else { -1 };
            for v in 0..n {
                let d = BigInt::from(g.degree(v));
                for &(w, s) in g.neighbors(v) {
                    m.set(v, w, BigRational::new(BigInt::from(off * s as i64), d.clone()));
                }
                if kind == MatrixKind::NormalizedLaplacian {
                    m.set(v, v, BigRational::one());
                }
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{charpoly_exact, IntPolynomial, RatPolynomial};
    use crate::graph::families::*;

    #[test]
    fn laplacian_of_edge() {
        let l = build_matrix(&path(2), MatrixKind::Laplacian).unwrap();
        assert_eq!(l, ExactMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]).unwrap());
    }

    #[test]
    fn normalized_triangle() {
        let l = build_matrix(&cycle(3), MatrixKind::NormalizedLaplacian).unwrap();
        let f = charpoly_exact(&l).unwrap();
        // x (x - 3/2)^2
        let want: RatPolynomial = RatPolynomial::new(vec![
            BigRational::from_integer(0.into()),
            BigRational::new(9.into(), 4.into()),
            BigRational::from_integer((-3).into()),
            BigRational::one(),
        ]);
        assert_eq!(f, want);
    }

    #[test]
    fn random_walk_of_path() {
        let p = build_matrix(&star(&[1, 1]), MatrixKind::RandomWalk).unwrap();
        assert!(!p.is_symmetric());
        let f = charpoly_exact(&p).unwrap();
        assert_eq!(f, IntPolynomial::from_i64s(&[0, -1, 0, 1]).to_rational());
        assert_eq!(build_matrix(&empty(2), MatrixKind::RandomWalk), Err(Error::ZeroDegree(0)));
    }
}
