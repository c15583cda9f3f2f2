//! Signed coronals `mu^T (xI - M)^{-1} mu` and their closed forms for stars
//! and co-regular graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{resolvent_quadratic_form, IntPolynomial, RationalFn};
use crate::graph::SignedGraph;
use crate::spectra::build_matrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "A")]
    Adjacency,
    #[serde(rename = "L")]
    Laplacian,
    #[serde(rename = "Q")]
    SignlessLaplacian,
    #[serde(rename = "NL")]
    NormalizedLaplacian,
    #[serde(rename = "P")]
    RandomWalk,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 5] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::NormalizedLaplacian,
        MatrixKind::RandomWalk,
    ];

    pub const INTEGRAL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
            MatrixKind::NormalizedLaplacian => "NL",
            MatrixKind::RandomWalk => "P",
        }
    }

    pub fn is_integral(self) -> bool {
        matches!(
            self,
            MatrixKind::Adjacency | MatrixKind::Laplacian | MatrixKind::SignlessLaplacian
        )
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(MatrixKind::Adjacency),
            "L" | "l" => Ok(MatrixKind::Laplacian),
            "Q" | "q" => Ok(MatrixKind::SignlessLaplacian),
            "NL" | "nl" | "N" => Ok(MatrixKind::NormalizedLaplacian),
            "P" | "p" => Ok(MatrixKind::RandomWalk),
            _ => Err(Error::Unsupported(format!("unknown matrix kind `{s}`"))),
        }
    }
}

/// `mu^T (xI - M)^{-1} mu` for the `kind` matrix of `g`, unreduced.
///
/// The normalized Laplacian coronal depends on the matrix itself rather than
/// its similarity class, so it is only defined here for regular graphs,
/// where the normalized Laplacian is rational.
pub fn coronal(g: &SignedGraph, marking: &[i8], kind: MatrixKind) -> Result<RationalFn> {
    if marking.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: marking.len(),
        });
    }
    if kind == MatrixKind::NormalizedLaplacian && g.regular_degree().is_none() {
        return Err(Error::Unsupported(
            "normalized Laplacian coronal of an irregular graph".into(),
        ));
    }
    let m = build_matrix(g, kind)?;
    let mu: Vec<i64> = marking.iter().map(|&x| x as i64).collect();
    resolvent_quadratic_form(&m, &mu)
}

/// Closed-form coronal of a signed star with `m` leaves whose centre is
/// marked `mu_center`, valid for the canonical and plurality markings.
pub fn coronal_star(m: usize, mu_center: i8, kind: MatrixKind) -> Result<RationalFn> {
    if m == 0 {
        return Err(Error::precondition("star needs at least one leaf"));
    }
    if mu_center.abs() != 1 {
        return Err(Error::precondition("centre marking must be +1 or -1"));
    }
    let m = m as i64;
    let c = mu_center as i64;
    let (num, den) = match kind {
        MatrixKind::Adjacency => (vec![2 * m * c, m + 1], vec![-m, 0, 1]),
        MatrixKind::Laplacian => (vec![-(m * m + 1) - 2 * m * c, m + 1], vec![0, -(m + 1), 1]),
        MatrixKind::SignlessLaplacian => (vec![-(m * m + 1) + 2 * m * c, m + 1], vec![0, -(m + 1), 1]),
        _ => return Err(Error::Unsupported(format!("star coronal for kind {kind}"))),
    };
    RationalFn::from_i64s(&num, &den)
}

/// Closed-form coronal `n / (x - c)` of a co-regular graph of order `n` with
/// pair `(gamma, k)`, where `c` is `k`, `gamma - k` or `gamma + k`.
pub fn coronal_coregular(n: usize, gamma: usize, k: i64, kind: MatrixKind) -> Result<RationalFn> {
    let g = gamma as i64;
    if n == 0 || k.abs() > g || (g - k) % 2 != 0 {
        return Err(Error::precondition(format!(
            "no co-regular graph of order {n} with pair ({gamma}, {k})"
        )));
    }
    let pole = match kind {
        MatrixKind::Adjacency => k,
        MatrixKind::Laplacian => g - k,
        MatrixKind::SignlessLaplacian => g + k,
        _ => return Err(Error::Unsupported(format!("co-regular coronal for kind {kind}"))),
    };
    Ok(RationalFn {
        num: IntPolynomial::from_i64s(&[n as i64]),
        den: IntPolynomial::from_i64s(&[-pole, 1]),
    })
}
