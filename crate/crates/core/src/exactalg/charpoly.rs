//! Characteristic polynomials and resolvent numerators by the
//! Faddeev–LeVerrier recursion, run entirely in integer arithmetic.
//!
//! A rational matrix `A` is handled through `B = cA` with `c` the common
//! denominator: `f_A(x) = c^{-n} f_B(cx)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::matrix::ExactMatrix;
use super::poly::{IntPolynomial, RatPolynomial};
use super::rational_fn::RationalFn;
use crate::error::{Error, Result};

type SparseRows = Vec<Vec<(usize, BigInt)>>;

struct Recursion {
    /// `det(xI - B)`, lowest degree first.
    charpoly: Vec<BigInt>,
    /// `mu^T adj(xI - B) mu`, lowest degree first.
    numerator: Vec<BigInt>,
    /// Coefficient matrices of `adj(xI - B)`, highest power first.
    adjugate: Vec<Vec<BigInt>>,
}

fn sparse_rows(b: &[Vec<BigInt>]) -> SparseRows {
    b.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
        .collect()
}

fn quadratic_form(m: &[BigInt], n: usize, mu: &[i64]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..n {
        if mu[i] == 0 {
            continue;
        }
        let mut row = BigInt::zero();
        for j in 0..n {
            match mu[j] {
                0 => {}
                1 => row += &m[i * n + j],
                -1 => row -= &m[i * n + j],
                s => row += &m[i * n + j] * s,
            }
        }
        acc += row * mu[i];
    }
    acc
}

/// Runs `M_1 = I`, `T_k = B M_k`, `c_{n-k} = -tr(T_k)/k`, `M_{k+1} = T_k + c_{n-k} I`.
fn recurse(b: &[Vec<BigInt>], mu: Option<&[i64]>, keep_adjugate: bool) -> Recursion {
    let n = b.len();
    let a = sparse_rows(b);
    let mut charpoly = vec![BigInt::zero(); n + 1];
    charpoly[n] = BigInt::one();
    let mut numerator = vec![BigInt::zero(); n.max(1)];
    let mut adjugate = Vec::new();
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        if let Some(mu) = mu {
            numerator[n - k] = quadratic_form(&m, n, mu);
        }
        let mut t: Vec<BigInt> = a
            .par_iter()
            .flat_map_iter(|row| {
                let m = &m;
                (0..n).map(move |j| {
                    let mut s = BigInt::zero();
                    for (l, v) in row {
                        let x = &m[l * n + j];
                        if !x.is_zero() {
                            s += v * x;
                        }
                    }
                    s
                })
            })
            .collect();
        let trace: BigInt = (0..n).map(|i| &t[i * n + i]).sum();
        let (ck, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier trace not divisible");
        charpoly[n - k] = ck.clone();
        if keep_adjugate {
            adjugate.push(std::mem::take(&mut m));
        }
        if k < n {
            for i in 0..n {
                t[i * n + i] += &ck;
            }
            m = t;
        }
    }
    Recursion {
        charpoly,
        numerator,
        adjugate,
    }
}

/// Integer matrix `c * m` and the scale `c` (least common denominator).
fn integer_scaled(m: &ExactMatrix) -> Result<(Vec<Vec<BigInt>>, BigInt)> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let c = m.denominator_lcm();
    let cq = BigRational::from_integer(c.clone());
    let rows = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| (m.get(i, j) * &cq).to_integer()).collect())
        .collect();
    Ok((rows, c))
}

/// Monic `det(xI - m)` over the rationals.
pub fn charpoly_exact(m: &ExactMatrix) -> Result<RatPolynomial> {
    let (b, c) = integer_scaled(m)?;
    let n = b.len();
    let rec = recurse(&b, None, false);
    // coefficient k of f_m is b_k / c^(n-k)
    let mut scale = BigInt::one();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for k in (0..=n).rev() {
        coeffs[k] = BigRational::new(rec.charpoly[k].clone(), scale.clone());
        scale *= &c;
    }
    Ok(RatPolynomial::new(coeffs))
}

/// `det(xI - m)` for an integer matrix.
pub fn charpoly_int(m: &ExactMatrix) -> Result<IntPolynomial> {
    let (b, c) = integer_scaled(m)?;
    if !c.is_one() {
        return Err(Error::precondition("integer characteristic polynomial of a rational matrix"));
    }
    Ok(IntPolynomial::new(recurse(&b, None, false).charpoly))
}

/// Characteristic polynomial and adjugate of `xI - m` for an integer matrix.
///
/// The returned matrices `B_0, ..., B_{n-1}` satisfy
/// `adj(xI - m) = sum_k B_k x^(n-1-k)`.
pub fn adjugate_polynomial(m: &ExactMatrix) -> Result<(IntPolynomial, Vec<ExactMatrix>)> {
    let (b, c) = integer_scaled(m)?;
    if !c.is_one() {
        return Err(Error::precondition("adjugate of a rational matrix"));
    }
    let n = b.len();
    let rec = recurse(&b, None, true);
    let mats = rec
        .adjugate
        .into_iter()
        .map(|data| {
            let mut e = ExactMatrix::zeros(n, n);
            for (idx, v) in data.into_iter().enumerate() {
                e.set(idx / n, idx % n, BigRational::from_integer(v));
            }
            e
        })
        .collect();
    Ok((IntPolynomial::new(rec.charpoly), mats))
}

/// `mu^T (xI - m)^{-1} mu` as an unreduced ratio of integer polynomials.
///
/// For an integer matrix the denominator is `det(xI - m)` and the numerator
/// is `mu^T adj(xI - m) mu`. For `m = B / c` with integer `B` the pair is
/// `(c N_B(cx), f_B(cx))`, whose denominator is `c^n det(xI - m)`.
pub fn resolvent_quadratic_form(m: &ExactMatrix, mu: &[i64]) -> Result<RationalFn> {
    let (b, c) = integer_scaled(m)?;
    let n = b.len();
    if mu.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: mu.len(),
        });
    }
    let rec = recurse(&b, Some(mu), false);
    let num = IntPolynomial::new(rec.numerator);
    let den = IntPolynomial::new(rec.charpoly);
    if c.is_one() {
        return RationalFn::new(num, den);
    }
    let cx = IntPolynomial::linear(c.clone(), BigInt::zero());
    RationalFn::new(num.compose(&cx).scale(&c), den.compose(&cx))
}
