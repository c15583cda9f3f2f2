//! Real roots of rational polynomials with multiplicity, by square-free
//! decomposition and Sturm-sequence bisection over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::RatPolynomial;

fn sturm_sequence(p: &RatPolynomial) -> Vec<RatPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].is_zero() {
            seq.pop();
            return seq;
        }
        let (_, r) = seq[k - 2].div_rem(&seq[k - 1]).expect("field division");
        seq.push(-&r);
    }
}

fn sign_changes(seq: &[RatPolynomial], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Strict bound on the absolute value of every root.
fn cauchy_bound(p: &RatPolynomial) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    max + BigRational::one()
}

/// Distinct real roots of a square-free polynomial, each located to within
/// `width` and reported as the interval midpoint.
fn isolate(p: &RatPolynomial, width: &BigRational) -> Vec<f64> {
    let seq = sturm_sequence(p);
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &(&hi - &lo) < width {
            out.push(((&lo + &hi) / &two).to_f64().unwrap_or(f64::NAN));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out
}

/// All real roots with multiplicity, ascending.
pub fn real_roots(p: &RatPolynomial) -> Vec<f64> {
    let width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 50));
    let mut roots = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        for r in isolate(&factor, &width) {
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}
