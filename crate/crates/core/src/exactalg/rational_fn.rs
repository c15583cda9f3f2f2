use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::{IntPolynomial, RatPolynomial};
use crate::error::{Error, Result};

/// Ratio of two integer polynomials, kept exactly as produced.
///
/// No cancellation ever happens implicitly: `num` and `den` are the literal
/// outputs of the computation that built them. Use [`RationalFn::equivalent`]
/// to compare values and [`RationalFn::reduced`] for a canonical key.
#[derive(Clone, Debug, Serialize)]
pub struct RationalFn {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

impl RationalFn {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::precondition("rational function with zero denominator"));
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_i64s(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64s(num), IntPolynomial::from_i64s(den))
    }

    /// Equality as rational functions: `num * other.den == other.num * den`.
    pub fn equivalent(&self, other: &RationalFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// `self(inner(x))`, substituting into numerator and denominator separately.
    pub fn compose(&self, inner: &IntPolynomial) -> RationalFn {
        RationalFn {
            num: self.num.compose(inner),
            den: self.den.compose(inner),
        }
    }

    /// Whether `deg num < deg den` (the zero function counts as proper).
    pub fn is_strictly_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(a), Some(b)) => a < b,
            (Some(_), None) => false,
        }
    }

    /// Value at a rational point, `None` at a pole of the unreduced form.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.to_rational().eval(x);
        (!d.is_zero()).then(|| self.num.to_rational().eval(x) / d)
    }

    /// Lowest-terms representative: common factors removed over the rationals,
    /// then both parts scaled to coprime integer coefficients with a positive
    /// leading denominator coefficient. Equivalent functions reduce to
    /// identical values.
    pub fn reduced(&self) -> RationalFn {
        let (n, d) = (self.num.to_rational(), self.den.to_rational());
        let g = n.gcd(&d);
        let n = n.div_exact(&g).expect("gcd divides");
        let d = d.div_exact(&g).expect("gcd divides");
        let lead = d.leading().expect("nonzero denominator").clone();
        let n = n.scale(&lead.recip());
        let d = d.scale(&lead.recip());
        let lcm = n
            .coeffs()
            .iter()
            .chain(d.coeffs())
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let to_int = |p: &RatPolynomial| {
            IntPolynomial::new(
                p.coeffs()
                    .iter()
                    .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                    .collect(),
            )
        };
        let (mut n, mut d) = (to_int(&n), to_int(&d));
        let mut content = n.content().gcd(&d.content());
        if d.leading().is_some_and(|l| l.is_negative()) {
            content = -content;
        }
        if !content.is_zero() && !content.is_one() {
            n = IntPolynomial::new(n.coeffs().iter().map(|c| c / &content).collect());
            d = IntPolynomial::new(d.coeffs().iter().map(|c| c / &content).collect());
        }
        RationalFn { num: n, den: d }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplication_equality() {
        let a = RationalFn::from_i64s(&[-2, 2], &[-1, 0, 1]).unwrap();
        let b = RationalFn::from_i64s(&[2], &[1, 1]).unwrap();
        assert!(a.equivalent(&b));
        assert!(!a.equivalent(&RationalFn::from_i64s(&[2], &[-1, 1]).unwrap()));
    }

    #[test]
    fn reduction_is_canonical() {
        let a = RationalFn::from_i64s(&[0, 4, 3], &[0, -2, 0, 1]).unwrap();
        let r = a.reduced();
        assert_eq!(r.num, IntPolynomial::from_i64s(&[4, 3]));
        assert_eq!(r.den, IntPolynomial::from_i64s(&[-2, 0, 1]));
        let scaled = RationalFn::from_i64s(&[-8, -6], &[4, 0, -2]).unwrap();
        assert_eq!(scaled.reduced().num, r.num);
        assert_eq!(scaled.reduced().den, r.den);
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(RationalFn::from_i64s(&[1], &[]).is_err());
    }

    #[test]
    fn substitution_shifts_pole() {
        // 1/x at x -> x - 2 is 1/(x - 2)
        let r = RationalFn::from_i64s(&[1], &[0, 1]).unwrap();
        let s = r.compose(&IntPolynomial::from_i64s(&[-2, 1]));
        assert_eq!(s.den, IntPolynomial::from_i64s(&[-2, 1]));
        assert!(s.is_strictly_proper());
    }
}
