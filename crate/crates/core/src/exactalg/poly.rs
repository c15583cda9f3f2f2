//! Dense univariate polynomials over exact coefficient rings.
//!
//! Coefficients are stored lowest degree first with trailing zeros trimmed,
//! so the zero polynomial is the empty vector and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact coefficient ring used by [`Polynomial`].
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + std::hash::Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// `self / d` when the quotient exists in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    fn to_f64(&self) -> f64;

    fn to_rational(&self) -> BigRational;
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<T: Coeff> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;

impl<T: Coeff> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `a*x + b`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![b, a])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![T::zero(); k + 1];
        c[k] = T::one();
        Polynomial { coeffs: c }
    }

    /// Coefficients lowest degree first.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(inner(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(x - s)`.
    pub fn shift(&self, s: i64) -> Self {
        self.compose(&Self::linear(T::one(), T::from_i64(-s)))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    /// Division with remainder, requiring every leading-coefficient quotient to
    /// exist in the ring. Over the rationals this is ordinary long division.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::InexactDivision)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(&dl).ok_or(Error::InexactDivision)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * dc.clone();
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; errors on a nonzero remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Divide by the leading coefficient, which must divide every coefficient.
    pub fn to_monic(&self) -> Result<Self> {
        let Some(l) = self.leading() else {
            return Ok(Self::zero());
        };
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.exact_div(l).ok_or(Error::InexactDivision))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RatPolynomial {
        Polynomial::new(self.coeffs.iter().map(Coeff::to_rational).collect())
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(Coeff::to_f64).collect()
    }

    /// Exact coefficient strings, lowest degree first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Largest `k` with `x^k` dividing `self`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Comma-separated coefficient list, lowest degree first.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeff_strings().join(", ")
    }
}

impl IntPolynomial {
    /// Convert a rational polynomial whose coefficients are all integers.
    pub fn try_from_rational(p: &RatPolynomial) -> Option<Self> {
        p.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl RatPolynomial {
    /// Monic GCD over the rationals.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("field division");
            a = b;
            b = r;
        }
        a.to_monic().expect("field division")
    }

    /// Scale by the least common denominator and remove the content, leaving a
    /// primitive integer polynomial with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let p = IntPolynomial::new(ints);
        let mut g = p.content();
        if p.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        Polynomial::new(p.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Yun's square-free decomposition: returns `(factor, multiplicity)` with
    /// every factor monic, square-free and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(RatPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.to_monic().expect("field division");
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl<T: Coeff> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Coeff> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `sum_k c_k u^k v^(n-k)` where `f = sum_k c_k x^k` and `n = deg f`, i.e. the
/// homogenized composition `v^n f(u/v)`. When `f = prod_j (x - r_j)` this is
/// `prod_j (u - r_j v)`, so products over the roots of `f` never need the roots.
pub fn poly_compose_projective<T: Coeff>(
    f: &Polynomial<T>,
    u: &Polynomial<T>,
    v: &Polynomial<T>,
) -> Polynomial<T> {
    let Some(n) = f.degree() else {
        return Polynomial::zero();
    };
    let mut u_pows = Vec::with_capacity(n + 1);
    let mut v_pows = Vec::with_capacity(n + 1);
    u_pows.push(Polynomial::one());
    v_pows.push(Polynomial::one());
    for k in 1..=n {
        u_pows.push(&u_pows[k - 1] * u);
        v_pows.push(&v_pows[k - 1] * v);
    }
    f.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Polynomial::zero(), |acc, (k, c)| {
            &acc + &(&u_pows[k] * &v_pows[n - k]).scale(c)
        })
}

impl<T: Coeff> fmt::Display for Polynomial<T> {
    /// Human-readable form in `x`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(ip(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[]).degree(), None);
    }

    #[test]
    fn projective_identity_substitution() {
        // f = x^2 - 1, u = x, v = 1
        let f = ip(&[-1, 0, 1]);
        assert_eq!(poly_compose_projective(&f, &ip(&[0, 1]), &ip(&[1])), f);
    }

    #[test]
    fn projective_direct_expansion() {
        // f = x - 2, u = x^2, v = x + 1  ->  x^2 - 2x - 2
        let f = ip(&[-2, 1]);
        let got = poly_compose_projective(&f, &ip(&[0, 0, 1]), &ip(&[1, 1]));
        assert_eq!(got, ip(&[-2, -2, 1]));
    }

    #[test]
    fn exact_division_over_integers() {
        let a = ip(&[-1, 0, 1]);
        let b = ip(&[1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), ip(&[-1, 1]));
        assert_eq!(ip(&[1, 0, 1]).div_exact(&b), Err(Error::InexactDivision));
        // 2x over x+? with non-unit leading coefficient that does not divide
        assert!(ip(&[0, 1]).div_rem(&ip(&[1, 2])).is_err());
    }

    #[test]
    fn shift_and_reflect() {
        // (x - 1)^2 shifted by 1 -> (x - 2)^2
        let p = ip(&[1, -2, 1]);
        assert_eq!(p.shift(1), ip(&[4, -4, 1]));
        assert_eq!(ip(&[1, 2, 3]).reflect(), ip(&[1, -2, 3]));
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^2 (x+2)
        let p = (&ip(&[1, -2, 1]) * &ip(&[2, 1])).to_rational();
        let d = p.squarefree_decomposition();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (ip(&[2, 1]).to_rational(), 1));
        assert_eq!(d[1], (ip(&[-1, 1]).to_rational(), 2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(ip(&[-2, -3, 0, 1]).to_string(), "x^3 - 3*x - 2");
        assert_eq!(ip(&[-2, -3, 0, 1]).to_coeff_list(), "-2, -3, 0, 1");
        assert_eq!(ip(&[]).to_string(), "0");
    }
}
