//! Exact arithmetic in `Q[α]` and `Q(α)`.
//!
//! [`RatFunc`] keeps `gcd(num, den) = 1` with a monic denominator, so two
//! equal field elements always have identical representations.

mod poly;
mod ratfunc;

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// A commutative field element the symmetric-function code can compute with.
///
/// Implemented by [`RatFunc`] (symbolic in `α`) and [`BigRational`] (the Jack
/// parameter already specialized to a number).
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    /// Additive identity.
    fn nil() -> Self;
    /// Multiplicative identity.
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn from_rational(q: BigRational) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn over(&self, rhs: &Self) -> Result<Self>;
    fn negated(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn scaled(&self, q: &BigRational) -> Self {
        self.times(&Self::from_rational(q.clone()))
    }

    fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::unit();
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }

    /// `a·α + b` evaluated at `param`.
    fn linear(param: &Self, alpha_coeff: i64, constant: i64) -> Self {
        param.times(&Self::from_int(alpha_coeff)).plus(&Self::from_int(constant))
    }
}

impl Scalar for BigRational {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: BigRational) -> Self {
        q
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn over(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, q: &BigRational) -> Self {
        self * q
    }
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// True when every coefficient of `p` is a nonnegative integer.
///
/// The zero polynomial qualifies.
pub fn poly_is_nonneg_int(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && !c.is_negative())
}

/// Splits a polynomial with integer coefficients into a positive integer
/// constant times linear factors `(a + b·α)` with `a, b ≥ 0`, when it can.
///
/// Candidate roots are restricted to `-a/b` with `a, b ≤ bound`; this is a
/// certificate search, not a general factorizer. Returns `None` when the
/// polynomial does not split that way.
pub fn nonneg_linear_factors(p: &Poly, bound: u32) -> Option<(BigInt, alloc::vec::Vec<(u32, u32)>)> {
    if p.is_zero() || !p.coeffs().iter().all(|c| c.is_integer()) {
        return None;
    }
    let mut rest = p.clone();
    let mut factors = alloc::vec::Vec::new();
    while rest.degree().unwrap_or(0) > 0 && rest.coeffs()[0].is_zero() {
        rest = rest.div_rem(&Poly::x()).ok()?.0;
        factors.push((0, 1));
    }
    'outer: while rest.degree().unwrap_or(0) > 0 {
        for b in 1..=bound {
            for a in 1..=bound {
                if num_integer::Integer::gcd(&a, &b) != 1 {
                    continue;
                }
                let root = BigRational::new(-BigInt::from(a), BigInt::from(b));
                if rest.eval(&root).is_zero() {
                    let lin = Poly::from_coeffs(alloc::vec![rat(a as i64), rat(b as i64)]);
                    rest = rest.div_rem(&lin).ok()?.0;
                    factors.push((a, b));
                    continue 'outer;
                }
            }
        }
        return None;
    }
    let c = rest.coeffs().first()?.clone();
    if c.is_integer() && c.is_positive() {
        Some((c.to_integer(), factors))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn nonneg_int_membership() {
        let p = Poly::from_ints(&[0, 0, 0, 0, 16, 24, 8]);
        assert!(poly_is_nonneg_int(&p));
        assert!(!poly_is_nonneg_int(&Poly::from_ints(&[-4])));
        assert!(poly_is_nonneg_int(&Poly::zero()));
        assert!(!poly_is_nonneg_int(&Poly::from_coeffs(vec![ratio(1, 2)])));
    }

    #[test]
    fn linear_factor_certificate() {
        // 8α⁴(α+1)(α+2)
        let p = Poly::from_ints(&[0, 0, 0, 0, 16, 24, 8]);
        let (c, f) = nonneg_linear_factors(&p, 10).unwrap();
        assert_eq!(c, BigInt::from(8));
        assert_eq!(f.len(), 6);
        // α² + 1 has no real roots
        assert!(nonneg_linear_factors(&Poly::from_ints(&[1, 0, 1]), 10).is_none());
        // α - 1 has a positive root
        assert!(nonneg_linear_factors(&Poly::from_ints(&[-1, 1]), 10).is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
