//! The Laurent polynomial `Δ_s^t = ∏_{i≠j} (1 - D_i/D_j)^t` and what it does
//! to products of `q_n`.

mod action;
mod kernel;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratfield::factorial;

pub use action::{
    apply_delta_q, apply_delta_q_direct, rect_action_check, q_route_coefficient, inverse_param, linear_rank, near_rect_scalar, q_expansion_to_p, x_prime_image, x_prime_q_expansion, QRouteRow,
};
pub use kernel::{expand_h1, H1Term, H1_MAX_TERMS};

/// Sparse Laurent polynomial in `s` variables with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn one(arity: usize) -> Self {
        LaurentPoly { arity, terms: BTreeMap::from([(vec![0; arity], BigInt::one())]) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut terms: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<i32> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { arity: self.arity, terms }
    }

    /// `2 - x_i/x_j - x_j/x_i`, the product of the two factors for the pair.
    fn pair_factor(arity: usize, i: usize, j: usize) -> LaurentPoly {
        let mut up = vec![0; arity];
        up[i] = 1;
        up[j] = -1;
        let down: Vec<i32> = up.iter().map(|x| -x).collect();
        LaurentPoly {
            arity,
            terms: BTreeMap::from([(vec![0; arity], BigInt::from(2)), (up, BigInt::from(-1)), (down, BigInt::from(-1))]),
        }
    }
}

/// Size limits for [`expand_delta`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaLimits {
    /// Largest allowed `s·t`.
    pub max_st: usize,
}

impl Default for DeltaLimits {
    fn default() -> Self {
        DeltaLimits { max_st: 15 }
    }
}

/// Exact expansion of `∏_{i≠j}(1 - D_i/D_j)^t`.
pub fn expand_delta(s: usize, t: usize, limits: DeltaLimits) -> Result<LaurentPoly> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidArgument(format!("need s, t ≥ 1, got s={} t={}", s, t)));
    }
    if s * t > limits.max_st {
        return Err(Error::ResourceGuard(format!("s·t = {} exceeds {}", s * t, limits.max_st)));
    }
    let mut acc = LaurentPoly::one(s);
    for i in 0..s {
        for j in i + 1..s {
            let f = LaurentPoly::pair_factor(s, i, j);
            for _ in 0..t {
                acc = acc.mul(&f);
            }
        }
    }
    Ok(acc)
}

/// `(st)!/(t!)^s`, the constant term of `Δ_s^t`.
pub fn dyson_constant(s: usize, t: usize) -> BigInt {
    factorial(s * t) / factorial(t).pow(s as u32)
}

/// Coefficient of `D^β` in `Δ_s^t`.
pub fn delta_coefficient(beta: &[i32], s: usize, t: usize, limits: DeltaLimits) -> Result<BigInt> {
    if beta.len() != s {
        return Err(Error::InvalidArgument(format!("β has {} entries, expected {}", beta.len(), s)));
    }
    if beta.iter().sum::<i32>() != 0 {
        return Err(Error::InvalidArgument(format!("β = {:?} does not sum to zero", beta)));
    }
    Ok(expand_delta(s, t, limits)?.coeff(beta))
}

/// The closed forms for particular coefficients of `Δ_s^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop39 {
    /// `D_1^{-1}⋯D_i^{-1} D_{s-i+1}⋯D_s`, needs `2i ≤ s`.
    General(usize),
    /// `D_1^{-2} D_s^2`, needs `s ≥ 2`.
    TwoTwo,
    /// `D_1^{-1} D_2^{-1} D_s^2`, needs `s ≥ 3`, as usually printed:
    /// `2(2 + (s-1)t)t² / ((1 + (s-1)t)(1 + (s-2)t)(3 + (2s-3)t))`.
    /// It is not an integer in general and disagrees with the expansion.
    OneOneTwo,
    /// Same exponent vector, `2t² / ((1 + (s-1)t)(1 + (s-2)t))`; this is the
    /// form the expansion actually produces.
    OneOneTwoObserved,
}

impl Prop39 {
    /// The exponent vector the closed form describes.
    pub fn exponents(self, s: usize) -> Result<Vec<i32>> {
        let mut b = vec![0i32; s];
        match self {
            Prop39::General(i) => {
                if i == 0 || 2 * i > s {
                    return Err(Error::InvalidArgument(format!("need 1 ≤ i and 2i ≤ s, got i={} s={}", i, s)));
                }
                for j in 0..i {
                    b[j] = -1;
                    b[s - 1 - j] = 1;
                }
            }
            Prop39::TwoTwo => {
                if s < 2 {
                    return Err(Error::InvalidArgument(format!("need s ≥ 2, got {}", s)));
                }
                b[0] = -2;
                b[s - 1] = 2;
            }
            Prop39::OneOneTwo | Prop39::OneOneTwoObserved => {
                if s < 3 {
                    return Err(Error::InvalidArgument(format!("need s ≥ 3, got {}", s)));
                }
                b[0] = -1;
                b[1] = -1;
                b[s - 1] = 2;
            }
        }
        Ok(b)
    }

    /// Exact value of the closed form.
    pub fn value(self, s: usize, t: usize) -> Result<BigRational> {
        self.exponents(s)?;
        let (si, ti) = (s as i64, t as i64);
        let lead = BigRational::from_integer(dyson_constant(s, t));
        let lin = |c: i64, k: i64| BigRational::from_integer(BigInt::from(c + k * ti));
        let v = match self {
            Prop39::General(i) => {
                let mut v = BigRational::from_integer(factorial(i) * BigInt::from(-ti).pow(i as u32));
                for j in 1..=i as i64 {
                    v /= lin(1, si - j);
                }
                v
            }
            Prop39::TwoTwo => {
                let (a1, a2, a3) = (lin(1, si - 1), lin(1, si - 2), lin(2, si - 1));
                let t_ = BigRational::from_integer(BigInt::from(ti));
                let num = BigRational::from_integer(BigInt::from(2 * ti * ti)) - &a1 * &a2 * t_;
                num / (a1 * a2 * a3)
            }
            Prop39::OneOneTwo => {
                let (a1, a2, a3, a4) = (lin(1, si - 1), lin(1, si - 2), lin(2, si - 1), lin(3, 2 * si - 3));
                BigRational::from_integer(BigInt::from(2 * ti * ti)) * a3 / (a1 * a2 * a4)
            }
            Prop39::OneOneTwoObserved => BigRational::from_integer(BigInt::from(2 * ti * ti)) / (lin(1, si - 1) * lin(1, si - 2)),
        };
        Ok(lead * v)
    }
}

/// `Δ` coefficients are invariant under permuting and negating `β`.
pub fn symmetry_defects(d: &LaurentPoly) -> usize {
    let mut bad = 0;
    for (e, c) in d.terms() {
        let neg: Vec<i32> = e.iter().map(|x| -x).collect();
        let mut rot = e.clone();
        rot.rotate_left(1);
        let mut sw = e.clone();
        if sw.len() >= 2 {
            sw.swap(0, 1);
        }
        for f in [neg, rot, sw] {
            if d.coeff(&f) != *c {
                bad += 1;
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests;
