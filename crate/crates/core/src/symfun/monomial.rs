//! Change of basis between power sums and monomials.

use alloc::collections::BTreeMap;
use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{inner, q_lambda, SymFun};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ratfield::Scalar;

/// Weights above this are refused by [`MonomialTable::new`]; the inversion is cubic
/// in the number of partitions.
pub const MONOMIAL_TABLE_MAX_WEIGHT: usize = 16;

/// `p_λ = Σ_μ L_{λμ} m_μ`, built one power sum at a time from
/// `p_k m_μ = Σ_ν #{i : ν - k e_i ~ μ} m_ν`.
pub fn power_to_monomial(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut cur: BTreeMap<Partition, BigInt> = BTreeMap::from([(Partition::empty(), BigInt::one())]);
    for &k in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (mu, c) in &cur {
            let mut values: alloc::vec::Vec<usize> = mu.multiplicities().into_keys().collect();
            values.push(0);
            for v in values {
                let mut parts = mu.parts().to_vec();
                match parts.iter().position(|&p| p == v) {
                    Some(i) => parts[i] += k,
                    None => parts.push(k),
                }
                let nu = Partition::from_multiset(parts);
                let mult = nu.parts().iter().filter(|&&p| p == v + k).count();
                *next.entry(nu).or_insert_with(BigInt::zero) += c * BigInt::from(mult);
            }
        }
        cur = next;
    }
    cur
}

/// Monomial coefficients of a power-sum expansion.
pub fn to_monomial<C: Scalar>(f: &SymFun<C>) -> BTreeMap<Partition, C> {
    let mut out: BTreeMap<Partition, C> = BTreeMap::new();
    for (lam, c) in f.terms() {
        for (mu, l) in power_to_monomial(lam) {
            let add = c.scaled(&BigRational::from_integer(l));
            let e = out.entry(mu).or_insert_with(C::nil);
            *e = e.plus(&add);
        }
    }
    out.retain(|_, c| !c.is_nil());
    out
}

/// Coefficient of `m_ν` in `f`, by duality `⟨q_λ, m_ν⟩ = δ_{λν}`.
pub fn monomial_coeff<C: Scalar>(f: &SymFun<C>, nu: &Partition, param: &C) -> Result<C> {
    Ok(inner(f, &q_lambda(nu, param)?, param))
}

/// Every `m_λ` of one weight, in the power-sum basis.
#[derive(Clone, Debug)]
pub struct MonomialTable {
    weight: usize,
    m: BTreeMap<Partition, SymFun<BigRational>>,
}

impl MonomialTable {
    /// Inverts the triangular matrix `L`, largest partitions first.
    pub fn new(weight: usize) -> Result<Self> {
        if weight > MONOMIAL_TABLE_MAX_WEIGHT {
            return Err(Error::ResourceGuard(format!(
                "monomial table at weight {} exceeds the limit {}",
                weight, MONOMIAL_TABLE_MAX_WEIGHT
            )));
        }
        let mut m: BTreeMap<Partition, SymFun<BigRational>> = BTreeMap::new();
        // Partition::all yields lexicographically decreasing order, which
        // lists every dominating partition before the ones it dominates.
        for lam in Partition::all(weight) {
            let row = power_to_monomial(&lam);
            let mut acc = SymFun::p(lam.clone());
            let mut diag = BigInt::zero();
            for (mu, l) in &row {
                if *mu == lam {
                    diag = l.clone();
                } else {
                    let prev = m.get(mu).ok_or_else(|| Error::Integrity(format!("{} before {}", lam, mu)))?;
                    acc = acc.sub(&prev.scale_rational(&BigRational::from_integer(l.clone())));
                }
            }
            if diag.is_zero() {
                return Err(Error::Integrity(format!("zero diagonal at {}", lam)));
            }
            m.insert(lam, acc.scale_rational(&BigRational::new(BigInt::one(), diag)));
        }
        Ok(MonomialTable { weight, m })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn m(&self, lambda: &Partition) -> Option<&SymFun<BigRational>> {
        self.m.get(lambda)
    }

    pub fn m_as<C: Scalar>(&self, lambda: &Partition) -> Option<SymFun<C>> {
        self.m(lambda).map(|f| f.map_coeffs(|c| C::from_rational(c.clone())))
    }

    /// `Σ_μ c_μ m_μ` in the power-sum basis.
    pub fn from_monomial<C: Scalar>(&self, coeffs: &BTreeMap<Partition, C>) -> Result<SymFun<C>> {
        let mut out = SymFun::zero();
        for (mu, c) in coeffs {
            let m = self.m(mu).ok_or_else(|| Error::WeightMismatch(mu.clone(), Partition::rectangle(self.weight, 1)))?;
            for (k, x) in m.terms() {
                out.add_term(k.clone(), c.scaled(x));
            }
        }
        Ok(out)
    }
}
