//! Symmetric functions stored in the power-sum basis.
//!
//! The inner product is `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ α^{l(λ)}`; `q_n` are the
//! generalized complete functions dual to the monomials.

mod monomial;

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;

use num_rational::BigRational;

use crate::error::Result;
use crate::partition::Partition;
use crate::ratfield::Scalar;

pub use monomial::{monomial_coeff, power_to_monomial, to_monomial, MonomialTable, MONOMIAL_TABLE_MAX_WEIGHT};

/// Sparse `Σ c_λ p_λ`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFun<C> {
    terms: BTreeMap<Partition, C>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(usize),
    Mixed,
}

impl<C: Scalar> Default for SymFun<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> SymFun<C> {
    pub fn zero() -> Self {
        SymFun { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// The power sum `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        Self::term(lambda, C::unit())
    }

    pub fn term(lambda: Partition, c: C) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(it: I) -> Self {
        let mut f = Self::zero();
        for (k, c) in it {
            f.add_term(k, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_nil() {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = e.get().plus(&c);
                if v.is_nil() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, C> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::nil)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        let mut it = self.terms.keys().map(Partition::weight);
        match it.next() {
            None => Degree::Zero,
            Some(d) if it.all(|e| e == d) => Degree::Homogeneous(d),
            Some(_) => Degree::Mixed,
        }
    }

    pub fn homogeneous_component(&self, n: usize) -> Self {
        SymFun { terms: self.terms.iter().filter(|(k, _)| k.weight() == n).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.negated());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    /// `p_λ p_μ = p_{λ∪μ}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x.times(y));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_nil() {
            return Self::zero();
        }
        self.map_coeffs(|x| x.times(c))
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.map_coeffs(|x| x.scaled(q))
    }

    /// Divides every coefficient by `c`.
    pub fn div_scalar(&self, c: &C) -> Result<Self> {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.over(c)?);
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<D: Scalar, F: FnMut(&C) -> D>(&self, mut f: F) -> SymFun<D> {
        SymFun::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Scalar, F: FnMut(&C) -> Result<D>>(&self, mut f: F) -> Result<SymFun<D>> {
        let mut out = SymFun::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Ok(out)
    }

    /// When `self = c·other`, returns `c`; `None` if not proportional or `other` is zero.
    pub fn ratio_to(&self, other: &Self) -> Option<C> {
        let (k, d) = other.terms.iter().next()?;
        let c = self.terms.get(k)?.over(d).ok()?;
        if self.terms.len() != other.terms.len() {
            return None;
        }
        other
            .terms
            .iter()
            .all(|(k, d)| self.terms.get(k).is_some_and(|x| *x == d.times(&c)))
            .then_some(c)
    }
}

/// `p_λ` weight in the inner product: `z_λ α^{l(λ)}`.
pub fn p_norm<C: Scalar>(lambda: &Partition, param: &C) -> C {
    C::from_rational(BigRational::from_integer(lambda.z())).times(&param.pow(lambda.len()))
}

/// `⟨f, g⟩ = Σ z_λ α^{l(λ)} f_λ g_λ`.
pub fn inner<C: Scalar>(f: &SymFun<C>, g: &SymFun<C>, param: &C) -> C {
    let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = C::nil();
    for (k, x) in &small.terms {
        if let Some(y) = big.terms.get(k) {
            acc = acc.plus(&x.times(y).times(&p_norm(k, param)));
        }
    }
    acc
}

/// The adjoint `f^*·g` of multiplication by `f`:
/// `p_μ^*·p_ν = z_μ α^{l(μ)} C(m(ν), m(μ)) p_{ν∖μ}`.
pub fn skew<C: Scalar>(f: &SymFun<C>, g: &SymFun<C>, param: &C) -> SymFun<C> {
    let mut out = SymFun::zero();
    for (mu, x) in &f.terms {
        let w = p_norm(mu, param).times(x);
        for (nu, y) in &g.terms {
            if !nu.contains_by_multiplicity(mu) {
                continue;
            }
            let b = nu.multiset_binomial(mu).expect("containment checked");
            let rest = nu.multiset_difference(mu).expect("containment checked");
            out.add_term(rest, w.times(y).scaled(&BigRational::from_integer(b)));
        }
    }
    out
}

/// `q_n = Σ_{λ⊢n} z_λ^{-1} α^{-l(λ)} p_λ`.
pub fn q_n<C: Scalar>(n: usize, param: &C) -> Result<SymFun<C>> {
    let mut out = SymFun::zero();
    for lam in Partition::all(n) {
        out.add_term(lam.clone(), C::unit().over(&p_norm(&lam, param))?);
    }
    Ok(out)
}

/// `q_λ = q_{λ_1} q_{λ_2} ⋯`.
pub fn q_lambda<C: Scalar>(lambda: &Partition, param: &C) -> Result<SymFun<C>> {
    let mut cache: BTreeMap<usize, SymFun<C>> = BTreeMap::new();
    let mut acc = SymFun::one();
    for &k in lambda.parts() {
        if !cache.contains_key(&k) {
            cache.insert(k, q_n(k, param)?);
        }
        acc = acc.mul(&cache[&k]);
    }
    Ok(acc)
}

/// Expands `Σ_κ c_κ q_κ` into the power-sum basis.
pub fn from_q_basis<C: Scalar>(coeffs: &BTreeMap<Partition, C>, param: &C) -> Result<SymFun<C>> {
    let mut out = SymFun::zero();
    for (k, c) in coeffs {
        out = out.add(&q_lambda(k, param)?.scale(c));
    }
    Ok(out)
}

impl<C: Scalar> fmt::Display for SymFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{}]·p{}", c, k)?;
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for SymFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests;
