//! Exhaustive positivity sweeps over `(μ, ν, λ)`.

use alloc::vec::Vec;

use num_rational::BigRational;

use super::lr_oracle;
use crate::error::Result;
use crate::jack::JackSource;
use crate::partition::Partition;
use crate::ratfield::{nonneg_linear_factors, poly_is_nonneg_int, RatFunc, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Oracle,
    RectClosed,
    MarkedClosed,
}

/// One evaluated LR coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRReport {
    pub mu: Partition,
    pub nu: Partition,
    pub lambda: Partition,
    pub value: RatFunc,
    pub is_polynomial: bool,
    pub is_nonneg_int: bool,
    pub route: Route,
    /// Set when `λ - μ` is an upside-down `ω` of corner `.0` (0-based) with `|ω| = |ν|`.
    pub corner: Option<(usize, Partition)>,
    /// For tagged corner triples with nonzero value: the value splits into
    /// linear factors with nonnegative integer coefficients.
    pub linear_factors: Option<bool>,
    /// Two routes disagreed on this triple.
    pub mismatch: bool,
}

impl LRReport {
    pub fn from_value(mu: Partition, nu: Partition, lambda: Partition, value: RatFunc, route: Route) -> Self {
        let (is_polynomial, is_nonneg_int) = match value.as_poly() {
            Ok(p) => (true, poly_is_nonneg_int(&p)),
            Err(_) => (false, false),
        };
        let corner = lambda.corner_strip(&mu).filter(|(_, w)| w.weight() == nu.weight());
        let linear_factors = match (&corner, value.as_poly()) {
            (Some(_), Ok(p)) if !p.is_zero() => Some(nonneg_linear_factors(&p, 64).is_some()),
            _ => None,
        };
        LRReport { mu, nu, lambda, value, is_polynomial, is_nonneg_int, route, corner, linear_factors, mismatch: false }
    }

    /// The positivity verdict: zero, or a polynomial with nonnegative integer coefficients.
    pub fn is_positive(&self) -> bool {
        self.value.is_zero() || self.is_nonneg_int
    }
}

/// Every `(μ, λ)` with `μ ⊆ λ`, `|λ| ≤ max_weight` and `|μ| = |λ| - |ν|`.
pub fn sweep_triples(nu: &Partition, max_weight: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for w in nu.weight().max(1)..=max_weight {
        for lam in Partition::all(w) {
            for mu in Partition::all(w - nu.weight()) {
                if lam.contains(&mu) {
                    out.push((mu, lam.clone()));
                }
            }
        }
    }
    out
}

/// Oracle values for every triple of [`sweep_triples`], in that order.
pub fn positivity_sweep<S: JackSource<RatFunc>>(src: &S, nu: &Partition, max_weight: usize) -> Result<Vec<LRReport>> {
    let mut out = Vec::new();
    for (mu, lam) in sweep_triples(nu, max_weight) {
        let v = lr_oracle(src, &mu, nu, &lam)?;
        out.push(LRReport::from_value(mu, nu.clone(), lam, v, Route::Oracle));
    }
    Ok(out)
}

/// `⟨J_λ, J_μ J_ν⟩ ≠ 0` at `a` iff `⟨J_λ', J_μ' J_ν'⟩ ≠ 0` at `1/a`.
/// Returns the two nonvanishing flags.
pub fn conjugate_nonvanishing<S: JackSource<BigRational>, T: JackSource<BigRational>>(
    at_a: &S,
    at_inv: &T,
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
) -> Result<(bool, bool)> {
    let x = lr_oracle(at_a, mu, nu, lambda)?;
    let y = lr_oracle(at_inv, &mu.conjugate(), &nu.conjugate(), &lambda.conjugate())?;
    Ok((!x.is_nil(), !y.is_nil()))
}
