//! Building `Q_λ` from the `Q` of its rectangular filtration by nested skews.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;

use super::{jack_q_monomial, JackSource};
use crate::error::{Error, Result};
use crate::partition::{rect_filtration, Filtration, Partition};
use crate::ratfield::Scalar;
use crate::symfun::{inner, q_n, skew, to_monomial, MonomialTable, SymFun};

/// Coefficients `a_μ` in `f = Σ a_μ q_μ`, via `a_μ = ⟨f, m_μ⟩`.
pub fn qbasis_coeffs<C: Scalar>(f: &SymFun<C>, param: &C) -> Result<BTreeMap<Partition, C>> {
    let mut weights: alloc::vec::Vec<usize> = f.terms().keys().map(Partition::weight).collect();
    weights.dedup();
    let mut out = BTreeMap::new();
    for w in weights {
        let table = MonomialTable::new(w)?;
        let part = f.homogeneous_component(w);
        for mu in Partition::all(w) {
            let c = inner(&part, &table.m_as(&mu).expect("same weight"), param);
            if !c.is_nil() {
                out.insert(mu, c);
            }
        }
    }
    Ok(out)
}

/// `Q_λ = Σ_{μ ≥ λ} a_μ q_μ`.
pub fn jack_in_qbasis<C: Scalar, S: JackSource<C>>(src: &S, lambda: &Partition) -> Result<BTreeMap<Partition, C>> {
    qbasis_coeffs(&src.triple(lambda)?.q, src.param())
}

/// Monomial coefficients of `g^*·f` where `g = Σ g_κ q_κ` and `f = Σ f_ν m_ν`:
/// the `m_ρ` coefficient is `Σ_κ g_κ f_{κ∪ρ}`.
pub fn skew_q_on_monomial<C: Scalar>(g: &BTreeMap<Partition, C>, f: &BTreeMap<Partition, C>) -> BTreeMap<Partition, C> {
    let mut out: BTreeMap<Partition, C> = BTreeMap::new();
    let Some(wf) = f.keys().next().map(Partition::weight) else { return out };
    for (kappa, gk) in g {
        if kappa.weight() > wf {
            continue;
        }
        for rho in Partition::all(wf - kappa.weight()) {
            if let Some(fv) = f.get(&kappa.union(&rho)) {
                let e = out.entry(rho).or_insert_with(C::nil);
                *e = e.plus(&gk.times(fv));
            }
        }
    }
    out.retain(|_, c| !c.is_nil());
    out
}

/// Monomial expansion converted to `q`-coefficients.
fn monomial_to_q<C: Scalar>(g: &BTreeMap<Partition, C>, param: &C) -> Result<BTreeMap<Partition, C>> {
    let Some(w) = g.keys().next().map(Partition::weight) else { return Ok(BTreeMap::new()) };
    let table = MonomialTable::new(w)?;
    qbasis_coeffs(&table.from_monomial(g)?, param)
}

#[derive(Clone, Debug)]
pub struct FiltrationResult<C> {
    pub filtration: Filtration,
    /// The nested skew, monomial basis.
    pub raw: BTreeMap<Partition, C>,
    /// Gram–Schmidt `Q_λ`, monomial basis.
    pub oracle: BTreeMap<Partition, C>,
    /// `Q_λ = c′·raw`.
    pub c_prime: C,
}

/// Largest rectangle the filtration route will expand.
pub const FILTRATION_MAX_RECT_WEIGHT: usize = 20;

/// `(…((f_s^*·f_{s-1})^*·f_{s-2})^*⋯·f_2)^*·f_1` with `f_i = Q_{R_i}`,
/// compared with the oracle `Q_λ`.
pub fn jack_q_filtration<C: Scalar, S: JackSource<C>>(src: &S, lambda: &Partition) -> Result<FiltrationResult<C>> {
    let filtration = rect_filtration(lambda)?;
    if let Some(big) = filtration.rects.iter().find(|r| r.weight() > FILTRATION_MAX_RECT_WEIGHT) {
        return Err(Error::ResourceGuard(format!("filtration rectangle {} exceeds weight {}", big, FILTRATION_MAX_RECT_WEIGHT)));
    }
    let param = src.param();
    let rects = &filtration.rects;
    let mut g = jack_q_monomial(rects.last().expect("nonempty filtration"), param)?;
    for r in rects.iter().rev().skip(1) {
        let f = jack_q_monomial(r, param)?;
        g = skew_q_on_monomial(&monomial_to_q(&g, param)?, &f);
        if g.is_empty() {
            return Err(Error::Integrity(format!("filtration of {} collapsed to zero at {}", lambda, r)));
        }
    }
    let oracle = to_monomial(&src.triple(lambda)?.q);
    let c_prime = proportionality(&oracle, &g)
        .ok_or_else(|| Error::Integrity(format!("filtration result for {} is not proportional to Q", lambda)))?;
    Ok(FiltrationResult { filtration, raw: g, oracle, c_prime })
}

/// `c` with `a = c·b`, if any.
pub fn proportionality<C: Scalar>(a: &BTreeMap<Partition, C>, b: &BTreeMap<Partition, C>) -> Option<C> {
    let (k, bk) = b.iter().next()?;
    let c = a.get(k)?.over(bk).ok()?;
    (a.len() == b.len() && b.iter().all(|(k, v)| a.get(k).is_some_and(|x| *x == v.times(&c)))).then_some(c)
}

/// For `λ = ((k+1)^s)` and `n ≤ k+1`, the scalar `c` with
/// `q_n^*·Q_λ = c·Q_{((k+1)^{s-1}, k+1-n)}`; `None` if not proportional.
pub fn row_removal_scalar<C: Scalar, S: JackSource<C>>(src: &S, k: usize, s: usize, n: usize) -> Result<Option<C>> {
    if s == 0 || n > k + 1 {
        return Err(Error::InvalidArgument(format!("need s ≥ 1 and n ≤ k+1, got k={} s={} n={}", k, s, n)));
    }
    let lam = Partition::rectangle(k + 1, s);
    let mut parts = vec![k + 1; s - 1];
    parts.push(k + 1 - n);
    let target = Partition::new(parts)?;
    let lhs = skew(&q_n(n, src.param())?, &src.triple(&lam)?.q, src.param());
    Ok(lhs.ratio_to(&src.triple(&target)?.q))
}
