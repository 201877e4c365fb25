//! `⟨J_μ J_{(n)}, J_λ⟩`, by closed form and by direct inner product.

use alloc::vec::Vec;

use num_rational::BigRational;

use super::JackSource;
use crate::error::Result;
use crate::partition::{HookKind, Partition};
use crate::ratfield::{factorial, Scalar};
use crate::symfun::inner;

/// Hook kinds for `(λ_u, λ_b, μ_b, μ_u)`.
pub type HookAssignment = [HookKind; 4];

/// The assignment that matches Gram–Schmidt (see `fit_pieri_assignment`).
pub const PIERI_ASSIGNMENT: HookAssignment = [HookKind::Upper, HookKind::Lower, HookKind::Upper, HookKind::Lower];

/// `n! α^n h(λ_u) h(λ_b) h(μ_b) h(μ_u)` when `λ - μ` is a horizontal
/// `n`-strip, zero otherwise.
pub fn pieri_closed_form<C: Scalar>(mu: &Partition, n: usize, lambda: &Partition, kinds: HookAssignment, param: &C) -> Result<C> {
    if !lambda.is_horizontal_strip(mu, n) {
        return Ok(C::nil());
    }
    let s = lambda.based_split(mu)?;
    let lead = param.pow(n).scaled(&BigRational::from_integer(factorial(n)));
    Ok(lead
        .times(&lambda.hook_product_at(&s.lambda_unbased, kinds[0], param)?)
        .times(&lambda.hook_product_at(&s.lambda_based, kinds[1], param)?)
        .times(&mu.hook_product_at(&s.mu_based, kinds[2], param)?)
        .times(&mu.hook_product_at(&s.mu_unbased, kinds[3], param)?))
}

pub fn pieri_coeff<C: Scalar>(mu: &Partition, n: usize, lambda: &Partition, param: &C) -> Result<C> {
    pieri_closed_form(mu, n, lambda, PIERI_ASSIGNMENT, param)
}

/// `⟨J_μ J_{(n)}, J_λ⟩` from Gram–Schmidt.
pub fn pieri_oracle<C: Scalar, S: JackSource<C>>(src: &S, mu: &Partition, n: usize, lambda: &Partition) -> Result<C> {
    if lambda.weight() != mu.weight() + n {
        return Ok(C::nil());
    }
    let jm = src.triple(mu)?;
    let jn = src.triple(&Partition::rectangle(n, 1))?;
    let jl = src.triple(lambda)?;
    Ok(inner(&jm.j.mul(&jn.j), &jl.j, src.param()))
}

/// Every valid `(μ, n, λ)` with `1 ≤ n` and `|λ| ≤ max_weight`, including
/// non-strips so vanishing is covered too.
pub fn pieri_triples(max_weight: usize) -> Vec<(Partition, usize, Partition)> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        for lam in Partition::all(w) {
            for n in 1..=w {
                for mu in Partition::all(w - n) {
                    out.push((mu, n, lam.clone()));
                }
            }
        }
    }
    out
}

/// All 16 assignments consistent with the oracle on every triple up to
/// `max_weight`.
pub fn fit_pieri_assignment<C: Scalar, S: JackSource<C>>(src: &S, max_weight: usize) -> Result<Vec<HookAssignment>> {
    let kinds = [HookKind::Lower, HookKind::Upper];
    let mut candidates: Vec<HookAssignment> = Vec::new();
    for bits in 0..16u8 {
        candidates.push(core::array::from_fn(|i| kinds[((bits >> i) & 1) as usize]));
    }
    for (mu, n, lam) in pieri_triples(max_weight) {
        let want = pieri_oracle(src, &mu, n, &lam)?;
        let mut keep = Vec::new();
        for c in candidates {
            if pieri_closed_form(&mu, n, &lam, c, src.param())? == want {
                keep.push(c);
            }
        }
        candidates = keep;
        if candidates.is_empty() {
            break;
        }
    }
    Ok(candidates)
}

