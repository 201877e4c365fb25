//! Monomial expansion of `J_λ` from the eigenvalue recursion of
//!
//! `D = (α/2) Σ x_i² ∂_i² + Σ_{i≠j} x_i²/(x_i - x_j) ∂_i`,
//!
//! which is triangular on monomials with diagonal
//! `(α/2) Σ λ_i(λ_i - 1) - Σ (i - 1) λ_i` (up to a shift common to one weight).
//! Below the diagonal, `m_μ` appears in `D m_κ` once for every pair of parts of
//! `κ` that squeezes to `μ`, with weight the difference of those two parts.
//!
//! Working in the `J` normalization keeps every coefficient a polynomial, so
//! each division below is exact in the symbolic case.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::partition::{HookKind, Partition};
use crate::ratfield::Scalar;

fn diagonal<C: Scalar>(mu: &Partition, param: &C) -> C {
    let a: usize = mu.parts().iter().map(|&x| x * (x - 1) / 2).sum();
    let b: usize = mu.parts().iter().enumerate().map(|(i, &x)| i * x).sum();
    C::linear(param, a as i64, -(b as i64))
}

/// Partitions squeezing to `mu` in one step, with their off-diagonal weight.
fn raisings(mu: &Partition) -> Vec<(Partition, i64)> {
    let blocks = mu.part_blocks();
    let mut out = Vec::new();
    for p in 0..blocks.len() {
        for q in p..blocks.len() {
            let (a, ma) = blocks[p];
            let (b, mb) = blocks[q];
            let pairs = if p == q { ma * (ma - 1) / 2 } else { ma * mb };
            if pairs == 0 {
                continue;
            }
            for r in 1..=b {
                let mut parts = mu.parts().to_vec();
                let i = parts.iter().position(|&x| x == a).expect("block value");
                parts[i] += r;
                let j = parts.iter().rposition(|&x| x == b).expect("block value");
                parts[j] -= r;
                out.push((Partition::from_multiset(parts), (pairs * (a - b + 2 * r)) as i64));
            }
        }
    }
    out
}

/// `J_λ = Σ_{μ ≤ λ} v_μ m_μ`.
pub fn jack_j_monomial<C: Scalar>(lambda: &Partition, param: &C) -> Result<BTreeMap<Partition, C>> {
    let support: Vec<Partition> = Partition::all(lambda.weight()).into_iter().filter(|m| m.dominated_by(lambda)).collect();
    let top = diagonal(lambda, param);
    let mut v: BTreeMap<Partition, C> = BTreeMap::new();
    v.insert(lambda.clone(), lambda.full_hook_product(HookKind::Lower, param));
    // lexicographically decreasing, so every κ > μ is settled before μ
    for mu in support.iter().skip_while(|m| *m != lambda).skip(1) {
        let mut acc = C::nil();
        for (kappa, w) in raisings(mu) {
            if let Some(c) = v.get(&kappa) {
                acc = acc.plus(&c.scaled(&BigRational::from_integer(BigInt::from(w))));
            }
        }
        if acc.is_nil() {
            continue;
        }
        let d = top.minus(&diagonal(mu, param));
        v.insert(mu.clone(), acc.over(&d)?);
    }
    Ok(v)
}

fn rescale<C: Scalar>(v: BTreeMap<Partition, C>, by: &C) -> Result<BTreeMap<Partition, C>> {
    v.into_iter().map(|(k, c)| Ok((k, c.over(by)?))).collect()
}

/// `P_λ` in the monomial basis; the `m_λ` coefficient is 1.
pub fn jack_p_monomial<C: Scalar>(lambda: &Partition, param: &C) -> Result<BTreeMap<Partition, C>> {
    rescale(jack_j_monomial(lambda, param)?, &lambda.full_hook_product(HookKind::Lower, param))
}

/// `Q_λ = J_λ / h^*(λ)` in the monomial basis.
pub fn jack_q_monomial<C: Scalar>(lambda: &Partition, param: &C) -> Result<BTreeMap<Partition, C>> {
    rescale(jack_j_monomial(lambda, param)?, &lambda.full_hook_product(HookKind::Upper, param))
}
