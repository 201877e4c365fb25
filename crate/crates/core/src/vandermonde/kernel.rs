//! Coefficients of `H_1(Z_s, W_t) = ∏_{i≠j}(1 - z_i/z_j) ∏_{i,j}(1 - z_i/w_j)^{-1}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{expand_delta, DeltaLimits};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Bound on intermediate terms while expanding the geometric series.
pub const H1_MAX_TERMS: usize = 2_000_000;

/// The coefficient of `z^λ / w^μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Term {
    pub lambda: Partition,
    pub mu: Partition,
    pub coeff: BigInt,
}

impl H1Term {
    pub fn dominates(&self) -> bool {
        self.mu.dominated_by(&self.lambda)
    }
}

/// All coefficients of `z^λ/w^μ` with `λ` a partition of length exactly `s`,
/// `μ` a partition of length at most `t`, and `|λ| ≤ cutoff`.
pub fn expand_h1(s: usize, t: usize, cutoff: usize) -> Result<Vec<H1Term>> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidArgument(format!("need s, t ≥ 1, got s={} t={}", s, t)));
    }
    // exponent layout: z_1..z_s, then the (positive) powers of 1/w_1..1/w_t
    let width = s + t;
    let mut acc: BTreeMap<Vec<i32>, BigInt> = BTreeMap::from([(alloc::vec![0; width], BigInt::one())]);
    for i in 0..s {
        for j in 0..t {
            let mut next: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
            for (e, c) in &acc {
                let used: i32 = e[s..].iter().sum();
                for n in 0..=(cutoff as i32 - used) {
                    let mut f = e.clone();
                    f[i] += n;
                    f[s + j] += n;
                    *next.entry(f).or_insert_with(BigInt::zero) += c;
                }
            }
            if next.len() > H1_MAX_TERMS {
                return Err(Error::ResourceGuard(format!("H_1 expansion exceeds {} terms", H1_MAX_TERMS)));
            }
            acc = next;
        }
    }
    let delta = expand_delta(s, 1, DeltaLimits { max_st: usize::MAX })?;
    let mut full: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
    for (e, c) in &acc {
        for (d, x) in delta.terms() {
            let mut f = e.clone();
            for (k, v) in d.iter().enumerate() {
                f[k] += v;
            }
            if f[..s].iter().all(|&v| v > 0) && f[..s].windows(2).all(|w| w[0] >= w[1]) && f[s..].windows(2).all(|w| w[0] >= w[1]) {
                *full.entry(f).or_insert_with(BigInt::zero) += c * x;
            }
        }
    }
    Ok(full
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, coeff)| {
            let lambda = Partition::from_multiset(e[..s].iter().map(|&v| v as usize).collect());
            let mu = Partition::from_multiset(e[s..].iter().map(|&v| v as usize).collect());
            H1Term { lambda, mu, coeff }
        })
        .collect())
}
