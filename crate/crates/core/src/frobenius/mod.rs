//! Power-sum expansions of rectangular Jack functions through the
//! vertex-operator g-coefficients, and their use for general shapes.

mod chains;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::jack::JackSource;
use crate::partition::{rect_filtration, Partition};
use crate::ratfield::factorial;
use crate::symfun::{skew, SymFun};

pub use chains::{brute_force_chain_count, chain_value, chains, PartitionChain};

/// A rectangle `(k^s)` evaluated at the integer parameter `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GCoeffKey {
    pub k: usize,
    pub s: usize,
    pub t: usize,
}

impl GCoeffKey {
    pub fn new(k: usize, s: usize, t: usize) -> Result<Self> {
        if k == 0 || s == 0 || t == 0 {
            return Err(Error::InvalidArgument(format!("k, s, t must be positive, got ({}, {}, {})", k, s, t)));
        }
        Ok(GCoeffKey { k, s, t })
    }

    pub fn rect(&self) -> Partition {
        Partition::rectangle(self.k, self.s)
    }

    /// `|μ^i| = i(k + (s-i)t)`.
    pub fn level_weight(&self, i: usize) -> usize {
        i * (self.k + (self.s - i) * self.t)
    }

    /// `(-1)^{ts(s-1)/2} (t!)^s / (st)!`, without the `(-2)^{-l(μ)}` part.
    fn prefactor(&self) -> BigRational {
        let sign = if (self.t * self.s * (self.s - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let num = factorial(self.t).pow(self.s as u32) * BigInt::from(sign);
        BigRational::new(num, factorial(self.s * self.t))
    }
}

/// `(-2t)^{l(ν)} / z_ν`.
pub(crate) fn level_factor(nu: &Partition, t: usize) -> BigRational {
    let base = BigInt::from(-2 * t as i64).pow(nu.len() as u32);
    BigRational::new(base, nu.z())
}

/// The un-normalised chain sums `Σ ∏_i (-2t)^{l(ν^i)}/z_{ν^i} C(m(μ^{i-1}), m(μ^i∖ν^i))`
/// for every `μ ⊢ ks`, by dynamic programming over the levels.
pub fn chain_sums(key: GCoeffKey) -> BTreeMap<Partition, BigRational> {
    let mut by_weight: BTreeMap<usize, Vec<(Partition, BigRational)>> = BTreeMap::new();
    let mut level: BTreeMap<Partition, BigRational> = BTreeMap::from([(Partition::empty(), BigRational::one())]);
    for i in 1..=key.s {
        let w = key.level_weight(i);
        let mut next: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (prev, acc) in &level {
            for (rho, binom) in prev.sub_multisets() {
                if rho.weight() > w {
                    continue;
                }
                let carried = acc * BigRational::from_integer(binom);
                let rest = by_weight
                    .entry(w - rho.weight())
                    .or_insert_with_key(|&n| Partition::all(n).into_iter().map(|nu| { let f = level_factor(&nu, key.t); (nu, f) }).collect());
                for (nu, f) in rest.iter() {
                    let e = next.entry(rho.union(nu)).or_insert_with(BigRational::zero);
                    *e += &carried * f;
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        level = next;
    }
    level
}

/// Every nonzero `g_{(k^s),μ}(1/t)`.
pub fn g_table(key: GCoeffKey) -> BTreeMap<Partition, BigRational> {
    let pre = key.prefactor();
    chain_sums(key)
        .into_iter()
        .map(|(mu, v)| {
            let two = BigInt::from(-2).pow(mu.len() as u32);
            let g = &pre * v / BigRational::from_integer(two);
            (mu, g)
        })
        .collect()
}

/// `g_{(k^s),μ}(1/t)`; zero when no chain ends at `μ`.
pub fn g_coeff(key: GCoeffKey, mu: &Partition) -> Result<BigRational> {
    if mu.weight() != key.k * key.s {
        return Err(Error::InvalidArgument(format!("{} does not have weight {}", mu, key.k * key.s)));
    }
    Ok(g_table(key).remove(mu).unwrap_or_else(BigRational::zero))
}

/// `Σ_μ g_{(k^s),μ}(1/t) p_μ`.
pub fn rect_frobenius_lhs(key: GCoeffKey) -> SymFun<BigRational> {
    SymFun::from_terms(g_table(key))
}

/// Outcome of comparing the g-expansion of `Q_{(k^s)}(1/t)` with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub key: GCoeffKey,
    pub lhs: SymFun<BigRational>,
    pub rhs: SymFun<BigRational>,
    /// `lhs - rhs`, empty on agreement.
    pub diff: SymFun<BigRational>,
    /// `c` with `lhs = c·rhs`, when the two are proportional.
    pub ratio: Option<BigRational>,
}

impl FrobeniusReport {
    pub fn matches(&self) -> bool {
        self.diff.is_zero()
    }
}

/// `src` must be evaluated at `1/t`.
pub fn frobenius_rect_check<S: JackSource<BigRational>>(src: &S, key: GCoeffKey) -> Result<FrobeniusReport> {
    check_param(src, key.t)?;
    let lhs = rect_frobenius_lhs(key);
    let rhs = src.triple(&key.rect())?.q.clone();
    let diff = lhs.sub(&rhs);
    let ratio = lhs.ratio_to(&rhs);
    Ok(FrobeniusReport { key, lhs, rhs, diff, ratio })
}

fn check_param<S: JackSource<BigRational>>(src: &S, t: usize) -> Result<()> {
    let want = BigRational::new(BigInt::one(), BigInt::from(t));
    if *src.param() != want {
        return Err(Error::InvalidArgument(format!("Jack source must be at parameter {}, found {}", want, src.param())));
    }
    Ok(())
}

/// Both sides of the `p_1²` coefficient identity for `Q_{(1,1)}(1/t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cor35Report {
    pub t: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl Cor35Report {
    pub fn matches(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `lhs = Σ_{i=0}^{2} (-2t)^{2-i}/(2-i)! Σ_{ν⊢1+t, (1^i)⊂′ν} (-2t)^{l(ν)}/z_ν C(m(ν), m(1^i))`,
/// `rhs = (2t)!/(t!)² · 4t²/(t+1) · (-1)^t`.
pub fn cor35_check(t: usize) -> Result<Cor35Report> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let mut lhs = BigRational::zero();
    for i in 0..=2usize {
        let ones = Partition::new(alloc::vec![1; i])?;
        let outer = BigRational::new(BigInt::from(-2 * t as i64).pow((2 - i) as u32), factorial(2 - i));
        let mut inner = BigRational::zero();
        for nu in Partition::all(1 + t) {
            if let Ok(b) = nu.multiset_binomial(&ones) {
                inner += level_factor(&nu, t) * BigRational::from_integer(b);
            }
        }
        lhs += outer * inner;
    }
    let sign = if t % 2 == 0 { 1 } else { -1 };
    let tt = BigInt::from(t);
    let rhs = BigRational::new(
        factorial(2 * t) * BigInt::from(4 * sign) * &tt * &tt,
        factorial(t).pow(2) * (tt + 1),
    );
    Ok(Cor35Report { t, lhs, rhs })
}

/// Nested skews `(…((G_s^*·G_{s-1})^*·G_{s-2})^*…)^*·G_1` of the g-expansions
/// of the filtration rectangles, at parameter `1/t`.  Proportional to `Q_λ(1/t)`
/// whenever the rectangular expansions are.
pub fn general_frobenius(lambda: &Partition, t: usize) -> Result<SymFun<BigRational>> {
    if lambda.is_empty() || t == 0 {
        return Err(Error::InvalidArgument(format!("need a nonempty partition and t ≥ 1, got {} and {}", lambda, t)));
    }
    let param = BigRational::new(BigInt::one(), BigInt::from(t));
    let expand = |r: &Partition| -> Result<SymFun<BigRational>> {
        let (k, s) = r.rectangle_dims().ok_or_else(|| Error::NotRectangular(r.clone()))?;
        Ok(rect_frobenius_lhs(GCoeffKey::new(k, s, t)?))
    };
    let rects = rect_filtration(lambda)?.rects;
    let mut g = expand(rects.last().expect("nonempty filtration"))?;
    for r in rects.iter().rev().skip(1) {
        g = skew(&g, &expand(r)?, &param);
    }
    Ok(g)
}
