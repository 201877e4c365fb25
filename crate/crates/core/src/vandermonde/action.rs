//! `Δ_s^t` acting on `q_{n_1}⋯q_{n_s}` at Jack parameter `1/t`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{dyson_constant, expand_delta, DeltaLimits, LaurentPoly};
use crate::error::{Error, Result};
use crate::jack::{qbasis_coeffs, JackSource};
use crate::partition::Partition;
use crate::ratfield::factorial;
use crate::symfun::{from_q_basis, SymFun};

/// `Σ_β C_β q_{n+β}` as integer coefficients on sorted `q`-indices;
/// a negative index kills its term and `q_0 = 1`.
pub fn apply_delta_q(exps: &[usize], delta: &LaurentPoly) -> Result<BTreeMap<Partition, BigInt>> {
    if delta.arity() != exps.len() {
        return Err(Error::InvalidArgument(alloc::format!("{} exponents for a Δ in {} variables", exps.len(), delta.arity())));
    }
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    'terms: for (beta, c) in delta.terms() {
        let mut idx = Vec::with_capacity(exps.len());
        for (&n, &b) in exps.iter().zip(beta) {
            let v = n as i64 + b as i64;
            if v < 0 {
                continue 'terms;
            }
            idx.push(v as usize);
        }
        *out.entry(Partition::from_multiset(idx)).or_insert_with(BigInt::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Same result as [`apply_delta_q`] without expanding `Δ_s^t`: the pair
/// factors `2 - D_i/D_j - D_j/D_i` act one at a time on index vectors, and a
/// branch is dropped once some index can no longer climb back to `≥ 0`.
pub fn apply_delta_q_direct(exps: &[usize], t: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let s = exps.len();
    if s == 0 || t == 0 {
        return Err(Error::InvalidArgument(alloc::format!("need s, t ≥ 1, got s={} t={}", s, t)));
    }
    let mut factors = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            for _ in 0..t {
                factors.push((i, j));
            }
        }
    }
    // headroom[i]: how far index i can still rise from the factors not yet applied
    let mut headroom = alloc::vec![(s - 1) * t; s];
    let mut state: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    state.insert(exps.iter().map(|&n| n as i64).collect(), BigInt::one());
    let two = BigInt::from(2);
    for (i, j) in factors {
        headroom[i] -= 1;
        headroom[j] -= 1;
        let mut next: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (v, c) in &state {
            for (di, dj, w) in [(0i64, 0i64, &two * c), (1, -1, -c), (-1, 1, -c)] {
                let (a, b) = (v[i] + di, v[j] + dj);
                if a + headroom[i] as i64 >= 0 && b + headroom[j] as i64 >= 0 {
                    let mut u = v.clone();
                    u[i] = a;
                    u[j] = b;
                    *next.entry(u).or_insert_with(BigInt::zero) += w;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (v, c) in state {
        debug_assert!(v.iter().all(|&x| x >= 0));
        *out.entry(Partition::from_multiset(v.into_iter().map(|x| x as usize).collect())).or_insert_with(BigInt::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// The Jack parameter `1/t`.
pub fn inverse_param(t: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(t))
}

/// `Σ c_κ q_κ` expanded in power sums at `param`.
pub fn q_expansion_to_p(q: &BTreeMap<Partition, BigRational>, param: &BigRational) -> Result<SymFun<BigRational>> {
    from_q_basis(q, param)
}

/// `q`-coefficients of `X′_λ`: the `Δ`-action on `q_{λ_1}⋯q_{λ_s}` times `(t!)^s/(st)!`.
/// The sign in front of the action and the one in `c_s` cancel.
pub fn x_prime_q_expansion(lambda: &Partition, t: usize, limits: DeltaLimits) -> Result<BTreeMap<Partition, BigRational>> {
    let s = lambda.len();
    if s == 0 {
        return Ok(BTreeMap::from([(Partition::empty(), BigRational::one())]));
    }
    if s * t > limits.max_st {
        return Err(Error::ResourceGuard(alloc::format!("s·t = {} exceeds {}", s * t, limits.max_st)));
    }
    let norm = BigRational::new(BigInt::one(), dyson_constant(s, t));
    Ok(apply_delta_q_direct(lambda.parts(), t)?.into_iter().map(|(k, c)| (k, BigRational::from_integer(c) * &norm)).collect())
}

/// `X′_λ` in power sums at parameter `1/t`.
pub fn x_prime_image(lambda: &Partition, t: usize, limits: DeltaLimits) -> Result<SymFun<BigRational>> {
    q_expansion_to_p(&x_prime_q_expansion(lambda, t, limits)?, &inverse_param(t))
}

/// `Δ_s^t·q_{(k^s)} = (st)!/(t!)^s · Q_{(k^s)}` at parameter `1/t`.
pub fn rect_action_check<S: JackSource<BigRational>>(src: &S, k: usize, s: usize, t: usize, limits: DeltaLimits) -> Result<bool> {
    let param = inverse_param(t);
    if *src.param() != param {
        return Err(Error::InvalidArgument(alloc::format!("source parameter {} is not 1/{}", src.param(), t)));
    }
    let delta = expand_delta(s, t, limits)?;
    let rect = Partition::rectangle(k, s);
    let q: BTreeMap<Partition, BigRational> =
        apply_delta_q(rect.parts(), &delta)?.into_iter().map(|(k, c)| (k, BigRational::from_integer(c))).collect();
    let lhs = q_expansion_to_p(&q, &param)?;
    let rhs = src.triple(&rect)?.q.scale(&BigRational::from_integer(dyson_constant(s, t)));
    Ok(lhs == rhs)
}

/// For `λ = ((k+1)^s, k)`: the measured `c` with `X′_λ = c·Q_λ` at `1/t`,
/// alongside `-s/(2(t^{-2} + s))` for comparison. `None` when not proportional.
pub fn near_rect_scalar<S: JackSource<BigRational>>(src: &S, k: usize, s: usize, t: usize, limits: DeltaLimits) -> Result<(Option<BigRational>, BigRational)> {
    if *src.param() != inverse_param(t) {
        return Err(Error::InvalidArgument(alloc::format!("source parameter {} is not 1/{}", src.param(), t)));
    }
    let mut parts = alloc::vec![k + 1; s];
    parts.push(k);
    let lam = Partition::new(parts)?;
    let x = x_prime_image(&lam, t, limits)?;
    let measured = x.ratio_to(&src.triple(&lam)?.q);
    let tinv2 = inverse_param(t) * inverse_param(t);
    let sb = BigRational::from_integer(BigInt::from(s));
    let stated = -sb.clone() / (BigRational::from_integer(2.into()) * (tinv2 + sb));
    Ok((measured, stated))
}

/// Both sides of the coefficient identity for one exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRouteRow {
    pub beta: Vec<i32>,
    pub k: usize,
    pub mu: Partition,
    pub direct: BigInt,
    pub via_q: BigRational,
}

impl QRouteRow {
    pub fn matches(&self) -> bool {
        BigRational::from_integer(self.direct.clone()) == self.via_q
    }
}

/// `C_β = m(μ_β)!·(st)!/(s!(t!)^s) · a_{μ_β}` where `μ_β = (k^s) + sort(β)`
/// and `a` are the `q`-coefficients of `Q_{(k^s)}` at `1/t`; `k` is the least
/// value making `μ_β` a partition with `s` positive parts.
pub fn q_route_coefficient<S: JackSource<BigRational>>(src: &S, beta: &[i32], t: usize, delta: &LaurentPoly) -> Result<QRouteRow> {
    let s = beta.len();
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let min = *sorted.last().ok_or_else(|| Error::InvalidArgument("empty β".into()))?;
    let k = (1 - min).max(1) as usize;
    let mu = Partition::new(sorted.iter().map(|&b| (k as i32 + b) as usize).collect())?;
    let rect = Partition::rectangle(k, s);
    let a = qbasis_coeffs(&src.triple(&rect)?.q, src.param())?;
    let a_mu = a.get(&mu).cloned().unwrap_or_else(BigRational::zero);
    let scale = BigRational::new(mu.multiplicity_factorial() * dyson_constant(s, t), factorial(s));
    Ok(QRouteRow { beta: beta.to_vec(), k, mu, direct: delta.coeff(beta), via_q: scale * a_mu })
}

/// Rank of the power-sum coefficient vectors.
pub fn linear_rank(rows: &[SymFun<BigRational>]) -> usize {
    let mut keys: Vec<Partition> = rows.iter().flat_map(|r| r.terms().keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| keys.iter().map(|k| r.coeff(k)).collect()).collect();
    let mut rank = 0;
    for col in 0..keys.len() {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, piv);
        let pivot_row = m[rank].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &pivot_row[col];
                for c in col..keys.len() {
                    let d = &f * &pivot_row[c];
                    m[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}
