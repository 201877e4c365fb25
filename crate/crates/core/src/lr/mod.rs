//! Littlewood–Richardson coefficients `⟨J_μ J_ν, J_λ⟩` for Jack functions.

mod sweep;

use alloc::collections::BTreeSet;
use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::jack::JackSource;
use crate::partition::{HookKind, Partition, Square};
use crate::ratfield::{factorial, Scalar};
use crate::symfun::{inner, q_n, SymFun};

pub use sweep::{conjugate_nonvanishing, positivity_sweep, sweep_triples, LRReport, Route};

/// `⟨J_μ J_ν, J_λ⟩` by direct inner product.
pub fn lr_oracle<C: Scalar, S: JackSource<C>>(src: &S, mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<C> {
    if mu.weight() + nu.weight() != lambda.weight() {
        return Ok(C::nil());
    }
    let prod = src.triple(mu)?.j.mul(&src.triple(nu)?.j);
    Ok(inner(&prod, &src.triple(lambda)?.j, src.param()))
}

fn product_over<C: Scalar, F: Fn(Square) -> C>(squares: &BTreeSet<Square>, f: F) -> C {
    squares.iter().fold(C::unit(), |acc, &s| acc.times(&f(s)))
}

/// For `λ = (r^s)` and `ν ⊆ λ`: the only nonzero `μ` is the complement `ν̄`, with
/// value `h_*(μ) h^*(ν) h_1(μ) h_2(ν)` where
/// `h_1(μ) = ∏_{(i,j)∈μ} [(μ'_j - i) + α(r - j + 1)]` and
/// `h_2(ν) = ∏_{(i,j)∈ν} [(s - i + 1) + α(j - 1)]`.
pub fn rect_lr<C: Scalar>(lambda: &Partition, nu: &Partition, param: &C) -> Result<(Partition, C)> {
    let (r, s) = lambda.rectangle_dims().ok_or_else(|| Error::NotRectangular(lambda.clone()))?;
    let mu = lambda.complement(nu)?;
    let mc = mu.conjugate();
    let h1 = product_over(&mu.squares(), |q| C::linear(param, (r + 1 - q.col) as i64, (mc.part(q.col - 1) - q.row) as i64));
    let h2 = product_over(&nu.squares(), |q| C::linear(param, (q.col - 1) as i64, (s + 1 - q.row) as i64));
    let value = mu.full_hook_product(HookKind::Lower, param).times(&nu.full_hook_product(HookKind::Upper, param)).times(&h1).times(&h2);
    Ok((mu, value))
}

/// How the based/un-based hook ratio in the marked-rectangle formula is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HookRatio {
    /// `h_*(ν̄_u) h^*(ν̄_b) / (h_*(μ_u) h^*(μ_b))`.
    Printed,
    /// `h_*(μ_u) h^*(μ_b) / (h_*(ν̄_u) h^*(ν̄_b))`, which is what the Pieri
    /// rule gives after dividing by `⟨J_ν̄, J_ν̄⟩`.
    Inverted,
}

/// A reading of the marked-rectangle closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MarkedForm {
    pub ratio: HookRatio,
    /// Whether the extra `n! α^n` factor is applied.
    pub pieri_factor: bool,
}

impl MarkedForm {
    /// The form as usually stated.
    pub const PRINTED: MarkedForm = MarkedForm { ratio: HookRatio::Printed, pieri_factor: true };
    /// The form that agrees with the inner-product oracle.
    pub const VERIFIED: MarkedForm = MarkedForm { ratio: HookRatio::Inverted, pieri_factor: false };

    pub fn all() -> [MarkedForm; 4] {
        [
            MarkedForm::PRINTED,
            MarkedForm { ratio: HookRatio::Inverted, pieri_factor: true },
            MarkedForm { ratio: HookRatio::Printed, pieri_factor: false },
            MarkedForm::VERIFIED,
        ]
    }
}

/// `⟨J_μ J_ν, J_λ⟩` for `λ = (r^{s-1}, r-n)`:
/// `(r-n)!/(r⋯(n+1) ∏_{i<n}(s + iα)) · ratio · [n! α^n] · ⟨J_ν̄ J_ν, J_{(r^s)}⟩`,
/// zero unless `ν̄ - μ` is a horizontal `n`-strip.
pub fn marked_rect_lr<C: Scalar>(r: usize, s: usize, n: usize, mu: &Partition, nu: &Partition, form: MarkedForm, param: &C) -> Result<C> {
    if s == 0 || n > r {
        return Err(Error::InvalidArgument(format!("marked rectangle needs s ≥ 1 and n ≤ r, got r={} s={} n={}", r, s, n)));
    }
    let rect = Partition::rectangle(r, s);
    if !rect.contains(nu) || mu.weight() + nu.weight() + n != r * s {
        return Ok(C::nil());
    }
    let (nubar, rect_value) = rect_lr(&rect, nu, param)?;
    if !nubar.is_horizontal_strip(mu, n) {
        return Ok(C::nil());
    }
    let split = nubar.based_split(mu)?;
    let big = nubar
        .hook_product_at(&split.lambda_unbased, HookKind::Lower, param)?
        .times(&nubar.hook_product_at(&split.lambda_based, HookKind::Upper, param)?);
    let small = mu
        .hook_product_at(&split.mu_unbased, HookKind::Lower, param)?
        .times(&mu.hook_product_at(&split.mu_based, HookKind::Upper, param)?);
    let ratio = match form.ratio {
        HookRatio::Printed => big.over(&small)?,
        HookRatio::Inverted => small.over(&big)?,
    };
    let mut denom = C::from_rational(BigRational::from_integer(factorial(r) / factorial(n)));
    for i in 0..n {
        denom = denom.times(&C::linear(param, i as i64, s as i64));
    }
    let mut value = C::from_rational(BigRational::from_integer(factorial(r - n))).over(&denom)?.times(&ratio).times(&rect_value);
    if form.pieri_factor {
        value = value.times(&param.pow(n).scaled(&BigRational::from_integer(factorial(n))));
    }
    Ok(value)
}

/// `(r, s, n)` with `λ = (r^{s-1}, r-n)`, `1 ≤ n < r`, for non-rectangular marked shapes.
pub fn marked_dims(lambda: &Partition) -> Option<(usize, usize, usize)> {
    let l = lambda.len();
    if l < 2 || lambda.is_rectangular() {
        return None;
    }
    let r = lambda.part(0);
    (lambda.parts()[..l - 1].iter().all(|&p| p == r)).then(|| (r, l, r - lambda.part(l - 1)))
}

/// The closed-form value when `λ` is a rectangle or a marked rectangle.
pub fn closed_form_lr<C: Scalar>(mu: &Partition, nu: &Partition, lambda: &Partition, param: &C) -> Result<Option<(Route, C)>> {
    if mu.weight() + nu.weight() != lambda.weight() {
        return Ok(None);
    }
    if lambda.is_rectangular() && !lambda.is_empty() {
        let v = if lambda.contains(nu) {
            let (bar, v) = rect_lr(lambda, nu, param)?;
            if bar == *mu { v } else { C::nil() }
        } else {
            C::nil()
        };
        return Ok(Some((Route::RectClosed, v)));
    }
    match marked_dims(lambda) {
        Some((r, s, n)) => Ok(Some((Route::MarkedClosed, marked_rect_lr(r, s, n, mu, nu, MarkedForm::VERIFIED, param)?))),
        None => Ok(None),
    }
}

/// `(n-1)! α^n [(1 + nα) q_n q_1 - (n+1) q_{n+1}]`.
pub fn j_n1_in_qbasis<C: Scalar>(n: usize, param: &C) -> Result<SymFun<C>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let lead = param.pow(n).scaled(&BigRational::from_integer(factorial(n - 1)));
    let a = q_n(n, param)?.mul(&q_n(1, param)?).scale(&C::linear(param, n as i64, 1));
    let b = q_n(n + 1, param)?.scale(&C::from_rational(BigRational::from_integer(BigInt::from(n + 1))));
    Ok(a.sub(&b).scale(&lead))
}

#[cfg(test)]
mod tests;
