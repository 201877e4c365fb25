//! The CLI verbs as library functions returning JSON plus a plain rendering.

use jackvo_core::jack::{jack_q_filtration, JackSource};
use jackvo_core::lr::{closed_form_lr, lr_oracle, LRReport, Route};
use jackvo_core::partition::{filtration_closed_form, multiplicity_type, rect_filtration, star_vector};
use jackvo_core::symfun::MonomialTable;
use jackvo_core::vandermonde::{delta_coefficient, dyson_constant, DeltaLimits, Prop39};
use jackvo_core::{BigRational, Error, Partition, RatFunc, Result, Scalar, SymFun};
use serde_json::{json, Value};

use crate::cache::Norm;
use crate::format::{deserialize_terms, integer_json, rational_json, render_terms, serialize_in_basis, Basis, Coefficient, SerializedLRReport};
use crate::suites::{self, Context, Suite, SuiteParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Method {
    GramSchmidt,
    Filtration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LrRoute {
    Oracle,
    Rect,
    Marked,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Named {
    /// `D_1^{-1}⋯D_i^{-1} D_{s-i+1}⋯D_s`; pick `i` with `--i`.
    General,
    TwoTwo,
    OneOneTwo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    AssertionFailed,
    /// Output is still printed, then the message goes to stderr with exit 2.
    Usage(String),
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub plain: String,
    pub status: Status,
}

impl Outcome {
    fn ok(json: Value, plain: String) -> Self {
        Outcome { json, plain, status: Status::Ok }
    }
}

/// Exit code for a library error: usage problems 2, resource guards 3, anything else 1.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceGuard(_) => 3,
        Error::Parse(_) | Error::InvalidArgument(_) | Error::WeightMismatch(..) | Error::NotContained { .. } | Error::NotRectangular(_) | Error::ZeroPartition => 2,
        _ => 1,
    }
}

fn scale_norm(q: &SymFun<RatFunc>, lambda: &Partition, norm: Norm, param: &RatFunc) -> Result<SymFun<RatFunc>> {
    use jackvo_core::partition::HookKind;
    let upper = lambda.full_hook_product(HookKind::Upper, param);
    let lower = lambda.full_hook_product(HookKind::Lower, param);
    Ok(match norm {
        Norm::Q => q.clone(),
        Norm::J => q.scale(&upper),
        Norm::P => q.scale(&upper.over(&lower)?),
    })
}

pub fn expand(ctx: &Context, lambda: &Partition, norm: Norm, basis: Basis, method: Method) -> Result<Outcome> {
    let param = RatFunc::alpha();
    let (f, c_prime) = match method {
        Method::GramSchmidt => (norm.pick(&*ctx.symbolic.triple(lambda)?).clone(), None),
        Method::Filtration => {
            let res = jack_q_filtration(&ctx.symbolic, lambda)?;
            let raw = MonomialTable::new(lambda.weight())?.from_monomial(&res.raw)?;
            (scale_norm(&raw.scale(&res.c_prime), lambda, norm, &param)?, Some(res.c_prime))
        }
    };
    let ser = serialize_in_basis(&f, basis, &param)?;
    let mut plain = render_terms(basis, &deserialize_terms::<RatFunc>(&ser)?);
    let mut json = json!({ "lambda": lambda.parts(), "norm": norm, "method": match method { Method::GramSchmidt => "gram_schmidt", Method::Filtration => "filtration" }, "expansion": ser });
    if let Some(c) = c_prime {
        plain.push_str(&format!("\nc′ = {}", c));
        json["c_prime"] = serde_json::to_value(c.to_serialized()).expect("serializable");
        json["c_prime_display"] = Value::String(c.to_string());
    }
    Ok(Outcome::ok(json, plain))
}

pub fn lr(ctx: &Context, mu: &Partition, nu: &Partition, lambda: &Partition, route: LrRoute) -> Result<Outcome> {
    if mu.weight() + nu.weight() != lambda.weight() {
        // the pairing vanishes by degree; report it, but flag the call as misuse
        let msg = format!("|μ| + |ν| = {} but |λ| = {}", mu.weight() + nu.weight(), lambda.weight());
        let rep = LRReport::from_value(mu.clone(), nu.clone(), lambda.clone(), RatFunc::zero(), Route::Oracle);
        let mut json = serde_json::to_value(SerializedLRReport::from(&rep)).expect("serializable");
        json["weight_mismatch"] = Value::Bool(true);
        let plain = format!("⟨J{} J{}, J{}⟩ = 0  (weight mismatch)", mu, nu, lambda);
        return Ok(Outcome { json, plain, status: Status::Usage(msg) });
    }
    let param = RatFunc::alpha();
    let oracle = lr_oracle(&ctx.symbolic, mu, nu, lambda)?;
    let (value, used, agree) = match route {
        LrRoute::Oracle => (oracle.clone(), Route::Oracle, None),
        LrRoute::Rect | LrRoute::Marked => {
            let want = if route == LrRoute::Rect { Route::RectClosed } else { Route::MarkedClosed };
            match closed_form_lr(mu, nu, lambda, &param)? {
                Some((r, v)) if r == want => {
                    let agree = v == oracle;
                    (v, r, Some(agree))
                }
                _ => return Err(Error::InvalidArgument(format!("{} is not a {} shape", lambda, if want == Route::RectClosed { "rectangular" } else { "marked rectangular" }))),
            }
        }
    };
    let mut rep = LRReport::from_value(mu.clone(), nu.clone(), lambda.clone(), value, used);
    rep.mismatch = agree == Some(false);
    let mut json = serde_json::to_value(SerializedLRReport::from(&rep)).expect("serializable");
    if let Some(a) = agree {
        json["routes_agree"] = Value::Bool(a);
    }
    let plain = format!(
        "⟨J{} J{}, J{}⟩ = {}  polynomial={} nonneg_int={}{}",
        mu,
        nu,
        lambda,
        rep.value,
        rep.is_polynomial,
        rep.is_nonneg_int,
        agree.map(|a| format!(" routes_agree={}", a)).unwrap_or_default()
    );
    let status = if rep.mismatch { Status::AssertionFailed } else { Status::Ok };
    Ok(Outcome { json, plain, status })
}

pub fn dyson(s: usize, t: usize, beta: Option<Vec<i32>>, named: Option<Named>, i: usize, limits: DeltaLimits) -> Result<Outcome> {
    let form = named.map(|n| match n {
        Named::General => Prop39::General(i),
        Named::TwoTwo => Prop39::TwoTwo,
        Named::OneOneTwo => Prop39::OneOneTwo,
    });
    let beta = match (beta, form) {
        (Some(b), None) => b,
        (None, Some(f)) => f.exponents(s)?,
        _ => return Err(Error::InvalidArgument("give exactly one of --beta and --named".into())),
    };
    if beta.len() != s {
        return Err(Error::InvalidArgument(format!("β has {} entries but s = {}", beta.len(), s)));
    }
    let c = delta_coefficient(&beta, s, t, limits)?;
    let cq = BigRational::from_integer(c.clone());
    let mut json = json!({ "s": s, "t": t, "beta": beta, "coefficient": integer_json(&c) });
    let mut plain = format!("C[{:?}] of Δ_{}^{} = {}", beta, s, t, c);
    let closed = match form {
        Some(f) => Some(f.value(s, t)?),
        None if beta.iter().all(|&b| b == 0) => Some(BigRational::from_integer(dyson_constant(s, t))),
        None => None,
    };
    if let Some(v) = closed {
        json["closed_form"] = rational_json(&v);
        json["agree"] = Value::Bool(v == cq);
        plain.push_str(&format!("  closed form {}  agree={}", v, v == cq));
    }
    if form == Some(Prop39::OneOneTwo) {
        let obs = Prop39::OneOneTwoObserved.value(s, t)?;
        json["observed_closed_form"] = rational_json(&obs);
        json["observed_agree"] = Value::Bool(obs == cq);
        plain.push_str(&format!("  observed form {}  agree={}", obs, obs == cq));
    }
    Ok(Outcome::ok(json, plain))
}

pub fn filtration(ctx: &Context, lambda: &Partition) -> Result<Outcome> {
    let f = rect_filtration(lambda)?;
    let closed = filtration_closed_form(lambda)? == f;
    let n = multiplicity_type(lambda);
    let star = star_vector(&n);
    let rects: Vec<Vec<usize>> = f.rects.iter().map(|r| r.parts().to_vec()).collect();
    let mut json = json!({
        "lambda": lambda.parts(),
        "multiplicity_type": n,
        "star_vector": star,
        "rects": rects,
        "closed_form_agrees": closed,
    });
    let chain = f.rects.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ");
    // c′ needs the Jack functions themselves; past the guards only the shape data is reported
    let plain = match jack_q_filtration(&ctx.symbolic, lambda) {
        Ok(res) => {
            json["c_prime"] = serde_json::to_value(res.c_prime.to_serialized()).expect("serializable");
            json["c_prime_display"] = Value::String(res.c_prime.to_string());
            format!("{}: filtration {}  c′ = {}", lambda, chain, res.c_prime)
        }
        Err(Error::ResourceGuard(why)) => {
            json["c_prime"] = Value::Null;
            json["c_prime_skipped"] = Value::String(why.clone());
            format!("{}: filtration {}  c′ skipped ({})", lambda, chain, why)
        }
        Err(e) => return Err(e),
    };
    let status = if closed { Status::Ok } else { Status::AssertionFailed };
    Ok(Outcome { json, plain, status })
}

pub fn verify(ctx: &Context, suite: Suite, params: &SuiteParams) -> Result<Outcome> {
    let rep = suites::run(suite, params, ctx)?;
    let mut json = serde_json::to_value(&rep).expect("serializable");
    if let Some(store) = &ctx.store {
        json["records_dir"] = Value::String(store.path(suite.name(), "x").parent().expect("suite dir").display().to_string());
    }
    let mut plain = format!("{}: {} cases, {} passed, {} failed, {} route mismatches", suite.name(), rep.cases, rep.passed, rep.failed, rep.mismatches);
    for n in &rep.notes {
        plain.push_str(&format!("\nnote: {}", n));
    }
    if let Some(f) = &rep.first_failure {
        plain.push_str(&format!("\nfirst failure: {} {}", f.id, f.detail));
    }
    let status = if rep.ok() { Status::Ok } else { Status::AssertionFailed };
    Ok(Outcome { json, plain, status })
}
