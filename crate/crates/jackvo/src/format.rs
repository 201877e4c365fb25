//! Stable JSON encodings of symmetric functions, coefficients and LR reports.

use std::collections::BTreeMap;
use std::str::FromStr;

use jackvo_core::jack::qbasis_coeffs;
use jackvo_core::lr::{LRReport, Route};
use jackvo_core::symfun::{to_monomial, MonomialTable};
use jackvo_core::{BigInt, BigRational, Error, Partition, Poly, RatFunc, Result, Scalar, SymFun};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Number;

/// Basis tag of a serialized expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Power sums.
    P,
    /// Monomials.
    M,
    /// Generalized complete functions `q_λ`.
    Q,
}

/// `num/den` as ascending-degree integer coefficient lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedCoeff {
    pub num: Vec<Number>,
    pub den: Vec<Number>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedTerm {
    pub partition: Vec<usize>,
    pub coeff: SerializedCoeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedSymFun {
    pub basis: Basis,
    pub terms: Vec<SerializedTerm>,
}

fn int_to_json(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("decimal integer")
}

fn json_to_int(n: &Number) -> Result<BigInt> {
    BigInt::from_str(&n.to_string()).map_err(|e| Error::Parse(format!("{}: {}", n, e)))
}

fn poly_to_ints(p: &Poly, scale: &BigInt) -> Vec<Number> {
    p.integer_coeffs_scaled(scale).iter().map(int_to_json).collect()
}

fn ints_to_poly(v: &[Number]) -> Result<Poly> {
    let coeffs = v.iter().map(|n| json_to_int(n).map(BigRational::from_integer)).collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// Exact coefficients that have a JSON form.
pub trait Coefficient: Scalar + Send + Sync {
    fn to_serialized(&self) -> SerializedCoeff;
    fn from_serialized(c: &SerializedCoeff) -> Result<Self>;
    /// Human-readable rendering for plain output.
    fn render(&self) -> String;
}

impl Coefficient for RatFunc {
    fn to_serialized(&self) -> SerializedCoeff {
        let l = num_integer::Integer::lcm(&self.num().denominator_lcm(), &self.den().denominator_lcm());
        SerializedCoeff { num: poly_to_ints(self.num(), &l), den: poly_to_ints(self.den(), &l) }
    }

    fn from_serialized(c: &SerializedCoeff) -> Result<Self> {
        RatFunc::new(ints_to_poly(&c.num)?, ints_to_poly(&c.den)?)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Coefficient for BigRational {
    fn to_serialized(&self) -> SerializedCoeff {
        let num = if self.is_zero() { Vec::new() } else { vec![int_to_json(self.numer())] };
        SerializedCoeff { num, den: vec![int_to_json(self.denom())] }
    }

    fn from_serialized(c: &SerializedCoeff) -> Result<Self> {
        let f = RatFunc::from_serialized(c)?;
        let p = f.as_poly()?;
        match p.degree() {
            None => Ok(BigRational::zero()),
            Some(0) => Ok(p.coeffs()[0].clone()),
            Some(_) => Err(Error::Parse(format!("{} is not a constant", f))),
        }
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

/// Terms in descending lexicographic order of partitions.
pub fn serialize_terms<C: Coefficient>(basis: Basis, terms: &BTreeMap<Partition, C>) -> SerializedSymFun {
    let terms = terms
        .iter()
        .rev()
        .map(|(lam, c)| SerializedTerm { partition: lam.parts().to_vec(), coeff: c.to_serialized() })
        .collect();
    SerializedSymFun { basis, terms }
}

pub fn deserialize_terms<C: Coefficient>(s: &SerializedSymFun) -> Result<BTreeMap<Partition, C>> {
    let mut out = BTreeMap::new();
    for t in &s.terms {
        let lam = Partition::new(t.partition.clone())?;
        if out.insert(lam.clone(), C::from_serialized(&t.coeff)?).is_some() {
            return Err(Error::Parse(format!("duplicate term {}", lam)));
        }
    }
    Ok(out)
}

/// Re-expresses a power-sum expansion in `basis` and serializes it.
pub fn serialize_in_basis<C: Coefficient>(f: &SymFun<C>, basis: Basis, param: &C) -> Result<SerializedSymFun> {
    let terms = match basis {
        Basis::P => f.terms().clone(),
        Basis::M => to_monomial(f),
        Basis::Q => qbasis_coeffs(f, param)?,
    };
    Ok(serialize_terms(basis, &terms))
}

/// Inverse of [`serialize_in_basis`] for homogeneous expansions; returns the power-sum form.
pub fn deserialize_to_p<C: Coefficient>(s: &SerializedSymFun, param: &C) -> Result<SymFun<C>> {
    let terms: BTreeMap<Partition, C> = deserialize_terms(s)?;
    match s.basis {
        Basis::P => Ok(SymFun::from_terms(terms)),
        Basis::M => {
            let w = homogeneous_weight(&terms)?;
            MonomialTable::new(w)?.from_monomial(&terms)
        }
        Basis::Q => jackvo_core::symfun::from_q_basis(&terms, param),
    }
}

fn homogeneous_weight<C>(terms: &BTreeMap<Partition, C>) -> Result<usize> {
    let mut ws = terms.keys().map(Partition::weight);
    let w = ws.next().unwrap_or(0);
    if ws.any(|x| x != w) {
        return Err(Error::InvalidArgument("monomial expansion is not homogeneous".into()));
    }
    Ok(w)
}

/// Plain-text rendering `c·b_λ + …`.
pub fn render_terms<C: Coefficient>(basis: Basis, terms: &BTreeMap<Partition, C>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let tag = match basis {
        Basis::P => "p",
        Basis::M => "m",
        Basis::Q => "q",
    };
    terms.iter().rev().map(|(l, c)| format!("({})·{}{}", c.render(), tag, l)).collect::<Vec<_>>().join(" + ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedCorner {
    /// 0-based corner index.
    pub index: usize,
    pub omega: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedLRReport {
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub value: SerializedCoeff,
    /// Rendering of `value`; ignored when reading.
    pub display: String,
    pub is_polynomial: bool,
    pub is_nonneg_int: bool,
    pub route: String,
    pub corner: Option<SerializedCorner>,
    pub linear_factors: Option<bool>,
    pub mismatch: bool,
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::Oracle => "oracle",
        Route::RectClosed => "rect",
        Route::MarkedClosed => "marked",
    }
}

fn route_from_name(s: &str) -> Result<Route> {
    match s {
        "oracle" => Ok(Route::Oracle),
        "rect" => Ok(Route::RectClosed),
        "marked" => Ok(Route::MarkedClosed),
        other => Err(Error::Parse(format!("unknown route {:?}", other))),
    }
}

impl From<&LRReport> for SerializedLRReport {
    fn from(r: &LRReport) -> Self {
        SerializedLRReport {
            mu: r.mu.parts().to_vec(),
            nu: r.nu.parts().to_vec(),
            lambda: r.lambda.parts().to_vec(),
            value: r.value.to_serialized(),
            display: r.value.to_string(),
            is_polynomial: r.is_polynomial,
            is_nonneg_int: r.is_nonneg_int,
            route: route_name(r.route).into(),
            corner: r.corner.as_ref().map(|(i, w)| SerializedCorner { index: *i, omega: w.parts().to_vec() }),
            linear_factors: r.linear_factors,
            mismatch: r.mismatch,
        }
    }
}

impl TryFrom<&SerializedLRReport> for LRReport {
    type Error = Error;

    fn try_from(s: &SerializedLRReport) -> Result<Self> {
        Ok(LRReport {
            mu: Partition::new(s.mu.clone())?,
            nu: Partition::new(s.nu.clone())?,
            lambda: Partition::new(s.lambda.clone())?,
            value: RatFunc::from_serialized(&s.value)?,
            is_polynomial: s.is_polynomial,
            is_nonneg_int: s.is_nonneg_int,
            route: route_from_name(&s.route)?,
            corner: match &s.corner {
                Some(c) => Some((c.index, Partition::new(c.omega.clone())?)),
                None => None,
            },
            linear_factors: s.linear_factors,
            mismatch: s.mismatch,
        })
    }
}

/// A bare rational as `{num, den}` integers.
pub fn rational_json(q: &BigRational) -> serde_json::Value {
    serde_json::json!({ "num": int_to_json(q.numer()), "den": int_to_json(q.denom()) })
}

pub fn integer_json(n: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(int_to_json(n))
}
