//! Jack functions `P`, `Q`, `J`.
//!
//! The ground truth is Gram–Schmidt on the monomial basis over a linear
//! extension of dominance ([`JackTable`]). For shapes too large for that, the
//! monomial expansion comes from the Laplace–Beltrami eigenvalue recursion in
//! [`eigen`], which agrees with Gram–Schmidt wherever both run.
//!
//! Normalizations: `J = h_*(λ)·P`, `Q = P/⟨P, P⟩`, `J = h^*(λ)·Q`.

pub mod eigen;
pub mod filtration;
pub mod pieri;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::partition::{HookKind, Partition};
use crate::ratfield::Scalar;
use crate::symfun::{inner, MonomialTable, SymFun};

pub use eigen::{jack_j_monomial, jack_p_monomial, jack_q_monomial};
pub use filtration::{row_removal_scalar, FILTRATION_MAX_RECT_WEIGHT, jack_in_qbasis, jack_q_filtration, proportionality, qbasis_coeffs, skew_q_on_monomial, FiltrationResult};
pub use pieri::{fit_pieri_assignment, pieri_closed_form, pieri_coeff, pieri_oracle, pieri_triples, HookAssignment, PIERI_ASSIGNMENT};

/// One Jack function in all three normalizations, power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackTriple<C> {
    pub lambda: Partition,
    pub p: SymFun<C>,
    pub q: SymFun<C>,
    pub j: SymFun<C>,
    /// `h_*(λ)`, so that `J = lower_norm·P`.
    pub lower_norm: C,
    /// `h^*(λ)`, so that `J = upper_norm·Q`.
    pub upper_norm: C,
}

/// Total orders refining dominance used for Gram–Schmidt.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LinearExtension {
    /// Ascending lexicographic order.
    #[default]
    Lexicographic,
    /// Ascending `Σ λ_i²`, ties broken by descending lexicographic order.
    /// Ties only occur between incomparable partitions.
    SquareSum,
}

impl LinearExtension {
    pub fn order(self, n: usize) -> Vec<Partition> {
        let mut all = Partition::all(n);
        all.reverse();
        if self == LinearExtension::SquareSum {
            all.sort_by_key(|p| (p.parts().iter().map(|x| x * x).sum::<usize>(), core::cmp::Reverse(p.clone())));
        }
        all
    }
}

/// All Jack functions of one weight at one parameter value. Immutable once built.
#[derive(Clone, Debug)]
pub struct JackTable<C> {
    weight: usize,
    param: C,
    triples: BTreeMap<Partition, Arc<JackTriple<C>>>,
}

impl<C: Scalar> JackTable<C> {
    /// Gram–Schmidt: `P_λ = m_λ - Σ_{μ before λ} ⟨m_λ, P_μ⟩/⟨P_μ, P_μ⟩ · P_μ`.
    pub fn gram_schmidt(weight: usize, param: &C, order: LinearExtension) -> Result<Self> {
        let mt = MonomialTable::new(weight)?;
        let mut done: Vec<(Partition, SymFun<C>, C)> = Vec::new();
        for lam in order.order(weight) {
            let m: SymFun<C> = mt.m_as(&lam).expect("table covers its weight");
            let mut v = m.clone();
            for (_, pm, nm) in &done {
                let c = inner(&m, pm, param).over(nm)?;
                if !c.is_nil() {
                    v = v.sub(&pm.scale(&c));
                }
            }
            let n = inner(&v, &v, param);
            if n.is_nil() {
                return Err(Error::Integrity(format!("null Gram–Schmidt vector at {}", lam)));
            }
            done.push((lam, v, n));
        }
        let mut triples = BTreeMap::new();
        for (lam, p, norm) in done {
            let lower = lam.full_hook_product(HookKind::Lower, param);
            let upper = lam.full_hook_product(HookKind::Upper, param);
            let t = JackTriple { q: p.div_scalar(&norm)?, j: p.scale(&lower), p, lower_norm: lower, upper_norm: upper, lambda: lam.clone() };
            triples.insert(lam, Arc::new(t));
        }
        Ok(JackTable { weight, param: param.clone(), triples })
    }

    /// Reassembles a table from stored triples; every partition of `weight`
    /// must be present exactly once.
    pub fn from_triples<I: IntoIterator<Item = JackTriple<C>>>(weight: usize, param: C, triples: I) -> Result<Self> {
        let triples: BTreeMap<Partition, Arc<JackTriple<C>>> = triples.into_iter().map(|t| (t.lambda.clone(), Arc::new(t))).collect();
        let all = Partition::all(weight);
        if triples.len() != all.len() || !all.iter().all(|l| triples.contains_key(l)) {
            return Err(Error::Integrity(format!("incomplete Jack table at weight {}", weight)));
        }
        Ok(JackTable { weight, param, triples })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn param(&self) -> &C {
        &self.param
    }

    pub fn get(&self, lambda: &Partition) -> Option<&Arc<JackTriple<C>>> {
        self.triples.get(lambda)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<JackTriple<C>>> {
        self.triples.values()
    }
}

/// Anything that can hand out Jack triples at a fixed parameter.
pub trait JackSource<C: Scalar> {
    fn param(&self) -> &C;

    fn table(&self, weight: usize) -> Result<Arc<JackTable<C>>>;

    fn triple(&self, lambda: &Partition) -> Result<Arc<JackTriple<C>>> {
        let t = self.table(lambda.weight())?;
        t.get(lambda).cloned().ok_or_else(|| Error::Integrity(format!("{} missing from its table", lambda)))
    }
}

/// Single-threaded memo of Gram–Schmidt tables; the std crate has a
/// thread-safe, disk-backed counterpart.
pub struct JackMemo<C> {
    param: C,
    order: LinearExtension,
    max_weight: usize,
    tables: RefCell<BTreeMap<usize, Arc<JackTable<C>>>>,
}

/// Default weight limit for Gram–Schmidt tables.
pub const GRAM_SCHMIDT_MAX_WEIGHT: usize = 12;

impl<C: Scalar> JackMemo<C> {
    pub fn new(param: C) -> Self {
        Self::with_order(param, LinearExtension::default())
    }

    pub fn with_order(param: C, order: LinearExtension) -> Self {
        JackMemo { param, order, max_weight: GRAM_SCHMIDT_MAX_WEIGHT, tables: RefCell::new(BTreeMap::new()) }
    }

    pub fn max_weight(mut self, w: usize) -> Self {
        self.max_weight = w;
        self
    }
}

impl<C: Scalar> JackSource<C> for JackMemo<C> {
    fn param(&self) -> &C {
        &self.param
    }

    fn table(&self, weight: usize) -> Result<Arc<JackTable<C>>> {
        if let Some(t) = self.tables.borrow().get(&weight) {
            return Ok(t.clone());
        }
        if weight > self.max_weight {
            return Err(Error::ResourceGuard(format!("Gram–Schmidt at weight {} exceeds {}", weight, self.max_weight)));
        }
        let t = Arc::new(JackTable::gram_schmidt(weight, &self.param, self.order)?);
        self.tables.borrow_mut().insert(weight, t.clone());
        Ok(t)
    }
}

/// `P_λ` by Gram–Schmidt, without memoization.
pub fn jack_p<C: Scalar>(lambda: &Partition, param: &C) -> Result<SymFun<C>> {
    Ok(JackMemo::new(param.clone()).triple(lambda)?.p.clone())
}

pub fn jack_q<C: Scalar>(lambda: &Partition, param: &C) -> Result<SymFun<C>> {
    Ok(JackMemo::new(param.clone()).triple(lambda)?.q.clone())
}

pub fn jack_j<C: Scalar>(lambda: &Partition, param: &C) -> Result<SymFun<C>> {
    Ok(JackMemo::new(param.clone()).triple(lambda)?.j.clone())
}

/// `⟨P_λ, P_λ⟩ = h^*(λ)/h_*(λ)`.
pub fn p_norm_closed<C: Scalar>(lambda: &Partition, param: &C) -> Result<C> {
    lambda
        .full_hook_product(HookKind::Upper, param)
        .over(&lambda.full_hook_product(HookKind::Lower, param))
}
