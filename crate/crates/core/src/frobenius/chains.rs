//! Explicit chains `(μ^0, …, μ^s; ν^1, …, ν^s)` behind the g-coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use super::{level_factor, GCoeffKey};
use crate::partition::Partition;

/// `μ^0 = ()`, `μ^s` the target, `ν^i ⊂′ μ^i`, `μ^i ∖ ν^i ⊂′ μ^{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartitionChain {
    pub mus: Vec<Partition>,
    pub nus: Vec<Partition>,
}

impl PartitionChain {
    /// Checks every defining condition of the chain against `key`.
    pub fn is_valid(&self, key: GCoeffKey) -> bool {
        let s = key.s;
        if self.mus.len() != s + 1 || self.nus.len() != s || !self.mus[0].is_empty() {
            return false;
        }
        (1..=s).all(|i| {
            let (mu, nu) = (&self.mus[i], &self.nus[i - 1]);
            mu.weight() == key.level_weight(i)
                && mu.contains_by_multiplicity(nu)
                && mu.multiset_difference(nu).is_ok_and(|rho| self.mus[i - 1].contains_by_multiplicity(&rho))
        })
    }
}

/// `∏_i (-2t)^{l(ν^i)}/z_{ν^i} · C(m(μ^{i-1}), m(μ^i∖ν^i))`.
pub fn chain_value(chain: &PartitionChain, t: usize) -> BigRational {
    let mut acc = BigRational::one();
    for (i, nu) in chain.nus.iter().enumerate() {
        let rho = chain.mus[i + 1].multiset_difference(nu).expect("valid chain");
        let b = chain.mus[i].multiset_binomial(&rho).expect("valid chain");
        acc *= level_factor(nu, t) * BigRational::from_integer(b);
    }
    acc
}

struct Partitions(BTreeMap<usize, Vec<Partition>>);

impl Partitions {
    fn of(&mut self, n: usize) -> &[Partition] {
        self.0.entry(n).or_insert_with(|| Partition::all(n))
    }
}

/// All chains ending at `target`, by depth-first search from the top level down.
pub fn chains(key: GCoeffKey, target: &Partition) -> Vec<PartitionChain> {
    let mut out = Vec::new();
    if target.weight() != key.level_weight(key.s) {
        return out;
    }
    let mut mus = vec![Partition::empty(); key.s + 1];
    let mut nus = vec![Partition::empty(); key.s];
    mus[key.s] = target.clone();
    descend(key, key.s, &mut mus, &mut nus, &mut Partitions(BTreeMap::new()), &mut out);
    out
}

fn descend(key: GCoeffKey, i: usize, mus: &mut Vec<Partition>, nus: &mut Vec<Partition>, parts: &mut Partitions, out: &mut Vec<PartitionChain>) {
    let below = key.level_weight(i - 1);
    for (nu, _) in mus[i].sub_multisets() {
        let rho = mus[i].multiset_difference(&nu).expect("sub-multiset");
        if rho.weight() > below || (i == 1 && !rho.is_empty()) {
            continue;
        }
        nus[i - 1] = nu;
        if i == 1 {
            out.push(PartitionChain { mus: mus.clone(), nus: nus.clone() });
            continue;
        }
        let fill: Vec<Partition> = parts.of(below - rho.weight()).to_vec();
        for sigma in fill {
            mus[i - 1] = rho.union(&sigma);
            descend(key, i - 1, mus, nus, parts, out);
        }
    }
}

/// Number of chains ending at `target`, by filtering every tuple of partitions
/// of the level weights.
pub fn brute_force_chain_count(key: GCoeffKey, target: &Partition) -> usize {
    if target.weight() != key.level_weight(key.s) {
        return 0;
    }
    let mut tuples: Vec<Vec<Partition>> = vec![vec![Partition::empty()]];
    for i in 1..key.s {
        let level = Partition::all(key.level_weight(i));
        tuples = tuples.into_iter().flat_map(|t| level.iter().map(move |p| { let mut t = t.clone(); t.push(p.clone()); t })).collect();
    }
    let mut count = 0;
    for mut mus in tuples {
        mus.push(target.clone());
        let mut nus_choices: Vec<Vec<Partition>> = vec![Vec::new()];
        for mu in &mus[1..] {
            let subs: Vec<Partition> = mu.sub_multisets().into_iter().map(|(p, _)| p).collect();
            nus_choices = nus_choices.into_iter().flat_map(|c| subs.iter().map(move |p| { let mut c = c.clone(); c.push(p.clone()); c })).collect();
        }
        count += nus_choices
            .into_iter()
            .filter(|nus| PartitionChain { mus: mus.clone(), nus: nus.clone() }.is_valid(key))
            .count();
    }
    count
}
