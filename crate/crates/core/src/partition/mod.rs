//! Partitions and the diagram combinatorics built on them.
//!
//! Hooks follow the convention where the arm is weighted by `α`:
//! lower hook `α·arm + leg + 1`, upper hook `α·(arm + 1) + leg`.

mod filtration;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ratfield::{binomial, RatFunc, Scalar};

pub use filtration::{filtration_closed_form, multiplicity_type, rect_filtration, star_vector, Filtration};

/// Weakly decreasing sequence of positive integers. Zero parts are stripped
/// on construction, so `()` is the zero partition.
///
/// The derived `Ord` is lexicographic on parts, which refines dominance.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A square of a Young diagram, 1-based `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HookKind {
    Lower,
    Upper,
}

/// A hook length `a·α + b` with nonnegative integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hook {
    pub alpha: usize,
    pub constant: usize,
}

impl Hook {
    pub fn to_ratfunc(self) -> RatFunc {
        RatFunc::linear(&RatFunc::alpha(), self.alpha as i64, self.constant as i64)
    }

    pub fn eval<C: Scalar>(self, param: &C) -> C {
        C::linear(param, self.alpha as i64, self.constant as i64)
    }
}

/// Squares of `λ` and `μ` split by whether their column meets `λ - μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedSplit {
    pub lambda_based: BTreeSet<Square>,
    pub lambda_unbased: BTreeSet<Square>,
    pub mu_based: BTreeSet<Square>,
    pub mu_unbased: BTreeSet<Square>,
}

/// The `i`-th corner `λ - λ(i)`, congruent to `rect`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub rect: Partition,
    pub squares: BTreeSet<Square>,
    /// First and last diagram rows the corner occupies.
    pub rows: (usize, usize),
    /// First and last diagram columns the corner occupies.
    pub cols: (usize, usize),
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{:?} is not weakly decreasing", parts)));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("{:?} has an interior zero", parts)));
        }
        Ok(Partition { parts })
    }

    /// Sorts and strips zeros; for multisets of parts.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(r^s)`; empty when either side is zero.
    pub fn rectangle(r: usize, s: usize) -> Self {
        if r == 0 {
            return Self::empty();
        }
        Partition { parts: vec![r; s] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// `Some((r, s))` when `self = (r^s)` and nonzero.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        if self.is_empty() || !self.is_rectangular() {
            None
        } else {
            Some((self.parts[0], self.parts.len()))
        }
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Multiplicities `part value -> count`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities().iter().fold(BigInt::one(), |acc, (&i, &m)| {
            acc * BigInt::from(i).pow(m as u32) * crate::ratfield::factorial(m)
        })
    }

    /// `∏ m_i!`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities()
            .values()
            .fold(BigInt::one(), |acc, &m| acc * crate::ratfield::factorial(m))
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_square(&self, sq: Square) -> bool {
        sq.row >= 1 && sq.col >= 1 && sq.col <= self.part(sq.row - 1)
    }

    pub fn squares(&self) -> BTreeSet<Square> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Square::new(i + 1, j)))
            .collect()
    }

    /// Partial-sum comparison; errors on unequal weights.
    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch(self.clone(), other.clone()));
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        let (mut le, mut ge) = (true, true);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            le &= a <= b;
            ge &= a >= b;
        }
        Ok(match (le, ge) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// `self ≤ other` in dominance; false for unequal weights.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(self.dominance_compare(other), Ok(Dominance::Less | Dominance::Equal))
    }

    pub fn hook(&self, sq: Square, kind: HookKind) -> Result<Hook> {
        if !self.contains_square(sq) {
            return Err(Error::OutsideDiagram { lambda: self.clone(), row: sq.row, col: sq.col });
        }
        let arm = self.part(sq.row - 1) - sq.col;
        let leg = self.parts.iter().take_while(|&&p| p >= sq.col).count() - sq.row;
        Ok(match kind {
            HookKind::Lower => Hook { alpha: arm, constant: leg + 1 },
            HookKind::Upper => Hook { alpha: arm + 1, constant: leg },
        })
    }

    /// Product of hooks over `squares`, evaluated at `param`; empty product is 1.
    pub fn hook_product_at<C: Scalar>(&self, squares: &BTreeSet<Square>, kind: HookKind, param: &C) -> Result<C> {
        let mut acc = C::unit();
        for &sq in squares {
            acc = acc.times(&self.hook(sq, kind)?.eval(param));
        }
        Ok(acc)
    }

    pub fn hook_product(&self, squares: &BTreeSet<Square>, kind: HookKind) -> Result<RatFunc> {
        self.hook_product_at(squares, kind, &RatFunc::alpha())
    }

    /// Hook product over the whole diagram.
    pub fn full_hook_product<C: Scalar>(&self, kind: HookKind, param: &C) -> C {
        self.hook_product_at(&self.squares(), kind, param).expect("own squares")
    }

    /// Splits the squares of `self` (= λ) and `mu` into based / un-based;
    /// a square is based when its column contains a square of `λ - μ`.
    pub fn based_split(&self, mu: &Partition) -> Result<BasedSplit> {
        if !self.contains(mu) {
            return Err(Error::NotContained { inner: mu.clone(), outer: self.clone() });
        }
        let lc = self.conjugate();
        let mc = mu.conjugate();
        let based_col = |j: usize| lc.part(j - 1) > mc.part(j - 1);
        let split = |p: &Partition| -> (BTreeSet<Square>, BTreeSet<Square>) { p.squares().into_iter().partition(|s| based_col(s.col)) };
        let (lambda_based, lambda_unbased) = split(self);
        let (mu_based, mu_unbased) = split(mu);
        Ok(BasedSplit { lambda_based, lambda_unbased, mu_based, mu_unbased })
    }

    /// Distinct part values `a_1 > … > a_s` with their multiplicities.
    pub fn part_blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match blocks.last_mut() {
                Some((a, n)) if *a == p => *n += 1,
                _ => blocks.push((p, 1)),
            }
        }
        blocks
    }

    pub fn corner_count(&self) -> usize {
        self.part_blocks().len()
    }

    pub fn corners(&self) -> Result<Vec<Corner>> {
        if self.is_empty() {
            return Err(Error::ZeroPartition);
        }
        let blocks = self.part_blocks();
        let mut out = Vec::with_capacity(blocks.len());
        let mut row_end = 0;
        for (i, &(a, n)) in blocks.iter().enumerate() {
            let next = blocks.get(i + 1).map_or(0, |b| b.0);
            let row_start = row_end + 1;
            row_end += n;
            let squares = (row_start..=row_end).flat_map(|r| (next + 1..=a).map(move |c| Square::new(r, c))).collect();
            out.push(Corner {
                rect: Partition::rectangle(a - next, n),
                squares,
                rows: (row_start, row_end),
                cols: (next + 1, a),
            });
        }
        Ok(out)
    }

    /// The upside-down `omega` of corner `corner` (0-based): the rightmost
    /// `ω_j` squares of the `(n_i + 1 - j)`-th row of the corner.
    pub fn upside_down(&self, corner: usize, omega: &Partition) -> Result<BTreeSet<Square>> {
        let corners = self.corners()?;
        let c = corners
            .get(corner)
            .ok_or_else(|| Error::InvalidArgument(format!("{} has no corner {}", self, corner + 1)))?;
        let (width, height) = (c.cols.1 + 1 - c.cols.0, c.rows.1 + 1 - c.rows.0);
        if omega.part(0) > width || omega.len() > height {
            return Err(Error::NotContained { inner: omega.clone(), outer: c.rect.clone() });
        }
        let mut out = BTreeSet::new();
        for (j, &w) in omega.parts().iter().enumerate() {
            let row = c.rows.1 - j;
            for col in c.cols.1 + 1 - w..=c.cols.1 {
                out.insert(Square::new(row, col));
            }
        }
        Ok(out)
    }

    /// If `λ - μ` is an upside-down `ω` of some corner of `λ`, returns the
    /// corner index (0-based) and `ω`.
    pub fn corner_strip(&self, mu: &Partition) -> Option<(usize, Partition)> {
        if !self.contains(mu) || self == mu {
            return None;
        }
        let diff: BTreeSet<Square> = self.squares().difference(&mu.squares()).copied().collect();
        for (idx, c) in self.corners().ok()?.iter().enumerate() {
            if !diff.is_subset(&c.squares) {
                continue;
            }
            let counts: Vec<usize> = (c.rows.0..=c.rows.1).rev().map(|r| diff.iter().filter(|s| s.row == r).count()).collect();
            let omega = Partition::new(counts).ok()?;
            if self.upside_down(idx, &omega).ok()? == diff {
                return Some((idx, omega));
            }
        }
        None
    }

    /// Complement of `nu` inside the rectangle `self = (r^s)`:
    /// `(r - ν_s, …, r - ν_1)`.
    pub fn complement(&self, nu: &Partition) -> Result<Partition> {
        let (r, s) = match self.rectangle_dims() {
            Some(d) => d,
            None if self.is_empty() && nu.is_empty() => return Ok(Partition::empty()),
            None => return Err(Error::NotRectangular(self.clone())),
        };
        if nu.len() > s || nu.part(0) > r {
            return Err(Error::NotContained { inner: nu.clone(), outer: self.clone() });
        }
        Partition::new((0..s).map(|i| r - nu.part(s - 1 - i)).collect())
    }

    /// `self - mu` is a horizontal `n`-strip.
    pub fn is_horizontal_strip(&self, mu: &Partition, n: usize) -> bool {
        if !self.contains(mu) || self.weight() != mu.weight() + n {
            return false;
        }
        // interlacing λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ …
        (0..self.len()).all(|i| mu.part(i) >= self.part(i + 1))
    }

    /// `mu ⊂' self`: multiplicity-wise containment.
    pub fn contains_by_multiplicity(&self, mu: &Partition) -> bool {
        let m = self.multiplicities();
        mu.multiplicities().iter().all(|(k, &c)| m.get(k).copied().unwrap_or(0) >= c)
    }

    /// `self ∖ mu` by multiplicity subtraction.
    pub fn multiset_difference(&self, mu: &Partition) -> Result<Partition> {
        if !self.contains_by_multiplicity(mu) {
            return Err(Error::NotContained { inner: mu.clone(), outer: self.clone() });
        }
        let mut remove = mu.multiplicities();
        let mut parts = Vec::with_capacity(self.len() - mu.len());
        for &p in &self.parts {
            match remove.get_mut(&p) {
                Some(c) if *c > 0 => *c -= 1,
                _ => parts.push(p),
            }
        }
        Ok(Partition { parts })
    }

    /// `∏_i C(m_i(self), m_i(mu))`.
    pub fn multiset_binomial(&self, mu: &Partition) -> Result<BigInt> {
        if !self.contains_by_multiplicity(mu) {
            return Err(Error::NotContained { inner: mu.clone(), outer: self.clone() });
        }
        let m = mu.multiplicities();
        Ok(self
            .multiplicities()
            .iter()
            .fold(BigInt::one(), |acc, (k, &c)| acc * binomial(c, m.get(k).copied().unwrap_or(0))))
    }

    /// All sub-multisets `ρ ⊂' self`, each with `C(m(self), m(ρ))`.
    pub fn sub_multisets(&self) -> Vec<(Partition, BigInt)> {
        let blocks = self.part_blocks();
        let mut out = vec![(Vec::new(), BigInt::one())];
        for &(a, n) in &blocks {
            let mut next = Vec::with_capacity(out.len() * (n + 1));
            for (parts, w) in &out {
                for k in 0..=n {
                    let mut p: Vec<usize> = parts.clone();
                    p.extend(core::iter::repeat_n(a, k));
                    next.push((p, w * binomial(n, k)));
                }
            }
            out = next;
        }
        out.into_iter().map(|(p, w)| (Partition { parts: p }, w)).collect()
    }

    /// All partitions of `n`, lexicographically decreasing: `(n), (n-1, 1), …, (1^n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                prefix.push(p);
                rec(rem - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` fitting inside `(width^height)`.
    pub fn all_in_box(n: usize, width: usize, height: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= height && p.part(0) <= width).collect()
    }

    /// Comma-separated parts, empty for the zero partition.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("{}", p));
        }
        s
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"6,3,3,2,1"`; the empty string is the zero partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{:?}: {}", t, e))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(format!("{}", e)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Convenience constructor for tests and examples: `part![5, 3, 3, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::partition::Partition::new([$($p),+].to_vec()).unwrap() };
}
