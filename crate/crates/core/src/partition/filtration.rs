use alloc::vec::Vec;

use super::Partition;
use crate::error::{Error, Result};

/// Chain of rectangles `R_1 ⊋ R_2 ⊋ … ⊋ R_s`, one per corner of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub rects: Vec<Partition>,
}

/// `(λ_1^{l(λ)})`, the smallest rectangle containing `λ`.
fn bounding_rect(lambda: &Partition) -> Partition {
    Partition::rectangle(lambda.part(0), lambda.len())
}

/// Iterates `R ← bounding rectangle`, `λ ← complement of λ in R` until empty.
pub fn rect_filtration(lambda: &Partition) -> Result<Filtration> {
    if lambda.is_empty() {
        return Err(Error::ZeroPartition);
    }
    let mut rects = Vec::new();
    let mut cur = lambda.clone();
    while !cur.is_empty() {
        let r = bounding_rect(&cur);
        cur = r.complement(&cur)?;
        rects.push(r);
    }
    Ok(Filtration { rects })
}

/// Multiplicities of the distinct parts, largest part first.
pub fn multiplicity_type(lambda: &Partition) -> Vec<usize> {
    lambda.part_blocks().into_iter().map(|(_, n)| n).collect()
}

/// `n*_{2i+1} = Σ_{i<j<s-i+1} n_j`, `n*_{2i} = Σ_{i<j≤s-i+1} n_j` (1-based).
pub fn star_vector(n: &[usize]) -> Vec<usize> {
    let s = n.len();
    (1..=s)
        .map(|m| {
            let i = m / 2;
            let hi = if m % 2 == 1 { s - i } else { s - i + 1 };
            (i + 1..=hi).map(|j| n[j - 1]).sum()
        })
        .collect()
}

/// Direct description of the filtration from the multiplicity types of `λ`
/// and `λ'`: `R_i = (p*_i^{n*_i})`.
pub fn filtration_closed_form(lambda: &Partition) -> Result<Filtration> {
    if lambda.is_empty() {
        return Err(Error::ZeroPartition);
    }
    let n = star_vector(&multiplicity_type(lambda));
    let p = star_vector(&multiplicity_type(&lambda.conjugate()));
    debug_assert_eq!(n.len(), p.len());
    Ok(Filtration { rects: p.into_iter().zip(n).map(|(w, h)| Partition::rectangle(w, h)).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn worked_filtration() {
        let lam = part![6, 3, 3, 2, 1];
        let f = rect_filtration(&lam).unwrap();
        let want = [Partition::rectangle(6, 5), Partition::rectangle(5, 4), Partition::rectangle(2, 3), part![1]];
        assert_eq!(f.rects, want);
        assert_eq!(filtration_closed_form(&lam).unwrap().rects, want);
        assert_eq!(multiplicity_type(&lam), [1, 2, 1, 1]);
        assert_eq!(star_vector(&[1, 2, 1, 1]), [5, 4, 3, 1]);
        assert_eq!(star_vector(&[1, 1, 1, 3]), [6, 5, 2, 1]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(rect_filtration(&part![4, 4]).unwrap().rects, [part![4, 4]]);
        assert_eq!(rect_filtration(&part![2, 1]).unwrap().rects, [part![2, 2], part![1]]);
        assert_eq!(filtration_closed_form(&part![2, 1]).unwrap().rects, [part![2, 2], part![1]]);
        assert!(rect_filtration(&Partition::empty()).is_err());
    }

    #[test]
    fn closed_form_agrees_through_weight_14() {
        for n in 1..=14 {
            for lam in Partition::all(n) {
                let a = rect_filtration(&lam).unwrap();
                assert_eq!(a, filtration_closed_form(&lam).unwrap(), "{}", lam);
                assert_eq!(a.rects.len(), lam.corner_count());
                for w in a.rects.windows(2) {
                    assert!(w[0].contains(&w[1]) && w[0] != w[1]);
                }
            }
        }
    }

    #[test]
    fn dropping_first_rect_gives_filtration_of_complement() {
        for n in 1..=10 {
            for lam in Partition::all(n) {
                let f = rect_filtration(&lam).unwrap();
                let c = f.rects[0].complement(&lam).unwrap();
                if f.rects.len() >= 2 {
                    assert_eq!(rect_filtration(&c).unwrap().rects, f.rects[1..]);
                    assert_eq!(c.corner_count(), lam.corner_count() - 1);
                } else {
                    assert!(c.is_empty());
                }
            }
        }
    }
}
