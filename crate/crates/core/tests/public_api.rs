//! End-to-end use of the public API, with small independent references.

use std::collections::BTreeMap;

use jackvo_core::frobenius::{cor35_check, frobenius_rect_check, general_frobenius, GCoeffKey};
use jackvo_core::jack::{jack_j_monomial, jack_q_filtration, JackMemo, JackSource};
use jackvo_core::lr::{closed_form_lr, lr_oracle, rect_lr, Route};
use jackvo_core::partition::{filtration_closed_form, rect_filtration};
use jackvo_core::symfun::to_monomial;
use jackvo_core::vandermonde::{delta_coefficient, expand_delta, inverse_param, DeltaLimits};
use jackvo_core::{BigInt, BigRational, Partition, Poly, RatFunc, Scalar};
use proptest::prelude::*;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Kostka numbers K_{λμ} for |λ| ≤ 4, from semistandard tableaux counted by hand.
fn kostka() -> Vec<(&'static str, Vec<(&'static str, i64)>)> {
    vec![
        ("2,1", vec![("2,1", 1), ("1,1,1", 2)]),
        ("3,1", vec![("3,1", 1), ("2,2", 1), ("2,1,1", 2), ("1,1,1,1", 3)]),
        ("2,2", vec![("2,2", 1), ("2,1,1", 1), ("1,1,1,1", 2)]),
        ("2,1,1", vec![("2,1,1", 1), ("1,1,1,1", 3)]),
    ]
}

#[test]
fn jack_at_one_is_hook_times_schur() {
    for (lam, row) in kostka() {
        let lam = part(lam);
        let (rows, cols) = (lam.parts(), lam.conjugate().parts().to_vec());
        let mut hooks = 1i64;
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate().take(r) {
                hooks *= (r - j + c - i - 1) as i64;
            }
        }
        let j = jack_j_monomial(&lam, &int(1)).unwrap();
        let want: BTreeMap<Partition, BigRational> = row.into_iter().map(|(m, k)| (part(m), int(k * hooks))).collect();
        assert_eq!(j, want, "{}", lam);
    }
}

#[test]
fn symbolic_and_specialized_jacks_agree() {
    let sym = JackMemo::new(RatFunc::alpha());
    let at3 = JackMemo::new(int(3));
    for lam in Partition::all(4) {
        let a = to_monomial(&sym.triple(&lam).unwrap().q);
        let b = to_monomial(&at3.triple(&lam).unwrap().q);
        for (mu, c) in &a {
            assert_eq!(c.eval(&int(3)).unwrap(), b[mu]);
        }
    }
}

#[test]
fn lr_routes_agree_on_a_rectangle() {
    let sym = JackMemo::new(RatFunc::alpha());
    let (mu, c) = rect_lr(&part("2,2"), &part("2"), &RatFunc::alpha()).unwrap();
    assert_eq!(mu, part("2"));
    // 8α⁴(α+1)(α+2)
    assert_eq!(c, RatFunc::from_poly(Poly::from_ints(&[0, 0, 0, 0, 16, 24, 8])));
    assert_eq!(lr_oracle(&sym, &mu, &part("2"), &part("2,2")).unwrap(), c);
    let (route, v) = closed_form_lr(&part("2"), &part("2"), &part("2,2"), &RatFunc::alpha()).unwrap().unwrap();
    assert_eq!((route, v), (Route::RectClosed, c));
}

#[test]
fn dyson_constant_terms() {
    assert_eq!(delta_coefficient(&[0, 0, 0], 3, 2, DeltaLimits::default()).unwrap(), BigInt::from(90));
    assert_eq!(delta_coefficient(&[1, -1], 2, 1, DeltaLimits::default()).unwrap(), BigInt::from(-1));
    assert!(expand_delta(20, 1, DeltaLimits::default()).is_err());
}

#[test]
fn filtration_reconstructs_q() {
    let src = JackMemo::new(RatFunc::alpha());
    let r = jack_q_filtration(&src, &part("3,2,1")).unwrap();
    assert_eq!(r.filtration.rects, vec![part("3,3,3"), part("2,2"), part("1")]);
    assert!(!r.c_prime.is_nil());
}

#[test]
fn frobenius_expansions() {
    for t in 1..=2 {
        let src = JackMemo::new(inverse_param(t));
        let rep = frobenius_rect_check(&src, GCoeffKey::new(2, 2, t).unwrap()).unwrap();
        assert!(rep.matches(), "t={}", t);
        assert!(cor35_check(t).unwrap().matches());
        let g = general_frobenius(&part("2,1"), t).unwrap();
        assert!(g.ratio_to(&src.triple(&part("2,1")).unwrap().q).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn filtration_descriptions_agree(mut parts in proptest::collection::vec(1usize..7, 1..7)) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        let greedy = rect_filtration(&lam).unwrap();
        prop_assert_eq!(&greedy, &filtration_closed_form(&lam).unwrap());
        // nested rectangles, each strictly inside the previous one
        for w in greedy.rects.windows(2) {
            let (outer, inner) = (w[0].parts(), w[1].parts());
            prop_assert!(inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b) && w[1] != w[0]);
        }
    }
}
