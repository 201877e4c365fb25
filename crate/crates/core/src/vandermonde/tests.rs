use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::jack::{JackMemo, JackSource};
use crate::part;
use crate::partition::Partition;
use crate::ratfield::{rat, ratio};
use crate::symfun::{to_monomial, SymFun};

fn lim() -> DeltaLimits {
    DeltaLimits::default()
}

#[test]
fn two_variables() {
    let d = expand_delta(2, 1, lim()).unwrap();
    let want: BTreeMap<Vec<i32>, BigInt> = BTreeMap::from([(vec![0, 0], 2.into()), (vec![1, -1], (-1).into()), (vec![-1, 1], (-1).into())]);
    assert_eq!(d.terms(), &want);
    assert_eq!(delta_coefficient(&[1, -1], 2, 1, lim()).unwrap(), BigInt::from(-1));
    assert!(delta_coefficient(&[1, 0], 2, 1, lim()).is_err());
    assert!(expand_delta(4, 4, lim()).is_err());
}

#[test]
fn dyson_constant_terms() {
    assert_eq!(delta_coefficient(&[0, 0, 0], 3, 1, lim()).unwrap(), BigInt::from(6));
    assert_eq!(delta_coefficient(&[0, 0, 0], 3, 2, lim()).unwrap(), BigInt::from(90));
    for s in 1..=3 {
        for t in 1..=3 {
            assert_eq!(delta_coefficient(&vec![0; s], s, t, lim()).unwrap(), dyson_constant(s, t));
        }
    }
}

#[test]
fn expansion_symmetry() {
    for (s, t) in [(2, 2), (3, 1), (3, 2), (4, 1)] {
        assert_eq!(symmetry_defects(&expand_delta(s, t, lim()).unwrap()), 0);
    }
}

#[test]
fn closed_form_coefficients() {
    assert_eq!(Prop39::General(1).value(2, 1).unwrap(), rat(-1));
    for s in 2..=5 {
        for t in 1..=2 {
            let d = expand_delta(s, t, lim()).unwrap();
            let mut which = vec![Prop39::TwoTwo];
            for i in 1..=s / 2 {
                which.push(Prop39::General(i));
            }
            if s >= 3 {
                which.push(Prop39::OneOneTwoObserved);
                let e = Prop39::OneOneTwo.exponents(s).unwrap();
                assert_ne!(BigRational::from_integer(d.coeff(&e)), Prop39::OneOneTwo.value(s, t).unwrap());
            }
            for w in which {
                let e = w.exponents(s).unwrap();
                assert_eq!(BigRational::from_integer(d.coeff(&e)), w.value(s, t).unwrap(), "{:?} s={} t={}", w, s, t);
            }
        }
    }
    assert!(Prop39::General(2).value(3, 1).is_err());
    assert!(Prop39::OneOneTwo.value(2, 1).is_err());
}

#[test]
fn delta_on_q() {
    let d = expand_delta(2, 1, lim()).unwrap();
    let q = apply_delta_q(&[1, 1], &d).unwrap();
    assert_eq!(q, BTreeMap::from([(part![1, 1], 2.into()), (part![2], (-2).into())]));
    let qr: BTreeMap<Partition, BigRational> = q.into_iter().map(|(k, c)| (k, BigRational::from_integer(c))).collect();
    let p = q_expansion_to_p(&qr, &rat(1)).unwrap();
    assert_eq!(p, SymFun::p(part![1, 1]).sub(&SymFun::p(part![2])));
    // weight 0: only the constant term survives
    let q0 = apply_delta_q(&[0, 0], &d).unwrap();
    assert_eq!(q0, BTreeMap::from([(Partition::empty(), 2.into())]));
}

#[test]
fn direct_action_matches_full_expansion() {
    for t in 1..=2 {
        for s in 1..=4 {
            let d = expand_delta(s, t, lim()).unwrap();
            for n in 0..=6 {
                for lam in Partition::all(n).into_iter().filter(|l| l.len() <= s) {
                    let mut exps = lam.parts().to_vec();
                    exps.resize(s, 0);
                    assert_eq!(apply_delta_q_direct(&exps, t).unwrap(), apply_delta_q(&exps, &d).unwrap(), "{:?} t={}", exps, t);
                }
            }
        }
    }
    // unsorted exponents act the same way
    let d = expand_delta(3, 1, lim()).unwrap();
    assert_eq!(apply_delta_q_direct(&[0, 2, 1], 1).unwrap(), apply_delta_q(&[0, 2, 1], &d).unwrap());
}

#[test]
fn x_prime_small() {
    let x = x_prime_image(&part![1, 1], 1, lim()).unwrap();
    let m11 = SymFun::p(part![1, 1]).sub(&SymFun::p(part![2])).scale(&ratio(1, 2));
    assert_eq!(x, m11);
}

#[test]
fn rectangles_are_fixed() {
    for t in 1..=2 {
        let memo = JackMemo::new(inverse_param(t));
        for (k, s) in [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (3, 2)] {
            assert!(rect_action_check(&memo, k, s, t, lim()).unwrap(), "k={} s={} t={}", k, s, t);
            let lam = Partition::rectangle(k, s);
            assert_eq!(x_prime_image(&lam, t, lim()).unwrap(), memo.triple(&lam).unwrap().q);
        }
    }
}

#[test]
fn q_route_for_coefficients() {
    for t in 1..=2 {
        let memo = JackMemo::new(inverse_param(t));
        for s in 2..=3 {
            let d = expand_delta(s, t, lim()).unwrap();
            for beta in d.terms().keys().filter(|b| b.iter().all(|&x| x.abs() <= 2)) {
                let row = q_route_coefficient(&memo, beta, t, &d).unwrap();
                assert!(row.matches(), "{:?}", row);
            }
        }
    }
}

#[test]
fn independence_and_schur() {
    for n in 1..=5 {
        let rows: Vec<SymFun<BigRational>> = Partition::all(n).iter().map(|l| x_prime_image(l, 1, lim()).unwrap()).collect();
        assert_eq!(linear_rank(&rows), rows.len());
    }
    let memo = JackMemo::new(rat(1));
    for lam in [part![2, 2, 1], part![3, 2, 2], part![2, 1, 1], part![3, 3, 2]] {
        let x = x_prime_image(&lam, 1, lim()).unwrap();
        assert!(x.ratio_to(&memo.triple(&lam).unwrap().p).is_some(), "{}", lam);
    }
}

#[test]
fn kernel_positivity() {
    let h = expand_h1(1, 1, 4).unwrap();
    assert!(h.iter().any(|t| t.lambda == part![1] && t.mu == part![1] && t.coeff == BigInt::from(1)));
    for s in 1..=3 {
        for t in 1..=2 {
            for term in expand_h1(s, t, 6).unwrap() {
                assert!(term.dominates(), "{:?}", term);
                assert!(term.coeff > BigInt::from(0), "{:?}", term);
            }
        }
    }
}

#[test]
fn near_rectangle_scalar_measured() {
    for t in 1..=2 {
        let memo = JackMemo::new(inverse_param(t));
        for (k, s) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)] {
            let (measured, stated) = near_rect_scalar(&memo, k, s, t, lim()).unwrap();
            // 1/(1 + st), independent of k
            let want = ratio(1, 1 + (s * t) as i64);
            assert_eq!(measured, Some(want), "k={} s={} t={}", k, s, t);
            assert_ne!(measured, Some(stated));
        }
    }
}

#[test]
fn x_prime_support() {
    for t in 1..=2 {
        for n in 1..=5 {
            for lam in Partition::all(n) {
                let q = x_prime_q_expansion(&lam, t, lim()).unwrap();
                assert!(q.keys().all(|mu| mu.len() <= lam.len()), "λ={} t={}", lam, t);
                let x = x_prime_image(&lam, t, lim()).unwrap();
                let m = to_monomial(&x);
                assert!(m.iter().all(|(mu, c)| mu.part(0) <= lam.part(0) || c.is_zero()), "λ={} t={}", lam, t);
            }
        }
    }
}
