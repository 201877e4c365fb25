use super::*;
use crate::jack::JackMemo;
use crate::part;
use crate::ratfield::{rat, Poly, RatFunc};

fn a() -> RatFunc {
    RatFunc::alpha()
}

#[test]
fn rect_closed_form_hand_value() {
    // 8α⁴(α+1)(α+2)
    let (mu, v) = rect_lr(&part![2, 2], &part![2], &a()).unwrap();
    assert_eq!(mu, part![2]);
    let want = RatFunc::from_poly(Poly::from_ints(&[0, 0, 0, 0, 16, 24, 8]));
    assert_eq!(v, want);
}

#[test]
fn rect_closed_form_matches_oracle() {
    let memo = JackMemo::new(a());
    for (r, s) in [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2), (2, 3), (4, 1), (3, 3)] {
        let lam = Partition::rectangle(r, s);
        for k in 0..=lam.weight() {
            for nu in Partition::all(k) {
                if !lam.contains(&nu) {
                    assert!(rect_lr(&lam, &nu, &a()).is_err());
                    continue;
                }
                let (mu, v) = rect_lr(&lam, &nu, &a()).unwrap();
                assert_eq!(lr_oracle(&memo, &mu, &nu, &lam).unwrap(), v, "λ={} ν={}", lam, nu);
                for other in Partition::all(mu.weight()) {
                    if other != mu {
                        assert!(lr_oracle(&memo, &other, &nu, &lam).unwrap().is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn rect_needs_rectangle() {
    assert!(matches!(rect_lr(&part![2, 1], &part![1], &a()), Err(Error::NotRectangular(_))));
}

fn marked_cases(max_weight: usize) -> alloc::vec::Vec<(usize, usize, usize, Partition, Partition)> {
    let mut out = alloc::vec::Vec::new();
    for r in 1..=max_weight {
        for s in 1..=max_weight {
            for n in 0..=r {
                if r * s - n > max_weight || r * s - n == 0 {
                    continue;
                }
                let rect = Partition::rectangle(r, s);
                for k in 0..=(r * s - n) {
                    for nu in Partition::all(k).into_iter().filter(|nu| rect.contains(nu)) {
                        for mu in Partition::all(r * s - n - k) {
                            out.push((r, s, n, mu, nu.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

fn marked_lambda(r: usize, s: usize, n: usize) -> Partition {
    let mut parts = alloc::vec![r; s - 1];
    parts.push(r - n);
    Partition::new(parts).unwrap()
}

#[test]
fn marked_rectangle_verified_form_matches_oracle() {
    let memo = JackMemo::new(a());
    let mut wrong = alloc::collections::BTreeMap::new();
    let mut nonzero = 0;
    for (r, s, n, mu, nu) in marked_cases(6) {
        let lam = marked_lambda(r, s, n);
        let want = lr_oracle(&memo, &mu, &nu, &lam).unwrap();
        let got = marked_rect_lr(r, s, n, &mu, &nu, MarkedForm::VERIFIED, &a()).unwrap();
        assert_eq!(got, want, "r={} s={} n={} μ={} ν={}", r, s, n, mu, nu);
        if !want.is_zero() {
            nonzero += 1;
            let p = want.as_poly().unwrap();
            assert!(crate::ratfield::nonneg_linear_factors(&p, 64).is_some(), "{:?}", want);
        }
        for form in MarkedForm::all() {
            if marked_rect_lr(r, s, n, &mu, &nu, form, &a()).unwrap() != want {
                *wrong.entry(alloc::format!("{:?}", form)).or_insert(0) += 1;
            }
        }
    }
    assert!(nonzero > 50);
    // every other reading fails somewhere once n ≥ 1
    assert_eq!(wrong.len(), 3);
}

#[test]
fn marked_rectangle_examples() {
    let memo = JackMemo::new(a());
    let lam = part![2, 1];
    for (mu, nu) in [(part![1], part![1, 1]), (part![2], part![1])] {
        let got = marked_rect_lr(2, 2, 1, &mu, &nu, MarkedForm::VERIFIED, &a()).unwrap();
        assert_eq!(got, lr_oracle(&memo, &mu, &nu, &lam).unwrap());
    }
    // n = 0 is the plain rectangle
    let (mu, v) = rect_lr(&part![3, 3], &part![2, 1], &a()).unwrap();
    assert_eq!(marked_rect_lr(3, 2, 0, &mu, &part![2, 1], MarkedForm::VERIFIED, &a()).unwrap(), v);
    assert!(marked_rect_lr(2, 2, 3, &part![], &part![1], MarkedForm::VERIFIED, &a()).is_err());
}

#[test]
fn j_n1_expansion() {
    let memo = JackMemo::new(a());
    for n in 1..=5 {
        let mut parts = alloc::vec![n];
        parts.push(1);
        let lam = Partition::new(parts).unwrap();
        assert_eq!(j_n1_in_qbasis(n, &a()).unwrap(), memo.triple(&lam).unwrap().j, "n={}", n);
    }
    // n = 1: J_(1,1) = (1+α)q_1² - 2q_2 at the α-scaled normalisation
    let q1 = q_n(1, &a()).unwrap();
    let want = q1.mul(&q1).scale(&a().plus(&RatFunc::one())).sub(&q_n(2, &a()).unwrap().scale(&RatFunc::from_int(2))).scale(&a());
    assert_eq!(j_n1_in_qbasis(1, &a()).unwrap(), want);
}

#[test]
fn sweep_small() {
    let memo = JackMemo::new(a());
    for nu in [part![1], part![2, 1]] {
        let reports = positivity_sweep(&memo, &nu, 6).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.is_positive(), "{:?}", r);
            if r.linear_factors.is_some() {
                assert_eq!(r.corner.as_ref().unwrap().1, r.nu, "{:?}", r);
                assert_eq!(r.linear_factors, Some(true));
            }
        }
        assert!(reports.iter().any(|r| r.linear_factors == Some(true)));
    }
}

#[test]
fn lr_symmetric_in_factors() {
    let memo = JackMemo::new(a());
    for lam in Partition::all(5) {
        for k in 1..5 {
            for mu in Partition::all(k) {
                for nu in Partition::all(5 - k) {
                    assert_eq!(lr_oracle(&memo, &mu, &nu, &lam).unwrap(), lr_oracle(&memo, &nu, &mu, &lam).unwrap());
                }
            }
        }
    }
}

#[test]
fn conjugation_duality() {
    for av in [2i64, 3] {
        let at = JackMemo::new(rat(av));
        let inv = JackMemo::new(rat(1).over(&rat(av)).unwrap());
        for lam in Partition::all(5) {
            for mu in Partition::all(3) {
                for nu in Partition::all(2) {
                    let (x, y) = conjugate_nonvanishing(&at, &inv, &mu, &nu, &lam).unwrap();
                    assert_eq!(x, y, "α={} μ={} ν={} λ={}", av, mu, nu, lam);
                }
            }
        }
    }
}


#[test]
fn closed_form_dispatch() {
    let memo = JackMemo::new(a());
    assert_eq!(marked_dims(&part![3, 3, 1]), Some((3, 3, 2)));
    assert_eq!(marked_dims(&part![3, 2, 1]), None);
    assert_eq!(marked_dims(&part![2, 2]), None);
    for lam in Partition::all(5).into_iter().chain(Partition::all(6)) {
        for k in 0..=lam.weight() {
            for mu in Partition::all(k) {
                for nu in Partition::all(lam.weight() - k) {
                    if let Some((_, v)) = closed_form_lr(&mu, &nu, &lam, &a()).unwrap() {
                        assert_eq!(v, lr_oracle(&memo, &mu, &nu, &lam).unwrap(), "{} {} {}", mu, nu, lam);
                    }
                }
            }
        }
    }
}
