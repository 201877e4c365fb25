use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::part;
use crate::ratfield::{rat, ratio, Poly, RatFunc};

fn a() -> RatFunc {
    RatFunc::alpha()
}

fn p(l: Partition) -> SymFun<RatFunc> {
    SymFun::p(l)
}

fn poly(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(Poly::from_ints(c))
}

#[test]
fn arithmetic() {
    assert_eq!(p(part![2]).mul(&p(part![2, 1])), p(part![2, 2, 1]));
    let f = p(part![2]).add(&p(part![1, 1]).scale(&a()));
    assert!(f.add(&f.scale(&RatFunc::from_int(-1))).is_zero());
    let g = p(part![1]).add(&p(part![2])).mul(&p(part![1]));
    assert_eq!(g, p(part![1, 1]).add(&p(part![2, 1])));
    assert_eq!(g.degree(), Degree::Mixed);
    assert_eq!(f.degree(), Degree::Homogeneous(2));
    assert_eq!(g.homogeneous_component(3), p(part![2, 1]));
    assert_eq!(SymFun::<RatFunc>::zero().degree(), Degree::Zero);
}

#[test]
fn inner_products() {
    assert_eq!(inner(&p(part![2]), &p(part![2]), &a()), poly(&[0, 2]));
    assert!(inner(&p(part![1, 1]), &p(part![2]), &a()).is_zero());
    assert_eq!(inner(&p(part![2, 1]), &p(part![2, 1]), &a()), poly(&[0, 0, 2]));
}

#[test]
fn skew_examples() {
    assert_eq!(skew(&p(part![2]), &p(part![2, 2, 1]), &a()), p(part![2, 1]).scale(&poly(&[0, 4])));
    assert!(skew(&p(part![1]), &p(part![2]), &a()).is_zero());
    assert_eq!(skew(&p(part![1]), &p(part![1]), &a()), SymFun::one().scale(&a()));
}

#[test]
fn q_functions() {
    assert_eq!(q_n(0, &a()).unwrap(), SymFun::one());
    assert_eq!(q_n(1, &a()).unwrap(), p(part![1]).scale(&a().inv().unwrap()));
    let two_a = poly(&[0, 2]);
    let two_a2 = poly(&[0, 0, 2]);
    let q2 = p(part![2]).scale(&two_a.inv().unwrap()).add(&p(part![1, 1]).scale(&two_a2.inv().unwrap()));
    assert_eq!(q_n(2, &a()).unwrap(), q2);
    assert_eq!(q_lambda(&part![1, 1], &a()).unwrap(), p(part![1, 1]).scale(&poly(&[0, 0, 1]).inv().unwrap()));
    assert_eq!(q_lambda(&Partition::empty(), &a()).unwrap(), SymFun::one());
    assert_eq!(q_lambda(&part![2, 1], &a()).unwrap(), q2.mul(&q_n(1, &a()).unwrap()));
}

#[test]
fn monomial_coefficients() {
    assert_eq!(monomial_coeff(&p(part![1, 1]), &part![1, 1], &a()).unwrap(), RatFunc::from_int(2));
    // p_2 = m_2 has no m_{11} part
    assert!(monomial_coeff(&p(part![2]), &part![1, 1], &a()).unwrap().is_zero());
    assert_eq!(monomial_coeff(&SymFun::one(), &Partition::empty(), &a()).unwrap(), RatFunc::one());
}

#[test]
fn power_sums_in_monomials() {
    // p_{21} = m_3 + m_{21}, p_{111} = m_3 + 3 m_{21} + 6 m_{111}
    let l = power_to_monomial(&part![2, 1]);
    assert_eq!(l, BTreeMap::from([(part![3], 1.into()), (part![2, 1], 1.into())]));
    let l = power_to_monomial(&part![1, 1, 1]);
    assert_eq!(l, BTreeMap::from([(part![3], 1.into()), (part![2, 1], 3.into()), (part![1, 1, 1], 6.into())]));
}

#[test]
fn monomial_table_inverts_power_sums() {
    for n in 0..=7 {
        let t = MonomialTable::new(n).unwrap();
        for lam in Partition::all(n) {
            let m = t.m(&lam).unwrap();
            let back = to_monomial(m);
            assert_eq!(back, BTreeMap::from([(lam.clone(), rat(1))]), "{}", lam);
        }
    }
    assert!(MonomialTable::new(MONOMIAL_TABLE_MAX_WEIGHT + 1).is_err());
}

#[test]
fn duality_through_weight_8() {
    // symbolic through 5, then at a numeric parameter through 8
    for n in 0..=8 {
        let keys = Partition::all(n);
        let params: Vec<BigRational> = if n <= 5 { Vec::new() } else { alloc::vec![ratio(2, 3)] };
        let t = MonomialTable::new(n).unwrap();
        if params.is_empty() {
            for lam in &keys {
                let q = q_lambda(lam, &a()).unwrap();
                for nu in &keys {
                    let want = if lam == nu { RatFunc::one() } else { RatFunc::zero() };
                    assert_eq!(inner(&q, &t.m_as(nu).unwrap(), &a()), want);
                    assert_eq!(monomial_coeff(&q, nu, &a()).unwrap(), to_monomial(&q).get(nu).cloned().unwrap_or_default());
                }
            }
        }
        for x in &params {
            for lam in &keys {
                let q = q_lambda(lam, x).unwrap();
                for nu in &keys {
                    let want = if lam == nu { rat(1) } else { rat(0) };
                    assert_eq!(inner(&q, &t.m_as(nu).unwrap(), x), want);
                }
            }
        }
    }
}

#[test]
fn q_matches_exponential_generating_function() {
    // E_n = (1/n) Σ_{r=1}^n (p_r/α) E_{n-r} is the series exp(Σ p_r z^r/(rα))
    let x = a();
    let mut e: Vec<SymFun<RatFunc>> = alloc::vec![SymFun::one()];
    for n in 1..=7usize {
        let mut acc = SymFun::zero();
        for r in 1..=n {
            acc = acc.add(&p(part![r]).mul(&e[n - r]));
        }
        let scale = x.times(&RatFunc::from_int(n as i64)).inv().unwrap();
        e.push(acc.scale(&scale));
        assert_eq!(q_n(n, &x).unwrap(), e[n]);
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

fn arb_homogeneous(n: usize) -> impl Strategy<Value = SymFun<RatFunc>> {
    let keys = Partition::all(n);
    let k = keys.len();
    prop::collection::vec((-3i64..=3, 0i64..=2), k).prop_map(move |cs| {
        SymFun::from_terms(keys.iter().cloned().zip(cs).map(|(key, (c, d))| (key, poly(&[c, d]))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn skew_is_adjoint_to_multiplication(
        (f, h, g) in (0usize..=3, 0usize..=3).prop_flat_map(|(i, j)| (arb_homogeneous(i), arb_homogeneous(j), arb_homogeneous(i + j)))
    ) {
        let x = a();
        prop_assert_eq!(inner(&f.mul(&h), &g, &x), inner(&h, &skew(&f, &g, &x), &x));
    }

    #[test]
    fn skew_by_power_sum_lowers_degree(n in 1usize..=3, g in (1usize..=6).prop_flat_map(arb_homogeneous)) {
        let r = skew(&p(part![n]), &g, &a());
        let d = match g.degree() { Degree::Homogeneous(d) => d, _ => return Ok(()) };
        match r.degree() {
            Degree::Zero => {}
            Degree::Homogeneous(e) => prop_assert_eq!(e + n, d),
            Degree::Mixed => prop_assert!(false),
        }
    }

    #[test]
    fn ring_laws(f in arb_homogeneous(2), g in arb_homogeneous(3), h in arb_homogeneous(2)) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&h).sub(&h), f.clone());
    }
}
