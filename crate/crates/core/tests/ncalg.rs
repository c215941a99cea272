use std::collections::BTreeMap;

use jordanian::ncalg::ops::{antipode, antipode_on_leg, conjugate, coproduct, counit, multiply_legs};
use jordanian::ncalg::{exp, inv1p, log1p, sqrt1p, UMonomial};
use jordanian::{Config, UElement, Q};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::FileFailurePersistence;

const DIM: usize = 2;
const ORDER: u32 = 4;

fn coefficient() -> impl Strategy<Value = Q> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(re, im, den)| {
        Q::new(BigRational::new(re.into(), den.into()), BigRational::new(im.into(), den.into()))
    })
}

fn element(min_grade: u32) -> impl Strategy<Value = UElement> {
    proptest::collection::vec((min_grade..=2u32, 0u16..=2, 0u16..=2, 0u16..=2, coefficient()), 1..=4).prop_map(
        |terms| {
            UElement::from_terms(
                DIM,
                ORDER,
                terms.into_iter().map(|(g, a, b, d, c)| (g, [UMonomial::new(&[a, b], d)], c)),
            )
        },
    )
}

/// Rewrites a word in the letters `P_0 .. P_{n-1}` (indices `< DIM`) and `D`
/// (index `DIM`) with `D P = P D - P`, always at the leftmost or always at
/// the rightmost inversion.
fn rewrite(word: Vec<usize>, leftmost: bool) -> BTreeMap<(Vec<u16>, u16), i64> {
    let mut out = BTreeMap::new();
    let mut stack = vec![(word, 1i64)];
    while let Some((w, c)) = stack.pop() {
        let inversions = (0..w.len().saturating_sub(1)).filter(|&i| w[i] == DIM && w[i + 1] < DIM);
        let at = if leftmost { inversions.min() } else { inversions.max() };
        match at {
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let mut dropped = w.clone();
                dropped.remove(i);
                stack.push((swapped, c));
                stack.push((dropped, -c));
            }
            None => {
                let mut p = vec![0u16; DIM];
                let mut d = 0;
                for &l in &w {
                    if l < DIM {
                        p[l] += 1;
                    } else {
                        d += 1;
                    }
                }
                *out.entry((p, d)).or_insert(0) += c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn engine_normal_form(word: &[usize]) -> BTreeMap<(Vec<u16>, u16), i64> {
    let cfg = Config::timelike(DIM, ORDER).unwrap();
    let product = word.iter().fold(cfg.one::<Q>(), |acc, &l| {
        let g = if l < DIM { cfg.momentum(l) } else { cfg.dilatation() };
        &acc * &g
    });
    product
        .iter()
        .map(|(_, [m], c)| {
            assert!(c.is_real() && c.re.is_integer());
            ((m.p.to_vec(), m.d), i64::try_from(c.re.to_integer()).unwrap())
        })
        .collect()
}

fn shift() -> i64 {
    Config::timelike(DIM, ORDER).unwrap().dilatation_shift()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: Some(Box::new(FileFailurePersistence::Direct("proptest-regressions/ncalg.txt"))),
        ..ProptestConfig::default()
    })]

    #[test]
    fn multiplication_is_associative(a in element(0), b in element(0), c in element(0)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn normal_form_is_independent_of_rewriting_order(word in proptest::collection::vec(0usize..=DIM, 0..=7)) {
        let left = rewrite(word.clone(), true);
        prop_assert_eq!(&left, &rewrite(word.clone(), false));
        prop_assert_eq!(&left, &engine_normal_form(&word));
    }

    #[test]
    fn coproduct_is_multiplicative(a in element(0), b in element(0)) {
        prop_assert_eq!(coproduct(&(&a * &b)), &coproduct(&a) * &coproduct(&b));
    }

    #[test]
    fn antipode_axioms(a in element(0), b in element(0)) {
        prop_assert_eq!(antipode(&(&a * &b)), &antipode(&b) * &antipode(&a));
        let lhs = multiply_legs(&antipode_on_leg(&coproduct(&a), 0));
        let eps = counit(&a);
        let rhs = UElement::from_terms(
            DIM,
            ORDER,
            eps.into_iter().enumerate().map(|(g, c)| (g as u32, [UMonomial::one(DIM)], c)),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_is_an_involutive_anti_automorphism(a in element(0), b in element(0)) {
        let s = shift();
        prop_assert_eq!(conjugate(&(&a * &b), s), &conjugate(&b, s) * &conjugate(&a, s));
        prop_assert_eq!(conjugate(&conjugate(&a, s), s), a);
    }

    #[test]
    fn analytic_functions_invert_each_other(a in element(1)) {
        let one = UElement::one(DIM, ORDER);
        let e = exp(&a).unwrap();
        prop_assert_eq!(log1p(&(&e - &one)).unwrap(), a.clone());
        prop_assert!((&inv1p(&a).unwrap() * &(&one + &a)).is_one());
        let r = sqrt1p(&a).unwrap();
        prop_assert_eq!(&r * &r, &one + &a);
    }
}
