mod common;

use std::collections::BTreeMap;

use common::scalar;
use lencat::weyl::{normal_form, theta_product, EulerPolynomial, Letter, WeylElement};
use lencat::Scalar;
use proptest::prelude::*;

fn element() -> impl Strategy<Value = WeylElement> {
    proptest::collection::vec((scalar(), 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(WeylElement::zero(), |acc, (c, a, b)| acc.add(&WeylElement::monomial(c, a, b)))
    })
}

fn word() -> impl Strategy<Value = Vec<Letter>> {
    proptest::collection::vec(prop_oneof![Just(Letter::T), Just(Letter::D)], 0..10)
}

/// Moves every `d` right past every `t` using `d t = t d + 1`, one
/// rewrite at a time.
fn rewrite(word: &[Letter]) -> BTreeMap<(u32, u32), i64> {
    let mut pending = vec![(word.to_vec(), 1i64)];
    let mut done = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        match w.windows(2).position(|p| p == [Letter::D, Letter::T]) {
            Some(k) => {
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                let mut dropped = w.clone();
                dropped.drain(k..k + 2);
                pending.push((swapped, c));
                pending.push((dropped, c));
            }
            None => {
                let a = w.iter().filter(|&&l| l == Letter::T).count() as u32;
                *done.entry((a, w.len() as u32 - a)).or_insert(0) += c;
            }
        }
    }
    done.retain(|_, c| *c != 0);
    done
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_matches_rewriting(w in word()) {
        let got = normal_form(&[(Scalar::one(), w.clone())]);
        let want = rewrite(&w);
        prop_assert_eq!(got.terms().count(), want.len());
        for ((a, b), c) in want {
            prop_assert_eq!(got.coefficient(a, b), Scalar::from_int(c));
        }
    }

    #[test]
    fn multiplication_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn multiplication_distributes(x in element(), y in element(), z in element()) {
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn words_concatenate(u in word(), v in word()) {
        let joined: Vec<Letter> = u.iter().chain(&v).copied().collect();
        let lhs = normal_form(&[(Scalar::one(), u)]).mul(&normal_form(&[(Scalar::one(), v)]));
        prop_assert_eq!(lhs, normal_form(&[(Scalar::one(), joined)]));
    }

    #[test]
    fn text_round_trip(x in element()) {
        let back: WeylElement = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn theta_form_round_trip(a in 0u32..4, b in 0u32..4, c in scalar()) {
        prop_assume!(!c.is_zero());
        let m = WeylElement::monomial(c, a, b);
        let (d, g) = m.to_theta_form().unwrap();
        prop_assert_eq!(d, a as i64 - b as i64);
        prop_assert_eq!(WeylElement::from_theta_form(d, &g), m);
    }

    #[test]
    fn theta_products(a in -4i64..=4, b in -4i64..=4) {
        let lhs = WeylElement::theta(a).mul(&WeylElement::theta(b));
        let rhs = WeylElement::from_theta_form(a + b, &theta_product(a, b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_shifts_past_t(k in 0u32..5) {
        // E t^k = t^k (E + k)
        let t = WeylElement::t().pow(k);
        let shifted = WeylElement::euler().add(&WeylElement::constant(Scalar::from_int(k as i64)));
        prop_assert_eq!(WeylElement::euler().mul(&t), t.mul(&shifted));
        let g = EulerPolynomial::linear(Scalar::zero()).shift(&Scalar::from_int(k as i64));
        prop_assert_eq!(g.eval(&Scalar::zero()), Scalar::from_int(k as i64));
    }
}
