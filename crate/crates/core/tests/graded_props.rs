mod common;

use common::scalar;
use lencat::abcat::{are_isomorphic, is_indecomposable, is_uniserial, SimpleFamily};
use lencat::gradedrep::{in_j_star, GradedRep, WeylLabel};
use lencat::weyl::{EulerPolynomial, WeylElement};
use lencat::weylcat::{catalog_module, expected_factors, CatalogKey};
use lencat::Scalar;
use proptest::prelude::*;

fn label() -> impl Strategy<Value = WeylLabel> {
    prop_oneof![
        Just(WeylLabel::Alpha(Scalar::ratio(1, 2))),
        Just(WeylLabel::Alpha(Scalar::gaussian(1, 3, 1, 2))),
        Just(WeylLabel::Alpha(Scalar::gaussian(0, 1, -1, 1))),
        Just(WeylLabel::Zero),
        Just(WeylLabel::Infinity),
    ]
}

/// `theta_e g(E)` for a nonzero polynomial `g` of degree at most 2.
fn homogeneous() -> impl Strategy<Value = WeylElement> {
    (-2i64..=2, proptest::collection::vec(scalar(), 1..3), scalar()).prop_map(|(e, mut coeffs, lead)| {
        let lead = if lead.is_zero() { Scalar::one() } else { lead };
        coeffs.push(lead);
        WeylElement::from_theta_form(e, &EulerPolynomial::new(coeffs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ideal_quotients_are_modules(p in homogeneous()) {
        let m = GradedRep::ideal_quotient(&p, -5, 5).unwrap();
        prop_assert!(m.validate().is_valid());
        let back = GradedRep::from_text(&m.to_text()).unwrap();
        prop_assert_eq!(&back, &m);
        let q = m.to_quiver_rep().unwrap();
        prop_assert_eq!(GradedRep::from_quiver_rep(&q).unwrap(), m);
    }

    #[test]
    fn twists_compose(l in label(), s in -3i64..=3, r in -3i64..=3) {
        let m = GradedRep::simple(&l, 0, -6, 6).unwrap();
        prop_assert_eq!(m.twist(s).twist(r), m.twist(s + r));
        prop_assert_eq!(m.twist(s).twist(-s), m.clone());
        // M[s] built directly agrees with twisting M on the shifted window
        let direct = GradedRep::simple(&l, s, -6 - s, 6 - s).unwrap();
        prop_assert_eq!(direct, m.twist(s));
    }

    #[test]
    fn catalog_modules_are_uniserial(l in label(), n in 1u32..=3, w in -1i64..=1) {
        let key = CatalogKey::new(&l, n, w).unwrap();
        let (lo, hi) = key.default_window();
        let m = catalog_module(&key, lo, hi, 2).unwrap();
        prop_assert!(m.validate().is_valid());
        let rep = m.to_quiver_rep().unwrap();
        prop_assert!(is_indecomposable(&rep).unwrap().0);
        let mut labels = vec![WeylLabel::Zero, WeylLabel::Infinity];
        if !labels.contains(&l) {
            labels.push(l.clone());
        }
        let fam = SimpleFamily::weyl_twists(&labels, &[w - 1, w, w + 1], lo, hi).unwrap();
        let series = is_uniserial(&rep, &fam).unwrap().expect("uniserial");
        let got: Vec<String> = series.factor_tags(&fam).iter().map(|t| t.to_string()).collect();
        let want: Vec<String> = expected_factors(&key).iter().map(|t| t.to_string()).collect();
        prop_assert_eq!(got, want);
        if let WeylLabel::Alpha(a) = &l {
            prop_assert!(in_j_star(a));
            let interior = (lo + 2..=hi - 2).all(|u| m.dim(u) == n as usize);
            prop_assert!(interior);
        }
    }

    #[test]
    fn twisted_catalog_modules(l in label(), n in 1u32..=2, s in prop_oneof![Just(-1i64), Just(1)]) {
        let k0 = CatalogKey::new(&l, n, 0).unwrap();
        let ks = CatalogKey::new(&l, n, s).unwrap();
        let (lo, hi) = (-(n as i64) - 6, n as i64 + 6);
        let m0 = catalog_module(&k0, lo, hi, 2).unwrap();
        let ms = catalog_module(&ks, lo, hi, 2).unwrap();
        let (x0, xs) = (m0.to_quiver_rep().unwrap(), ms.to_quiver_rep().unwrap());
        prop_assert!(!are_isomorphic(&x0, &xs).unwrap());
        // compare on a window inside both supports of data
        let (a, b) = (lo + 1, hi - 1);
        let moved = m0.twist(s).reframe(a, b).unwrap().to_quiver_rep().unwrap();
        let target = ms.reframe(a, b).unwrap().to_quiver_rep().unwrap();
        prop_assert!(are_isomorphic(&moved, &target).unwrap());
    }
}

#[test]
fn corrupted_module_fails_validation() {
    let key = CatalogKey::new(&WeylLabel::Alpha(Scalar::ratio(1, 2)), 2, 0).unwrap();
    let mut m = catalog_module(&key, -6, 6, 2).unwrap();
    let t = m.t_map_mut(1).unwrap();
    t[(0, 0)] += &Scalar::one();
    assert!(!m.validate().is_valid());
    assert!(m.to_quiver_rep().is_err());
}
