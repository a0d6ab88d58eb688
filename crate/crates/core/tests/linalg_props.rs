mod common;

use common::{invertible, matrix, scalar};
use lencat::linalg::{kernel_basis, rref, sparse_from_dense, sparse_kernel, Matrix, Scalar, Subspace};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn matrix_line_round_trip(m in matrix(2, 3)) {
        prop_assert_eq!(Matrix::parse_line(&m.to_line()).unwrap(), m);
    }

    #[test]
    fn inverse_is_two_sided(m in invertible(3)) {
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn rank_nullity(m in matrix(3, 4)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.len(), 4);
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
        let (r, pivots) = rref(&m);
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(r.rank(), m.rank());
    }

    #[test]
    fn sparse_kernel_matches_dense(m in matrix(4, 5)) {
        let rows = (0..4).map(|r| sparse_from_dense(m.row(r)));
        let sparse = sparse_kernel(5, rows);
        let dense = kernel_basis(&m);
        prop_assert_eq!(
            Subspace::span_vectors(5, &sparse),
            Subspace::span_vectors(5, &dense)
        );
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(4, 2), b in matrix(4, 2)) {
        let (u, v) = (Subspace::span(&a), Subspace::span(&b));
        let sum = u.sum(&v).unwrap();
        let meet = u.intersection(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(sum.contains_subspace(&u) && u.contains_subspace(&meet));
        let c = u.complement();
        prop_assert_eq!(Subspace::span(&u.basis().hstack(&c).unwrap()).dim(), 4);
    }

    #[test]
    fn preimage_of_image_contains(a in matrix(3, 3), f in matrix(3, 3)) {
        let u = Subspace::span(&a);
        let back = u.image(&f).unwrap().preimage(&f).unwrap();
        prop_assert!(back.contains_subspace(&u));
    }
}
