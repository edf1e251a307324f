mod common;

use bolalg::geometry::{from_torsion, torsion_of, TorsionData};
use bolalg::linalg::eigen::rational_eigenlines;
use bolalg::linalg::scalar::{frac, int};
use bolalg::tensor::{Tensor3, Tensor4};
use bolalg::{boltext, Matrix, Scalar, Subspace, Vector};
use proptest::prelude::*;

use common::*;

fn q() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(q(), n), 0..=max)
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    vectors(n, n + 1).prop_map(move |vs| Subspace::canonicalize(&vs, n).unwrap())
}

fn bol3() -> impl Strategy<Value = bolalg::BolAlgebra> {
    any::<u64>().prop_map(|seed| random_bol3(&mut rng(seed)))
}

/// Antisymmetric torsion with entries in {-1, 0, 1}.
fn torsion(n: usize) -> impl Strategy<Value = Tensor3> {
    prop::collection::vec(-1i64..=1, n * n * (n - 1) / 2).prop_map(move |entries| {
        let mut t = Tensor3::zeros(n);
        let mut it = entries.into_iter();
        for j in 0..n {
            for k in j + 1..n {
                for i in 0..n {
                    let c = it.next().unwrap();
                    t.set(i, j, k, int(c));
                    t.set(i, k, j, int(-c));
                }
            }
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_idempotent(vs in vectors(4, 5)) {
        let s = Subspace::canonicalize(&vs, 4).unwrap();
        let again = Subspace::canonicalize(&s.basis_vectors(), 4).unwrap();
        prop_assert_eq!(&again, &s);
        for v in &vs {
            prop_assert!(s.contains(v).unwrap());
        }
    }

    #[test]
    fn modular_dimension_law(a in subspace(4), b in subspace(4)) {
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains_subspace(&a).unwrap() && sum.contains_subspace(&b).unwrap());
        prop_assert!(a.contains_subspace(&meet).unwrap() && b.contains_subspace(&meet).unwrap());
    }

    #[test]
    fn containment_agrees_with_sum(a in subspace(3), b in subspace(3)) {
        let contained = a.contains_subspace(&b).unwrap();
        prop_assert_eq!(contained, a.sum(&b).unwrap() == a);
    }

    #[test]
    fn eigenlines_satisfy_eigen_equation(entries in prop::collection::vec(-3i64..=3, 9)) {
        let m = Matrix::from_fn(3, 3, |i, j| int(entries[3 * i + j]));
        let spectrum = rational_eigenlines(&m).unwrap();
        let mut total = 0;
        for (lambda, line) in &spectrum.lines {
            prop_assert!(line.dim() >= 1);
            total += line.dim();
            for v in line.basis_vectors() {
                let mv = m.mul_vec(&v).unwrap();
                let lv: Vector = v.iter().map(|x| x * lambda).collect();
                prop_assert_eq!(mv, lv);
            }
        }
        prop_assert!(total + spectrum.irrational_count <= 3);
    }

    #[test]
    fn ideal_closure_is_monotone_and_idempotent(v in bol3(), a in subspace(3), b in subspace(3)) {
        let ca = v.ideal_closure(&a).unwrap();
        prop_assert!(v.is_ideal(&ca).unwrap());
        prop_assert!(ca.contains_subspace(&a).unwrap());
        prop_assert_eq!(&v.ideal_closure(&ca).unwrap(), &ca);
        let ab = a.sum(&b).unwrap();
        prop_assert!(v.ideal_closure(&ab).unwrap().contains_subspace(&ca).unwrap());
    }

    #[test]
    fn product_is_antisymmetric(v in bol3(), x in prop::collection::vec(q(), 3), y in prop::collection::vec(q(), 3)) {
        let xy = v.bilinear_product(&x, &y).unwrap();
        let yx = v.bilinear_product(&y, &x).unwrap();
        let sum: Vector = xy.iter().zip(&yx).map(|(a, b)| a + b).collect();
        prop_assert!(is_zero(&sum));
        prop_assert_eq!(xy, mul(&v, &x, &y));
    }

    #[test]
    fn boltext_round_trip(v in bol3(), label in "[a-z][a-z0-9 ]{0,12}") {
        let v = v.with_label(label.trim()).with_meta("origin", "random");
        let back = boltext::parse(&boltext::serialize(&v)).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn torsion_round_trip(v in bol3()) {
        let (back, _) = from_torsion(&torsion_of(&v));
        prop_assert!(back.same_structure(&v));
    }

    #[test]
    fn flat_derivative_gives_antisymmetric_ternary(t in torsion(3)) {
        let data = TorsionData::new(t.clone(), Tensor4::zeros(3)).unwrap();
        let (v, _) = from_torsion(&data);
        prop_assert_eq!(v.binary(), &t);
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let a = v.basis_triple(j, k, l);
                    let b = v.basis_triple(k, j, l);
                    let s: Vector = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    prop_assert!(is_zero(&s));
                }
            }
        }
    }
}
