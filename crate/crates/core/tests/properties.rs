//! Randomized invariants for the field arithmetic, the octonion product,
//! and the trilinear form.

use proptest::prelude::*;

use g2theta::numfield::{GaussSqrt2, QuadExt5, Rational};
use g2theta::octonion::{trilinear_omega, BasisId, Octonion};

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..200, 1i64..60).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn gauss() -> impl Strategy<Value = GaussSqrt2> {
    [rational(), rational(), rational(), rational()]
        .prop_map(|[a, b, c, d]| GaussSqrt2::new(a, b, c, d))
}

fn quad5() -> impl Strategy<Value = QuadExt5> {
    (rational(), rational()).prop_map(|(a, b)| QuadExt5::new(a, b))
}

fn octonion(basis: BasisId) -> impl Strategy<Value = Octonion> {
    proptest::collection::vec(rational(), 7)
        .prop_map(move |v| Octonion::from_coords(basis, std::array::from_fn(|k| GaussSqrt2::from_rational(v[k].clone()))))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn gauss_reciprocal_and_conjugations(x in gauss(), y in gauss()) {
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.recip().unwrap(), GaussSqrt2::one());
        }
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        prop_assert_eq!((x.clone() * y.clone()).sqrt2_conj(), x.sqrt2_conj() * y.sqrt2_conj());
        prop_assert_eq!(x.clone() * y.clone(), y * x);
    }

    #[test]
    fn quad5_norm_is_multiplicative(x in quad5(), y in quad5()) {
        prop_assert_eq!((x.clone() * y.clone()).norm(), &x.norm() * &y.norm());
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
    }

}

proptest! {
    // exact field arithmetic makes octonion cases slow; fewer cases suffice
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn octonion_product_is_bilinear(
        x in octonion(BasisId::B1),
        y in octonion(BasisId::B1),
        z in octonion(BasisId::B1),
        c in rational(),
    ) {
        let s = GaussSqrt2::from_rational(c);
        let lhs = x.add(&y.scale(&s)).unwrap().multiply(&z).unwrap();
        let rhs = x.multiply(&z).unwrap().add(&y.multiply(&z).unwrap().scale(&s)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_change_is_an_algebra_map(
        x in octonion(BasisId::B2),
        y in octonion(BasisId::B2),
    ) {
        for target in [BasisId::B0, BasisId::B1, BasisId::B3] {
            let direct = x.multiply(&y).unwrap().change_basis(target);
            let mapped = x.change_basis(target).multiply(&y.change_basis(target)).unwrap();
            prop_assert_eq!(direct, mapped);
            // round trip
            prop_assert_eq!(x.change_basis(target).change_basis(BasisId::B2), x.clone());
        }
    }

    #[test]
    fn quadratic_form_is_basis_invariant(
        x in octonion(BasisId::B1),
        y in octonion(BasisId::B1),
    ) {
        let q = x.quadratic_form(&y).unwrap();
        for target in [BasisId::B0, BasisId::B2, BasisId::B3] {
            let qt = x.change_basis(target).quadratic_form(&y.change_basis(target)).unwrap();
            prop_assert_eq!(&qt, &q);
        }
        prop_assert_eq!(y.quadratic_form(&x).unwrap(), q);
    }

    #[test]
    fn omega_is_alternating_and_trilinear(
        x in octonion(BasisId::B1),
        y in octonion(BasisId::B1),
        z in octonion(BasisId::B1),
    ) {
        let v = trilinear_omega(&x, &y, &z).unwrap();
        prop_assert_eq!(trilinear_omega(&y, &x, &z).unwrap(), -v.clone());
        prop_assert_eq!(trilinear_omega(&x, &z, &y).unwrap(), -v.clone());
        prop_assert_eq!(trilinear_omega(&y, &z, &x).unwrap(), v.clone());
        prop_assert!(trilinear_omega(&x, &x, &z).unwrap().is_zero());
        // invariant under basis change
        let b0 = trilinear_omega(
            &x.change_basis(BasisId::B0),
            &y.change_basis(BasisId::B0),
            &z.change_basis(BasisId::B0),
        ).unwrap();
        prop_assert_eq!(b0, v);
    }

    #[test]
    fn composition_property_on_imaginary_parts(
        x in octonion(BasisId::B1),
        y in octonion(BasisId::B1),
    ) {
        // N(xy) = N(x)N(y) with N(v) = Q(v, v) for the full product
        let xy = x.multiply(&y).unwrap();
        let n = |v: &Octonion| {
            let imag = Octonion::from_coords(v.basis, v.coords.clone());
            v.real.clone() * v.real.clone() + imag.quadratic_form(&imag).unwrap()
        };
        prop_assert_eq!(n(&xy), n(&x) * n(&y));
    }
}
