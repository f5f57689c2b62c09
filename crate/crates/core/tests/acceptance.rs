//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `cargo test --test acceptance -- --nocapture`
//! to see the lines).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use g2theta::numfield::Rational;
use g2theta::octonion::{
    build_structure_constants, derivation_algebra, verify_lemma_tables, BasisId, Lemma, Octonion,
};
use g2theta::rootsystem::{AlgebraType, RootSystem};
use g2theta::trilinear::AlternatingForm3;
use g2theta::verlinde::{
    closed_form_g2, closed_form_sl2_level3, integer_identity_records, trig_fixture_check,
    verlinde_dim,
};

fn report(number: usize, name: &str, ok: bool) {
    println!("criterion {number:02} {name}: {}", if ok { "pass" } else { "FAIL" });
    assert!(ok, "criterion {number:02} {name} failed");
}

#[test]
fn criterion_01_g2_genus_two_equals_five() {
    let start = Instant::now();
    let v = verlinde_dim(AlgebraType::G2, 1, 2).unwrap();
    let ok = v.dimension == BigInt::from(5)
        && v.dimension == closed_form_g2(2).unwrap()
        && start.elapsed().as_secs_f64() < 1.0;
    report(1, "verlinde G2 level 1 genus 2 equals 5", ok);
}

#[test]
fn criterion_02_level_three_coincidence() {
    let start = Instant::now();
    let mut ok = true;
    for g in 2..=10 {
        let a1 = verlinde_dim(AlgebraType::A(1), 3, g).unwrap().dimension;
        let g2 = verlinde_dim(AlgebraType::G2, 1, g).unwrap().dimension;
        ok &= a1 == (BigInt::one() << g) * g2;
    }
    ok &= start.elapsed().as_secs_f64() < 10.0;
    report(2, "dim(A1,3,g) = 2^g dim(G2,1,g) for g=2..10", ok);
}

#[test]
fn criterion_03_closed_form_agreement() {
    let mut ok = true;
    for g in 2..=10 {
        ok &= verlinde_dim(AlgebraType::G2, 1, g).unwrap().dimension == closed_form_g2(g).unwrap();
        ok &= verlinde_dim(AlgebraType::A(1), 3, g).unwrap().dimension
            == closed_form_sl2_level3(g).unwrap();
    }
    report(3, "certified sums match Q(sqrt5) closed forms for g=2..10", ok);
}

#[test]
fn criterion_04_cross_family_power_counts() {
    let mut ok = true;
    for g in 2..=8 {
        ok &= verlinde_dim(AlgebraType::A(1), 1, g).unwrap().dimension == BigInt::one() << g;
        ok &= verlinde_dim(AlgebraType::A(2), 1, g).unwrap().dimension
            == BigInt::from(3).pow(g as u32);
    }
    report(4, "dim(A1,1,g) = 2^g and dim(A2,1,g) = 3^g for g=2..8", ok);
}

#[test]
fn criterion_05_pairing_and_trig_fixtures() {
    let rs = RootSystem::new(AlgebraType::G2).unwrap();
    let q = |n: i64, d: i64| Rational::new(n, d).unwrap();
    let rho_values = [q(1, 3), q(1, 1), q(4, 3), q(5, 3), q(2, 1), q(3, 1)];
    let shifted_values = [q(2, 3), q(1, 1), q(5, 3), q(7, 3), q(3, 1), q(4, 1)];
    let shifted = rs
        .weight_from_fundamental(&[1, 0])
        .unwrap()
        .add(&rs.rho)
        .unwrap();
    let mut ok = true;
    for (alpha, want) in rs.positive_roots.iter().zip(&rho_values) {
        ok &= &rs.pairing_coords(alpha, &rs.rho.coords) == want;
    }
    for (alpha, want) in rs.positive_roots.iter().zip(&shifted_values) {
        ok &= &rs.pairing_coords(alpha, &shifted.coords) == want;
    }
    let trig = trig_fixture_check();
    ok &= trig.len() == 6 && trig.iter().all(|c| c.passed);
    report(5, "12 pairing values exact and 6 trig identities at 256 bits", ok);
}

#[test]
fn criterion_06_structure_tables_consistent() {
    let mut ok = true;
    for basis in [BasisId::B0, BasisId::B1, BasisId::B2, BasisId::B3] {
        ok &= build_structure_constants(basis)
            .and_then(|sc| sc.verify_against_source())
            .is_ok();
    }
    report(6, "tables rebuild entry-for-entry; B0 canonical signed Fano form", ok);
}

#[test]
fn criterion_07_lemma_tables() {
    let r22 = verify_lemma_tables(Lemma::Lemma22).unwrap();
    let r23 = verify_lemma_tables(Lemma::Lemma23).unwrap();
    let ok = r22.passed && r22.checked_triples == 35 && r23.passed && r23.checked_triples == 35;
    report(7, "exhaustive 35-triple omega verification in B2 and B3", ok);
}

#[test]
fn criterion_08_engel_pairing_proportional_and_nondegenerate() {
    let omega = AlternatingForm3::from_octonion_omega(BasisId::B1).unwrap();
    let engel = omega.engel_pairing().unwrap();
    let lambda = engel.at(0, 3).clone(); // Q(y1, y4) = 1 fixes the scalar
    let mut ok = !lambda.is_zero();
    for a in 1..=7 {
        for b in 1..=7 {
            let q = Octonion::basis_vector(BasisId::B1, a)
                .quadratic_form(&Octonion::basis_vector(BasisId::B1, b))
                .unwrap();
            ok &= engel.at(a - 1, b - 1) == &(lambda.clone() * q);
        }
    }
    ok &= omega.is_nondegenerate().unwrap();
    ok &= !AlternatingForm3::new(7).is_nondegenerate().unwrap();
    report(8, "Engel pairing proportional to Q, nondegenerate; zero form degenerate", ok);
}

#[test]
fn criterion_09_derivation_algebra_dimensions() {
    let sc2 = build_structure_constants(BasisId::B2).unwrap();
    let der = derivation_algebra(&sc2);
    let mut ok = der.dimension() == 14;
    ok &= der.leibniz_holds().is_ok();
    ok &= der.closed_under_bracket();
    ok &= der
        .stabilizer_subalgebra(&[vec![1, 2, 3], vec![4, 5, 6]])
        .dimension()
        == 8;
    let sc3 = build_structure_constants(BasisId::B3).unwrap();
    let der3 = derivation_algebra(&sc3);
    ok &= der3
        .stabilizer_subalgebra(&[vec![1, 2, 3, 4], vec![5, 6, 7]])
        .dimension()
        == 6;
    report(9, "derivations dim 14, stabilizers dim 8 and 6, Leibniz and bracket", ok);
}

#[test]
fn criterion_10_dynkin_indices() {
    let two = Rational::from_int(2);
    let g2 = RootSystem::new(AlgebraType::G2).unwrap();
    let mut ok =
        g2.dynkin_index(&g2.weight_from_fundamental(&[1, 0]).unwrap()).unwrap() == two;
    let a1 = RootSystem::new(AlgebraType::A(1)).unwrap();
    ok &= a1.dynkin_index(&a1.weight_from_fundamental(&[2]).unwrap()).unwrap()
        == Rational::from_int(4);
    for n in 1..=4usize {
        let rs = RootSystem::new(AlgebraType::A(n)).unwrap();
        let mut coeffs = vec![0i64; n];
        coeffs[0] = 1;
        ok &= rs.dynkin_index(&rs.weight_from_fundamental(&coeffs).unwrap()).unwrap()
            == Rational::one();
    }
    // adjoint index = 2g* for A1, A2, G2
    let a2 = RootSystem::new(AlgebraType::A(2)).unwrap();
    let adjoints = [
        (&a1, vec![2i64], 4i64),
        (&a2, vec![1, 1], 6),
        (&g2, vec![0, 1], 8),
    ];
    for (rs, coeffs, want) in adjoints {
        ok &= rs.dynkin_index(&rs.weight_from_fundamental(&coeffs).unwrap()).unwrap()
            == Rational::from_int(want);
    }
    report(10, "Dynkin indices: G2 w1 -> 2, sl2 adjoint -> 4, defining -> 1, adjoint -> 2g*", ok);
}

#[test]
fn criterion_11_integer_identity_suite() {
    let start = Instant::now();
    let mut ok = true;
    for g in 2..=12 {
        ok &= integer_identity_records(g).unwrap().iter().all(|r| r.passed);
    }
    ok &= start.elapsed().as_secs_f64() < 1.0;
    report(11, "integer identities (v)-(vii) for g=2..12 under one second", ok);
}
