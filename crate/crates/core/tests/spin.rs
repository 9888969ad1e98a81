use num_bigint::BigInt;
use proptest::prelude::*;
use spincc_core::spin::{phi, pontryagin_symbols, quillen_h, spin8_check, torsion_product, TransitionTable};
use spincc_core::steenrod::BsoModel;
use spincc_core::{Error, Poly, RingSpec};

/// Free part of `w2^(r)` computed from the Steenrod side, renamed into `P`'s.
/// Odd `n` keeps `w16` mapping to `p8` rather than to an Euler class.
fn phi_from_steenrod(r: u32) -> Poly {
    let m = BsoModel::new(17).unwrap();
    let w = m.derived_w2(r).unwrap();
    let f = m.f_free(&w.steps[r as usize].value).unwrap();
    let symbols = pontryagin_symbols(8).unwrap();
    let images: Vec<Poly> = (0..f.free.ring().nvars())
        .map(|i| {
            let name = f.free.ring().name(i);
            match name.strip_prefix('p') {
                Some(j) => Poly::var(&symbols, &format!("P{j}")).unwrap(),
                None => Poly::zero(&symbols),
            }
        })
        .collect();
    f.free.map_into(&symbols, &images).unwrap()
}

#[test]
fn phi_agrees_with_free_part_of_derived_w2() {
    for r in 0..=3 {
        let lhs = phi(r, 8).unwrap();
        assert_eq!(lhs, phi_from_steenrod(r), "r = {r}");
    }
}

#[test]
fn phi_lies_in_the_higher_ideal() {
    for r in 2..=3 {
        let p = phi(r, 8).unwrap();
        assert!(p.terms().all(|(m, _)| m.exps()[1..].iter().any(|&e| e > 0)));
        assert_eq!(p.coeff_of(&[0; 8]), BigInt::from(0));
    }
}

#[test]
fn rows_solve_the_recurrence() {
    let t = TransitionTable::new(32).unwrap();
    let q = |s: &str| Poly::parse(t.q_ring(), s).unwrap();
    // 2 q_{2k} + q_k^2 = phi(r) in q's, for k = 2^{r-1}
    for r in 1..=3u32 {
        let k = 1u32 << (r - 1);
        let images: Vec<Poly> = (1..=8).map(|j| t.p_row(j).unwrap().clone()).collect();
        let phi_q = phi(r, 8).unwrap().map_into(t.q_ring(), &images).unwrap();
        assert_eq!(phi_q, q(&format!("2q{} + q{k}^2", 2 * k)), "r = {r}");
    }
    for k in [3u32, 5, 6, 7] {
        assert_eq!(t.p_row(k).unwrap(), &q(&format!("q{k}")));
    }
}

#[test]
fn rows_at_degree_sixteen() {
    let t = TransitionTable::new(16).unwrap();
    let q = |s: &str| Poly::parse(t.q_ring(), s).unwrap();
    let p = |s: &str| Poly::parse(t.p_ring(), s).unwrap();
    assert_eq!(t.p_to_q(&p("p1^2")).unwrap(), q("4q1^2"));
    assert_eq!(t.p_to_q(&p("p4")).unwrap(), q("2q4 + q2^2 - 2q1*q3"));
    assert!(matches!(t.p_to_q(&Poly::parse(&RingSpec::new([("p5", 20)], 0).unwrap(), "p5").unwrap()), Err(Error::DegreeBound { .. })));
    assert!(TransitionTable::new(36).is_err());
}

#[test]
fn spin8_relation() {
    let r = spin8_check(None, None).unwrap();
    assert!(r.relation_holds());
    // The sign (-1)^{h(8)} flips theta and q2^2 together, leaving -2 a8.
    assert_eq!(quillen_h(8), 3);
    assert_eq!(r.signed_relation, r.a8.scale(&BigInt::from(-2)));
    assert!(!r.signed_relation_holds());
}

#[test]
fn spin8_detects_mutation() {
    let r = spin8_check(None, Some("e8^2 - 2e8*q2 - q0^2*p3 - 2e8*q0^2*q1")).unwrap();
    assert!(!r.relation_holds());
}

#[test]
fn torsion_product_is_additive() {
    let m = BsoModel::new(16).unwrap();
    let a = m.parse("w6 + w2*w4").unwrap();
    let b = m.parse("w3^2").unwrap();
    for k in 1..=5 {
        let lhs = torsion_product(&m, k, &(&a + &b)).unwrap();
        let rhs = torsion_product(&m, k, &a).unwrap().add(&torsion_product(&m, k, &b).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "k = {k}");
    }
}

fn arb_p(t: &TransitionTable, degree: u32) -> impl Strategy<Value = Poly> {
    let ring = t.p_ring().clone();
    let basis = ring.basis(degree);
    prop::collection::vec((0..basis.len(), -5i64..=5), 1..5).prop_map(move |terms| {
        let mut p = Poly::zero(&ring);
        for (i, c) in terms {
            p.add_term(basis[i].clone(), BigInt::from(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn round_trip(p in arb_p(&TransitionTable::new(16).unwrap(), 16)) {
        let t = TransitionTable::new(16).unwrap();
        let p = p.with_ring(t.p_ring()).unwrap();
        let q = t.p_to_q(&p).unwrap();
        let back = t.q_to_p(&q).unwrap();
        prop_assert_eq!(back, p.to_rational());
        // q -> p -> q on the same coefficients read in q's
        let images: Vec<Poly> = (0..4).map(|i| Poly::var_at(t.q_ring(), i)).collect();
        let qs = p.map_into(t.q_ring(), &images).unwrap();
        let as_p = t.q_to_p(&qs).unwrap();
        prop_assert!(as_p.max_abs_denominator_is_power_of_two());
        prop_assert_eq!(t.p_to_q_rational(&as_p).unwrap(), qs.to_rational());
    }
}
