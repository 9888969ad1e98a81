use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use spincc_core::steenrod::{BsoModel, StepSource};
use spincc_core::{Poly, RingSpec};

/// Splitting-principle oracle for `Sq^i(w_j)` in `H*(B_SO(n))`.
///
/// `Sq` is multiplicative with `Sq(t) = t + t^2` on roots, so `Sq(w_j)` is
/// `e_j(t_k + t_k^2)`. Working in `Z/2[t_1..t_{n-1}]` with `t_n = t_1 + ... + t_{n-1}`
/// kills `w_1`, and the symmetric part injects, so comparing images there
/// checks the formula exactly.
struct Roots {
    n: u32,
    ring: spincc_core::Ring,
    roots: Vec<Poly>,
}

impl Roots {
    fn new(n: u32) -> Self {
        let ring = RingSpec::new((1..n).map(|i| (format!("t{i}"), 1)), 2).unwrap();
        let mut roots: Vec<Poly> = (0..(n - 1) as usize).map(|i| Poly::var_at(&ring, i)).collect();
        let last = roots.iter().fold(Poly::zero(&ring), |a, b| a + b.clone());
        roots.push(last);
        Roots { n, ring, roots }
    }

    fn elementary(&self, vals: &[Poly], j: u32) -> Poly {
        // e_j via the generating product, truncated at j factors.
        let mut e = vec![Poly::one(&self.ring)];
        for v in vals {
            let mut next = e.clone();
            next.push(Poly::zero(&self.ring));
            for k in 1..next.len() {
                next[k] = &next[k] + &(&e[k - 1] * v);
            }
            next.truncate(j as usize + 1);
            e = next;
        }
        e.get(j as usize).cloned().unwrap_or_else(|| Poly::zero(&self.ring))
    }

    fn image(&self, p: &Poly) -> Poly {
        let images: Vec<Poly> = (2..=self.n).map(|i| self.elementary(&self.roots, i)).collect();
        p.map_into(&self.ring, &images).unwrap()
    }

    fn total_sq_w(&self, j: u32) -> Poly {
        let shifted: Vec<Poly> = self.roots.iter().map(|t| t + &t.pow(2)).collect();
        self.elementary(&shifted, j)
    }
}

#[test]
fn wu_formula_matches_splitting_principle() {
    let n = 8;
    let model = BsoModel::new(n).unwrap();
    let roots = Roots::new(n);
    for j in 2..=n {
        let total = roots.total_sq_w(j);
        for i in 0..=j {
            let engine = model.sq(i, &model.w(j)).unwrap();
            let expected = total.graded_component(i + j);
            assert_eq!(roots.image(&engine), expected, "Sq^{i}(w{j})");
        }
    }
}

#[test]
fn transgression_sequence() {
    let m = BsoModel::new(10).unwrap();
    let s = m.sigma(3).unwrap();
    assert_eq!(s[0], m.parse("w3").unwrap());
    assert_eq!(s[1], m.parse("w5 + w2*w3").unwrap());
    // Sq^4(w5) contributes w4*w5, so it appears in sigma(x3).
    assert_eq!(
        s[2],
        m.parse("w9 + w2*w7 + w3*w6 + w4*w5 + w3^3 + w2^2*(w5 + w2*w3)").unwrap()
    );
}

#[test]
fn sq1_squares_to_zero_on_bases() {
    let m = BsoModel::new(12).unwrap();
    for d in 2..=20 {
        for mono in m.ring().basis(d) {
            let p = Poly::term(m.ring(), mono, BigInt::one());
            assert!(m.sq(1, &m.sq(1, &p).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn adem_relations_on_bases() {
    let m = BsoModel::new(10).unwrap();
    for d in 2..=10 {
        for mono in m.ring().basis(d) {
            let p = Poly::term(m.ring(), mono, BigInt::one());
            let c = |ops: &[u32]| m.sq_composite(ops, &p).unwrap();
            assert_eq!(c(&[2, 2]), c(&[3, 1]));
            assert_eq!(c(&[1, 2]), c(&[3]));
            assert_eq!(c(&[2, 3]), c(&[5]) + c(&[4, 1]));
        }
    }
}

#[test]
fn derived_sequence_at_sixteen() {
    let m = BsoModel::new(16).unwrap();
    let d = m.derived_w2(3).unwrap();
    let expected = [
        "w2",
        "w4",
        "w8 + w2*w6",
        "w16 + w2*w14 + w4*w12 + w6*w10 + w2*w6*w8 + w4*w6^2 + w2*w7^2 \
         + w3^2*(w10 + w2*w8 + w4*w6) + w2^2*(w12 + w2*w10 + w4*w8)",
    ];
    for (k, step) in d.steps.iter().enumerate() {
        assert_eq!(step.value, m.parse(expected[k]).unwrap());
        assert!(step.certified());
        if k > 0 {
            assert_eq!(step.source, StepSource::Tabulated);
            let prev = &d.steps[k - 1].value;
            let lhs = m.sq(1, &step.value).unwrap();
            let s1 = m.sq(1, prev).unwrap();
            let rhs = m.sq_composite(&[1 << k, 1], prev).unwrap() + prev * &s1;
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn gamma_closed_form_on_generators() {
    let m = BsoModel::new(16).unwrap();
    for r in 1..=4u32 {
        let mut closed = m.w(4 * r);
        for i in 1..r {
            closed = closed + &m.w(2 * i) * &m.w(4 * r - 2 * i);
        }
        let u = m.w(2 * r);
        let solved = m.gamma(&u).unwrap();
        assert!(m.sq(1, &(&solved + &closed)).unwrap().is_zero(), "r = {r}");
        assert_eq!(m.sq(1, &closed).unwrap(), m.gamma_rhs(&u).unwrap(), "r = {r}");
    }
}

#[test]
fn sum_law_examples() {
    let m = BsoModel::new(16).unwrap();
    let l = m.gamma_sum_law(&m.w(2), &m.w(2)).unwrap();
    assert_eq!(l.difference, m.parse("w2^2").unwrap());
    assert!(l.in_kernel);
    let w4 = m.w(4);
    let w22 = m.parse("w2^2").unwrap();
    assert!(m.gamma_sum_law(&w22, &w4).unwrap().in_kernel);
    let w6 = m.w(6);
    let w42 = m.parse("w2*w4").unwrap();
    assert!(m.gamma_sum_law(&w42, &w6).unwrap().in_kernel);
}

#[test]
fn transgressions_lie_in_ideal() {
    let m = BsoModel::new(10).unwrap();
    let s = m.sigma(3).unwrap();
    let d = m.derived_w2(2).unwrap();
    let x = m.sq(1, &d.steps[1].value).unwrap() + s[1].clone();
    assert_eq!(x, m.parse("w2*w3").unwrap());
    assert!(m.ideal_member(&x, &s[..1]).unwrap());
    let y = m.sq(1, &d.steps[2].value).unwrap() + s[2].clone();
    assert!(m.ideal_member(&y, &s[..2]).unwrap());
}

#[test]
fn real_reduction_of_derived_sequence() {
    let m = BsoModel::new(16).unwrap();
    let d = m.derived_w2(3).unwrap();
    let c = m.chern_ring_mod2();
    let expected = ["c2", "c4 + c1*c3", "c8 + c1*c7 + c2*c6 + c3*c5 + c1^2*(c2*c4 + c1*c5 + c6) + c2*c3^2 + c1*c3*c4"];
    for r in 1..=3 {
        assert_eq!(m.real_reduction(&d.steps[r].value).unwrap(), Poly::parse(&c, expected[r - 1]).unwrap());
    }
}

fn arb_poly(m: &BsoModel, max_deg: u32) -> impl Strategy<Value = Poly> {
    let ring = m.ring().clone();
    let nvars = ring.nvars();
    prop::collection::vec(prop::collection::vec(0u32..3, nvars), 0..6).prop_map(move |terms| {
        let mut p = Poly::zero(&ring);
        for e in terms {
            let mono = ring.monomial(e);
            if mono.degree() <= max_deg {
                p.add_term(mono, BigInt::one());
            }
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cartan_rule(a in arb_poly(&BsoModel::new(9).unwrap(), 10), b in arb_poly(&BsoModel::new(9).unwrap(), 10), i in 0u32..12) {
        let m = BsoModel::new(9).unwrap();
        let a = a.with_ring(m.ring()).unwrap();
        let b = b.with_ring(m.ring()).unwrap();
        let lhs = m.sq(i, &(&a * &b)).unwrap();
        let mut rhs = Poly::zero(m.ring());
        for j in 0..=i {
            rhs = rhs + &m.sq(j, &a).unwrap() * &m.sq(i - j, &b).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unstable_range(u in arb_poly(&BsoModel::new(9).unwrap(), 12)) {
        let m = BsoModel::new(9).unwrap();
        let u = u.with_ring(m.ring()).unwrap();
        for d in u.degrees() {
            let c = u.graded_component(d);
            prop_assert!(m.sq(d + 1, &c).unwrap().is_zero());
            prop_assert_eq!(m.sq(d, &c).unwrap(), &c * &c);
        }
    }

    #[test]
    fn f_free_is_multiplicative(a in prop::collection::vec(0u32..3, 8), b in prop::collection::vec(0u32..3, 8)) {
        let m = BsoModel::new(12).unwrap();
        // only even-index generators w2, w4, ..., w12
        let embed = |e: &[u32]| {
            let mut exps = vec![0u32; m.ring().nvars()];
            for (k, &x) in e.iter().take(6).enumerate() {
                exps[2 * k] = x;
            }
            Poly::term(m.ring(), m.ring().monomial(exps), BigInt::one())
        };
        let (pa, pb) = (embed(&a), embed(&b));
        let f = |p: &Poly| m.f_free(p).unwrap().free;
        prop_assert_eq!(f(&(&pa * &pb)), &f(&pa) * &f(&pb));
    }
}
