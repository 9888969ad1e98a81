//! Acceptance suite. Prints one PASS/FAIL line per criterion with its
//! runtime, followed by the mismatches for failing ones. Exits non-zero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spincc_core::chern::UcModel;
use spincc_core::geometry::{class_ring, ek_q_form, signature_in_q, wall_classify, Classes, WallPair};
use spincc_core::properties::{random_homogeneous, run_all, DEFAULT_CASES};
use spincc_core::spin::{phi, pontryagin_symbols, spin8_check, TransitionTable};
use spincc_core::steenrod::BsoModel;
use spincc_core::{Poly, QPoly, Result};

type Failures = Vec<String>;

macro_rules! expect_eq {
    ($fails:expr, $label:expr, $got:expr, $want:expr) => {{
        let (got, want) = (&$got, &$want);
        if got != want {
            $fails.push(format!("{}: computed - expected = {}", $label, got - want));
        }
    }};
}

fn expect(fails: &mut Failures, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        fails.push(what());
    }
}

// Transgressions at n = 10.
const SIGMA: [&str; 3] = ["w3", "w5 + w2*w3", "w9 + w2*w7 + w3*w6 + w3^3 + w2^2*(w5 + w2*w3)"];

fn transgressions() -> Result<Failures> {
    let mut f = vec![];
    let m = BsoModel::new(10)?;
    let s = m.sigma(3)?;
    for (k, text) in SIGMA.iter().enumerate() {
        expect_eq!(f, format!("sigma(x{})", k + 1), s[k], m.parse(text)?);
    }
    Ok(f)
}

const W2: [&str; 3] = [
    "w4",
    "w8 + w2*w6",
    "w16 + w2*w14 + w4*w12 + w6*w10 + w2*w6*w8 + w4*w6^2 + w2*w7^2 \
     + w3^2*(w10 + w2*w8 + w4*w6) + w2^2*(w12 + w2*w10 + w4*w8)",
];

fn derived_sequence() -> Result<Failures> {
    let mut f = vec![];
    let m = BsoModel::new(16)?;
    let d = m.derived_w2(3)?;
    for r in 1..=3usize {
        let value = &d.steps[r].value;
        expect_eq!(f, format!("w2^({r})"), *value, m.parse(W2[r - 1])?);
        // Sq^1 u' = Sq^{2^r} Sq^1 u + u Sq^1 u with u the previous term
        let prev = &d.steps[r - 1].value;
        let s1 = m.sq(1, prev)?;
        let rhs = m.sq_composite(&[1 << r, 1], prev)? + prev * &s1;
        expect_eq!(f, format!("defining equation of w2^({r})"), m.sq(1, value)?, rhs);
    }
    Ok(f)
}

fn gamma_closed_form() -> Result<Failures> {
    let mut f = vec![];
    let m = BsoModel::new(16)?;
    for r in 1..=4u32 {
        let mut closed = m.w(4 * r);
        for i in 1..r {
            closed = closed + &m.w(2 * i) * &m.w(4 * r - 2 * i);
        }
        let u = m.w(2 * r);
        let solved = m.gamma(&u)?;
        let gap = m.sq(1, &(&solved + &closed))?;
        expect(&mut f, gap.is_zero(), || format!("gamma(w{}): Sq^1(solver + closed form) = {gap}", 2 * r));
        expect_eq!(f, format!("Sq^1 of closed form for w{}", 2 * r), m.sq(1, &closed)?, m.gamma_rhs(&u)?);
    }
    Ok(f)
}

const Y_PART: &str = "(-y^2*c1^2 - y^4 + y*c1*c2 - y^2*c2 + 2y^3*c1)";

fn delta_texts() -> [String; 3] {
    [
        "-c2 + 2y*c1 - 2y^2".to_string(),
        "c4 - c1*c3 - 2y^2*c1^2 - 2y^4 + 2y*c1*c2 - 2y^2*c2 + 4y^3*c1".to_string(),
        format!(
            "c8 - c1*c7 + c2*c6 - c3*c5 + (c1^2 - 2c2)*(-c2*c4 + c1*c5 - c6) \
             - c2*c3^2 - c1*c3*c4 - 2*{Y_PART}^2 - 2*(c4 - c1*c3)*{Y_PART}"
        ),
    ]
}

fn delta_sequence() -> Result<Failures> {
    let mut f = vec![];
    let m = UcModel::new(8)?;
    let s = m.delta_sequence(3)?;
    for (r, text) in delta_texts().iter().enumerate() {
        expect_eq!(f, format!("delta^{}(u0)", r + 1), *s.value(r + 1), m.parse(text)?);
    }
    for step in &s.steps {
        if let Some(res) = step.residue.as_ref().filter(|r| !r.is_zero()) {
            f.push(format!("certificate of step {} leaves {res}", step.index));
        }
    }
    Ok(f)
}

const ALPHA: [&str; 3] = [
    "-c2 + 2c1^2",
    "c4 - 2c1*c3 + 2c1^2*c2 - 2c1^4",
    "-c8 + 2c1*c7 - c2*c6 + c3*c5 - (2c1^2 - c2)*(c3^2 - 2c2*c4 + 4c1*c5 - 2c6) \
     - 2c4*(c1*c3 - c1^2*c2 + c1^4) + 2*(c1*c3 - c1^2*c2 + c1^4)^2",
];

fn weyl_generators() -> Result<Failures> {
    let mut f = vec![];
    let m = UcModel::new(8)?;
    let w = m.weyl_generators(3)?;
    for r in 1..=3usize {
        let a = &w.alpha[r - 1];
        expect_eq!(f, format!("alpha_{r}"), *a, Poly::parse(m.chern_ring(), ALPHA[r - 1])?);
        let e = m.e_hom(a)?;
        let want = BigInt::from(if r % 2 == 1 { 2 } else { -2 });
        expect(&mut f, e == want, || format!("e(alpha_{r}) = {e}, expected {want}"));
    }
    for r in 1..=2usize {
        let rel = &(&w.alpha[r].scale(&BigInt::from(2)) + &w.alpha[r - 1].pow(2)) - &w.f[r - 1];
        expect(&mut f, rel.is_zero(), || format!("2 alpha_{} + alpha_{r}^2 - f_{r} = {rel}", r + 1));
    }
    Ok(f)
}

const THETA: [(u32, &str); 3] = [
    (4, "y^2 - y*c1"),
    (6, "y^4 - 2y^3*c1 + y^2*(c2 + c1^2) - y*(c1*c2 - c3)"),
    (
        8,
        "y^8 - 4y^7*c1 + y^6*(2c2 + 6c1^2) - y^5*(6c3 + 4c1^3 + 6c1*c2) \
         + y^4*(c1^4 + c2^2 + 6c1^2*c2 + c1*c3 - 4c4) - y^3*(2c1*c2^2 - 8c1*c4 + 2c1^2*c3 + 2c1^3*c2) \
         + y^2*(c1^3*c3 - 22c2*c4 + c1*c2*c3 - c3^2 - 5c1^2*c4 + c1^2*c2^2) - y*(c1^2*c2*c3 - c1^3*c4 - c1*c3^2)",
    ),
];

fn theta_pullbacks() -> Result<Failures> {
    let mut f = vec![];
    for (n, text) in THETA {
        let m = UcModel::new(n / 2)?;
        expect_eq!(f, format!("theta_{n}"), m.theta_pullback(n)?, m.parse(text)?);
    }
    Ok(f)
}

fn cross_oracle() -> Result<Failures> {
    let mut f = vec![];
    let bso = BsoModel::new(16)?;
    let d = bso.derived_w2(3)?;
    let uc = UcModel::new(8)?;
    let s = uc.delta_sequence(3)?;
    let target = bso.chern_ring_mod2();
    // y -> 0, c_i -> c_i; every y term of delta^r has an even coefficient
    let mut images = vec![Poly::zero(&target)];
    images.extend((0..8).map(|i| Poly::var_at(&target, i)));
    for r in 1..=3usize {
        let real = bso.real_reduction(&d.steps[r].value)?;
        let lifted = s.value(r).reduce_mod(2)?;
        expect(&mut f, lifted.terms().all(|(mono, _)| mono.exps()[0] == 0), || {
            format!("delta^{r}(u0) mod 2 still involves y")
        });
        expect_eq!(f, format!("r = {r}"), real, lifted.map_into(&target, &images)?);
    }
    Ok(f)
}

const ROWS_94: [&str; 4] = ["2q1", "2q2 + q1^2", "q3", "2q4 + q2^2 - 2q1*q3"];

fn transition_table() -> Result<Failures> {
    let mut f = vec![];
    let ring = pontryagin_symbols(4)?;
    for (r, text) in [(0, "P1"), (1, "P2"), (2, "P4 + P1*P3")] {
        expect_eq!(f, format!("phi({r})"), phi(r, 4)?, Poly::parse(&ring, text)?);
    }
    let table = TransitionTable::new(16)?;
    for k in 1..=4u32 {
        let row = table.p_row(k).expect("row within the degree bound");
        expect_eq!(f, format!("p{k}"), *row, Poly::parse(table.q_ring(), ROWS_94[k as usize - 1])?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(94);
    for case in 0..50 {
        let d = 4 * rng.gen_range(1..=4);
        let p = random_homogeneous(&mut rng, table.p_ring(), d, 6);
        let back = table.q_to_p(&table.p_to_q(&p)?)?;
        expect_eq!(f, format!("round trip case {case} ({p})"), back, p.to_rational());
    }
    Ok(f)
}

fn spin8_identity() -> Result<Failures> {
    let mut f = vec![];
    let report = spin8_check(None, None)?;
    let r = &report.signed_relation;
    expect(&mut f, r.is_zero(), || format!("4(-1)^3 theta_8 + q2^2 - a8 = {r}"));
    Ok(f)
}

const SIGNATURES: [&str; 4] = [
    "-8alpha1",
    "q1^2 - 224alpha2",
    "2/3 (q1*q2 - q1^3) - 3968alpha3",
    "2/15 q1*q3 + 1/9 q2^2 - 8/9 q1^2*q2 + 17/45 q1^4 - 65024alpha4",
];

const EK_Q: [&str; 3] = [
    "1/224 (q1^2 - sigma)",
    "1/11904 (2(q1*q2 - q1^3) - 3sigma)",
    "1/65024 (6q1*q3 + 5q2^2 - 40q1^2*q2 + 17q1^4 - 45sigma)",
];

fn geometry_formulas() -> Result<Failures> {
    let mut f = vec![];
    for m in 1..=4u32 {
        let ring = class_ring(Classes::Q, m, Some(&format!("alpha{m}")))?;
        expect_eq!(f, format!("signature, m = {m}"), signature_in_q(m)?, QPoly::parse(&ring, SIGNATURES[m as usize - 1])?);
    }
    for k in 2..=4u32 {
        let ring = class_ring(Classes::Q, k, Some("sigma"))?;
        expect_eq!(f, format!("mu_{k}"), ek_q_form(k)?, QPoly::parse(&ring, EK_Q[k as usize - 2])?);
    }
    Ok(f)
}

fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..rng.gen_range(1..=8) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if rng.gen_bool(0.2) {
            p.iter_mut().for_each(|row| row[i] = -row[i]);
        } else if i != j {
            let c = rng.gen_range(-2..=2);
            p.iter_mut().for_each(|row| row[j] += c * row[i]);
        }
    }
    p
}

fn change_basis(pair: &WallPair, p: &[Vec<i64>]) -> WallPair {
    let n = pair.rank();
    let a = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).map(|(k, l)| p[k][i] * pair.a[k][l] * p[l][j]).sum())
                .collect()
        })
        .collect();
    let b = (0..n).map(|j| (0..n).map(|k| pair.b[k] * p[k][j]).sum()).collect();
    WallPair { a, b }
}

fn wall_classifier() -> Result<Failures> {
    let mut f = vec![];
    let r = wall_classify(&WallPair { a: vec![vec![1]], b: vec![1] })?;
    let q2 = r.total_spin_class.as_ref().map(|c| c.q2.clone());
    expect(&mut f, r.smoothable == Some(true) && r.psc == Some(true) && q2 == Some(BigInt::from(3)), || {
        format!("(I1,(1)): smoothable {:?}, psc {:?}, q2 {q2:?}", r.smoothable, r.psc)
    });
    let r = wall_classify(&WallPair { a: vec![vec![1]], b: vec![3] })?;
    let want = BigRational::new(1.into(), 28.into());
    expect(&mut f, r.smoothable == Some(false) && r.mu.as_ref() == Some(&want), || {
        format!("(I1,(3)): smoothable {:?}, mu {:?}", r.smoothable, r.mu)
    });
    for k1 in -5i64..=5 {
        for k2 in -5i64..=5 {
            let r = wall_classify(&WallPair { a: vec![vec![0, 1], vec![1, 0]], b: vec![2 * k1, 2 * k2] })?;
            expect(&mut f, r.psc == Some(k1 * k2 == 0), || format!("hyperbolic ({k1}, {k2}): psc {:?}", r.psc));
        }
    }
    let bases = [
        WallPair { a: vec![vec![1, 0], vec![0, 1]], b: vec![1, 3] },
        WallPair { a: vec![vec![0, 1], vec![1, 0]], b: vec![2, 0] },
        WallPair { a: vec![vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, 1]], b: vec![1, 1, 5] },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(1011);
    for (i, base) in bases.iter().enumerate() {
        let r0 = wall_classify(base)?;
        for case in 0..100 {
            let moved = change_basis(base, &unimodular(&mut rng, base.rank()));
            let r = wall_classify(&moved)?;
            let same = (r.signature, &r.smoothable, &r.psc, &r.mu, &r.q1_squared)
                == (r0.signature, &r0.smoothable, &r0.psc, &r0.mu, &r0.q1_squared)
                && r.total_spin_class.as_ref().map(|c| &c.q2) == r0.total_spin_class.as_ref().map(|c| &c.q2);
            expect(&mut f, same, || format!("pair {i}, change {case}: {moved:?} classified differently"));
        }
    }
    Ok(f)
}

fn property_suites() -> Result<Failures> {
    let outcomes = run_all(2024, DEFAULT_CASES)?;
    Ok(outcomes
        .into_iter()
        .filter(|o| !o.passed())
        .map(|o| {
            format!("{}: {}/{} failures, first: {}", o.name, o.failures, o.cases, o.first_failure.unwrap_or_default())
        })
        .collect())
}

type Criterion = (&'static str, u64, fn() -> Result<Failures>);

const CRITERIA: [Criterion; 12] = [
    ("transgression golden set", 1, transgressions),
    ("derived sequence of w2", 10, derived_sequence),
    ("gamma closed form", 30, gamma_closed_form),
    ("delta sequence golden set", 10, delta_sequence),
    ("Weyl generators", 10, weyl_generators),
    ("theta pullbacks", 5, theta_pullbacks),
    ("real reduction vs delta mod 2", 10, cross_oracle),
    ("transition table", 5, transition_table),
    ("Spin^c(8) identity", 5, spin8_identity),
    ("geometry formulas", 2, geometry_formulas),
    ("Wall classifier", 5, wall_classifier),
    ("property suites", 60, property_suites),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, limit, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let mut fails = match run() {
            Ok(f) => f,
            Err(e) => vec![format!("error: {e}")],
        };
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(*limit) {
            fails.push(format!("runtime {elapsed:.2?} exceeds {limit} s"));
        }
        let status = if fails.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} {:>2}. {name} ({elapsed:.2?}, limit {limit} s)", i + 1);
        for line in &fails {
            println!("       {line}");
        }
        failed += usize::from(!fails.is_empty());
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
