//! Randomized property suites shared by the property tests and the
//! acceptance runner. Every suite draws from a fixed seed.

#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed, TestCaseError, TestRunner};

use quintic::cohomology::{pair_equiv, pair_nonequiv, to_fixed_point, CohomClass, WeightSpec};
use quintic::exact::{
    int, rat, residue_at_order, solve_exact, FactoredRational, LinearSystem, PolyH, RatFuncH, Rational, Ring,
    TruncSeries,
};
use quintic::instanton::{invert_multicover, multicover_sum};
use quintic::mirror::MirrorMap;
use quintic::schubert::{schubert_mul, SchubertClass};

pub const SEED: u64 = 0x5eed_2875;

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new(config)
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = PolyH> {
    vec(small_rat(), 0..=max_len).prop_map(PolyH::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = PolyH> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFuncH> {
    (poly(3), nonzero_poly(3)).prop_map(|(n, d)| RatFuncH::new(n, d))
}

fn cohom() -> impl Strategy<Value = CohomClass<RatFuncH>> {
    let entry = || (small_rat(), -2i64..=2).prop_map(|(c, k)| RatFuncH::laurent_monomial(c, k));
    [entry(), entry(), entry(), entry()].prop_map(CohomClass::new)
}

fn series(q_order: usize, z_order: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    vec(small_rat(), (q_order + 1) * (z_order + 1)).prop_map(move |cs| {
        let mut s = TruncSeries::zero(q_order, z_order);
        for (i, c) in cs.into_iter().enumerate() {
            s.set(i / (z_order + 1), i % (z_order + 1), c);
        }
        s
    })
}

fn ring_laws<R: Ring>(a: &R, b: &R, c: &R) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert_eq!(a.add(&R::zero()), a.clone());
    prop_assert_eq!(a.mul(&R::one()), a.clone());
    prop_assert!(a.sub(a).is_zero());
    Ok(())
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    run(cases, (poly(4), poly(4), poly(4)), |(a, b, c)| ring_laws(&a, &b, &c))?;
    run(cases, (ratfunc(), ratfunc(), ratfunc()), |(a, b, c)| ring_laws(&a, &b, &c))?;
    run(cases, (cohom(), cohom(), cohom()), |(a, b, c)| ring_laws(&a, &b, &c))?;
    run(cases, (series(3, 2), series(3, 2), series(3, 2)), |(a, b, c)| {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        Ok(())
    })
}

pub fn inversion_round_trips(cases: u32) -> Result<(), String> {
    run(cases, series(4, 2), |s| {
        prop_assume!(!s.coeff(0, 0).is_zero());
        let inv = s.invert().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(s.mul(&inv).is_constant_one());
        Ok(())
    })?;
    run(cases, ratfunc(), |f| {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(f.mul(&f.inverse().unwrap()), RatFuncH::one());
        Ok(())
    })?;
    run(cases, cohom(), |x| {
        prop_assume!(!x.coeff(0).is_zero());
        let inv = x.invert_unit().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(x.mul(&inv), CohomClass::one());
        Ok(())
    })
}

/// `f(q e^{g})` re-expanded through the inverse shift gives back `f`.
pub fn composition_round_trips(cases: u32) -> Result<(), String> {
    run(cases, (series(5, 1), vec(small_rat(), 5)), |(f, gs)| {
        let mut g = TruncSeries::<Rational>::zero(5, 0);
        for (i, c) in gs.into_iter().enumerate() {
            g.set(i + 1, 0, c);
        }
        let m = MirrorMap { g: g.clone(), f0: TruncSeries::one(5, 0) };
        let shifted = f.compose_qshift(&g).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let back = shifted.compose_qshift(&m.inverse_shift()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(back, f);
        Ok(())
    })
}

/// A rational function vanishing to order two at infinity has residues
/// summing to zero.
pub fn residue_sum_zero(cases: u32) -> Result<(), String> {
    let poles = proptest::sample::subsequence((-6i64..=6).collect::<Vec<_>>(), 1..=4);
    run(cases, (poles, vec(1usize..=3, 4), vec(small_rat(), 12)), |(roots, mults, coeffs)| {
        let poles: Vec<(Rational, usize)> = roots.iter().zip(&mults).map(|(r, m)| (int(*r), *m)).collect();
        let total: usize = poles.iter().map(|(_, m)| m).sum();
        prop_assume!(total >= 2);
        let numerator: Vec<Rational> = coeffs.into_iter().take(total - 1).collect();
        let f = FactoredRational { numerator, poles: poles.clone() };
        let mut sum = Rational::zero();
        for (root, m) in &poles {
            sum += residue_at_order(&f, root, *m).map_err(|e| TestCaseError::fail(e.to_string()))?;
        }
        prop_assert!(sum.is_zero(), "residues sum to {}", sum);
        Ok(())
    })
}

pub fn mobius_round_trip(cases: u32) -> Result<(), String> {
    run(cases, vec(-100_000i64..=100_000, 1..=12), |ns| {
        let as_rat: Vec<Rational> = ns.iter().map(|&n| int(n)).collect();
        let gw = multicover_sum(&as_rat);
        let back = invert_multicover(&gw).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let expected: Vec<BigInt> = ns.iter().map(|&n| BigInt::from(n)).collect();
        prop_assert_eq!(back, expected);
        Ok(())
    })
}

pub fn linear_solve_recovery(cases: u32) -> Result<(), String> {
    let shape = (2usize..=6, 2usize..=6);
    let system = shape.prop_flat_map(|(r, c)| (vec(vec(-4i64..=4, c), r), vec(-5i64..=5, c)));
    run(cases, system, |(rows, x)| {
        let cols = x.len();
        let mut sys = LinearSystem::new(cols);
        for row in &rows {
            let rhs: i64 = row.iter().zip(&x).map(|(a, b)| a * b).sum();
            sys.push_row(row.iter().map(|&a| int(a)).collect(), int(rhs));
        }
        let sol = solve_exact(&sys).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(sol.rank + sol.nullspace.len(), cols);
        for (row, rhs) in sys.matrix.iter().zip(&sys.rhs) {
            let dot = |v: &[Rational]| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
            prop_assert_eq!(&dot(&sol.particular), rhs);
            for n in &sol.nullspace {
                prop_assert!(dot(n).is_zero());
            }
        }
        Ok(())
    })
}

fn h(k: usize, lambdas: &[Rational; 5]) -> Rational {
    // Complete homogeneous symmetric polynomial of degree k.
    let mut table = vec![Rational::zero(); k + 1];
    table[0] = int(1);
    for l in lambdas {
        for j in 1..=k {
            let prev = table[j - 1].clone();
            table[j] += l * prev;
        }
    }
    table[k].clone()
}

/// Localization reproduces the quintic pairing plus the corrections
/// `5 h_{k-3}(λ)` from the degree-4..6 terms killed by `P⁴ = 0`.
pub fn localization_pairing(cases: u32) -> Result<(), String> {
    let weights = prop_oneof![
        Just(WeightSpec::default()),
        Just(WeightSpec::from_ints([1, 2, 3, -1, -5]).unwrap()),
        Just(WeightSpec::from_ints([2, -3, 7, 5, -11]).unwrap()),
    ];
    run(cases, (vec(small_rat(), 4), vec(small_rat(), 4), weights), |(a, b, w)| {
        let phi = CohomClass::new([a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()]);
        let psi = CohomClass::new([b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()]);
        let lhs = pair_equiv(&to_fixed_point(&phi, &w), &to_fixed_point(&psi, &w), &w);
        let mut rhs = pair_nonequiv(&phi, &psi);
        for k in 4..=6 {
            let coeff =
                (0..4).filter(|i| k >= *i && k - i < 4).fold(Rational::zero(), |acc, i| acc + &a[i] * &b[k - i]);
            rhs += coeff * int(5) * h(k - 3, w.lambdas());
        }
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

fn schubert_class() -> impl Strategy<Value = SchubertClass> {
    vec(-9i64..=9, 10).prop_map(|cs| {
        let mut x = SchubertClass::zero(5);
        let mut it = cs.into_iter();
        for a in 0..=3 {
            for b in 0..=a {
                x = x.add(&SchubertClass::sigma(5, a, b).scale(&BigInt::from(it.next().unwrap())));
            }
        }
        x
    })
}

/// Pairing against the dual basis `σ_{3-b,3-a}` recovers every coefficient,
/// and products are associative on random combinations.
pub fn schubert_duality(cases: u32) -> Result<(), String> {
    run(cases, (schubert_class(), schubert_class(), schubert_class()), |(x, y, z)| {
        for a in 0..=3 {
            for b in 0..=a {
                let dual = SchubertClass::sigma(5, 3 - b, 3 - a);
                prop_assert_eq!(schubert_mul(&x, &dual).integrate(), x.coeff(a, b));
            }
        }
        prop_assert_eq!(schubert_mul(&schubert_mul(&x, &y), &z), schubert_mul(&x, &schubert_mul(&y, &z)));
        Ok(())
    })
}

pub type Suite = (&'static str, fn(u32) -> Result<(), String>);

pub const SUITES: &[Suite] = &[
    ("ring axioms", ring_axioms),
    ("inversion round trips", inversion_round_trips),
    ("q-shift composition round trips", composition_round_trips),
    ("residues sum to zero", residue_sum_zero),
    ("Möbius round trip", mobius_round_trip),
    ("exact solve recovery", linear_solve_recovery),
    ("localization pairing", localization_pairing),
    ("Schubert dual-basis pairing", schubert_duality),
];
