//! The hypergeometric series, its equivariant localizations, the scalar
//! series `f₀`, `f₁`, and the Picard–Fuchs check.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{CohomClass, WeightSpec};
use crate::exact::{int, PolyH, RatFuncH, Rational, Ring, TruncSeries};

/// A q-series with coefficients in ℚ(ħ)[P]/(P⁴): the I-series with the factor
/// `e^{P ln q/ħ}` stripped off.
pub type StrippedSeries = TruncSeries<CohomClass<RatFuncH>>;

/// Localizations of a stripped equivariant series at the five fixed points.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedSeries {
    pub components: [TruncSeries<RatFuncH>; 5],
}

impl LocalizedSeries {
    pub fn q_order(&self) -> usize {
        self.components.iter().map(|c| c.q_order()).min().unwrap_or(0)
    }

    /// q^d coefficient of `Z_α`.
    pub fn coeff(&self, alpha: usize, d: usize) -> RatFuncH {
        self.components[alpha].q_coeff(d)
    }

    pub fn truncate(&self, q_order: usize) -> Self {
        LocalizedSeries { components: std::array::from_fn(|a| self.components[a].truncate(q_order, 0)) }
    }

    /// The trivial solution `Z_α ≡ 1`.
    pub fn one(q_order: usize) -> Self {
        LocalizedSeries { components: std::array::from_fn(|_| TruncSeries::one(q_order, 0)) }
    }
}

fn h_linear(a: Rational, b: Rational) -> RatFuncH {
    RatFuncH::linear(a, b)
}

/// `5P + mħ`
fn five_p_plus(m: i64) -> CohomClass<RatFuncH> {
    CohomClass::linear(h_linear(int(0), int(m)), RatFuncH::constant(int(5)))
}

/// `P + mħ`
fn p_plus(m: i64) -> CohomClass<RatFuncH> {
    CohomClass::linear(h_linear(int(0), int(m)), RatFuncH::one())
}

/// `Z(q) = Σ_d q^d Π_{m=1}^{5d}(5P+mħ) / Π_{m=1}^{d}(P+mħ)⁵` in ℚ(ħ)[P]/(P⁴).
pub fn i_series(q_order: usize) -> StrippedSeries {
    let mut out = TruncSeries::one(q_order, 0);
    let mut term = CohomClass::<RatFuncH>::one();
    for d in 1..=q_order as i64 {
        for m in 5 * d - 4..=5 * d {
            term = term.mul(&five_p_plus(m));
        }
        let inv = p_plus(d).invert_unit().expect("P + dħ is a unit");
        for _ in 0..5 {
            term = term.mul(&inv);
        }
        out.set(d as usize, 0, term.clone());
    }
    out
}

/// q^d coefficient of `Z_α^{(hg)}`:
/// `Π_{m=1}^{5d}(5λ_α+mħ) / (d! ħ^d Π_{m=1}^{d} Π_{β≠α}(λ_α-λ_β+mħ))`.
pub fn equivariant_coefficient(w: &WeightSpec, alpha: usize, d: usize) -> RatFuncH {
    let la = w.lambda(alpha);
    let mut num = PolyH::constant(Rational::one());
    for m in 1..=5 * d as i64 {
        num = num.mul(&PolyH::linear(int(5) * la, int(m)));
    }
    let mut factorial = BigInt::from(1);
    for m in 1..=d {
        factorial *= m;
    }
    let mut den = PolyH::monomial(Rational::from_integer(factorial), d);
    for m in 1..=d as i64 {
        for b in (0..5).filter(|&b| b != alpha) {
            den = den.mul(&PolyH::linear(la - w.lambda(b), int(m)));
        }
    }
    RatFuncH::new(num, den)
}

/// The five localizations `Z_α^{(hg)}`, built directly from the closed form.
pub fn i_series_equivariant(q_order: usize, w: &WeightSpec) -> LocalizedSeries {
    let coeffs: Vec<Vec<RatFuncH>> = (0..5)
        .into_par_iter()
        .map(|a| (0..=q_order).into_par_iter().map(|d| equivariant_coefficient(w, a, d)).collect())
        .collect();
    let mut it = coeffs.into_iter();
    LocalizedSeries { components: std::array::from_fn(|_| TruncSeries::from_q_coeffs(it.next().unwrap())) }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// `(5d)!/(d!)⁵`
pub fn f0_closed_form(d: usize) -> Rational {
    let df = factorial(d);
    let den = &df * &df * &df * &df * &df;
    Rational::new(factorial(5 * d), den)
}

/// `f₀ = Σ (5d)!/(d!)⁵ q^d` and `f₁ = Σ_{d≥1} (5d)!/(d!)⁵ (Σ_{m=d+1}^{5d} 5/m) q^d`.
pub fn extract_f0_f1(q_order: usize) -> (TruncSeries<Rational>, TruncSeries<Rational>) {
    let f0: Vec<Rational> = (0..=q_order).map(f0_closed_form).collect();
    let f1 = (0..=q_order)
        .map(|d| {
            let h: Rational = (d + 1..=5 * d).map(|m| Rational::new(5.into(), m.into())).sum();
            &f0[d] * h
        })
        .collect();
    (TruncSeries::from_q_coeffs(f0), TruncSeries::from_q_coeffs(f1))
}

/// The holomorphic solution of the Picard–Fuchs equation with value 1 at
/// `q = 0`: `d⁴ a_d = 5(5d-1)(5d-2)(5d-3)(5d-4) a_{d-1}`.
pub fn ode_recurrence_solution(q_order: usize) -> TruncSeries<Rational> {
    let mut coeffs = vec![Rational::one()];
    for d in 1..=q_order as i64 {
        let prev = coeffs.last().unwrap();
        let factor =
            Rational::new((5 * (5 * d - 1) * (5 * d - 2) * (5 * d - 3) * (5 * d - 4)).into(), (d * d * d * d).into());
        coeffs.push(prev * factor);
    }
    TruncSeries::from_q_coeffs(coeffs)
}

/// ħ⁰ coefficient at ħ = ∞ of the P⁰ part, per q-power.
pub fn scalar_part(z: &StrippedSeries) -> TruncSeries<Rational> {
    z.map(|_, _, c| c.coeff(0).coeff_at_infinity(0))
}

/// ħ⁻¹ coefficient at ħ = ∞ of the P¹ part, per q-power.
pub fn p_linear_inverse_h_part(z: &StrippedSeries) -> TruncSeries<Rational> {
    z.map(|_, _, c| c.coeff(1).coeff_at_infinity(-1))
}

/// Multiplies the q^d coefficient by `op(d)`; this is how `ħD` acts on a
/// stripped series since `D = q d/dq` is diagonal on monomials.
pub fn apply_diagonal(z: &StrippedSeries, op: impl Fn(usize) -> CohomClass<RatFuncH>) -> StrippedSeries {
    z.map(|d, _, c| op(d).mul(c))
}

/// `aP + bħD + cħ` acting on a stripped series.
fn euler_factor(z: &StrippedSeries, a: i64, b: i64, c: i64) -> StrippedSeries {
    apply_diagonal(z, |d| {
        CohomClass::linear(RatFuncH::linear(int(0), int(b * d as i64 + c)), RatFuncH::constant(int(a)))
    })
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct OdeCheck {
    pub degree: usize,
    pub vanishes: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct OdeReport {
    pub checks: Vec<OdeCheck>,
    pub pass: bool,
}

/// Checks `(P+ħD)⁴Z = 5q Π_{m=1}^{4}(5P+5ħD+mħ) Z` coefficientwise through
/// `q^{q_order}`; this is the Picard–Fuchs equation conjugated by `e^{P ln q/ħ}`
/// and multiplied by ħ⁴.
pub fn verify_ode(z: &StrippedSeries, q_order: usize) -> OdeReport {
    let z = z.truncate(q_order, 0);
    let mut lhs = z.clone();
    for _ in 0..4 {
        lhs = euler_factor(&lhs, 1, 1, 0);
    }
    let mut rhs = z.clone();
    for m in 1..=4 {
        rhs = euler_factor(&rhs, 5, 5, m);
    }
    let rhs = rhs.shift_q(1).scale_rational(&int(5));
    let diff = lhs.sub(&rhs);
    let checks: Vec<OdeCheck> = (0..=z.q_order())
        .map(|d| OdeCheck { degree: d, vanishes: diff.get(d, 0).is_none_or(|c| c.is_zero()) })
        .collect();
    let pass = checks.iter().all(|c| c.vanishes);
    OdeReport { checks, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_and_one_coefficients() {
        let z = i_series(2);
        assert_eq!(z.q_coeff(0), CohomClass::one());
        // 5·Π_{m=1}^{4}(5P+mħ)·(P+ħ)⁻⁴
        let mut expect = CohomClass::<RatFuncH>::scalar(RatFuncH::constant(int(5)));
        for m in 1..=4 {
            expect = expect.mul(&five_p_plus(m));
        }
        let inv = p_plus(1).invert_unit().unwrap();
        for _ in 0..4 {
            expect = expect.mul(&inv);
        }
        assert_eq!(z.q_coeff(1), expect);
        assert_eq!(z.q_coeff(1).coeff(0).eval(&int(1)).unwrap(), int(120));
    }

    #[test]
    fn f0_and_f1_values() {
        let (f0, f1) = extract_f0_f1(3);
        assert_eq!(f0.q_coeffs(), [1, 120, 113400, 168168000].map(int));
        assert_eq!(f1.q_coeff(0), int(0));
        assert_eq!(f1.q_coeff(1), int(770));
        let a = ode_recurrence_solution(2);
        assert_eq!(a.q_coeffs(), [1, 120, 113400].map(int));
    }

    #[test]
    fn equivariant_degree_one_example() {
        let w = WeightSpec::from_ints([1, 2, 3, -1, -5]).unwrap();
        let z = i_series_equivariant(2, &w);
        for a in 0..5 {
            assert_eq!(z.coeff(a, 0), RatFuncH::one());
        }
        let mut den = PolyH::monomial(int(1), 1);
        for c in [-1, -2, 2, 6] {
            den = den.mul(&PolyH::linear(int(c), int(1)));
        }
        let mut num = PolyH::constant(int(1));
        for m in 1..=5 {
            num = num.mul(&PolyH::linear(int(5), int(m)));
        }
        assert_eq!(z.coeff(0, 1), RatFuncH::new(num, den));
        for a in 0..5 {
            for d in 0..=2 {
                assert_eq!(z.coeff(a, d).degree(), Some(0));
            }
        }
    }

    #[test]
    fn constant_one_fails_the_ode() {
        let report = verify_ode(&TruncSeries::one(3, 0), 3);
        assert!(!report.pass);
        assert!(report.checks[0].vanishes);
        assert!(!report.checks[1].vanishes);
    }

    #[test]
    fn i_series_solves_the_ode() {
        let report = verify_ode(&i_series(5), 5);
        assert!(report.pass, "{report:?}");
        assert_eq!(report.checks.len(), 6);
    }
}
