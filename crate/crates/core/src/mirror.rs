//! Mirror transformation of the I-series and extraction of the Yukawa
//! coupling.
//!
//! The flat coordinate `Q` is defined by `ln Q = ln q + g(q)` with
//! `g = f₁/f₀`. All series here are stripped: the factor `e^{P ln Q/ħ}` is
//! never materialized, so moving it from `q` to `Q` shows up as the finite
//! factor `e^{-P g(q)/ħ}` on the stripped series.

use crate::cohomology::{pair_nonequiv, CohomClass};
use crate::error::{Error, Result};
use crate::exact::{int, RatFuncH, Rational, Ring, TruncSeries};
use crate::hypergeom::{extract_f0_f1, StrippedSeries};

#[derive(Clone, Debug, PartialEq)]
pub struct MirrorMap {
    /// `g = f₁/f₀`, with `g(0) = 0`.
    pub g: TruncSeries<Rational>,
    pub f0: TruncSeries<Rational>,
}

impl MirrorMap {
    /// The trivial transformation `f₀ = 1`, `g = 0`.
    pub fn identity(q_order: usize) -> Self {
        MirrorMap { g: TruncSeries::zero(q_order, 0), f0: TruncSeries::one(q_order, 0) }
    }

    pub fn q_order(&self) -> usize {
        self.g.q_order().min(self.f0.q_order())
    }

    /// The shift `ĝ` with `q = Q·e^{ĝ(Q)}`, i.e. `ĝ(Q) + g(Q e^{ĝ(Q)}) = 0`.
    ///
    /// Solved order by order: the `Q^n` coefficient of `g(Q e^{ĝ})` only sees
    /// `ĝ_1..ĝ_{n-1}`.
    pub fn inverse_shift(&self) -> TruncSeries<Rational> {
        let n = self.q_order();
        let g = self.g.truncate(n, 0);
        let mut inv = TruncSeries::<Rational>::zero(n, 0);
        for k in 1..=n {
            let composed = g.compose_qshift(&inv).expect("shift has zero constant term");
            inv.set(k, 0, composed.q_coeff(k).neg());
        }
        inv
    }
}

/// `g = f₁ · f₀⁻¹` from the closed forms of `f₀` and `f₁`.
pub fn build_mirror_map(q_order: usize) -> MirrorMap {
    let (f0, f1) = extract_f0_f1(q_order);
    let f0_inv = f0.invert().expect("f0 has constant term 1");
    MirrorMap { g: f1.mul(&f0_inv), f0 }
}

/// The mirror-transformed stripped series, as a series in `Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct JSeries {
    pub z: StrippedSeries,
}

impl JSeries {
    pub fn q_order(&self) -> usize {
        self.z.q_order()
    }
}

/// Checks `Z_J = 1 + o(ħ⁻¹)` in the form: constant term 1, no ħ⁰ or positive
/// part in any `q^{d>0}` coefficient, and no `P/ħ` term.
pub fn check_j_invariants(z: &StrippedSeries) -> Result<()> {
    if z.q_coeff(0) != CohomClass::one() {
        return Err(Error::Normalization(format!("constant term {:?} is not 1", z.q_coeff(0))));
    }
    for d in 1..=z.q_order() {
        let c = z.q_coeff(d);
        for k in 0..4 {
            let (poly, _) = c.coeff(k).split();
            if !poly.is_zero() {
                return Err(Error::Normalization(format!(
                    "q^{d} coefficient has a nonnegative ħ-power part {poly} at P^{k}"
                )));
            }
        }
        let lin = c.coeff(1).coeff_at_infinity(-1);
        if !lin.is_zero() {
            return Err(Error::Normalization(format!("q^{d} coefficient has P/ħ term {lin}")));
        }
    }
    Ok(())
}

/// Divides by `f₀`, applies `e^{-Pg/ħ}` and re-expands in `Q`.
pub fn apply_mirror(z: &StrippedSeries, m: &MirrorMap) -> Result<JSeries> {
    let n = z.q_order().min(m.q_order());
    let z = z.truncate(n, 0);
    let f0_inv = m.f0.truncate(n, 0).invert()?;
    let divided = z.mul(&f0_inv.map(|_, _, c| CohomClass::scalar(RatFuncH::constant(c.clone()))));
    let minus_p_over_h = CohomClass::linear(RatFuncH::zero(), RatFuncH::laurent_monomial(int(-1), -1));
    let exponent = m.g.truncate(n, 0).map(|_, _, c| minus_p_over_h.scale(c));
    let prefactor = exponent.exp()?;
    let w = divided.mul(&prefactor);
    let transformed = w.compose_qshift(&m.inverse_shift())?;
    check_j_invariants(&transformed)?;
    Ok(JSeries { z: transformed })
}

/// `K(Q) = ⟨(P + ħD)² Z_J, P⟩` with `D = Q d/dQ`; the pairing must be free of
/// negative powers of ħ and the ħ⁰ part is returned.
pub fn yukawa(j: &JSeries, q_order: usize) -> Result<TruncSeries<Rational>> {
    let n = q_order.min(j.q_order());
    let mut k = TruncSeries::<Rational>::zero(n, 0);
    for d in 0..=n {
        let op = CohomClass::linear(RatFuncH::linear(int(0), int(d as i64)), RatFuncH::one());
        let second = op.mul(&op).mul(&j.z.q_coeff(d));
        let paired = pair_nonequiv(&second, &CohomClass::p());
        if !paired.negative_part().is_zero() {
            return Err(Error::Consistency(format!("Yukawa pairing at Q^{d} has negative ħ-powers: {paired}")));
        }
        k.set(d, 0, paired.coeff_at_infinity(0));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::i_series;

    #[test]
    fn mirror_map_leading_terms() {
        let m = build_mirror_map(4);
        assert_eq!(m.g.q_coeff(0), int(0));
        assert_eq!(m.g.q_coeff(1), int(770));
        let (_, f1) = extract_f0_f1(4);
        assert_eq!(m.f0.mul(&m.g), f1);
    }

    #[test]
    fn inverse_shift_round_trip() {
        let m = build_mirror_map(6);
        let ghat = m.inverse_shift();
        // q ↦ q e^{g(q)} after Q ↦ Q e^{ĝ(Q)} is the identity.
        let q = TruncSeries::from_q_coeffs(vec![int(0), int(1), int(0), int(0), int(0), int(0), int(0)]);
        let forward = q.compose_qshift(&m.g).unwrap();
        let back = forward.compose_qshift(&ghat).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn transformed_series_is_normalized() {
        let j = apply_mirror(&i_series(4), &build_mirror_map(4)).unwrap();
        assert_eq!(j.z.q_coeff(0), CohomClass::one());
        assert!(check_j_invariants(&j.z).is_ok());
        assert!(check_j_invariants(&i_series(2)).is_err());
    }

    #[test]
    fn yukawa_leading_coefficients() {
        let j = apply_mirror(&i_series(3), &build_mirror_map(3)).unwrap();
        let k = yukawa(&j, 3).unwrap();
        assert_eq!(k.q_coeff(0), int(5));
        assert_eq!(k.q_coeff(1), int(2875));
        assert_eq!(k.q_coeff(2), int(4876875));
    }
}
