//! The linear sigma-model series `L(q, z)`: once from the Duistermaat–Heckman
//! residue formula and once as the pairing of two I-series.

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{pair_nonequiv, CohomClass};
use crate::error::{Error, Result};
use crate::exact::{int, residue_at_order, FactoredRational, RatFuncH, Rational, Ring, TruncSeries};
use crate::hypergeom::{i_series, StrippedSeries};

/// The integrand of the degree-`d` term: `e^{pz}·Euler(LV_d)` over
/// `p⁵(p-ħ)⁵…(p-dħ)⁵`, with `Euler(LV_d) = 5p(5p-ħ)…(5p-5dħ)`.
#[derive(Clone, Debug)]
pub struct SigmaModelTerm {
    pub d: usize,
}

impl SigmaModelTerm {
    /// Coefficients in `p` of `Euler(LV_d)`; each is a polynomial in ħ.
    pub fn euler_class(&self) -> Vec<RatFuncH> {
        let mut poly = vec![RatFuncH::zero(), RatFuncH::constant(int(5))];
        for j in 1..=5 * self.d as i64 {
            // multiply by (5p - jħ)
            let c = RatFuncH::linear(int(0), int(-j));
            let mut next = vec![RatFuncH::zero(); poly.len() + 1];
            for (k, a) in poly.iter().enumerate() {
                next[k] = next[k].add(&a.mul(&c));
                next[k + 1] = next[k + 1].add(&a.scale(&int(5)));
            }
            poly = next;
        }
        poly
    }

    /// Poles `p = kħ`, `k = 0..d`, each of order 5.
    pub fn poles(&self) -> Vec<(RatFuncH, usize)> {
        (0..=self.d as i64).map(|k| (RatFuncH::linear(int(0), int(k)), 5)).collect()
    }

    /// z^b coefficient: `(1/b!) Σ_k Res_{p=kħ} p^b Euler(LV_d) / Π(p-kħ)⁵`.
    pub fn z_coefficient(&self, b: usize) -> Result<RatFuncH> {
        let mut numerator = vec![RatFuncH::zero(); b];
        numerator.extend(self.euler_class());
        let f = FactoredRational { numerator, poles: self.poles() };
        let residues: Vec<RatFuncH> =
            f.poles.par_iter().map(|(center, order)| residue_at_order(&f, center, *order)).collect::<Result<_>>()?;
        let total = residues.iter().fold(RatFuncH::zero(), |acc, r| acc.add(r));
        let b_fact: Rational = (1..=b as i64).map(int).product();
        let value = total.scale(&b_fact.recip());
        if !value.is_polynomial() {
            return Err(Error::Consistency(format!(
                "L coefficient at q^{} z^{b} is not polynomial in ħ: {value}",
                self.d
            )));
        }
        Ok(value)
    }
}

/// `L(q, z)` by residues, through `q^{q_order} z^{z_order}`.
pub fn l_series_dh(q_order: usize, z_order: usize) -> Result<TruncSeries<RatFuncH>> {
    let cells: Vec<(usize, usize)> = (0..=q_order).flat_map(|d| (0..=z_order).map(move |b| (d, b))).collect();
    let values: Vec<RatFuncH> =
        cells.par_iter().map(|&(d, b)| SigmaModelTerm { d }.z_coefficient(b)).collect::<Result<_>>()?;
    let mut out = TruncSeries::zero(q_order, z_order);
    for ((d, b), v) in cells.into_iter().zip(values) {
        out.set(d, b, v);
    }
    Ok(out)
}

/// `Z(q·e^{cz})` for a q-series `Z`: the `q^d` coefficient picks up `e^{dcz}`.
fn substitute_q_exp(z: &StrippedSeries, c: &RatFuncH, z_order: usize) -> StrippedSeries {
    let mut out = TruncSeries::zero(z.q_order(), z_order);
    for (d, _, coeff) in z.iter() {
        let rate = c.scale(&int(d as i64));
        let mut term = RatFuncH::one();
        for b in 0..=z_order {
            out.set(d, b, coeff.mul(&CohomClass::scalar(term.clone())));
            term = term.mul(&rate).scale(&Rational::new(1.into(), (b as i64 + 1).into()));
        }
    }
    out
}

/// `⟨e^{Pz} Z(q e^{ħz}, ħ), Z(q, -ħ)⟩` for a given stripped series `Z`.
pub fn l_series_pairing_of(z: &StrippedSeries, q_order: usize, z_order: usize) -> Result<TruncSeries<RatFuncH>> {
    let z = z.truncate(q_order, 0);
    let mut pz = TruncSeries::<CohomClass<RatFuncH>>::zero(q_order, z_order);
    pz.set(0, 1, CohomClass::p());
    let e_pz = pz.exp()?;
    let shifted = substitute_q_exp(&z, &RatFuncH::linear(int(0), int(1)), z_order);
    let reflected = z.map(|_, _, c| c.map(|x| x.reflect()));
    let mut reflected_z = TruncSeries::zero(q_order, z_order);
    for (d, _, c) in reflected.iter() {
        reflected_z.set(d, 0, c.clone());
    }
    let product = e_pz.mul(&shifted).mul(&reflected_z);
    Ok(product.map(|_, _, c| pair_nonequiv(c, &CohomClass::one())))
}

pub fn l_series_pairing(q_order: usize, z_order: usize) -> Result<TruncSeries<RatFuncH>> {
    l_series_pairing_of(&i_series(q_order), q_order, z_order)
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SigmaCoefficient {
    pub q: usize,
    pub z: usize,
    pub residue_side: String,
    pub pairing_side: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SigmaReport {
    pub coefficients: Vec<SigmaCoefficient>,
    pub pass: bool,
}

impl SigmaReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &SigmaCoefficient> {
        self.coefficients.iter().filter(|c| !c.agree)
    }
}

/// Coefficientwise comparison of the residue route against the pairing of
/// the supplied I-series.
pub fn verify_theorem_a_with(z: &StrippedSeries, q_order: usize, z_order: usize) -> Result<SigmaReport> {
    let dh = l_series_dh(q_order, z_order)?;
    let pairing = l_series_pairing_of(z, q_order, z_order)?;
    let mut coefficients = Vec::new();
    for a in 0..=q_order {
        for b in 0..=z_order {
            let lhs = dh.coeff(a, b);
            let rhs = pairing.coeff(a, b);
            coefficients.push(SigmaCoefficient {
                q: a,
                z: b,
                residue_side: lhs.to_string(),
                pairing_side: rhs.to_string(),
                agree: lhs == rhs,
            });
        }
    }
    let pass = coefficients.iter().all(|c| c.agree);
    Ok(SigmaReport { coefficients, pass })
}

pub fn verify_theorem_a(q_order: usize, z_order: usize) -> Result<SigmaReport> {
    verify_theorem_a_with(&i_series(q_order), q_order, z_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn degree_zero_slice() {
        let l = l_series_dh(0, 5).unwrap();
        for b in 0..3 {
            assert!(l.coeff(0, b).is_zero());
        }
        assert_eq!(l.coeff(0, 3), RatFuncH::constant(rat(5, 6)));
        let p = l_series_pairing(0, 5).unwrap();
        assert_eq!(p.coeff(0, 3), RatFuncH::constant(rat(5, 6)));
        assert!(p.coeff(0, 2).is_zero());
        assert_eq!(p, l);
    }

    #[test]
    fn euler_class_degree_one() {
        // 5p(5p-ħ)...(5p-5ħ) has leading coefficient 5⁶ and no constant term.
        let e = SigmaModelTerm { d: 1 }.euler_class();
        assert_eq!(e.len(), 7);
        assert!(e[0].is_zero());
        assert_eq!(e[6], RatFuncH::constant(int(15625)));
    }

    #[test]
    fn small_orders_agree() {
        assert!(verify_theorem_a(0, 5).unwrap().pass);
        assert!(verify_theorem_a(2, 3).unwrap().pass);
    }
}
