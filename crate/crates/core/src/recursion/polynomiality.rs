//! The two-point series
//!
//! ```text
//! Φ(q, z) = Σ_α 5λ_α/e_α · e^{λ_α z} Z_α(q e^{ħz}, ħ) Z_α(q, -ħ)
//! ```
//!
//! has coefficients that are polynomial in ħ when `Z` comes from the
//! hypergeometric series (or any series related to it by a change of
//! variables). The q^a z^b coefficient is
//! `Σ_α 5λ_α/e_α Σ_d Z_α,d(ħ) Z_α,a-d(-ħ) (λ_α + dħ)^b / b!`.

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::WeightSpec;
use crate::exact::{int, PolyH, RatFuncH, Rational, Ring, TruncSeries};
use crate::hypergeom::LocalizedSeries;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolynomialityCell {
    pub q: usize,
    pub z: usize,
    /// The part of the coefficient vanishing at ħ = ∞, printed.
    pub negative_part: String,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolynomialityReport {
    pub cells: Vec<PolynomialityCell>,
    pub pass: bool,
}

impl PolynomialityReport {
    pub fn failures(&self) -> impl Iterator<Item = &PolynomialityCell> {
        self.cells.iter().filter(|c| !c.vanishes)
    }
}

pub(crate) fn fixed_point_weight(w: &WeightSpec, alpha: usize) -> Rational {
    int(5) * w.lambda(alpha) / w.euler(alpha)
}

fn factorial(b: usize) -> Rational {
    (1..=b as i64).fold(int(1), |acc, k| acc * int(k))
}

/// `(λ + dħ)^b / b!`
pub(crate) fn shifted_power(lambda: &Rational, d: usize, b: usize) -> PolyH {
    PolyH::linear(lambda.clone(), int(d as i64)).pow(b).scale_by(&factorial(b).recip())
}

/// All z-coefficients `0..=z_order` of Φ at q^a, in one pass over the
/// products `Z_α,d(ħ) Z_α,a-d(-ħ)`.
pub(crate) fn phi_column(z: &LocalizedSeries, w: &WeightSpec, a: usize, z_order: usize) -> Vec<RatFuncH> {
    let per_alpha: Vec<Vec<RatFuncH>> = (0..5)
        .into_par_iter()
        .map(|alpha| {
            let weight = fixed_point_weight(w, alpha);
            let products: Vec<RatFuncH> =
                (0..=a).map(|d| z.coeff(alpha, d).mul(&z.coeff(alpha, a - d).reflect())).collect();
            (0..=z_order)
                .map(|b| {
                    let mut acc = RatFuncH::zero();
                    for (d, p) in products.iter().enumerate() {
                        if p.is_zero() {
                            continue;
                        }
                        let factor = RatFuncH::from_poly(shifted_power(w.lambda(alpha), d, b));
                        acc = acc.add(&p.mul(&factor));
                    }
                    acc.scale_by(&weight)
                })
                .collect()
        })
        .collect();
    (0..=z_order).map(|b| per_alpha.iter().fold(RatFuncH::zero(), |acc, col| acc.add(&col[b]))).collect()
}

/// Φ truncated at `q^q_order z^z_order`.
pub fn polynomiality_series(
    z: &LocalizedSeries,
    w: &WeightSpec,
    q_order: usize,
    z_order: usize,
) -> TruncSeries<RatFuncH> {
    let mut out = TruncSeries::zero(q_order, z_order);
    for a in 0..=q_order.min(z.q_order()) {
        for (b, c) in phi_column(z, w, a, z_order).into_iter().enumerate() {
            out.set(a, b, c);
        }
    }
    out
}

/// Checks that every coefficient of Φ through `q^q_order z^z_order` is a
/// polynomial in ħ. Needs only distinct weights.
pub fn verify_polynomiality(
    z: &LocalizedSeries,
    w: &WeightSpec,
    q_order: usize,
    z_order: usize,
) -> PolynomialityReport {
    let q_order = q_order.min(z.q_order());
    let columns: Vec<Vec<RatFuncH>> = (0..=q_order).into_par_iter().map(|a| phi_column(z, w, a, z_order)).collect();
    let mut cells = Vec::new();
    for (a, col) in columns.into_iter().enumerate() {
        for (b, c) in col.into_iter().enumerate() {
            let neg = c.negative_part();
            cells.push(PolynomialityCell { q: a, z: b, vanishes: neg.is_zero(), negative_part: neg.to_string() });
        }
    }
    let pass = cells.iter().all(|c| c.vanishes);
    PolynomialityReport { cells, pass }
}
