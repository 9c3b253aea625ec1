//! The mirror transformation at the fixed points, and the check that it maps
//! solutions of the recursion with polynomial two-point series to solutions
//! with the same recursion coefficients.

use serde::Serialize;

use super::polynomiality::{verify_polynomiality, PolynomialityReport};
use super::{extract_recursion, GenericityCertificate};
use crate::cohomology::WeightSpec;
use crate::error::{Error, Result};
use crate::exact::{RatFuncH, Ring, TruncSeries};
use crate::hypergeom::LocalizedSeries;
use crate::mirror::MirrorMap;

/// `Z_α ↦ [e^{-λ_α g/ħ} Z_α / f₀](Q e^{ĝ(Q)})` at each fixed point; `P`
/// restricts to `λ_α` there.
pub fn mirror_transform_localized(z: &LocalizedSeries, m: &MirrorMap, w: &WeightSpec) -> Result<LocalizedSeries> {
    let n = z.q_order().min(m.q_order());
    let f0_inv = m.f0.truncate(n, 0).invert()?.map(|_, _, c| RatFuncH::constant(c.clone()));
    let shift = m.inverse_shift();
    let g = m.g.truncate(n, 0);
    let mut components = Vec::with_capacity(5);
    for a in 0..5 {
        let factor = RatFuncH::laurent_monomial(-w.lambda(a).clone(), -1);
        let exponent: TruncSeries<RatFuncH> = g.map(|_, _, c| factor.scale_by(c));
        let prefactor = exponent.exp()?.mul(&f0_inv);
        components.push(z.components[a].truncate(n, 0).mul(&prefactor).compose_qshift(&shift)?);
    }
    Ok(LocalizedSeries { components: components.try_into().expect("five components") })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CovarianceReport {
    pub degree: usize,
    pub coefficients_compared: usize,
    pub initial_conditions_changed: bool,
    pub polynomiality: PolynomialityReport,
}

/// Transforms `z`, then requires the same recursion coefficients through
/// `d_max` and a polynomial two-point series through `z_order`.
pub fn check_theorem_f(
    z: &LocalizedSeries,
    m: &MirrorMap,
    cert: &GenericityCertificate,
    d_max: usize,
    z_order: usize,
) -> Result<(LocalizedSeries, CovarianceReport)> {
    let before = extract_recursion(z, cert, d_max)?;
    let transformed = mirror_transform_localized(&z.truncate(d_max), m, &cert.w)?;
    let after = extract_recursion(&transformed, cert, d_max)
        .map_err(|e| Error::TheoremViolation(format!("transformed series is not a solution of the recursion: {e}")))?;
    for (key, c) in &before.c {
        let other = after.c.get(key).cloned().unwrap_or_else(crate::exact::Rational::zero);
        if &other != c {
            let (a, b, k) = key;
            return Err(Error::TheoremViolation(format!(
                "C_{}^{}({}) changed from {} to {}",
                a + 1,
                b + 1,
                k,
                c,
                other
            )));
        }
    }
    let polynomiality = verify_polynomiality(&transformed, &cert.w, d_max, z_order);
    if !polynomiality.pass {
        let cell = polynomiality.failures().next().expect("a failing cell");
        return Err(Error::TheoremViolation(format!(
            "transformed two-point series has negative part {} at q^{} z^{}",
            cell.negative_part, cell.q, cell.z
        )));
    }
    let report = CovarianceReport {
        degree: d_max,
        coefficients_compared: before.c.len(),
        initial_conditions_changed: before.r != after.r,
        polynomiality,
    };
    Ok((transformed, report))
}
