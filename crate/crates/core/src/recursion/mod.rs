//! Fixed-point localizations of the equivariant I-series and the recursion
//! relation they satisfy.
//!
//! A solution `Z_α` of the recursion has q^d coefficients
//!
//! ```text
//! R_{α,d}(ħ)/ħ^d + Σ_{β≠α} Σ_{m≤d} C_α^β(m)/(λ_α-λ_β+mħ) · Z_β,d-m((λ_β-λ_α)/m)
//! ```
//!
//! with `R_{α,d}` of degree at most `d`. The recursion coefficients `C` are
//! read off as residues at the simple poles `ħ = (λ_β-λ_α)/m`, which needs the
//! weights to be generic up to the requested degree; see [`validate_weights`].

mod covariance;
mod polynomiality;
mod uniqueness;

use std::collections::BTreeMap;

use crate::cohomology::WeightSpec;
use crate::error::{Error, Result};
use crate::exact::{int, residue_simple, PolyH, RatFuncH, Rational, Ring, TruncSeries};
use crate::hypergeom::LocalizedSeries;

pub use covariance::{check_theorem_f, mirror_transform_localized, CovarianceReport};
pub use polynomiality::{polynomiality_series, verify_polynomiality, PolynomialityCell, PolynomialityReport};
pub use uniqueness::{anchors_of, minimal_z_order, solve_unique, Anchors, DegreeSolve, UniqueSolution};

/// Evidence that the weights keep every pole of the recursion simple through
/// degree `d_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericityCertificate {
    pub w: WeightSpec,
    pub d_max: usize,
    pub checks: Vec<String>,
}

/// `(λ_β - λ_α)/m`
pub fn pole_location(w: &WeightSpec, alpha: usize, beta: usize, m: usize) -> Rational {
    (w.lambda(beta) - w.lambda(alpha)) / int(m as i64)
}

fn label(alpha: usize, beta: usize, m: usize) -> String {
    format!("(λ{}-λ{})/{}", beta + 1, alpha + 1, m)
}

pub fn validate_weights(w: &WeightSpec, d_max: usize) -> Result<GenericityCertificate> {
    let mut checks = Vec::new();
    let mut collisions = Vec::new();
    for a in 0..5 {
        let mut seen: BTreeMap<Rational, String> = BTreeMap::new();
        for b in (0..5).filter(|&b| b != a) {
            for m in 1..=d_max {
                let h = pole_location(w, a, b, m);
                if let Some(prev) = seen.get(&h) {
                    collisions.push(format!("α={}: {} = {} = {}", a + 1, prev, label(a, b, m), h));
                } else {
                    seen.insert(h, label(a, b, m));
                }
            }
        }
        checks.push(format!("α={}: {} pole locations pairwise distinct", a + 1, seen.len()));

        // The numerator Π_{k≤5d}(5λ_α + kħ) vanishes at ħ = -5λ_α/k.
        let la = w.lambda(a);
        if !la.is_zero() {
            for k in 1..=5 * d_max {
                let zero = -(int(5) * la) / int(k as i64);
                if let Some(name) = seen.get(&zero) {
                    collisions.push(format!("α={}: pole {} = {} is a numerator zero", a + 1, name, zero));
                }
            }
        }
        checks.push(format!("α={}: no pole meets a numerator zero", a + 1));
    }

    // Z_β,k is evaluated at ħ = (λ_β-λ_α)/m for k ≤ d_max - m; that point must
    // not be one of its poles.
    for a in 0..5 {
        for b in (0..5).filter(|&b| b != a) {
            for m in 1..d_max {
                let h = pole_location(w, a, b, m);
                for g in (0..5).filter(|&g| g != b) {
                    for mp in 1..=d_max - m {
                        if pole_location(w, b, g, mp) == h {
                            collisions.push(format!(
                                "evaluation point {} = {} is a pole {} of Z{}",
                                label(a, b, m),
                                h,
                                label(b, g, mp),
                                b + 1
                            ));
                        }
                    }
                }
            }
        }
    }
    checks.push("recursion evaluation points avoid all poles".into());

    if !collisions.is_empty() {
        return Err(Error::DegenerateWeights(format!(
            "{:?} not generic through degree {d_max}: {}",
            w,
            collisions.join("; ")
        )));
    }
    Ok(GenericityCertificate { w: w.clone(), d_max, checks })
}

/// Recursion coefficients `C_α^β(m)`, keyed by `(α, β, m)`.
pub type RecursionCoefficients = BTreeMap<(usize, usize, usize), Rational>;

#[derive(Clone, Debug, PartialEq)]
pub struct RecursionData {
    pub c: RecursionCoefficients,
    /// Initial conditions `R_{α,d}`, keyed by `(α, d)`.
    pub r: BTreeMap<(usize, usize), PolyH>,
    pub w: WeightSpec,
    pub d_max: usize,
}

/// `C/(λ_α - λ_β + mħ)`
fn simple_fraction(w: &WeightSpec, alpha: usize, beta: usize, m: usize, c: &Rational) -> RatFuncH {
    let lin = RatFuncH::linear(w.lambda(alpha) - w.lambda(beta), int(m as i64));
    lin.inverse().expect("nonzero linear factor").scale(c)
}

/// Recursive part of the q^d coefficient of `Z_α` from coefficients with
/// `m` in `range` and already known lower terms of `Z`.
pub(crate) fn recursive_part(
    z: &LocalizedSeries,
    c: &RecursionCoefficients,
    w: &WeightSpec,
    alpha: usize,
    d: usize,
    m_range: std::ops::RangeInclusive<usize>,
) -> Result<RatFuncH> {
    let mut acc = RatFuncH::zero();
    for b in (0..5).filter(|&b| b != alpha) {
        for m in m_range.clone() {
            let Some(cm) = c.get(&(alpha, b, m)) else { continue };
            if cm.is_zero() {
                continue;
            }
            let h = pole_location(w, alpha, b, m);
            let value = z.coeff(b, d - m).eval(&h)?;
            acc = acc.add(&simple_fraction(w, alpha, b, m, &(cm * value)));
        }
    }
    Ok(acc)
}

/// `f·ħ^d` as a polynomial of degree at most `d`, if it is one.
fn initial_condition(f: &RatFuncH, d: usize) -> Option<PolyH> {
    let scaled = f.mul(&RatFuncH::laurent_monomial(int(1), d as i64));
    if !scaled.is_polynomial() {
        return None;
    }
    let p = scaled.numer().scale_by(&scaled.denom().coeff(0).recip());
    (p.degree().unwrap_or(0) <= d).then_some(p)
}

/// Reads `C_α^β(d)` off the q^d coefficients as residues, after subtracting
/// the contributions of the coefficients with smaller `m`, and checks that
/// what remains is an admissible initial condition.
pub fn extract_recursion(z: &LocalizedSeries, cert: &GenericityCertificate, d_max: usize) -> Result<RecursionData> {
    if d_max > cert.d_max {
        return Err(Error::DegenerateWeights(format!(
            "certificate covers degree {} but {} was requested",
            cert.d_max, d_max
        )));
    }
    if z.q_order() < d_max {
        return Err(Error::Consistency(format!("series known to q^{} only", z.q_order())));
    }
    let w = &cert.w;
    let mut c = RecursionCoefficients::new();
    let mut r = BTreeMap::new();
    for a in 0..5 {
        let z0 = z.coeff(a, 0);
        if z0 != RatFuncH::one() {
            return Err(Error::Structure { alpha: a, degree: 0, reason: format!("constant term {z0}") });
        }
        r.insert((a, 0), PolyH::constant(int(1)));
    }
    for d in 1..=d_max {
        for a in 0..5 {
            let lower = if d > 1 { recursive_part(z, &c, w, a, d, 1..=d - 1)? } else { RatFuncH::zero() };
            let mut residual = z.coeff(a, d).sub(&lower);
            for b in (0..5).filter(|&b| b != a) {
                let h = pole_location(w, a, b, d);
                let res = match residue_simple(&residual, &h) {
                    Ok(res) => res,
                    Err(Error::PoleMultiplicity { order: 0, .. }) => Rational::zero(),
                    Err(e) => return Err(Error::Structure { alpha: a, degree: d, reason: e.to_string() }),
                };
                let cab = res * int(d as i64);
                residual = residual.sub(&simple_fraction(w, a, b, d, &cab));
                c.insert((a, b, d), cab);
            }
            let poly = initial_condition(&residual, d).ok_or_else(|| Error::Structure {
                alpha: a,
                degree: d,
                reason: format!("remainder {residual} is not ħ^-{d} times a polynomial of degree ≤ {d}"),
            })?;
            r.insert((a, d), poly);
        }
    }
    Ok(RecursionData { c, r, w: w.clone(), d_max })
}

/// Rebuilds `Z_α` order by order from coefficients and initial conditions.
pub fn reconstruct(data: &RecursionData, d_max: usize) -> Result<LocalizedSeries> {
    let w = &data.w;
    let mut z = LocalizedSeries::one(d_max);
    for d in 1..=d_max {
        let mut layer = Vec::with_capacity(5);
        for a in 0..5 {
            let init = data.r.get(&(a, d)).cloned().unwrap_or_default();
            let mut coeff = RatFuncH::new(init, PolyH::monomial(int(1), d));
            coeff = coeff.add(&recursive_part(&z, &data.c, w, a, d, 1..=d)?);
            layer.push(coeff);
        }
        for (a, coeff) in layer.into_iter().enumerate() {
            z.components[a].set(d, 0, coeff);
        }
    }
    Ok(z)
}

/// `R_{α,d}/ħ^d` summed into a q-series for each fixed point (the
/// recursion-free solution with the given initial conditions).
pub fn initial_condition_series(data: &RecursionData, d_max: usize) -> LocalizedSeries {
    LocalizedSeries {
        components: std::array::from_fn(|a| {
            let mut s = TruncSeries::one(d_max, 0);
            for d in 1..=d_max {
                let init = data.r.get(&(a, d)).cloned().unwrap_or_default();
                s.set(d, 0, RatFuncH::new(init, PolyH::monomial(int(1), d)));
            }
            s
        }),
    }
}
