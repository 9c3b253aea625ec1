//! Reconstruction of a solution of the recursion from its coefficients, the
//! polynomiality of the two-point series, and two anchor values per degree.
//!
//! At degree `d` the unknowns are the coefficients of the initial conditions
//! `R_{α,d}(ħ) = Σ_j r_{α,j} ħ^j`. Everything else in `Z_α,d` is fixed by lower
//! degrees, so the vanishing of the negative part of `Φ` at `q^d z^b` is a
//! linear condition on the `r_{α,j}`. Polynomiality alone leaves
//! `A_α + B_α/ħ` free at each fixed point; the anchors are the ħ⁰ and ħ⁻¹
//! coefficients of `Z_α,d` at ħ = ∞, which pin exactly those.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::polynomiality::{fixed_point_weight, shifted_power};
use super::{recursive_part, RecursionCoefficients};
use crate::cohomology::WeightSpec;
use crate::error::{Error, Result};
use crate::exact::{int, solve_exact, LinearSystem, PolyH, RatFuncH, Rational, Ring};
use crate::hypergeom::LocalizedSeries;

/// `(ħ⁰, ħ⁻¹)` coefficients at ħ = ∞ of `Z_α,d`, keyed by `(α, d)`.
pub type Anchors = BTreeMap<(usize, usize), (Rational, Rational)>;

pub fn anchors_of(z: &LocalizedSeries, d_max: usize) -> Anchors {
    let mut out = Anchors::new();
    for a in 0..5 {
        for d in 1..=d_max.min(z.q_order()) {
            let c = z.coeff(a, d);
            out.insert((a, d), (c.coeff_at_infinity(0), c.coeff_at_infinity(-1)));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeSolve {
    pub degree: usize,
    pub unknowns: usize,
    pub equations: usize,
    /// Dimension of the solution space of the polynomiality constraints.
    pub nullity: usize,
    pub nullity_per_alpha: [usize; 5],
    /// Whether that solution space is spanned by the ħ^d and ħ^{d-1}
    /// coefficients of the initial conditions.
    pub top_two_only: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniqueSolution {
    pub series: LocalizedSeries,
    pub degrees: Vec<DegreeSolve>,
}

fn rank(vectors: &[Vec<Rational>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let cols = first.len();
    // The rank of a set of vectors is the rank of the system with them as rows.
    let mut sys = LinearSystem::new(cols);
    for v in vectors {
        sys.push_row(v.clone(), Rational::zero());
    }
    solve_exact(&sys).map(|s| s.rank).unwrap_or(0)
}

/// `Σ_α wα [Σ_{0<k<d} Z_α,k(ħ) Z_α,d-k(-ħ) (λα+kħ)^b + K_α(ħ)(λα+dħ)^b + K_α(-ħ)λα^b]`
/// with `K_α` the recursive part of `Z_α,d`.
fn known_column(z: &LocalizedSeries, known: &[RatFuncH], w: &WeightSpec, d: usize, b: usize) -> RatFuncH {
    let mut total = RatFuncH::zero();
    for (a, known) in known.iter().enumerate() {
        let mut acc = RatFuncH::zero();
        for k in 1..d {
            let p = z.coeff(a, k).mul(&z.coeff(a, d - k).reflect());
            acc = acc.add(&p.mul(&RatFuncH::from_poly(shifted_power(w.lambda(a), k, b))));
        }
        acc = acc.add(&known.mul(&RatFuncH::from_poly(shifted_power(w.lambda(a), d, b))));
        acc = acc.add(&known.reflect().mul(&RatFuncH::from_poly(shifted_power(w.lambda(a), 0, b))));
        total = total.add(&acc.scale_by(&fixed_point_weight(w, a)));
    }
    total
}

/// ħ^d times the negative part of `wα [ħ^{j-d}(λα+dħ)^b + (-ħ)^{j-d}λα^b]`.
fn unknown_column(w: &WeightSpec, a: usize, j: usize, d: usize, b: usize) -> PolyH {
    let weight = fixed_point_weight(w, a);
    let up = shifted_power(w.lambda(a), d, b);
    let down = shifted_power(w.lambda(a), 0, b).coeff(0);
    let sign = if (d - j).is_multiple_of(2) { int(1) } else { int(-1) };
    // ħ^{j-d}·ħ^i lands at ħ^{j+i} after scaling by ħ^d.
    let mut coeffs = vec![Rational::zero(); d];
    for (i, c) in up.coeffs().iter().enumerate() {
        if j + i < d {
            coeffs[j + i] += c;
        }
    }
    if j < d {
        coeffs[j] += sign * down;
    }
    PolyH::new(coeffs).scale_by(&weight)
}

fn constraint_rows(
    z: &LocalizedSeries,
    known: &[RatFuncH],
    w: &WeightSpec,
    d: usize,
    z_order: usize,
) -> Vec<(Vec<Rational>, Rational)> {
    let cols = 5 * (d + 1);
    let blocks: Vec<Vec<(Vec<Rational>, Rational)>> = (0..=z_order)
        .into_par_iter()
        .map(|b| {
            let neg = known_column(z, known, w, d, b).negative_part();
            let num = neg.numer().shift_up(d);
            let den = neg.denom().clone();
            let columns: Vec<PolyH> =
                (0..cols).map(|k| unknown_column(w, k / (d + 1), k % (d + 1), d, b).mul(&den)).collect();
            let top = columns.iter().filter_map(|p| p.degree()).chain(num.degree()).max();
            let Some(top) = top else { return Vec::new() };
            (0..=top)
                .map(|p| (columns.iter().map(|c| c.coeff(p)).collect(), -num.coeff(p)))
                .filter(|(row, rhs): &(Vec<Rational>, Rational)| !rhs.is_zero() || row.iter().any(|c| !c.is_zero()))
                .collect()
        })
        .collect();
    blocks.into_iter().flatten().collect()
}

/// Smallest z-order that pins every degree through `d_max` at generic
/// weights, found by rank checks: `5d - 6` for `d >= 2`. [`solve_unique`]
/// still verifies the rank whatever order it is given.
pub fn minimal_z_order(d_max: usize) -> usize {
    (5 * d_max).saturating_sub(6)
}

/// Rebuilds `Z` through `q^d_max` from recursion coefficients, the
/// polynomiality of `Φ` at z-powers `0..=z_order`, and the anchors.
///
/// Fails with [`Error::InsufficientZOrder`] when the constraints leave
/// directions undetermined and with [`Error::NoPolynomialSolution`] when they
/// are inconsistent.
pub fn solve_unique(
    c: &RecursionCoefficients,
    anchors: &Anchors,
    w: &WeightSpec,
    d_max: usize,
    z_order: usize,
) -> Result<UniqueSolution> {
    let mut z = LocalizedSeries::one(d_max);
    let mut degrees = Vec::new();
    for d in 1..=d_max {
        let known: Vec<RatFuncH> = (0..5).map(|a| recursive_part(&z, c, w, a, d, 1..=d)).collect::<Result<_>>()?;
        let cols = 5 * (d + 1);
        let rows = constraint_rows(&z, &known, w, d, z_order);
        let mut sys = LinearSystem::new(cols);
        for (row, rhs) in &rows {
            sys.push_row(row.clone(), rhs.clone());
        }
        let free = solve_exact(&sys).map_err(|_| Error::NoPolynomialSolution { degree: d })?;
        let nullity_per_alpha = std::array::from_fn(|a| {
            let projected: Vec<Vec<Rational>> =
                free.nullspace.iter().map(|v| v[a * (d + 1)..(a + 1) * (d + 1)].to_vec()).collect();
            rank(&projected)
        });
        let top_two_only = free.nullspace.iter().all(|v| (0..cols).all(|k| k % (d + 1) + 1 >= d || v[k].is_zero()));

        for a in 0..5 {
            let (a0, a1) = anchors
                .get(&(a, d))
                .ok_or_else(|| Error::Normalization(format!("no anchor for fixed point {} at degree {d}", a + 1)))?;
            let mut top = vec![Rational::zero(); cols];
            top[a * (d + 1) + d] = int(1);
            sys.push_row(top, a0 - known[a].coeff_at_infinity(0));
            let mut next = vec![Rational::zero(); cols];
            next[a * (d + 1) + d - 1] = int(1);
            sys.push_row(next, a1 - known[a].coeff_at_infinity(-1));
        }
        let pinned = solve_exact(&sys).map_err(|_| Error::NoPolynomialSolution { degree: d })?;
        if !pinned.is_unique() {
            return Err(Error::InsufficientZOrder { z_order, degree: d, nullity: pinned.nullspace.len() });
        }
        for (a, known) in known.iter().enumerate() {
            let r = PolyH::new(pinned.particular[a * (d + 1)..(a + 1) * (d + 1)].to_vec());
            let coeff = known.add(&RatFuncH::new(r, PolyH::monomial(int(1), d)));
            z.components[a].set(d, 0, coeff);
        }
        degrees.push(DegreeSolve {
            degree: d,
            unknowns: cols,
            equations: rows.len(),
            nullity: free.nullspace.len(),
            nullity_per_alpha,
            top_two_only,
        });
    }
    Ok(UniqueSolution { series: z, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::i_series_equivariant;
    use crate::recursion::{extract_recursion, validate_weights};

    #[test]
    fn recovers_hypergeometric_series() {
        let w = WeightSpec::default();
        let cert = validate_weights(&w, 2).unwrap();
        let z = i_series_equivariant(2, &w);
        let data = extract_recursion(&z, &cert, 2).unwrap();
        let sol = solve_unique(&data.c, &anchors_of(&z, 2), &w, 2, 8).unwrap();
        assert_eq!(sol.series, z);
        for deg in &sol.degrees {
            assert_eq!(deg.nullity, 10, "{deg:?}");
            assert_eq!(deg.nullity_per_alpha, [2; 5]);
            assert!(deg.top_two_only);
        }
    }

    #[test]
    fn too_few_z_powers() {
        let w = WeightSpec::default();
        let cert = validate_weights(&w, 2).unwrap();
        let z = i_series_equivariant(2, &w);
        let data = extract_recursion(&z, &cert, 2).unwrap();
        let err = solve_unique(&data.c, &anchors_of(&z, 2), &w, 2, 1).unwrap_err();
        assert!(matches!(err, Error::InsufficientZOrder { degree: 2, .. }), "{err:?}");
    }
}
