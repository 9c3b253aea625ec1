//! Instanton numbers from the Yukawa coupling through the multiple cover
//! formula `N_d = Σ_{m|d} n_{d/m} / m³`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, rational_string, Rational, Ring, TruncSeries};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstantonRow {
    pub d: usize,
    #[serde(rename = "N_d", serialize_with = "ser_rational")]
    pub gw: Rational,
    #[serde(rename = "n_d", serialize_with = "ser_bigint")]
    pub n: BigInt,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

fn ser_bigint<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[derive(Clone, Debug, PartialEq, Default, Serialize)]
pub struct InstantonTable {
    pub rows: Vec<InstantonRow>,
}

/// Möbius function by trial division.
pub fn mobius(mut n: usize) -> i64 {
    assert!(n > 0);
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn cube(m: usize) -> Rational {
    int((m * m * m) as i64)
}

/// `N_d = K_d / d³` for `d ≥ 1`; the returned list starts at `d = 1`.
pub fn gw_from_yukawa(k: &TruncSeries<Rational>) -> Result<Vec<Rational>> {
    let k0 = k.q_coeff(0);
    if k0 != int(5) {
        return Err(Error::MalformedCoupling(k0));
    }
    Ok((1..=k.q_order()).map(|d| k.q_coeff(d) / cube(d)).collect())
}

/// Forward multiple cover sum `N_d = Σ_{m|d} n_{d/m} m⁻³` (lists start at `d = 1`).
pub fn multicover_sum(n: &[Rational]) -> Vec<Rational> {
    (1..=n.len()).map(|d| (1..=d).filter(|m| d % m == 0).map(|m| &n[d / m - 1] / cube(m)).sum()).collect()
}

/// `n_d = Σ_{m|d} μ(m) m⁻³ N_{d/m}`; every `n_d` must be an integer.
pub fn invert_multicover(gw: &[Rational]) -> Result<Vec<BigInt>> {
    (1..=gw.len())
        .map(|d| {
            let value: Rational =
                (1..=d).filter(|m| d % m == 0).map(|m| &gw[d / m - 1] * int(mobius(m)) / cube(m)).sum();
            if !value.is_integer() {
                return Err(Error::Integrality { degree: d, value });
            }
            Ok(value.to_integer())
        })
        .collect()
}

/// `5 + Σ_d n_d d³ q^d / (1 - q^d)` truncated at `q^{q_order}`.
pub fn resum_check(n: &[BigInt], q_order: usize) -> TruncSeries<Rational> {
    let mut k = TruncSeries::constant(int(5), q_order, 0);
    for (i, nd) in n.iter().enumerate() {
        let d = i + 1;
        let c = Rational::from_integer(nd.clone()) * cube(d);
        let mut e = d;
        while e <= q_order {
            let cur = k.q_coeff(e);
            k.set(e, 0, cur.add(&c));
            e += d;
        }
    }
    k
}

/// The full table from a Yukawa series.
pub fn instanton_table(k: &TruncSeries<Rational>) -> Result<InstantonTable> {
    let gw = gw_from_yukawa(k)?;
    let n = invert_multicover(&gw)?;
    Ok(InstantonTable {
        rows: gw.into_iter().zip(n).enumerate().map(|(i, (gw, n))| InstantonRow { d: i + 1, gw, n }).collect(),
    })
}

/// The whole pipeline: I-series, mirror map, Yukawa coupling, multiple-cover
/// inversion, through degree `max_degree`.
pub fn instanton_numbers(max_degree: usize) -> Result<InstantonTable> {
    let z = crate::hypergeom::i_series(max_degree);
    let j = crate::mirror::apply_mirror(&z, &crate::mirror::build_mirror_map(max_degree))?;
    instanton_table(&crate::mirror::yukawa(&j, max_degree)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expect.iter().enumerate() {
            assert_eq!(mobius(i + 1), m, "μ({})", i + 1);
        }
    }

    #[test]
    fn gw_invariants_from_coupling() {
        let k = TruncSeries::from_q_coeffs(vec![int(5), int(2875), int(4876875)]);
        let gw = gw_from_yukawa(&k).unwrap();
        assert_eq!(gw, vec![int(2875), rat(4876875, 8)]);
        assert_eq!(invert_multicover(&gw).unwrap(), vec![BigInt::from(2875), BigInt::from(609250)]);
        let flat = TruncSeries::constant(int(5), 4, 0);
        assert!(gw_from_yukawa(&flat).unwrap().iter().all(|x| x.is_zero()));
        let bad = TruncSeries::constant(int(4), 2, 0);
        assert_eq!(gw_from_yukawa(&bad), Err(Error::MalformedCoupling(int(4))));
    }

    #[test]
    fn all_ones_round_trip() {
        let ones = vec![int(1); 12];
        let gw = multicover_sum(&ones);
        assert_eq!(gw[1], int(1) + rat(1, 8));
        assert_eq!(invert_multicover(&gw).unwrap(), vec![BigInt::from(1); 12]);
    }

    #[test]
    fn integrality_violation_is_reported() {
        let gw = vec![int(1), rat(1, 3)];
        match invert_multicover(&gw) {
            Err(Error::Integrality { degree, value }) => {
                assert_eq!(degree, 2);
                assert_eq!(value, rat(1, 3) - rat(1, 8));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn resummation() {
        assert_eq!(resum_check(&[], 5), TruncSeries::constant(int(5), 5, 0));
        let k = resum_check(&[BigInt::from(0), BigInt::from(1)], 6);
        assert_eq!(k.q_coeffs(), [5, 0, 8, 0, 8, 0, 8].map(int));
        let k = resum_check(&[BigInt::from(2875), BigInt::from(609250)], 2);
        assert_eq!(k.q_coeffs(), [5, 2875, 4876875].map(int));
    }
}
