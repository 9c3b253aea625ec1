use std::collections::BTreeMap;

use super::rational::{Rational, Ring};
use crate::error::{Error, Result};

/// Truncated power series in `q` (and optionally `z`) over a ring `R`.
///
/// Coefficients live in a sparse map keyed by `(q-power, z-power)`. The
/// truncation orders are part of the value: a term `q^a z^b` is retained iff
/// `a <= q_order` and `b <= z_order`, and binary operations keep the smaller
/// of the two operands' orders.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: BTreeMap<(usize, usize), R>,
    q_order: usize,
    z_order: usize,
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(q_order: usize, z_order: usize) -> Self {
        TruncSeries { coeffs: BTreeMap::new(), q_order, z_order }
    }

    pub fn constant(c: R, q_order: usize, z_order: usize) -> Self {
        let mut s = Self::zero(q_order, z_order);
        s.set(0, 0, c);
        s
    }

    pub fn one(q_order: usize, z_order: usize) -> Self {
        Self::constant(R::one(), q_order, z_order)
    }

    /// Pure q-series from a dense coefficient list; `q_order = len - 1`.
    pub fn from_q_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term slot");
        let mut s = Self::zero(coeffs.len() - 1, 0);
        for (a, c) in coeffs.into_iter().enumerate() {
            s.set(a, 0, c);
        }
        s
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn z_order(&self) -> usize {
        self.z_order
    }

    pub fn get(&self, a: usize, b: usize) -> Option<&R> {
        self.coeffs.get(&(a, b))
    }

    pub fn coeff(&self, a: usize, b: usize) -> R {
        self.get(a, b).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of `q^a` in a pure q-series.
    pub fn q_coeff(&self, a: usize) -> R {
        self.coeff(a, 0)
    }

    /// Stores `c` at `q^a z^b`; out-of-range terms and zeros are dropped.
    pub fn set(&mut self, a: usize, b: usize, c: R) {
        if a > self.q_order || b > self.z_order {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&(a, b));
        } else {
            self.coeffs.insert((a, b), c);
        }
    }

    fn add_at(&mut self, a: usize, b: usize, c: &R) {
        if a > self.q_order || b > self.z_order || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((a, b)).or_insert_with(R::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    /// Nonzero terms in increasing `(q, z)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.coeffs.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, q_order: usize, z_order: usize) -> Self {
        let q_order = q_order.min(self.q_order);
        let z_order = z_order.min(self.z_order);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&(a, b), _)| a <= q_order && b <= z_order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            q_order,
            z_order,
        }
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(usize, usize, &R) -> S) -> TruncSeries<S> {
        let mut out = TruncSeries::zero(self.q_order, self.z_order);
        for (a, b, c) in self.iter() {
            out.set(a, b, f(a, b, c));
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.truncate(rhs.q_order, rhs.z_order);
        for (a, b, c) in rhs.iter() {
            out.add_at(a, b, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|_, _, c| c.neg())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, r: &R) -> Self {
        self.map(|_, _, c| c.mul(r))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|_, _, c| c.scale(r))
    }

    /// Coefficientwise convolution, truncated to the smaller orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let q_order = self.q_order.min(rhs.q_order);
        let z_order = self.z_order.min(rhs.z_order);
        let mut out = Self::zero(q_order, z_order);
        for (a1, b1, c1) in self.iter() {
            if a1 > q_order || b1 > z_order {
                continue;
            }
            for (a2, b2, c2) in rhs.iter() {
                if a1 + a2 <= q_order && b1 + b2 <= z_order {
                    out.add_at(a1 + a2, b1 + b2, &c1.mul(c2));
                }
            }
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift_q(&self, k: usize) -> Self {
        let mut out = Self::zero(self.q_order, self.z_order);
        for (a, b, c) in self.iter() {
            out.set(a + k, b, c.clone());
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(self.q_order, self.z_order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse by long division in graded order.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeff(0, 0);
        let inv0 = c0.inverse().ok_or_else(|| Error::NonUnit(format!("{c0:?}")))?;
        let mut out = Self::zero(self.q_order, self.z_order);
        for a in 0..=self.q_order {
            for b in 0..=self.z_order {
                if a == 0 && b == 0 {
                    out.set(0, 0, inv0.clone());
                    continue;
                }
                let mut acc = R::zero();
                for (i, j, c) in self.iter() {
                    if (i, j) == (0, 0) || i > a || j > b {
                        continue;
                    }
                    if let Some(prev) = out.get(a - i, b - j) {
                        acc = acc.add(&c.mul(prev));
                    }
                }
                out.set(a, b, acc.mul(&inv0).neg());
            }
        }
        Ok(out)
    }

    /// `exp(self)` for a series with zero constant term, from the defining
    /// differential relation `θE = (θg)E` with `θ` the total-degree operator.
    pub fn exp(&self) -> Result<Self> {
        if let Some(c) = self.get(0, 0) {
            return Err(Error::NonUnit(format!("exp of series with constant term {c:?}")));
        }
        let mut out = Self::one(self.q_order, self.z_order);
        let mut keys: Vec<(usize, usize)> =
            (0..=self.q_order).flat_map(|a| (0..=self.z_order).map(move |b| (a, b))).filter(|&k| k != (0, 0)).collect();
        keys.sort_by_key(|&(a, b)| (a + b, a));
        for (a, b) in keys {
            let w = a + b;
            let mut acc = R::zero();
            for (i, j, g) in self.iter() {
                if i > a || j > b {
                    continue;
                }
                if let Some(e) = out.get(a - i, b - j) {
                    acc = acc.add(&g.mul(e).scale(&Rational::from_integer((i + j).into())));
                }
            }
            out.set(a, b, acc.scale(&Rational::new(1.into(), w.into())));
        }
        Ok(out)
    }

    /// Composition with the multiplicative q-shift: returns `self(q·e^{g(q)})`
    /// with `z` passive. `g` must be a pure q-series with `g(0) = 0`.
    pub fn compose_qshift(&self, g: &TruncSeries<Rational>) -> Result<Self> {
        let g0 = g.coeff(0, 0);
        if !g0.is_zero() {
            return Err(Error::InvalidSubstitution(g0));
        }
        if g.iter().any(|(_, b, _)| b > 0) {
            return Err(Error::Consistency("q-shift series must not depend on z".into()));
        }
        let q_order = self.q_order.min(g.q_order);
        let shift = g.truncate(q_order, 0).exp()?.shift_q(1);
        let mut out = Self::zero(q_order, self.z_order);
        let mut power = TruncSeries::<Rational>::one(q_order, 0);
        for a in 0..=q_order {
            for b in 0..=self.z_order {
                if let Some(c) = self.get(a, b) {
                    for (k, _, s) in power.iter() {
                        out.add_at(k, b, &c.scale(s));
                    }
                }
            }
            power = power.mul(&shift);
        }
        Ok(out)
    }
}

impl TruncSeries<Rational> {
    /// Dense q-coefficient list `[c_0, ..., c_{q_order}]`.
    pub fn q_coeffs(&self) -> Vec<Rational> {
        (0..=self.q_order).map(|a| self.coeff(a, 0)).collect()
    }
}

impl<R: Ring> TruncSeries<R> {
    pub fn is_constant_one(&self) -> bool {
        self.coeffs.len() == 1 && self.get(0, 0).is_some_and(|c| *c == R::one())
    }
}
