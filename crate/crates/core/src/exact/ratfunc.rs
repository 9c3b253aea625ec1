use std::fmt;

use super::poly::PolyH;
use super::rational::{is_one, Rational, Ring};
use crate::error::{Error, Result};

/// Rational function in ħ over the rationals: `num/den` with `den` monic and
/// `gcd(num, den) = 1`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncH {
    num: PolyH,
    den: PolyH,
}

fn is_monomial(p: &PolyH) -> bool {
    p.valuation() == p.degree()
}

/// gcd with a fast path for the very common case of a pure power of ħ.
fn gcd_poly(a: &PolyH, b: &PolyH) -> PolyH {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if is_monomial(b) {
        let k = a.valuation().unwrap().min(b.degree().unwrap());
        return PolyH::monomial(Rational::one(), k);
    }
    if is_monomial(a) {
        let k = b.valuation().unwrap().min(a.degree().unwrap());
        return PolyH::monomial(Rational::one(), k);
    }
    a.gcd(b)
}

fn exact_div(a: &PolyH, b: &PolyH) -> PolyH {
    if b.degree() == Some(0) && is_one(&b.coeff(0)) {
        return a.clone();
    }
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact polynomial division");
    q
}

impl RatFuncH {
    /// Reduces `num/den`; panics if `den` is zero.
    pub fn new(num: PolyH, den: PolyH) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd_poly(&num, &den);
            (exact_div(&num, &g), exact_div(&den, &g))
        };
        let lead = den.leading();
        if is_one(&lead) {
            RatFuncH { num, den }
        } else {
            let inv = lead.recip();
            RatFuncH { num: num.scale_by(&inv), den: den.scale_by(&inv) }
        }
    }

    pub fn from_poly(p: PolyH) -> Self {
        RatFuncH { num: p, den: PolyH::constant(Rational::one()) }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(PolyH::constant(c))
    }

    /// `c·ħ^k` for any integer `k`.
    pub fn laurent_monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if k >= 0 {
            Self::from_poly(PolyH::monomial(c, k as usize))
        } else {
            RatFuncH { num: PolyH::constant(c), den: PolyH::monomial(Rational::one(), (-k) as usize) }
        }
    }

    /// `a + b·ħ`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_poly(PolyH::linear(a, b))
    }

    pub fn numer(&self) -> &PolyH {
        &self.num
    }

    pub fn denom(&self) -> &PolyH {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.is_constant() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.num.degree().map(|n| n as i64 - self.den.degree().unwrap() as i64)
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::EvaluationAtPole(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `f(-ħ)`
    pub fn reflect(&self) -> Self {
        RatFuncH::new(self.num.reflect(), self.den.reflect())
    }

    pub fn scale_by(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RatFuncH { num: self.num.scale_by(r), den: self.den.clone() }
    }

    /// Polynomial part and proper remainder: `f = poly + rem/den`.
    pub fn split(&self) -> (PolyH, RatFuncH) {
        let (q, r) = self.num.div_rem(&self.den);
        (q, RatFuncH::new(r, self.den.clone()))
    }

    /// The proper part of `f`, i.e. everything that vanishes at ħ = ∞: the
    /// negative powers of ħ in the expansion at infinity.
    pub fn negative_part(&self) -> RatFuncH {
        if self.is_polynomial() {
            return Self::zero();
        }
        self.split().1
    }

    /// Coefficient of ħ^j in the Laurent expansion at ħ = ∞.
    pub fn coeff_at_infinity(&self, j: i64) -> Rational {
        let (poly, rem) = self.split();
        if j >= 0 {
            return poly.coeff(j as usize);
        }
        // rem = N/D with deg N < deg D = n; in u = 1/ħ it is
        // u^n N(1/u) / (u^n D(1/u)), a power series with unit constant term.
        let k = (-j) as usize;
        let n = rem.den.degree().unwrap();
        if rem.num.is_zero() {
            return Rational::zero();
        }
        let rev = |p: &PolyH| -> Vec<Rational> { (0..=n).map(|i| p.coeff(n - i)).collect() };
        let num = rev(&rem.num);
        let den = rev(&rem.den);
        let mut series: Vec<Rational> = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let mut c = num.get(i).cloned().unwrap_or_else(Rational::zero);
            for t in 1..=i.min(n) {
                c -= &den[t] * &series[i - t];
            }
            series.push(c / &den[0]);
        }
        series[k].clone()
    }
}

impl Ring for RatFuncH {
    fn zero() -> Self {
        RatFuncH { num: PolyH::default(), den: PolyH::constant(Rational::one()) }
    }
    fn one() -> Self {
        Self::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFuncH::new(self.num.add(&rhs.num), self.den.clone());
        }
        // Henrici: only gcd(b, d) can survive in the sum's denominator.
        let g = gcd_poly(&self.den, &rhs.den);
        let b_g = exact_div(&self.den, &g);
        let d_g = exact_div(&rhs.den, &g);
        let t = self.num.mul(&d_g).add(&rhs.num.mul(&b_g));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = gcd_poly(&t, &g);
        let num = exact_div(&t, &g2);
        let den = b_g.mul(&exact_div(&rhs.den, &g2));
        let lead = den.leading();
        if is_one(&lead) {
            RatFuncH { num, den }
        } else {
            let inv = lead.recip();
            RatFuncH { num: num.scale_by(&inv), den: den.scale_by(&inv) }
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g1 = gcd_poly(&self.num, &rhs.den);
        let g2 = gcd_poly(&rhs.num, &self.den);
        let num = exact_div(&self.num, &g1).mul(&exact_div(&rhs.num, &g2));
        let den = exact_div(&self.den, &g2).mul(&exact_div(&rhs.den, &g1));
        let lead = den.leading();
        if is_one(&lead) {
            RatFuncH { num, den }
        } else {
            let inv = lead.recip();
            RatFuncH { num: num.scale_by(&inv), den: den.scale_by(&inv) }
        }
    }
    fn neg(&self) -> Self {
        RatFuncH { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFuncH::new(self.den.clone(), self.num.clone()))
        }
    }
    fn scale(&self, r: &Rational) -> Self {
        self.scale_by(r)
    }
}

impl fmt::Debug for RatFuncH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFuncH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
