use std::fmt;

use super::rational::{Rational, Ring};

/// Dense univariate polynomial over the rationals, in the equivariant
/// parameter ħ unless stated otherwise.
///
/// `coeffs[i]` is the coefficient of ħ^i; trailing zeros are trimmed so the
/// zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyH {
    coeffs: Vec<Rational>,
}

impl PolyH {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyH { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        PolyH::new(vec![c])
    }

    /// `c·ħ^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        PolyH::new(coeffs)
    }

    /// `a + b·ħ`
    pub fn linear(a: Rational, b: Rational) -> Self {
        PolyH::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Lowest power of ħ with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        PolyH::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect())
    }

    /// `p(-ħ)`
    pub fn reflect(&self) -> Self {
        PolyH::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    pub fn scale_by(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return PolyH::default();
        }
        PolyH::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Multiplication by ħ^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyH { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                self.scale_by(&inv)
            }
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyH) -> (PolyH, PolyH) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (PolyH::default(), PolyH::default());
        };
        if nd < dd {
            return (PolyH::default(), self.clone());
        }
        if dd == 0 {
            return (self.scale_by(&divisor.coeffs[0].recip()), PolyH::default());
        }
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (PolyH::new(quot), PolyH::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &PolyH) -> PolyH {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.coeffs.is_empty() {
            if b.is_constant() {
                return PolyH::constant(Rational::one());
            }
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `Π (ħ - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> PolyH {
        roots.into_iter().fold(PolyH::constant(Rational::one()), |acc, r| acc.mul(&PolyH::linear(-r, Rational::one())))
    }
}

impl Ring for PolyH {
    fn zero() -> Self {
        PolyH::default()
    }
    fn one() -> Self {
        PolyH::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyH::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyH::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return PolyH::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PolyH::new(out)
    }
    fn neg(&self) -> Self {
        PolyH::new(self.coeffs.iter().map(|c| -c).collect())
    }
    fn from_rational(r: &Rational) -> Self {
        PolyH::constant(r.clone())
    }
    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(PolyH::constant(c.recip())),
            _ => None,
        }
    }
}

impl fmt::Debug for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})h")?,
                _ => write!(f, "({c})h^{i}")?,
            }
        }
        Ok(())
    }
}
