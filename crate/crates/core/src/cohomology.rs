//! Coefficient rings: the truncated cohomology ℚ[P]/(P⁴) of the quintic with
//! its intersection pairing, and the torus-equivariant cohomology of ℂP⁴ in
//! fixed-point form.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{int, parse_rational, rational_string, Rational, Ring};

/// `c₀ + c₁P + c₂P² + c₃P³` with `P⁴ = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CohomClass<R> {
    pub c: [R; 4],
}

impl<R: Ring> CohomClass<R> {
    pub fn new(c: [R; 4]) -> Self {
        CohomClass { c }
    }

    pub fn scalar(r: R) -> Self {
        CohomClass { c: [r, R::zero(), R::zero(), R::zero()] }
    }

    /// The hyperplane class `P`.
    pub fn p() -> Self {
        Self::p_power(1)
    }

    /// `P^k` (zero for `k >= 4`).
    pub fn p_power(k: usize) -> Self {
        let mut c = [R::zero(), R::zero(), R::zero(), R::zero()];
        if k < 4 {
            c[k] = R::one();
        }
        CohomClass { c }
    }

    /// `a + b·P`
    pub fn linear(a: R, b: R) -> Self {
        CohomClass { c: [a, b, R::zero(), R::zero()] }
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.c[k]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> CohomClass<S> {
        CohomClass { c: [f(&self.c[0]), f(&self.c[1]), f(&self.c[2]), f(&self.c[3])] }
    }

    /// Inverse of a class with invertible scalar part, as the finite
    /// geometric series in its nilpotent part.
    pub fn invert_unit(&self) -> Result<Self> {
        let inv0 = self.c[0]
            .inverse()
            .ok_or_else(|| Error::NonUnit(format!("cohomology class with scalar part {:?}", self.c[0])))?;
        // u = 1 + n with n nilpotent; u⁻¹ = 1 - n + n² - n³.
        let scaled = self.mul(&Self::scalar(inv0.clone()));
        let n = scaled.sub(&Self::one());
        let n2 = n.mul(&n);
        let n3 = n2.mul(&n);
        let series = Self::one().sub(&n).add(&n2).sub(&n3);
        Ok(series.mul(&Self::scalar(inv0)))
    }
}

impl<R: Ring> Ring for CohomClass<R> {
    fn zero() -> Self {
        Self::scalar(R::zero())
    }
    fn one() -> Self {
        Self::scalar(R::one())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        CohomClass { c: std::array::from_fn(|i| self.c[i].add(&rhs.c[i])) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        CohomClass { c: std::array::from_fn(|i| self.c[i].sub(&rhs.c[i])) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut c = [R::zero(), R::zero(), R::zero(), R::zero()];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 - i {
                if !rhs.c[j].is_zero() {
                    c[i + j] = c[i + j].add(&self.c[i].mul(&rhs.c[j]));
                }
            }
        }
        CohomClass { c }
    }
    fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::scalar(R::from_rational(r))
    }
    fn inverse(&self) -> Option<Self> {
        self.invert_unit().ok()
    }
    fn scale(&self, r: &Rational) -> Self {
        self.map(|x| x.scale(r))
    }
}

impl<R: fmt::Debug> fmt::Debug for CohomClass<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}·P, {:?}·P², {:?}·P³]", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

/// `⟨φ, ψ⟩ = ∮ φψ·5P dP/P⁵`, i.e. five times the P³ coefficient of `φψ`.
pub fn pair_nonequiv<R: Ring>(phi: &CohomClass<R>, psi: &CohomClass<R>) -> R {
    let mut top = R::zero();
    for i in 0..4 {
        top = top.add(&phi.c[i].mul(&psi.c[3 - i]));
    }
    top.scale(&int(5))
}

/// Torus weights `λ₁..λ₅`: distinct rationals summing to zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightSpec {
    lambdas: [Rational; 5],
}

impl WeightSpec {
    pub fn new(lambdas: [Rational; 5]) -> Result<Self> {
        for a in 0..5 {
            for b in a + 1..5 {
                if lambdas[a] == lambdas[b] {
                    return Err(Error::DegenerateWeights(format!("λ{} = λ{} = {}", a + 1, b + 1, lambdas[a])));
                }
            }
        }
        let sum: Rational = lambdas.iter().sum();
        if !sum.is_zero() {
            return Err(Error::DegenerateWeights(format!("weights sum to {sum}, not 0")));
        }
        Ok(WeightSpec { lambdas })
    }

    pub fn from_ints(lambdas: [i64; 5]) -> Result<Self> {
        Self::new(lambdas.map(int))
    }

    /// Parses five comma-separated rationals, e.g. `"1,2,3,-1,-5"`.
    pub fn parse(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split(',').collect();
        if tokens.len() != 5 {
            let position = tokens.len().min(6);
            return Err(Error::WeightParse {
                position,
                token: tokens.get(5).map_or_else(String::new, |t| t.trim().to_string()),
                reason: format!("expected 5 weights, found {}", tokens.len()),
            });
        }
        let mut lambdas: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
        for (i, t) in tokens.iter().enumerate() {
            lambdas[i] = parse_rational(t).map_err(|reason| Error::WeightParse {
                position: i + 1,
                token: t.trim().to_string(),
                reason,
            })?;
        }
        Self::new(lambdas)
    }

    pub fn lambdas(&self) -> &[Rational; 5] {
        &self.lambdas
    }

    pub fn lambda(&self, alpha: usize) -> &Rational {
        &self.lambdas[alpha]
    }

    /// `e_α = Π_{β≠α} (λ_α - λ_β)`
    pub fn euler(&self, alpha: usize) -> Rational {
        (0..5).filter(|&b| b != alpha).map(|b| &self.lambdas[alpha] - &self.lambdas[b]).product()
    }

    /// Same weights with the fixed points relabelled: new `λ_i = λ_{perm[i]}`.
    pub fn permuted(&self, perm: [usize; 5]) -> Result<Self> {
        Self::new(perm.map(|i| self.lambdas[i].clone()))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.lambdas.iter().map(rational_string).collect()
    }
}

impl Default for WeightSpec {
    /// `(6, 7, 13, -10, -16)`, generic for the recursion through degree 6.
    fn default() -> Self {
        WeightSpec::from_ints([6, 7, 13, -10, -16]).expect("default weights are valid")
    }
}

impl fmt::Debug for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ=({})", self.lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// An equivariant class of ℂP⁴ through its values at the five fixed points.
#[derive(Clone, PartialEq, Debug)]
pub struct FixedPointClass<R> {
    pub v: [R; 5],
}

impl<R: Ring> FixedPointClass<R> {
    pub fn mul(&self, rhs: &Self) -> Self {
        FixedPointClass { v: std::array::from_fn(|a| self.v[a].mul(&rhs.v[a])) }
    }
}

/// Restriction of a polynomial class in `P` to the fixed points, `P ↦ λ_α`.
pub fn to_fixed_point<R: Ring>(phi: &CohomClass<R>, w: &WeightSpec) -> FixedPointClass<R> {
    FixedPointClass {
        v: std::array::from_fn(|a| {
            let l = w.lambda(a);
            let mut acc = R::zero();
            for k in (0..4).rev() {
                acc = acc.scale(l).add(&phi.c[k]);
            }
            acc
        }),
    }
}

/// `⟨φ, ψ⟩ = Σ_α 5λ_α φ(λ_α) ψ(λ_α) / e_α`
pub fn pair_equiv<R: Ring>(phi: &FixedPointClass<R>, psi: &FixedPointClass<R>, w: &WeightSpec) -> R {
    let mut acc = R::zero();
    for a in 0..5 {
        let weight = int(5) * w.lambda(a) / w.euler(a);
        acc = acc.add(&phi.v[a].mul(&psi.v[a]).scale(&weight));
    }
    acc
}
