//! Schubert calculus on the Grassmannian of lines `G(2, n)`, enough to count
//! the lines on a generic hypersurface of degree `2n-5` in `P^{n-1}`.
//!
//! Classes are indexed by partitions `(a, b)` in the `2 × (n-2)` box. With
//! `x₁, x₂` the Chern roots of the dual tautological bundle, `σ_{a,b}` is the
//! Schur polynomial `s_{a,b}(x₁, x₂)` and partitions leaving the box vanish.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// An integral combination of Schubert classes on `G(2, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    pub n: usize,
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl SchubertClass {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2, "G(2, n) needs n >= 2");
        SchubertClass { n, terms: BTreeMap::new() }
    }

    /// `σ_{a,b}`, or zero when the partition leaves the box.
    pub fn sigma(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= b, "partitions are non-increasing");
        let mut s = Self::zero(n);
        s.add_term(a, b, &BigInt::from(1));
        s
    }

    pub fn point(n: usize) -> Self {
        Self::sigma(n, n - 2, n - 2)
    }

    fn width(&self) -> usize {
        self.n - 2
    }

    fn add_term(&mut self, a: usize, b: usize, c: &BigInt) {
        if a > self.width() || c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the top-dimensional part.
    pub fn integrate(&self) -> BigInt {
        let w = self.width();
        self.coeff(w, w)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, &(c * k));
        }
        out
    }

    /// Pieri: `σ₁·σ_{a,b} = σ_{a+1,b} + σ_{a,b+1}`, dropping terms outside the box.
    pub fn mul_sigma1(&self) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, b), c) in &self.terms {
            out.add_term(a + 1, *b, c);
            if b < a {
                out.add_term(*a, b + 1, c);
            }
        }
        out
    }

    /// `σ₁₁·σ_{a,b} = σ_{a+1,b+1}`
    pub fn mul_sigma11(&self) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, b), c) in &self.terms {
            out.add_term(a + 1, b + 1, c);
        }
        out
    }

    /// Multiplication by `σ_k = σ₁σ_{k-1} - σ₁₁σ_{k-2}`.
    fn mul_special(&self, k: usize) -> Self {
        let mut prev = Self::zero(self.n);
        let mut cur = self.clone();
        for _ in 0..k {
            let next = cur.mul_sigma1().sub(&prev.mul_sigma11());
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// The cup product, through `σ_{c,d} = σ₁₁^d σ_{c-d}`.
pub fn schubert_mul(x: &SchubertClass, y: &SchubertClass) -> SchubertClass {
    assert_eq!(x.n, y.n, "classes live on different Grassmannians");
    let mut out = SchubertClass::zero(x.n);
    for ((c, d), k) in &y.terms {
        let mut t = x.mul_special(c - d);
        for _ in 0..*d {
            t = t.mul_sigma11();
        }
        out = out.add(&t.scale(k));
    }
    out
}

/// A symmetric polynomial in `x₁, x₂`, by exponent pairs.
type SymPoly = BTreeMap<(usize, usize), BigInt>;

fn schur(a: usize, b: usize) -> SymPoly {
    (b..=a).map(|k| ((k, a + b - k), BigInt::from(1))).collect()
}

fn sym_mul(x: &SymPoly, y: &SymPoly) -> SymPoly {
    let mut out = SymPoly::new();
    for ((i, j), c) in x {
        for ((k, l), d) in y {
            *out.entry((i + k, j + l)).or_insert_with(BigInt::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expansion of a symmetric polynomial in the Schur basis, then projection
/// to `G(2, n)`.
fn to_schubert(mut f: SymPoly, n: usize) -> SchubertClass {
    let mut out = SchubertClass::zero(n);
    // The lex-largest monomial x₁^a x₂^b has a >= b and leads s_{a,b}.
    while let Some((&(a, b), c)) = f.iter().next_back() {
        let c = c.clone();
        assert!(a >= b, "polynomial is not symmetric");
        out.add_term(a, b, &c);
        for (mono, one) in schur(a, b) {
            let e = f.entry(mono).or_insert_with(BigInt::zero);
            *e -= &c * one;
        }
        f.retain(|_, v| !v.is_zero());
    }
    out
}

/// The product computed by multiplying Schur polynomials; an independent
/// route to [`schubert_mul`].
pub fn schubert_mul_via_schur(x: &SchubertClass, y: &SchubertClass) -> SchubertClass {
    let mut out = SchubertClass::zero(x.n);
    for ((a, b), c) in &x.terms {
        for ((e, f), d) in &y.terms {
            let prod = to_schubert(sym_mul(&schur(*a, *b), &schur(*e, *f)), x.n);
            out = out.add(&prod.scale(&(c * d)));
        }
    }
    out
}

/// Top Chern class of `Sym^k S*` on `G(2, n)`: `Π_{i=0}^{k} (i x₁ + (k-i) x₂)`.
pub fn top_chern_sym(k: usize, n: usize) -> SchubertClass {
    let mut f: SymPoly = [((0, 0), BigInt::from(1))].into_iter().collect();
    for i in 0..=k {
        let mut factor = SymPoly::new();
        if i > 0 {
            factor.insert((1, 0), BigInt::from(i));
        }
        if i < k {
            factor.insert((0, 1), BigInt::from(k - i));
        }
        f = sym_mul(&f, &factor);
    }
    to_schubert(f, n)
}

/// Lines on a generic hypersurface of degree `2n-5` in `P^{n-1}`, where the
/// rank of `Sym^{2n-5} S*` matches `dim G(2, n)`.
pub fn lines_on_hypersurface(n: usize) -> BigInt {
    assert!(n >= 3);
    top_chern_sym(2 * n - 5, n).integrate()
}

/// The 2875 lines on a generic quintic threefold.
pub fn count_lines_on_quintic() -> BigInt {
    let count = lines_on_hypersurface(5);
    debug_assert!(count.is_positive());
    count
}
