use super::poly::PolyH;
use super::ratfunc::RatFuncH;
use super::rational::{Rational, Ring};
use crate::error::{Error, Result};

/// A rational function in a local variable `p` with an explicitly factored
/// denominator: `N(p) / Π (p - root_i)^{mult_i}`.
#[derive(Clone, Debug)]
pub struct FactoredRational<R> {
    /// `numerator[k]` is the coefficient of `p^k`.
    pub numerator: Vec<R>,
    pub poles: Vec<(R, usize)>,
}

/// Truncated product of two coefficient lists.
fn mul_trunc<R: Ring>(a: &[R], b: &[R], depth: usize) -> Vec<R> {
    let mut out = vec![R::zero(); depth];
    for (i, x) in a.iter().enumerate().take(depth) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(depth - i) {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// Residue at `p = center`, computed from the local expansion in
/// `t = p - center` to `depth` Taylor terms.
///
/// The other denominator factors are expanded as geometric series in `t`,
/// the numerator by a Taylor shift. Regular points have residue zero.
pub fn residue_at_order<R: Ring>(f: &FactoredRational<R>, center: &R, depth: usize) -> Result<R> {
    let order: usize = f.poles.iter().filter(|(r, _)| r == center).map(|(_, m)| *m).sum();
    if order == 0 {
        return Ok(R::zero());
    }
    if depth < order {
        return Err(Error::Truncation { depth, pole_order: order });
    }

    // N(t + center) by Horner, keeping only t^0..t^{depth-1}.
    let mut local = vec![R::zero(); depth];
    for c in f.numerator.iter().rev() {
        let mut next = vec![R::zero(); depth];
        for k in 0..depth {
            let mut v = local[k].mul(center);
            if k > 0 {
                v = v.add(&local[k - 1]);
            }
            next[k] = v;
        }
        next[0] = next[0].add(c);
        local = next;
    }

    for (root, mult) in &f.poles {
        if root == center {
            continue;
        }
        // 1/(t + c) = Σ (-1)^n t^n / c^{n+1}
        let c = center.sub(root);
        let inv = c.inverse().ok_or_else(|| Error::NonUnit(format!("{c:?}")))?;
        let mut geo = Vec::with_capacity(depth);
        let mut term = inv.clone();
        let neg_inv = inv.neg();
        for _ in 0..depth {
            geo.push(term.clone());
            term = term.mul(&neg_inv);
        }
        for _ in 0..*mult {
            local = mul_trunc(&local, &geo, depth);
        }
    }
    Ok(local[order - 1].clone())
}

/// Residue of `f` at a simple pole: `num(pole) / den'(pole)`.
pub fn residue_simple(f: &RatFuncH, pole: &Rational) -> Result<Rational> {
    let order = pole_order(f.denom(), pole);
    if order != 1 {
        return Err(Error::PoleMultiplicity { pole: pole.clone(), order });
    }
    Ok(f.numer().eval(pole) / f.denom().derivative().eval(pole))
}

/// Multiplicity of `x` as a root of `p` (derivative test).
fn pole_order(p: &PolyH, x: &Rational) -> usize {
    let mut order = 0;
    let mut d = p.clone();
    while !d.is_zero() && d.eval(x).is_zero() {
        order += 1;
        d = d.derivative();
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn inv_lin(root: i64) -> RatFuncH {
        RatFuncH::linear(int(-root), int(1)).inverse().unwrap()
    }

    #[test]
    fn simple_residues() {
        assert_eq!(residue_simple(&inv_lin(1), &int(1)).unwrap(), int(1));
        let f = inv_lin(1).mul(&inv_lin(2));
        assert_eq!(residue_simple(&f, &int(2)).unwrap(), int(1));
        assert_eq!(residue_simple(&f, &int(1)).unwrap(), int(-1));
    }

    #[test]
    fn multiplicity_errors() {
        let f = inv_lin(1).mul(&inv_lin(1));
        assert_eq!(residue_simple(&f, &int(1)), Err(Error::PoleMultiplicity { pole: int(1), order: 2 }));
        assert!(matches!(residue_simple(&inv_lin(1), &int(3)), Err(Error::PoleMultiplicity { order: 0, .. })));
    }

    #[test]
    fn local_expansion_residues() {
        // 5p·p³/3! over p⁵ at 0 → 5/6
        let f =
            FactoredRational { numerator: vec![int(0), int(0), int(0), int(0), rat(5, 6)], poles: vec![(int(0), 5)] };
        assert_eq!(residue_at_order(&f, &int(0), 5).unwrap(), rat(5, 6));
        let inv_sq = FactoredRational { numerator: vec![int(1)], poles: vec![(int(0), 2)] };
        assert_eq!(residue_at_order(&inv_sq, &int(0), 2).unwrap(), int(0));
        let p_over_sq = FactoredRational { numerator: vec![int(0), int(1)], poles: vec![(int(0), 2)] };
        assert_eq!(residue_at_order(&p_over_sq, &int(0), 2).unwrap(), int(1));
        assert_eq!(residue_at_order(&p_over_sq, &int(0), 1), Err(Error::Truncation { depth: 1, pole_order: 2 }));
    }

    #[test]
    fn residue_at_order_matches_simple_residue() {
        // 1/((p-1)(p-2)^2) at p = 1 is 1, at p = 2 is -1.
        let f = FactoredRational { numerator: vec![int(1)], poles: vec![(int(1), 1), (int(2), 2)] };
        assert_eq!(residue_at_order(&f, &int(1), 1).unwrap(), int(1));
        assert_eq!(residue_at_order(&f, &int(2), 4).unwrap(), int(-1));
    }
}
