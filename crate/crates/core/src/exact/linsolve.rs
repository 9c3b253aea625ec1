use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// `matrix · x = rhs` over the rationals.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinearSystem {
    pub cols: usize,
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(cols: usize) -> Self {
        LinearSystem { cols, matrix: Vec::new(), rhs: Vec::new() }
    }

    pub fn push_row(&mut self, row: Vec<Rational>, rhs: Rational) {
        assert_eq!(row.len(), self.cols, "row length must match the column count");
        self.matrix.push(row);
        self.rhs.push(rhs);
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }
}

/// Outcome of a consistent solve: a particular solution plus a nullspace basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub rank: usize,
    pub particular: Vec<Rational>,
    pub nullspace: Vec<Vec<Rational>>,
}

impl Solution {
    pub fn is_unique(&self) -> bool {
        self.nullspace.is_empty()
    }
}

/// Gauss–Jordan elimination with exact pivots.
pub fn solve_exact(sys: &LinearSystem) -> Result<Solution> {
    let n = sys.cols;
    let mut rows: Vec<Vec<Rational>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .filter(|(r, b)| !(r.iter().all(Zero::is_zero) && b.is_zero()))
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }

    if rows[rank..].iter().any(|r| !r[n].is_zero()) {
        return Err(Error::Inconsistent { rank, augmented_rank: rank + 1 });
    }

    let mut particular = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = rows[i][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::from_integer(1.into());
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -rows[i][f].clone();
            }
            v
        })
        .collect();
    Ok(Solution { rank, particular, nullspace })
}
