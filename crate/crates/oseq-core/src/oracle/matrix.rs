//! Exact row reduction over the integers and rationals.
//!
//! Elimination is fraction-free: rows are cross-multiplied and re-divided by
//! their content after every step, which keeps entries near the size of the
//! minors they represent.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row echelon form of an integer matrix, with pivot bookkeeping.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    pub cols: usize,
    /// Nonzero echelon rows; row `r` has its first nonzero entry at
    /// `pivots[r]`, and the pivot columns increase strictly.
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.binary_search(&col).is_ok()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Reduces a rational vector modulo the row space; the result vanishes
    /// on every pivot column.
    pub fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        debug_assert_eq!(v.len(), self.cols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let coef = &v[pc] / BigRational::from(row[pc].clone());
            for j in pc..self.cols {
                if !row[j].is_zero() {
                    v[j] -= &coef * BigRational::from(row[j].clone());
                }
            }
        }
        v
    }

    /// Fully reduced rational basis: unit pivots, zeros above and below.
    pub fn reduced_rows(&self) -> Vec<Vec<BigRational>> {
        let mut rows: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| BigRational::from(e.clone())).collect())
            .collect();
        for r in (0..rows.len()).rev() {
            let pc = self.pivots[r];
            let pivot = rows[r][pc].clone();
            for e in rows[r].iter_mut() {
                *e /= pivot.clone();
            }
            let (upper, lower) = rows.split_at_mut(r);
            let pivot_row = &lower[0];
            for row in upper.iter_mut() {
                if row[pc].is_zero() {
                    continue;
                }
                let coef = row[pc].clone();
                for j in pc..self.cols {
                    let delta = &coef * &pivot_row[j];
                    row[j] -= delta;
                }
            }
        }
        rows
    }
}

/// Divides a row by the gcd of its entries.
fn reduce_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for e in row.iter() {
        if !e.is_zero() {
            g = g.gcd(e);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        *e = &*e / &g;
    }
}

/// Cross-multiplication echelon form with content reduction.
pub(crate) fn echelon(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    for row in rows.iter_mut() {
        reduce_content(row);
    }
    let mut rank = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        // Prefer a small pivot to limit growth.
        let pivot_row = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].magnitude().bits());
        let Some(p) = pivot_row else { continue };
        rows.swap(rank, p);
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        let pivot = pivot_row[col].clone();
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..cols {
                row[j] = &pivot * &row[j] - &factor * &pivot_row[j];
            }
            reduce_content(row);
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Echelon { cols, rows, pivots }
}

/// Clears denominators row by row and eliminates; returns the echelon form.
pub(crate) fn echelon_rational(rows: Vec<Vec<BigRational>>, cols: usize) -> Echelon {
    let scaled: Vec<Vec<BigInt>> = rows.into_iter().map(clear_denominators).collect();
    echelon(scaled, cols)
}

/// Rank of a rational matrix.
pub(crate) fn rank_rational(rows: Vec<Vec<BigRational>>, cols: usize) -> usize {
    echelon_rational(rows, cols).rank()
}

fn clear_denominators(row: Vec<BigRational>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for e in &row {
        if !e.is_zero() {
            lcm = lcm.lcm(e.denom());
        }
    }
    row.into_iter()
        .map(|e| {
            if e.is_zero() {
                BigInt::zero()
            } else {
                e.numer() * (&lcm / e.denom())
            }
        })
        .collect()
}
