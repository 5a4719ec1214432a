use num_traits::{One, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Integer>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<Integer>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::OrderMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Integer) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self {
            rows: order,
            cols: order,
            entries,
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                Integer::one()
            } else {
                Integer::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }
}

/// Determinant by single-step fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so each update divides
/// exactly by the previous pivot. A zero pivot is replaced by a row swap.
pub fn det_exact(m: &ExactMatrix) -> Result<Integer> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Integer::one());
    }
    let mut a: Vec<Vec<Integer>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Integer::zero()),
            }
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = Integer::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Rank by Gaussian elimination over the rationals.
pub fn rank_exact(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..m.rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..m.cols {
                let v = &factor * &a[rank][c];
                a[r][c] -= v;
            }
        }
        rank += 1;
    }
    rank
}
