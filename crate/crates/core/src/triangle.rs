//! The boustrophedon triangle: one row per comparison, built from the last
//! comparison back to the first, whose final row sums to the count.

use std::fmt;

use num_traits::Zero;

use crate::kernel::Integer;
use crate::signature::{Signature, Step};

/// Which side of a row received the fresh zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Integer>>,
    sides: Vec<Side>,
    additions: u64,
}

impl Triangle {
    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// Insertion side of the zero for rows `2..=n`.
    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn last_row(&self) -> &[Integer] {
        self.rows.last().expect("triangle has at least one row")
    }

    pub fn total(&self) -> Integer {
        self.last_row().iter().sum()
    }

    /// Number of big-integer additions performed while building.
    pub fn additions(&self) -> u64 {
        self.additions
    }
}

pub fn triangle_rows(sig: &Signature) -> Triangle {
    let mut rows = vec![vec![Integer::from(1)]];
    let mut sides = Vec::with_capacity(sig.steps().len());
    let mut additions = 0;
    for &step in sig.steps().iter().rev() {
        let old = rows.last().unwrap();
        let r = old.len();
        let mut new = vec![Integer::zero(); r + 1];
        match step {
            Step::Up => {
                for j in (0..r).rev() {
                    new[j] = &new[j + 1] + &old[j];
                }
                sides.push(Side::Right);
            }
            Step::Down => {
                for j in 1..=r {
                    new[j] = &new[j - 1] + &old[j - 1];
                }
                sides.push(Side::Left);
            }
        }
        additions += r as u64;
        rows.push(new);
    }
    Triangle {
        rows,
        sides,
        additions,
    }
}

pub fn count_by_triangle(sig: &Signature) -> Integer {
    triangle_rows(sig).total()
}

/// Centered layout, one row per line.
impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            + 1;
        let n = self.rows.len();
        for (r, row) in self.rows.iter().enumerate() {
            let mut line = String::new();
            for (j, v) in row.iter().enumerate() {
                let col = (n - 1 - r + 2 * j) * w;
                let s = v.to_string();
                let pad = (col + w).saturating_sub(line.len() + s.len());
                line.push_str(&" ".repeat(pad));
                line.push_str(&s);
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn worked_example() {
        let sig: Signature = "-1,1,1,-1,1".parse().unwrap();
        let t = triangle_rows(&sig);
        assert_eq!(t.last_row(), ints(&[0, 5, 8, 9, 9, 9]).as_slice());
        assert_eq!(t.total(), 40.into());
        assert_eq!(t.rows().len(), 6);
    }

    #[test]
    fn small_rows() {
        let t = triangle_rows(&"1".parse().unwrap());
        assert_eq!(t.rows(), &[ints(&[1]), ints(&[1, 0])]);
        let t = triangle_rows(&"-1,1".parse().unwrap());
        assert_eq!(t.rows()[2], ints(&[0, 1, 1]));
        assert_eq!(count_by_triangle(&Signature::new(vec![])), 1.into());
        assert_eq!(
            count_by_triangle(&Signature::constant(20, Step::Up)),
            1.into()
        );
    }

    #[test]
    fn fresh_side_is_zero() {
        let sig: Signature = "1,-1,-1,1,1,-1,1".parse().unwrap();
        let t = triangle_rows(&sig);
        for (row, side) in t.rows()[1..].iter().zip(t.sides()) {
            let fresh = match side {
                Side::Left => &row[0],
                Side::Right => row.last().unwrap(),
            };
            assert!(fresh.is_zero());
            assert!(row.iter().all(|v| *v >= Integer::zero()));
        }
    }

    #[test]
    fn printer_is_centered() {
        let t = triangle_rows(&"1".parse().unwrap());
        assert_eq!(t.to_string(), "   1\n 1   0\n");
    }
}
