//! Weighted alternants: sums over permutations with a given signature of
//! the products of matrix weights `a[i][π_i]`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::Integer;
use crate::signature::{Signature, Step};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    order: usize,
    entries: Vec<Integer>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Ones,
    OnesMinusIdentity,
    /// First row keeps only column `l`, last row only column `m`.
    Endpoint {
        l: u32,
        m: u32,
    },
}

impl WeightMatrix {
    pub fn from_rows(rows: Vec<Vec<Integer>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for r in rows {
            if r.len() != order {
                return Err(Error::NotSquare {
                    rows: order,
                    cols: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Self { order, entries })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Integer) -> Self {
        let entries = (0..order * order)
            .map(|x| f(x / order, x % order))
            .collect();
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Zero-based access.
    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.entries[i * self.order + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Integer) {
        self.entries[i * self.order + j] = v;
    }

    /// Delete the first row and column `j` (zero-based); in the new first
    /// row, zero the columns that the next comparison rules out.
    fn expand_minor(&self, j: usize, step: Step) -> Self {
        let n = self.order;
        let mut m = Self::from_fn(n - 1, |r, c| {
            let c = if c < j { c } else { c + 1 };
            self.get(r + 1, c).clone()
        });
        if n > 1 {
            let zeroed = match step {
                Step::Up => 0..j,
                Step::Down => j..n - 1,
            };
            for c in zeroed {
                m.set(0, c, Integer::zero());
            }
        }
        m
    }
}

pub fn build_weight(kind: WeightKind, n: u32) -> Result<WeightMatrix> {
    let n = n as usize;
    Ok(match kind {
        WeightKind::Ones => WeightMatrix::from_fn(n, |_, _| Integer::one()),
        WeightKind::OnesMinusIdentity => {
            WeightMatrix::from_fn(n, |i, j| Integer::from(u8::from(i != j)))
        }
        WeightKind::Endpoint { l, m } => {
            for v in [l, m] {
                if v == 0 || v as usize > n {
                    return Err(Error::InvalidArgument(format!("column {v} not in 1..={n}")));
                }
            }
            let (l, m) = (l as usize - 1, m as usize - 1);
            WeightMatrix::from_fn(n, |i, j| {
                let keep = if i == 0 && i == n - 1 {
                    j == l && j == m
                } else if i == 0 {
                    j == l
                } else if i == n - 1 {
                    j == m
                } else {
                    true
                };
                Integer::from(u8::from(keep))
            })
        }
    })
}

fn check(a: &WeightMatrix, sig: &Signature) -> Result<()> {
    if a.order() != sig.order() as usize {
        return Err(Error::OrderMismatch {
            expected: sig.order() as usize,
            found: a.order(),
        });
    }
    Ok(())
}

/// Expansion along the first row, recursing on the restricted minors.
pub fn alt(a: &WeightMatrix, sig: &Signature) -> Result<Integer> {
    check(a, sig)?;
    Ok(expand(a, sig.steps()))
}

fn expand(a: &WeightMatrix, steps: &[Step]) -> Integer {
    match a.order() {
        0 => Integer::one(),
        1 => a.get(0, 0).clone(),
        2 => match steps[0] {
            Step::Up => a.get(0, 0) * a.get(1, 1),
            Step::Down => a.get(0, 1) * a.get(1, 0),
        },
        n => (0..n)
            .filter(|&j| !a.get(0, j).is_zero())
            .map(|j| a.get(0, j) * expand(&a.expand_minor(j, steps[0]), &steps[1..]))
            .sum(),
    }
}

/// Same value as [`alt`], by dynamic programming over (used columns, last
/// column); polynomial in `n` per subset instead of factorial.
pub fn alt_memo(a: &WeightMatrix, sig: &Signature) -> Result<Integer> {
    check(a, sig)?;
    let n = a.order();
    if n == 0 {
        return Ok(Integer::one());
    }
    if n > 24 {
        return Err(Error::Budget {
            what: "alternant order",
            value: n as u64,
            limit: 24,
        });
    }
    let steps = sig.steps();
    let mut layer: HashMap<(u32, usize), Integer> = HashMap::new();
    for j in 0..n {
        if !a.get(0, j).is_zero() {
            layer.insert((1 << j, j), a.get(0, j).clone());
        }
    }
    for (row, &step) in steps.iter().enumerate().map(|(r, s)| (r + 1, s)) {
        let mut next: HashMap<(u32, usize), Integer> = HashMap::new();
        for ((used, last), w) in layer {
            let cols = match step {
                Step::Up => last + 1..n,
                Step::Down => 0..last,
            };
            for c in cols {
                if used >> c & 1 == 1 || a.get(row, c).is_zero() {
                    continue;
                }
                *next.entry((used | 1 << c, c)).or_default() += &w * a.get(row, c);
            }
        }
        layer = next;
    }
    Ok(layer.into_values().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_signature, PositionMask};
    use crate::signature::decode_index;
    use crate::triangle::count_by_triangle;
    use proptest::prelude::*;

    #[test]
    fn worked_examples() {
        let sig: Signature = "1,-1,1".parse().unwrap();
        let ones = build_weight(WeightKind::Ones, 4).unwrap();
        let nofix = build_weight(WeightKind::OnesMinusIdentity, 4).unwrap();
        assert_eq!(alt(&ones, &sig).unwrap(), 5.into());
        assert_eq!(alt(&nofix, &sig).unwrap(), 2.into());
        let sig: Signature = "-1,1,1,-1,1".parse().unwrap();
        let ends = build_weight(WeightKind::Endpoint { l: 2, m: 6 }, 6).unwrap();
        assert_eq!(alt(&ends, &sig).unwrap(), 2.into());
        assert_eq!(alt_memo(&ends, &sig).unwrap(), 2.into());
    }

    #[test]
    fn builders() {
        let ones = build_weight(WeightKind::Ones, 2).unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| *ones.get(i, j) == Integer::one())));
        let d = build_weight(WeightKind::OnesMinusIdentity, 3).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| (*d.get(i, j) == Integer::zero()) == (i == j))));
        let e = build_weight(WeightKind::Endpoint { l: 2, m: 3 }, 4).unwrap();
        let row = |i: usize| (0..4).map(|j| e.get(i, j).clone()).collect::<Vec<_>>();
        let ints = |v: [i64; 4]| v.map(Integer::from).to_vec();
        assert_eq!(row(0), ints([0, 1, 0, 0]));
        assert_eq!(row(3), ints([0, 0, 1, 0]));
        assert_eq!(row(1), ints([1, 1, 1, 1]));
        assert!(build_weight(WeightKind::Endpoint { l: 5, m: 1 }, 4).is_err());
    }

    #[test]
    fn mismatch_rejected() {
        let sig: Signature = "1,-1".parse().unwrap();
        assert!(alt(&build_weight(WeightKind::Ones, 4).unwrap(), &sig).is_err());
        assert!(WeightMatrix::from_rows(vec![vec![1.into()], vec![]]).is_err());
    }

    #[test]
    fn ones_matches_triangle() {
        for n in 1..=7 {
            let ones = build_weight(WeightKind::Ones, n).unwrap();
            for k in 0..1u64 << (n - 1) {
                let sig = decode_index(n, k).unwrap();
                let t = count_by_triangle(&sig);
                assert_eq!(alt(&ones, &sig).unwrap(), t);
                assert_eq!(alt_memo(&ones, &sig).unwrap(), t);
            }
        }
    }

    fn small_case() -> impl Strategy<Value = (u32, u64, Vec<bool>, Vec<i64>)> {
        (1u32..=7).prop_flat_map(|n| {
            let nn = (n * n) as usize;
            (
                Just(n),
                0..1u64 << (n - 1),
                prop::collection::vec(any::<bool>(), nn),
                prop::collection::vec(-4i64..=4, nn),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn zero_one_matches_oracle((n, k, bits, _w) in small_case()) {
            let sig = decode_index(n, k).unwrap();
            let rows: Vec<Vec<bool>> = bits.chunks(n as usize).map(|c| c.to_vec()).collect();
            let mask = PositionMask::from_rows(&rows).unwrap();
            let a = WeightMatrix::from_fn(n as usize, |i, j| Integer::from(u8::from(rows[i][j])));
            let expected = count_signature(&sig, Some(&mask)).unwrap();
            prop_assert_eq!(alt(&a, &sig).unwrap(), expected.clone());
            prop_assert_eq!(alt_memo(&a, &sig).unwrap(), expected);
        }

        #[test]
        fn weighted_row_linearity((n, k, _bits, w) in small_case(), row in 0usize..7) {
            prop_assume!(n <= 6);
            let row = row % n as usize;
            let sig = decode_index(n, k).unwrap();
            let a = WeightMatrix::from_fn(n as usize, |i, j| w[i * n as usize + j].into());
            let doubled = WeightMatrix::from_fn(n as usize, |i, j| {
                let v = a.get(i, j).clone();
                if i == row { v * 2 } else { v }
            });
            let base = alt(&a, &sig).unwrap();
            prop_assert_eq!(alt(&doubled, &sig).unwrap(), &base * 2);
            prop_assert_eq!(alt_memo(&a, &sig).unwrap(), base);
        }
    }
}
