//! Ground-truth counts by direct enumeration of permutations.

use rayon::prelude::*;

use crate::error::{budget, Error, Result};
use crate::kernel::Integer;
use crate::signature::{self, Signature, Step};

/// Largest order accepted by the pruned depth-first search.
pub const SEARCH_LIMIT: u32 = 16;
/// Default largest order for the full `n!` scan of [`counts_all`].
pub const FULL_SCAN_LIMIT: u32 = 10;
pub const DERANGEMENT_LIMIT: u32 = 14;
pub const STIRLING_LIMIT: u32 = 12;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub fn identity(n: u32) -> Self {
        Self((1..=n).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn signature(&self) -> Signature {
        Signature::new(
            self.0
                .windows(2)
                .map(|w| if w[1] > w[0] { Step::Up } else { Step::Down })
                .collect(),
        )
    }

    pub fn cycle_count(&self) -> u32 {
        cycle_count(&self.0)
    }

    pub fn fixed_points(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize == i + 1)
            .count()
    }
}

fn cycle_count(values: &[u32]) -> u32 {
    let mut seen = 0u64;
    let mut cycles = 0;
    for start in 0..values.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while seen >> i & 1 == 0 {
            seen |= 1 << i;
            i = values[i] as usize - 1;
        }
    }
    cycles
}

/// Which values may sit at which positions: bit `j - 1` of row `i - 1` is
/// set when value `j` is allowed at position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionMask {
    rows: Vec<u64>,
}

impl PositionMask {
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        if n > 64 {
            return Err(Error::Budget {
                what: "mask order",
                value: n as u64,
                limit: 64,
            });
        }
        rows.iter()
            .map(|r| {
                if r.len() != n {
                    return Err(Error::OrderMismatch {
                        expected: n,
                        found: r.len(),
                    });
                }
                Ok(r.iter()
                    .enumerate()
                    .fold(0u64, |m, (j, &b)| m | (u64::from(b) << j)))
            })
            .collect::<Result<_>>()
            .map(|rows| Self { rows })
    }

    pub fn ones(n: u32) -> Self {
        Self {
            rows: vec![full(n); n as usize],
        }
    }

    /// `J - I`: no fixed points.
    pub fn no_fixed(n: u32) -> Self {
        Self {
            rows: (0..n).map(|i| full(n) & !(1 << i)).collect(),
        }
    }

    /// Only value `first` in position 1 and only value `last` in position `n`.
    pub fn endpoints(n: u32, first: u32, last: u32) -> Result<Self> {
        for v in [first, last] {
            if v == 0 || v > n {
                return Err(Error::InvalidArgument(format!(
                    "endpoint value {v} not in 1..={n}"
                )));
            }
        }
        let mut rows = vec![full(n); n as usize];
        rows[0] = 1 << (first - 1);
        rows[n as usize - 1] = if n == 1 {
            rows[0] & 1 << (last - 1)
        } else {
            1 << (last - 1)
        };
        Ok(Self { rows })
    }

    pub fn order(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn allows(&self, position: usize, value: u32) -> bool {
        self.rows[position - 1] >> (value - 1) & 1 == 1
    }
}

fn full(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Values strictly above / below `last` (1-based) as bit masks.
fn above(last: u32) -> u64 {
    if last >= 64 {
        0
    } else {
        !((1u64 << last) - 1)
    }
}

fn below(last: u32) -> u64 {
    (1u64 << (last - 1)) - 1
}

fn candidates(steps: &[Step], allowed: &[u64], used: u64, last: u32, pos: usize) -> u64 {
    let mut c = allowed[pos] & !used;
    if pos > 0 {
        c &= match steps[pos - 1] {
            Step::Up => above(last),
            Step::Down => below(last),
        };
    }
    c
}

fn search(steps: &[Step], allowed: &[u64], used: u64, last: u32, pos: usize) -> u64 {
    if pos == allowed.len() {
        return 1;
    }
    let mut c = candidates(steps, allowed, used, last, pos);
    let mut total = 0;
    while c != 0 {
        let b = c.trailing_zeros();
        c &= c - 1;
        total += search(steps, allowed, used | 1 << b, b + 1, pos + 1);
    }
    total
}

fn mask_rows(sig: &Signature, mask: Option<&PositionMask>) -> Result<Vec<u64>> {
    let n = sig.order();
    budget("search order", n as u64, SEARCH_LIMIT as u64)?;
    match mask {
        Some(m) if m.order() != n => Err(Error::OrderMismatch {
            expected: n as usize,
            found: m.order() as usize,
        }),
        Some(m) => Ok(m.rows.clone()),
        None => Ok(PositionMask::ones(n).rows),
    }
}

/// Number of permutations with signature `sig` (respecting `mask` if given),
/// by depth-first construction that only extends prefixes consistent with
/// the signature and the mask. The first position is split across threads.
pub fn count_signature(sig: &Signature, mask: Option<&PositionMask>) -> Result<Integer> {
    let allowed = mask_rows(sig, mask)?;
    let steps = sig.steps();
    let first = allowed[0];
    let total: u64 = (0..sig.order())
        .into_par_iter()
        .filter(|b| first >> b & 1 == 1)
        .map(|b| search(steps, &allowed, 1 << b, b + 1, 1))
        .sum();
    Ok(total.into())
}

/// `{n\k}` for every `k < 2^(n-1)` from one pass over all `n!` permutations.
pub fn counts_all(n: u32) -> Result<Vec<Integer>> {
    counts_all_limited(n, FULL_SCAN_LIMIT)
}

pub fn counts_all_limited(n: u32, limit: u32) -> Result<Vec<Integer>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    budget("full-scan order", n as u64, limit as u64)?;
    fn scan(n: u32, used: u64, last: u32, depth: u32, k: u64, out: &mut [u64]) {
        if depth == n {
            out[k as usize] += 1;
            return;
        }
        let mut c = full(n) & !used;
        while c != 0 {
            let b = c.trailing_zeros();
            c &= c - 1;
            let k = if depth == 0 {
                0
            } else {
                k << 1 | u64::from(b + 1 > last)
            };
            scan(n, used | 1 << b, b + 1, depth + 1, k, out);
        }
    }
    let mut out = vec![0u64; 1 << (n - 1)];
    scan(n, 0, 0, 0, 0, &mut out);
    Ok(out.into_iter().map(Integer::from).collect())
}

/// A permutation with index `k`, built from the identity by reversing, for
/// each maximal run of binary 0s at positions `i..i+t-1`, the block of
/// values at positions `i..=i+t`.
pub fn witness_permutation(n: u32, k: u64) -> Result<Permutation> {
    signature::check_range(n, k)?;
    let mut values: Vec<u32> = (1..=n).collect();
    let bits: Vec<bool> = (0..n - 1).map(|i| k >> (n - 2 - i) & 1 == 1).collect();
    let mut i = 0;
    while i < bits.len() {
        if bits[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i < bits.len() && !bits[i] {
            i += 1;
        }
        values[start..=i].reverse();
    }
    Permutation::new(values)
}

/// Alternating (`π_1 < π_2 > π_3 < ...`) permutations without fixed points.
pub fn alternating_derangements(n: u32) -> Result<Integer> {
    budget("derangement order", n as u64, DERANGEMENT_LIMIT as u64)?;
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    count_signature(&Signature::alternating(n), Some(&PositionMask::no_fixed(n)))
}

/// Alternating permutations of `n` grouped by number of cycles; entry `l`
/// (for `0 ≤ l ≤ n`) is the count with exactly `l` cycles.
pub fn alternating_stirling_row(n: u32) -> Result<Vec<Integer>> {
    budget("stirling order", n as u64, STIRLING_LIMIT as u64)?;
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    fn walk(steps: &[Step], allowed: &[u64], used: u64, perm: &mut Vec<u32>, out: &mut [u64]) {
        let pos = perm.len();
        if pos == allowed.len() {
            out[cycle_count(perm) as usize] += 1;
            return;
        }
        let last = perm.last().copied().unwrap_or(0);
        let mut c = candidates(steps, allowed, used, last, pos);
        while c != 0 {
            let b = c.trailing_zeros();
            c &= c - 1;
            perm.push(b + 1);
            walk(steps, allowed, used | 1 << b, perm, out);
            perm.pop();
        }
    }
    let sig = Signature::alternating(n);
    let allowed = PositionMask::ones(n).rows;
    let rows: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|b| {
            let mut out = vec![0u64; n as usize + 1];
            let mut perm = vec![b + 1];
            walk(sig.steps(), &allowed, 1 << b, &mut perm, &mut out);
            out
        })
        .collect();
    let mut row = vec![0u64; n as usize + 1];
    for r in rows {
        for (acc, v) in row.iter_mut().zip(r) {
            *acc += v;
        }
    }
    Ok(row.into_iter().map(Integer::from).collect())
}

/// Alternating permutations of `n` with exactly `l` cycles.
pub fn alternating_stirling(n: u32, l: u32) -> Result<Integer> {
    if l == 0 || l > n {
        return Err(Error::InvalidArgument(format!(
            "cycle count {l} not in 1..={n}"
        )));
    }
    Ok(alternating_stirling_row(n)?.swap_remove(l as usize))
}
