//! Up-down signatures and the binary index that encodes them.
//!
//! For a signature `(q_1, ..., q_{n-1})` the index is the `(n-1)`-digit
//! binary number whose digit of weight `2^(n-1-i)` is 1 exactly when
//! `q_i = +1`. Leading zeros are meaningful: they are carried by `n`, not by
//! `k`, which is what makes the count a polynomial in `n` for fixed `k`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest order whose indices fit in a `u64`.
pub const MAX_ORDER: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn sign(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    steps: Vec<Step>,
}

impl Signature {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    /// Build from `±1` integers.
    pub fn from_signs(signs: &[i32]) -> Result<Self> {
        signs
            .iter()
            .enumerate()
            .map(|(i, &s)| match s {
                1 => Ok(Step::Up),
                -1 => Ok(Step::Down),
                _ => Err(Error::SignatureParse {
                    position: i + 1,
                    token: s.to_string(),
                }),
            })
            .collect::<Result<_>>()
            .map(Self::new)
    }

    /// Signature of the alternating shape `π_1 < π_2 > π_3 < ...` of order `n`.
    pub fn alternating(n: u32) -> Self {
        Self::new(
            (0..n.saturating_sub(1))
                .map(|i| if i % 2 == 0 { Step::Up } else { Step::Down })
                .collect(),
        )
    }

    pub fn constant(n: u32, step: Step) -> Self {
        Self::new(vec![step; n.saturating_sub(1) as usize])
    }

    /// Number of permuted elements.
    pub fn order(&self) -> u32 {
        self.steps.len() as u32 + 1
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn signs(&self) -> Vec<i32> {
        self.steps.iter().map(|s| s.sign()).collect()
    }

    /// `[q_1..q_{n-1}] ↦ [-q_{n-1}..-q_1]`, which preserves the count.
    pub fn reverse_negate(&self) -> Self {
        Self::new(self.steps.iter().rev().map(|s| s.flip()).collect())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.signs().iter().map(i32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated `+1`/`1`/`-1` or `u`/`d` tokens; the empty string is the
/// signature of order 1.
impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::new(Vec::new()));
        }
        s.split(',')
            .enumerate()
            .map(|(i, tok)| match tok.trim() {
                "+1" | "1" | "u" | "U" => Ok(Step::Up),
                "-1" | "d" | "D" => Ok(Step::Down),
                other => Err(Error::SignatureParse {
                    position: i + 1,
                    token: other.to_string(),
                }),
            })
            .collect::<Result<_>>()
            .map(Self::new)
    }
}

/// Up-down index `k` together with its binary structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownIndex(u64);

impl UpDownIndex {
    pub fn new(k: u64) -> Self {
        Self(k)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Number of binary 1s.
    pub fn ones(self) -> u32 {
        self.0.count_ones()
    }

    /// Strictly decreasing `t_1 > ... > t_m` with `k = Σ 2^(t_i - 1)`.
    pub fn exponents(self) -> Vec<u32> {
        exponents(self.0)
    }

    /// Places `s_i = t_1 - t_i + 1` of the 1s after the leading zeros.
    pub fn places(self) -> Vec<u32> {
        let t = self.exponents();
        match t.first() {
            Some(&t1) => t.iter().map(|&ti| t1 - ti + 1).collect(),
            None => Vec::new(),
        }
    }
}

impl fmt::Display for UpDownIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for UpDownIndex {
    fn from(k: u64) -> Self {
        Self(k)
    }
}

pub fn exponents(k: u64) -> Vec<u32> {
    (1..=64u32)
        .rev()
        .filter(|&t| k >> (t - 1) & 1 == 1)
        .collect()
}

/// Exclusive upper bound `2^(n-1)` of combinatorial indices for order `n`.
pub fn index_bound(n: u32) -> u128 {
    1u128 << n.saturating_sub(1)
}

pub(crate) fn check_range(n: u32, k: u64) -> Result<()> {
    if n == 0 || n > MAX_ORDER || k as u128 >= index_bound(n) {
        Err(Error::IndexOutOfRange { n, k })
    } else {
        Ok(())
    }
}

pub fn encode_index(sig: &Signature) -> Result<UpDownIndex> {
    let n = sig.order();
    if n > MAX_ORDER {
        return Err(Error::Budget {
            what: "signature order",
            value: n as u64,
            limit: MAX_ORDER as u64,
        });
    }
    Ok(UpDownIndex(
        sig.steps
            .iter()
            .fold(0u64, |k, s| (k << 1) | u64::from(*s == Step::Up)),
    ))
}

pub fn decode_index(n: u32, k: u64) -> Result<Signature> {
    check_range(n, k)?;
    Ok(Signature::new(
        (0..n - 1)
            .map(|i| {
                if k >> (n - 2 - i) & 1 == 1 {
                    Step::Up
                } else {
                    Step::Down
                }
            })
            .collect(),
    ))
}

/// `2^(n-1) - 1 - k`, the index of the reverse-negated signature.
pub fn complement_index(n: u32, k: u64) -> Result<u64> {
    check_range(n, k)?;
    Ok((index_bound(n) - 1) as u64 - k)
}

/// Index of the alternating signature of order `n`:
/// `(2^(n+1) - 3 + (-1)^n) / 6`, with the value 0 for `n ≤ 1`.
///
/// Panics if `n > 64`.
pub fn alternating_index(n: u32) -> u64 {
    assert!(
        n <= MAX_ORDER,
        "alternating_index: n = {n} exceeds {MAX_ORDER}"
    );
    let sign: i128 = if n % 2 == 0 { 1 } else { -1 };
    ((1i128 << (n + 1)) - 3 + sign).div_euclid(6) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_examples() {
        let sig = Signature::from_signs(&[-1, 1, 1, -1, 1]).unwrap();
        assert_eq!(encode_index(&sig).unwrap().value(), 13);
        assert_eq!(
            encode_index(&Signature::constant(7, Step::Down))
                .unwrap()
                .value(),
            0
        );
        assert_eq!(
            encode_index(&Signature::constant(7, Step::Up))
                .unwrap()
                .value(),
            63
        );
        assert_eq!(encode_index(&Signature::new(vec![])).unwrap().value(), 0);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_index(6, 13).unwrap().signs(), vec![-1, 1, 1, -1, 1]);
        assert_eq!(
            decode_index(5, 0).unwrap(),
            Signature::constant(5, Step::Down)
        );
        assert_eq!(decode_index(2, 1).unwrap().signs(), vec![1]);
        assert_eq!(decode_index(1, 0).unwrap().order(), 1);
        assert_eq!(
            decode_index(4, 8),
            Err(Error::IndexOutOfRange { n: 4, k: 8 })
        );
        assert!(decode_index(1, 1).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_index(6, 13).unwrap(), 18);
        assert_eq!(complement_index(9, 0).unwrap(), 255);
        for k in 0..32 {
            assert_eq!(
                complement_index(6, complement_index(6, k).unwrap()).unwrap(),
                k
            );
            let sig = decode_index(6, k).unwrap();
            let negated = Signature::new(sig.steps().iter().map(|s| s.flip()).collect());
            assert_eq!(
                encode_index(&negated).unwrap().value(),
                complement_index(6, k).unwrap()
            );
        }
        assert!(complement_index(3, 4).is_err());
    }

    #[test]
    fn round_trips() {
        for n in 1..=10 {
            for k in 0..(1u64 << (n - 1)) {
                let sig = decode_index(n, k).unwrap();
                assert_eq!(sig.order(), n);
                assert_eq!(encode_index(&sig).unwrap().value(), k);
            }
        }
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponents(21), vec![5, 3, 1]);
        assert_eq!(exponents(26), vec![5, 4, 2]);
        assert!(exponents(0).is_empty());
        assert_eq!(UpDownIndex::new(21).places(), vec![1, 3, 5]);
        for k in 0..=1_000_000u64 {
            let back: u64 = exponents(k).iter().map(|t| 1u64 << (t - 1)).sum();
            assert_eq!(back, k);
        }
    }

    #[test]
    fn alternating_indices() {
        let got: Vec<u64> = (1..=6).map(alternating_index).collect();
        assert_eq!(got, vec![0, 1, 2, 5, 10, 21]);
        // k_n = alternating_index(n + 1)
        for n in 3..=30 {
            assert_eq!(
                alternating_index(n + 1) - alternating_index(n - 1),
                1 << (n - 1)
            );
        }
        for n in 1..=20 {
            let k = encode_index(&Signature::alternating(n)).unwrap().value();
            assert_eq!(k, alternating_index(n));
        }
    }

    #[test]
    fn parsing() {
        let a: Signature = "-1,+1,1,d,u".parse().unwrap();
        assert_eq!(a.signs(), vec![-1, 1, 1, -1, 1]);
        assert_eq!(a.to_string(), "-1,1,1,-1,1");
        assert_eq!("".parse::<Signature>().unwrap().order(), 1);
        assert_eq!(
            "1,-1,x".parse::<Signature>(),
            Err(Error::SignatureParse {
                position: 3,
                token: "x".into()
            })
        );
        assert!(Signature::from_signs(&[1, 0]).is_err());
    }
}
