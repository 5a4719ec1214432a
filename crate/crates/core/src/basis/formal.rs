use super::construct::{construct, ConstructMethod};
use crate::kernel::{bit_length, thue_morse, Integer};

/// `{a\k}` for any `k`, including indices past `2^(a-1)` where the count
/// loses its combinatorial meaning.
pub fn formal_value(a: u32, k: u64) -> Integer {
    if a == 0 {
        return thue_morse(k).into();
    }
    let i = if a >= 64 { k } else { k & ((1u64 << a) - 1) };
    if a <= 64 && i >> (a - 1) & 1 == 1 {
        return Integer::from(0);
    }
    construct(i, ConstructMethod::Recursion).evaluate(a as i64) * thue_morse(k - i)
}

/// `formal_value(a, k)` for `k = 0..len`.
pub fn row_sequence(a: u32, len: usize) -> Vec<Integer> {
    (0..len as u64).map(|k| formal_value(a, k)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaIndexSet {
    k: u64,
    /// `(i, λ(k; i))` by ascending `i`.
    members: Vec<(u32, u64)>,
}

impl LambdaIndexSet {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn members(&self) -> &[(u32, u64)] {
        &self.members
    }

    pub fn indices(&self) -> Vec<u32> {
        self.members.iter().map(|(i, _)| *i).collect()
    }

    pub fn lambda(&self, i: u32) -> Option<u64> {
        self.members.iter().find(|(j, _)| *j == i).map(|(_, l)| *l)
    }
}

/// Indices `i ≤ bit_length(k)` where `⌊k/2^i - 1/2⌋ = ⌈(k+1)/2^i - 1⌉`.
pub fn lambda_set(k: u64) -> LambdaIndexSet {
    let kk = k as i128;
    let members = (1..=bit_length(k))
        .filter_map(|i| {
            let p = 1i128 << i;
            let lo = num_integer::Integer::div_floor(&(2 * kk - p), &(2 * p));
            let hi = num_integer::Integer::div_ceil(&(kk + 1 - p), &p);
            (lo == hi).then_some((i, lo as u64))
        })
        .collect();
    LambdaIndexSet { k, members }
}
