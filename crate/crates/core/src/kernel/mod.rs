//! Exact integer and rational arithmetic shared by every other module.

mod matrix;
mod poly;

pub use matrix::{det_exact, rank_exact, ExactMatrix};
pub use poly::{eval_rational, MonomialPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Falling factorial `x (x-1) ... (x-r+1)`; the empty product for `r = 0`.
pub fn falling_factorial(x: i64, r: u32) -> Integer {
    let mut acc = Integer::one();
    for i in 0..r as i64 {
        let f = x - i;
        if f == 0 {
            return Integer::zero();
        }
        acc *= f;
    }
    acc
}

pub fn factorial(n: u32) -> Integer {
    (2..=n as u64).fold(Integer::one(), |acc, f| acc * f)
}

/// Binomial coefficient `C(x, t)` for any integer `x`, defined through the
/// falling factorial so that negative upper arguments are polynomial values.
pub fn binomial_general(x: i64, t: u32) -> Integer {
    if x >= 0 && (x as u64) < t as u64 {
        return Integer::zero();
    }
    // C(x, i+1) = C(x, i) (x - i) / (i + 1), and every C(x, i) is an integer.
    let mut acc = Integer::one();
    for i in 0..t as i64 {
        acc *= x - i;
        acc /= i + 1;
    }
    acc
}

/// Thue-Morse sign `(-1)^(number of binary 1s of k)`.
pub fn thue_morse(k: u64) -> i32 {
    if k.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `⌊log₂(2k)⌋`, i.e. the bit length of `k`; zero for `k = 0`.
pub fn bit_length(k: u64) -> u32 {
    64 - k.leading_zeros()
}

/// Smallest divisor of `n` greater than one (`n` itself when prime).
pub fn smallest_divisor(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: &Integer) -> Vec<Integer> {
    use num_integer::Integer as _;
    let n = num_traits::Signed::abs(n);
    if n.is_zero() {
        return Vec::new();
    }
    let mut rest = n.clone();
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    let mut p = Integer::from(2);
    while &p * &p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if !rest.is_one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![Integer::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_general(5, 2), 10.into());
        assert_eq!(binomial_general(-1, 2), 1.into());
        assert_eq!(binomial_general(3, 5), 0.into());
        assert_eq!(binomial_general(-7, 0), 1.into());
        assert_eq!(binomial_general(-1, 3), (-1).into());
        assert_eq!(binomial_general(-3, 2), 6.into());
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(6, 3), 120.into());
        assert_eq!(falling_factorial(-4, 0), 1.into());
        assert_eq!(falling_factorial(4, 5), 0.into());
        assert_eq!(falling_factorial(14, 14), factorial(14));
    }

    #[test]
    fn thue_morse_examples() {
        assert_eq!(thue_morse(0), 1);
        assert_eq!(thue_morse(3), 1);
        assert_eq!(thue_morse(21), -1);
    }

    #[test]
    fn thue_morse_doubling() {
        for k in 0..=10_000u64 {
            assert_eq!(thue_morse(2 * k), thue_morse(k));
            assert_eq!(thue_morse(2 * k + 1), -thue_morse(k));
        }
    }

    #[test]
    fn bit_length_is_degree() {
        assert_eq!(bit_length(0), 0);
        assert_eq!(bit_length(1), 1);
        assert_eq!(bit_length(21), 5);
        assert_eq!(bit_length(32), 6);
    }

    #[test]
    fn divisor_lists() {
        let d: Vec<i64> = divisors(&Integer::from(-12))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&factorial(9)).len(), 160);
        assert!(divisors(&Integer::zero()).is_empty());
        assert_eq!(smallest_divisor(91), 7);
        assert_eq!(smallest_divisor(13), 13);
    }

    proptest! {
        #[test]
        fn binomial_times_factorial_is_falling(x in -40i64..40, t in 0u32..12) {
            prop_assert_eq!(binomial_general(x, t) * factorial(t), falling_factorial(x, t));
        }
    }
}
