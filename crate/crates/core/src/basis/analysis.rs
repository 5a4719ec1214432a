use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use super::construct::{construct, ConstructMethod};
use super::formal::formal_value;
use super::routes::exponent_matrix;
use crate::error::{Error, Result};
use crate::kernel::{
    binomial_general, bit_length, divisors, factorial, rank_exact, smallest_divisor, thue_morse,
    ExactMatrix, Integer, MonomialPoly, Rational,
};
use crate::signature::{check_range, exponents};

/// `⌊log₂ 2k⌋`, or 0 for `k = 0`.
pub fn degree(k: u64) -> u32 {
    bit_length(k)
}

/// Positive integer roots of `{n\k}`, found among the divisors of `t_1!`.
pub fn positive_roots(k: u64) -> Vec<u32> {
    let p = construct(k, ConstructMethod::Recursion);
    let t1 = p.degree();
    let mut roots: Vec<u32> = divisors(&factorial(t1))
        .into_iter()
        .filter_map(|d| d.to_i64())
        .filter(|&d| d > 0 && p.evaluate(d).is_zero())
        .map(|d| d as u32)
        .collect();
    roots.sort_unstable_by(|a, b| b.cmp(a));
    roots
}

/// Writes `P = C·{n\k}` when the forward differences allow it.
pub fn recognize(p: &MonomialPoly) -> Option<(Rational, u64)> {
    let d = p.degree()?;
    if p.is_zero() || d > 64 {
        return None;
    }
    let values: Vec<Rational> = (0..=d as i64).map(|x| p.eval_integer(x)).collect();
    if values[0].is_zero() {
        return None;
    }
    let mut k = 0u64;
    let mut m = 0;
    for r in 1..=d {
        let diff: Rational = (0..=r)
            .map(|j| {
                let term =
                    &values[r - j] * Rational::from_integer(binomial_general(r as i64, j as u32));
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum();
        if diff.is_zero() {
            continue;
        }
        if !values[r].is_zero() {
            return None;
        }
        k |= 1 << (r - 1);
        m += 1;
    }
    let c = if m % 2 == 0 {
        values[0].clone()
    } else {
        -values[0].clone()
    };
    let candidate = construct(k, ConstructMethod::Recursion)
        .to_monomial()
        .scale(&c);
    (candidate == *p).then_some((c, k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub applicable: bool,
    /// `{n\k} mod n`, in `0..n`.
    pub residue: Integer,
    /// `τ_k mod n`, in `0..n`.
    pub expected: Integer,
}

impl Congruence {
    pub fn holds(&self) -> bool {
        self.residue == self.expected
    }
}

/// `{n\k} ≡ τ_k (mod n)` whenever every divisor `> 1` of `n` exceeds `⌊log₂ 2k⌋`.
pub fn congruence_residue(n: u32, k: u64) -> Result<Congruence> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "modulus {n} must be at least 2"
        )));
    }
    check_range(n, k)?;
    let modulus = Integer::from(n);
    let v = construct(k, ConstructMethod::Recursion).evaluate(n as i64);
    Ok(Congruence {
        applicable: smallest_divisor(n as u64) > degree(k) as u64,
        residue: v.mod_floor(&modulus),
        expected: Integer::from(thue_morse(k)).mod_floor(&modulus),
    })
}

/// `(c, d)` with `{n\k} ~ c·C(n, d)`.
pub fn leading_asymptotic(k: u64) -> Result<(Integer, u32)> {
    if k == 0 {
        return Err(Error::InvalidArgument("index must be positive".into()));
    }
    let d = bit_length(k);
    Ok((formal_value(d, k - (1 << (d - 1))), d))
}

/// Whether the exponent determinant matrix has full rank at `n`.
pub fn rank_check(n: i64, k: u64) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("index must be positive".into()));
    }
    let m = exponent_matrix(n, k);
    Ok(rank_exact(&m) == exponents(k).len() + 1)
}

/// Order `m+1` matrix whose determinant is `C(n-1, m)`: the place
/// determinant for `k = 2^m - 1`.
pub fn subset_identity_matrix(n: i64, m: u32) -> ExactMatrix {
    let m = m as usize;
    ExactMatrix::from_fn(m + 1, |r, c| {
        if c == 0 {
            return Integer::one();
        }
        if r == m {
            return binomial_general(n, (m + 1 - c) as u32);
        }
        if r == 0 {
            return Integer::from(u8::from(c == 1));
        }
        match c {
            c if c <= r => binomial_general(n - m as i64 + r as i64, (r + 1 - c) as u32),
            c if c == r + 1 => Integer::one(),
            _ => Integer::zero(),
        }
    })
}

pub fn subset_identity_det(n: i64, m: u32) -> Integer {
    crate::kernel::det_exact(&subset_identity_matrix(n, m)).expect("square by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::counts_all;

    #[test]
    fn roots_are_exponents() {
        assert_eq!(positive_roots(26), vec![5, 4, 2]);
        assert_eq!(positive_roots(21), vec![5, 3, 1]);
        assert_eq!(positive_roots(1), vec![1]);
        for k in 1..=256 {
            assert_eq!(positive_roots(k), exponents(k), "k={k}");
        }
    }

    #[test]
    fn recognition() {
        let p = MonomialPoly::from_integers([-6, 2, -3, 1]);
        assert_eq!(recognize(&p), Some((Rational::from_integer(6.into()), 4)));
        assert_eq!(
            recognize(&MonomialPoly::from_integers([1])),
            Some((Rational::one(), 0))
        );
        assert_eq!(recognize(&MonomialPoly::from_integers([0, 1])), None);
        assert_eq!(recognize(&MonomialPoly::from_integers([1, 1, 1])), None);
        for k in 0..=64 {
            let mono = construct(k, ConstructMethod::Step).to_monomial();
            assert_eq!(recognize(&mono), Some((Rational::one(), k)));
            let scaled = mono.scale(&Rational::new((-3).into(), 7.into()));
            assert_eq!(
                recognize(&scaled),
                Some((Rational::new((-3).into(), 7.into()), k))
            );
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(21), 5);
        assert_eq!(degree(1), 1);
        assert_eq!(degree(0), 0);
    }

    #[test]
    fn congruences() {
        let c = congruence_residue(7, 5).unwrap();
        assert!(c.applicable && c.holds());
        assert_eq!(c.residue, 1.into());
        let c = congruence_residue(6, 1).unwrap();
        assert!(c.applicable && c.holds());
        assert_eq!(c.residue, 5.into());
        assert!(!congruence_residue(4, 7).unwrap().applicable);
        assert!(congruence_residue(4, 8).is_err());
        for n in [5u32, 7, 11, 13] {
            for k in 0..1u64 << (n - 1) {
                let c = congruence_residue(n, k).unwrap();
                if c.applicable {
                    assert!(c.holds(), "n={n} k={k}");
                }
            }
        }
        let row = counts_all(9).unwrap();
        let c = congruence_residue(9, 4).unwrap();
        assert_eq!(c.residue, row[4].mod_floor(&9.into()));
    }

    #[test]
    fn looser_bound_fails() {
        // With ⌊log₂ k⌋ in place of ⌊log₂ 2k⌋, n = 9 and k = 4 would qualify.
        let c = congruence_residue(9, 4).unwrap();
        assert!(!c.applicable);
        assert!(!c.holds());
    }

    #[test]
    fn leading_terms() {
        assert_eq!(leading_asymptotic(21).unwrap(), (16.into(), 5));
        assert_eq!(leading_asymptotic(7).unwrap(), (1.into(), 3));
        for t in 1..20 {
            assert_eq!(leading_asymptotic(1 << (t - 1)).unwrap(), (1.into(), t));
        }
        for k in 1..=600 {
            let p = construct(k, ConstructMethod::Symmetric);
            let (c, d) = leading_asymptotic(k).unwrap();
            assert_eq!(p.terms()[0], (d, c));
        }
    }

    #[test]
    fn ranks() {
        assert!(rank_check(7, 26).unwrap());
        assert!(!rank_check(5, 26).unwrap());
        assert!(!rank_check(2, 26).unwrap());
        for k in 1..=64u64 {
            let ts = exponents(k);
            for n in 0..=10 {
                assert_eq!(
                    rank_check(n, k).unwrap(),
                    !ts.contains(&(n as u32)),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn subset_identity() {
        for n in 1..=12i64 {
            for m in 0..n as u32 {
                assert_eq!(
                    subset_identity_det(n, m),
                    binomial_general(n - 1, m),
                    "n={n} m={m}"
                );
            }
        }
        let p = super::super::routes::place_matrix(6, 7).unwrap();
        assert_eq!(p, subset_identity_matrix(6, 3));
    }
}
