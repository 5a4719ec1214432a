//! Generating functions of basis-polynomial rows and the number identities
//! that fall out of the determinant formulas.

use num_traits::{One, Zero};

use crate::basis::{self, ConstructMethod, ValueRoute};
use crate::error::{budget, Error, Result};
use crate::kernel::{
    binomial_general, det_exact, falling_factorial, thue_morse, ExactMatrix, Integer, Rational,
};
use crate::signature::alternating_index;

pub const PN_LIMIT: u32 = 12;
pub const NUMBER_LIMIT: u32 = 8;
pub const TAN_SEC_LIMIT: u32 = 14;

/// Dense integer coefficients in ascending powers of `x`; `order`, when
/// set, marks a prefix of an infinite series known modulo `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<Integer>,
    order: Option<usize>,
}

impl SeriesPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self {
            coeffs,
            order: None,
        }
    }

    pub fn truncated(mut coeffs: Vec<Integer>, order: usize) -> Self {
        coeffs.resize(order, Integer::zero());
        Self {
            coeffs,
            order: Some(order),
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn order(&self) -> Option<usize> {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }
}

fn mul(a: &[Integer], b: &[Integer], cap: usize) -> Vec<Integer> {
    let len = (a.len() + b.len()).saturating_sub(1).min(cap);
    let mut out = vec![Integer::zero(); len];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(acc: &mut Vec<Integer>, p: &[Integer]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Integer::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

/// `1 - x^d`.
fn one_minus(d: usize) -> Vec<Integer> {
    let mut p = vec![Integer::zero(); d + 1];
    p[0] = Integer::one();
    p[d] = -Integer::one();
    p
}

/// `Π_{j=from}^{to-1} (1 - x^(2^j))`, truncated below `x^cap`.
fn product(from: u32, to: u32, cap: usize) -> Vec<Integer> {
    (from..to)
        .filter(|&j| (1usize << j) < cap)
        .fold(vec![Integer::one()], |acc, j| {
            mul(&acc, &one_minus(1 << j), cap)
        })
}

/// Exact quotient by `1 - x^d`; `None` if it leaves a remainder.
fn divide_one_minus(num: &[Integer], d: usize) -> Option<Vec<Integer>> {
    if num.len() <= d {
        return num.iter().all(Zero::is_zero).then(Vec::new);
    }
    let qlen = num.len() - d;
    let mut q: Vec<Integer> = Vec::with_capacity(qlen);
    for j in 0..qlen {
        let back = if j >= d {
            q[j - d].clone()
        } else {
            Integer::zero()
        };
        q.push(&num[j] + back);
    }
    // remaining top coefficients must equal -q shifted
    (qlen..num.len())
        .all(|j| num[j] == -q[j - d].clone())
        .then_some(q)
}

/// The row polynomial `Σ_{k<2^(n-1)} {n\k} x^k`, built by the recursion over
/// `P_1, ..., P_n` with the `(1 - x^(2^(n-1)))` factor divided out last.
pub fn pn_polynomial(n: u32) -> Result<SeriesPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    budget("series order", n as u64, PN_LIMIT as u64)?;
    let mut ps: Vec<Vec<Integer>> = Vec::with_capacity(n as usize);
    for level in 1..=n {
        let cap = usize::MAX;
        let mut num = product(0, level, cap);
        for i in 1..level {
            let mut term = mul(&product(i, level, cap), &ps[i as usize - 1], cap);
            term.splice(0..0, std::iter::repeat_n(Integer::zero(), 1 << (i - 1)));
            let c = binomial_general(level as i64, i);
            term.iter_mut().for_each(|x| *x *= &c);
            add_into(&mut num, &term);
        }
        let p = divide_one_minus(&num, 1 << (level - 1)).ok_or_else(|| {
            Error::InvalidArgument(format!("row polynomial {level} does not divide exactly"))
        })?;
        ps.push(p);
    }
    Ok(SeriesPoly::new(ps.pop().unwrap()))
}

/// `F(n, x) = Σ_k {n\k} x^k` modulo `x^order`, from formal values.
pub fn row_series(n: u32, order: usize) -> SeriesPoly {
    SeriesPoly::truncated(basis::row_sequence(n, order), order)
}

/// `τ(x)` modulo `x^order`.
pub fn thue_morse_series(order: usize) -> SeriesPoly {
    SeriesPoly::truncated(
        (0..order as u64).map(|k| thue_morse(k).into()).collect(),
        order,
    )
}

pub fn default_gf_order(n: u32) -> usize {
    (1usize << n.saturating_sub(1)) + 16
}

fn gf_order_limit(n: u32) -> usize {
    (1usize << (n + 2)).max(default_gf_order(n))
}

/// Compares `F(n, x)` with `P_n(x) · Π_{i ≥ from} (1 - x^(2^i))` modulo `x^order`.
fn product_identity(n: u32, order: usize, from: u32) -> Result<bool> {
    budget("series order", n as u64, PN_LIMIT as u64)?;
    budget("series truncation", order as u64, gf_order_limit(n) as u64)?;
    let p = pn_polynomial(n)?;
    let to = usize::BITS - order.leading_zeros() + 1;
    let rhs = mul(p.coeffs(), &product(from, to, order), order);
    let lhs = row_series(n, order);
    let mut rhs = rhs;
    rhs.resize(order, Integer::zero());
    Ok(lhs.coeffs() == rhs.as_slice())
}

/// Checks that the full row series equals `P_n(x) · Π_{i ≥ n} (1 - x^(2^i))`
/// to the given order.
pub fn gf_quotient_check(n: u32, order: usize) -> Result<bool> {
    product_identity(n, order, n)
}

/// Same comparison with the product started one factor earlier, at `i = n - 1`.
pub fn gf_quotient_check_from(n: u32, order: usize, from: u32) -> Result<bool> {
    product_identity(n, order, from)
}

/// `(Σ_{k<2^r} {n\k}, n(n-1)...(n-r+1))`.
pub fn partial_sum_check(n: u32, r: u32) -> Result<(Integer, Integer)> {
    if r == 0 || r >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n-1, got n={n} r={r}"
        )));
    }
    let sum = (0..1u64 << r)
        .map(|k| basis::value(n, k, ValueRoute::Poly))
        .sum::<Result<Integer>>()?;
    Ok((sum, falling_factorial(n as i64, r)))
}

/// Exponent-determinant matrix on `t_j = 2m - 2j + 1` at `n = 2m`.
pub fn euler_matrix(m: u32) -> ExactMatrix {
    let ts: Vec<u32> = (1..=m).map(|j| 2 * m - 2 * j + 1).collect();
    staircase(2 * m as i64, &ts)
}

/// Order `m`: the same shape on `t_j = 2m - 2j`, `j < m`, at `n = 2m - 1`.
pub fn tangent_matrix(m: u32) -> ExactMatrix {
    let ts: Vec<u32> = (1..m).map(|j| 2 * m - 2 * j).collect();
    staircase(2 * m as i64 - 1, &ts)
}

fn staircase(n: i64, ts: &[u32]) -> ExactMatrix {
    ExactMatrix::from_fn(ts.len() + 1, |r, c| {
        if c == 0 {
            Integer::one()
        } else if r == 0 {
            binomial_general(n, ts[c - 1])
        } else if c == r {
            Integer::one()
        } else if c > r {
            binomial_general(ts[r - 1] as i64, ts[c - 1])
        } else {
            Integer::zero()
        }
    })
}

pub fn euler_determinant(m: u32) -> Result<Integer> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    budget("euler m", m as u64, NUMBER_LIMIT as u64)?;
    det_exact(&euler_matrix(m))
}

pub fn tangent_determinant(m: u32) -> Result<Integer> {
    if m < 2 {
        return Err(Error::InvalidArgument("m must be at least 2".into()));
    }
    budget("tangent m", m as u64, NUMBER_LIMIT as u64)?;
    det_exact(&tangent_matrix(m))
}

/// `B_2m` recovered from the tangent determinant.
pub fn bernoulli_recover(m: u32) -> Result<Rational> {
    let d = tangent_determinant(m)?;
    let p = Integer::one() << (2 * m);
    Ok(Rational::new(d * (2 * m), (&p - 1u32) * &p))
}

/// `n! [x^n] (tan x + sec x)` for `n = 0..=n_max` by the Seidel boustrophedon.
pub fn tan_sec_coefficients(n_max: u32) -> Result<Vec<Integer>> {
    budget("tan+sec order", n_max as u64, TAN_SEC_LIMIT as u64)?;
    let mut prev = vec![Integer::one()];
    let mut out = vec![Integer::one()];
    for n in 1..=n_max as usize {
        let mut row = vec![Integer::zero(); n + 1];
        for j in 1..=n {
            row[j] = &row[j - 1] + &prev[n - j];
        }
        out.push(row[n].clone());
        prev = row;
    }
    Ok(out)
}

/// Leading coefficients of all basis polynomials in order of `k = 1, 2, ...`.
pub fn concatenation_sequence(length: usize) -> Vec<Integer> {
    (1..=length as u64)
        .map(|k| basis::leading_asymptotic(k).expect("k is positive").0)
        .collect()
}

/// `{2m\k}` at the alternating index, for comparison with the determinants.
pub fn zigzag(n: u32) -> Integer {
    basis::construct(alternating_index(n), ConstructMethod::Recursion).evaluate(n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::factorial;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn bernoulli(n: usize) -> Rational {
        // Akiyama–Tanigawa
        let mut a: Vec<Rational> = Vec::new();
        for m in 0..=n {
            a.push(Rational::new(1.into(), (m as i64 + 1).into()));
            for j in (1..=m).rev() {
                a[j - 1] = (&a[j - 1] - &a[j]) * Rational::from_integer((j as i64).into());
            }
        }
        a[0].clone()
    }

    #[test]
    fn printed_rows() {
        assert_eq!(pn_polynomial(1).unwrap().coeffs(), ints(&[1]).as_slice());
        assert_eq!(pn_polynomial(2).unwrap().coeffs(), ints(&[1, 1]).as_slice());
        assert_eq!(
            pn_polynomial(3).unwrap().coeffs(),
            ints(&[1, 2, 2, 1]).as_slice()
        );
        assert_eq!(pn_polynomial(6).unwrap().coeffs()[10], 61.into());
        assert!(pn_polynomial(13).is_err());
    }

    #[test]
    fn rows_count_permutations() {
        for n in 1..=10 {
            let p = pn_polynomial(n).unwrap();
            assert_eq!(p.degree(), (1 << (n - 1)) - 1);
            assert_eq!(p.eval(&Integer::one()), factorial(n));
            if n <= 8 {
                let c = p.coeffs();
                assert!((0..c.len()).all(|k| c[k] == c[c.len() - 1 - k]));
                assert_eq!(c, basis::row_sequence(n, c.len()).as_slice());
            }
        }
    }

    #[test]
    fn thue_morse_product() {
        for n in 2..=7 {
            let p = product(0, n - 1, usize::MAX);
            assert_eq!(p, thue_morse_series(1 << (n - 1)).coeffs());
        }
    }

    #[test]
    fn generating_function() {
        assert!(gf_quotient_check(2, 16).unwrap());
        assert!(gf_quotient_check(1, 8).unwrap());
        assert!(gf_quotient_check(4, 40).unwrap());
        for n in 1..=6 {
            assert!(gf_quotient_check(n, default_gf_order(n)).unwrap());
            assert!(gf_quotient_check(n, 1 << (n + 2)).unwrap());
        }
        assert!(gf_quotient_check(3, 1 << 6).is_err());
    }

    #[test]
    fn product_from_previous_index_fails() {
        for n in 2..=6 {
            assert!(!gf_quotient_check_from(n, default_gf_order(n), n - 1).unwrap());
        }
    }

    #[test]
    fn partial_sums() {
        for n in 2..=12u32 {
            for r in 1..n {
                let (s, p) = partial_sum_check(n, r).unwrap();
                assert_eq!(s, p, "n={n} r={r}");
            }
            let (s, _) = partial_sum_check(n, n - 1).unwrap();
            assert_eq!(s, factorial(n));
            assert_eq!(partial_sum_check(n, 1).unwrap().0, n.into());
        }
        assert!(partial_sum_check(4, 4).is_err());
        assert!(partial_sum_check(4, 0).is_err());
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_determinant(1).unwrap(), (-1).into());
        assert_eq!(euler_determinant(2).unwrap(), 5.into());
        assert_eq!(euler_determinant(3).unwrap(), (-61).into());
        for m in 1..=6u32 {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(euler_determinant(m).unwrap(), zigzag(2 * m) * sign);
        }
        assert!(euler_determinant(9).is_err());
    }

    #[test]
    fn tangent_and_bernoulli() {
        assert_eq!(tangent_determinant(2).unwrap(), (-2).into());
        assert_eq!(tangent_determinant(3).unwrap(), 16.into());
        assert_eq!(tangent_determinant(4).unwrap(), (-272).into());
        let r = |a: i64, b: i64| Rational::new(a.into(), b.into());
        assert_eq!(bernoulli_recover(2).unwrap(), r(-1, 30));
        assert_eq!(bernoulli_recover(3).unwrap(), r(1, 42));
        assert_eq!(bernoulli_recover(4).unwrap(), r(-1, 30));
        for m in 2..=8u32 {
            assert_eq!(
                bernoulli_recover(m).unwrap(),
                bernoulli(2 * m as usize),
                "m={m}"
            );
        }
    }

    #[test]
    fn tan_sec() {
        let a = tan_sec_coefficients(14).unwrap();
        assert_eq!(a[..8], ints(&[1, 1, 1, 2, 5, 16, 61, 272]));
        for n in 1..=12u32 {
            assert_eq!(a[n as usize], zigzag(n));
        }
        assert!(tan_sec_coefficients(15).is_err());
    }

    #[test]
    fn concatenation() {
        let s = concatenation_sequence(31);
        assert_eq!(s[..7], ints(&[1, 1, 1, 1, 2, 2, 1]));
        assert_eq!(s[7..15], ints(&[1, 3, 5, 3, 3, 5, 3, 1]));
        assert_eq!(s[20], 16.into());
    }
}
