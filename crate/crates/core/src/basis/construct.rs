use std::collections::HashMap;

use num_traits::{One, Zero};

use super::BasisPolynomial;
use crate::kernel::{binomial_general, thue_morse, Integer};
use crate::signature::exponents;

/// The five independent ways of building `{n\k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructMethod {
    /// Sum over chains of places, evaluated at `n = 0..=t_1` and read off
    /// through forward differences.
    Permanent,
    /// Alternating sums of chain products `C(t_i, t_j) C(t_j, t_l) ...`.
    Symmetric,
    /// `c_p` as the value of a smaller basis polynomial at `t_p`.
    Recursion,
    /// Unit lower triangular system, solved from the lowest exponent up.
    System,
    /// Add the bits of `k` from low to high, starting at `{n\0} = 1`.
    Step,
}

impl ConstructMethod {
    pub const ALL: [ConstructMethod; 5] = [
        ConstructMethod::Permanent,
        ConstructMethod::Symmetric,
        ConstructMethod::Recursion,
        ConstructMethod::System,
        ConstructMethod::Step,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructMethod::Permanent => "permanent",
            ConstructMethod::Symmetric => "symmetric",
            ConstructMethod::Recursion => "recursion",
            ConstructMethod::System => "system",
            ConstructMethod::Step => "step",
        }
    }
}

pub fn construct(k: u64, method: ConstructMethod) -> BasisPolynomial {
    match method {
        ConstructMethod::Permanent => permanent(k),
        ConstructMethod::Symmetric => symmetric(k),
        ConstructMethod::Recursion => recursion(k, &mut HashMap::new()),
        ConstructMethod::System => system(k),
        ConstructMethod::Step => step(k),
    }
}

fn sign(m: usize) -> Integer {
    if m % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Value at `n` of the chain sum over places `s_i = t_1 - t_i + 1`.
fn permanent_value(ts: &[u32], n: i64) -> Integer {
    let m = ts.len();
    let t = ts[0] as i64;
    let s: Vec<i64> = ts.iter().map(|&ti| t - ti as i64 + 1).collect();
    // chain[i]: signed sum over chains ending at place i
    let mut chain: Vec<Integer> = Vec::with_capacity(m);
    for i in 0..m {
        let mut v = sign(m - 1);
        for j in 0..i {
            v -= &chain[j] * binomial_general(n - t + s[i] - 1, (s[i] - s[j]) as u32);
        }
        chain.push(v);
    }
    chain
        .iter()
        .zip(&s)
        .map(|(c, &si)| c * binomial_general(n, (t + 1 - si) as u32))
        .sum::<Integer>()
        + sign(m)
}

fn permanent(k: u64) -> BasisPolynomial {
    let ts = exponents(k);
    if ts.is_empty() {
        return BasisPolynomial::from_coefficients(0, vec![]);
    }
    let t = ts[0] as i64;
    let mut table: Vec<Integer> = (0..=t).map(|n| permanent_value(&ts, n)).collect();
    let mut dense = Vec::with_capacity(table.len());
    while !table.is_empty() {
        dense.push(table[0].clone());
        table = table.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    BasisPolynomial::from_binomial_coefficients(k, &dense)
        .expect("chain sum has support on the exponents")
}

fn symmetric(k: u64) -> BasisPolynomial {
    let ts = exponents(k);
    let m = ts.len();
    let binom: Vec<Vec<Integer>> = ts
        .iter()
        .map(|&a| ts.iter().map(|&b| binomial_general(a as i64, b)).collect())
        .collect();
    let outer = sign(m);
    let coeffs = (0..m)
        .map(|i| {
            let tail = m - i - 1;
            let mut total = Integer::zero();
            for subset in 0u32..1 << tail {
                let mut prod = Integer::one();
                let mut prev = i;
                for b in 0..tail {
                    if subset >> b & 1 == 1 {
                        let next = i + 1 + b;
                        prod *= &binom[prev][next];
                        prev = next;
                    }
                }
                if (subset.count_ones() + 1) % 2 == 1 {
                    total -= prod;
                } else {
                    total += prod;
                }
            }
            &outer * total
        })
        .collect();
    BasisPolynomial::from_coefficients(k, coeffs)
}

fn recursion(k: u64, memo: &mut HashMap<u64, BasisPolynomial>) -> BasisPolynomial {
    if let Some(p) = memo.get(&k) {
        return p.clone();
    }
    let ts = exponents(k);
    let coeffs = ts
        .iter()
        .map(|&t| {
            // k - 2^(t-1) reduced mod 2^t leaves the bits below t
            let j = k - (1u64 << (t - 1));
            let low = j & ((1u64 << (t - 1)) - 1);
            let value = recursion(low, memo).evaluate(t as i64);
            value * thue_morse(j - low)
        })
        .collect();
    let p = BasisPolynomial::from_coefficients(k, coeffs);
    memo.insert(k, p.clone());
    p
}

fn system(k: u64) -> BasisPolynomial {
    let ts = exponents(k);
    let m = ts.len();
    let rhs = -sign(m);
    // a[r] is the coefficient of C(n, t_{m-r})
    let mut a: Vec<Integer> = Vec::with_capacity(m);
    for r in 0..m {
        let row_t = ts[m - 1 - r] as i64;
        let mut v = rhs.clone();
        for (j, aj) in a.iter().enumerate() {
            v -= binomial_general(row_t, ts[m - 1 - j]) * aj;
        }
        a.push(v);
    }
    a.reverse();
    BasisPolynomial::from_coefficients(k, a)
}

fn step(k: u64) -> BasisPolynomial {
    let mut dense = vec![Integer::one()];
    let mut current = 0u64;
    for t in exponents(k).into_iter().rev() {
        let at_t: Integer = dense
            .iter()
            .enumerate()
            .map(|(j, d)| d * binomial_general(t as i64, j as u32))
            .sum();
        for d in dense.iter_mut() {
            *d = -&*d;
        }
        dense.resize(t as usize + 1, Integer::zero());
        dense[t as usize] += at_t;
        current |= 1 << (t - 1);
    }
    BasisPolynomial::from_binomial_coefficients(current, &dense)
        .expect("bit steps keep support on the exponents")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::table::TABLE;
    use crate::kernel::binomial_general;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn worked_examples_all_methods() {
        for method in ConstructMethod::ALL {
            let p = construct(21, method);
            assert_eq!(p.coefficients(), ints(&[16, -2, 1]), "{method:?}");
            assert_eq!(p.constant(), -1);
            let p = construct(26, method);
            assert_eq!(p.coefficients(), ints(&[16, -5, 1]), "{method:?}");
            assert_eq!(
                p.evaluate(6),
                construct(26, ConstructMethod::Recursion).evaluate(6)
            );
            assert_eq!(construct(0, method).to_string(), "1");
            for t in 1..=12 {
                let p = construct(1 << (t - 1), method);
                assert_eq!(p.to_string(), format!("1*C(n,{t}) - 1"));
            }
        }
    }

    #[test]
    fn all_ones_index() {
        for m in 1..=10u32 {
            let k = (1u64 << m) - 1;
            for method in ConstructMethod::ALL {
                let p = construct(k, method);
                let expect: Vec<Integer> = (0..m)
                    .map(|p| if p % 2 == 0 { 1.into() } else { (-1).into() })
                    .collect();
                assert_eq!(p.coefficients(), expect);
                for n in 0..=20 {
                    assert_eq!(p.evaluate(n), binomial_general(n - 1, m), "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn agrees_with_stored_table() {
        for (k, terms, c) in TABLE {
            let p = construct(k, ConstructMethod::Step);
            let got: Vec<(u32, Integer)> = terms.iter().map(|&(t, c)| (t, c.into())).collect();
            assert_eq!(p.terms(), got.as_slice(), "k={k}");
            assert_eq!(p.constant() as i64, c);
        }
    }

    #[test]
    fn five_way_agreement() {
        for k in 0..=1024 {
            let reference = construct(k, ConstructMethod::Recursion);
            for method in ConstructMethod::ALL {
                assert_eq!(construct(k, method), reference, "k={k} {method:?}");
            }
        }
    }
}
