use std::collections::HashMap;

use num_traits::One;

use super::construct::{construct, ConstructMethod};
use super::formal::lambda_set;
use crate::alternant::{alt, alt_memo, build_weight, WeightKind};
use crate::error::Result;
use crate::kernel::{binomial_general, det_exact, thue_morse, ExactMatrix, Integer};
use crate::oracle::count_signature;
use crate::signature::{check_range, decode_index, exponents, Step};
use crate::triangle::count_by_triangle;

/// Independent ways of computing the single value `{n\k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueRoute {
    Oracle,
    Triangle,
    Alternant,
    /// Binomials of the ascent positions.
    Niven,
    /// Determinant over the places of the 1 bits.
    Places,
    /// Determinant over the exponents; works for any `n`.
    Exponents,
    /// Recursion through the lambda index set; works for any `n`.
    Lambda,
    /// Evaluate the constructed polynomial; works for any `n`.
    Poly,
}

impl ValueRoute {
    pub const ALL: [ValueRoute; 8] = [
        ValueRoute::Oracle,
        ValueRoute::Triangle,
        ValueRoute::Alternant,
        ValueRoute::Niven,
        ValueRoute::Places,
        ValueRoute::Exponents,
        ValueRoute::Lambda,
        ValueRoute::Poly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ValueRoute::Oracle => "oracle",
            ValueRoute::Triangle => "triangle",
            ValueRoute::Alternant => "alternant",
            ValueRoute::Niven => "niven",
            ValueRoute::Places => "places",
            ValueRoute::Exponents => "exponents",
            ValueRoute::Lambda => "lambda",
            ValueRoute::Poly => "poly",
        }
    }

    /// Whether the route needs `k < 2^(n-1)`.
    pub fn combinatorial_only(self) -> bool {
        !matches!(
            self,
            ValueRoute::Exponents | ValueRoute::Lambda | ValueRoute::Poly
        )
    }
}

const FAITHFUL_ALTERNANT_LIMIT: u32 = 10;

pub fn value(n: u32, k: u64, route: ValueRoute) -> Result<Integer> {
    if route.combinatorial_only() {
        check_range(n, k)?;
    }
    match route {
        ValueRoute::Oracle => count_signature(&decode_index(n, k)?, None),
        ValueRoute::Triangle => Ok(count_by_triangle(&decode_index(n, k)?)),
        ValueRoute::Alternant => {
            let sig = decode_index(n, k)?;
            let ones = build_weight(WeightKind::Ones, n)?;
            if n <= FAITHFUL_ALTERNANT_LIMIT {
                alt(&ones, &sig)
            } else {
                alt_memo(&ones, &sig)
            }
        }
        ValueRoute::Niven => det_exact(&niven_matrix(n, k)?),
        ValueRoute::Places => det_exact(&place_matrix(n, k)?),
        ValueRoute::Exponents => {
            let d = det_exact(&exponent_matrix(n as i64, k))?;
            Ok(if exponents(k).len() % 2 == 0 { d } else { -d })
        }
        ValueRoute::Lambda => Ok(lambda_value(n as i64, k, &mut HashMap::new())),
        ValueRoute::Poly => Ok(construct(k, ConstructMethod::Recursion).evaluate(n as i64)),
    }
}

/// Order `m+1` matrix `C(k_i, k_{j-1})` over the ascent positions
/// `0 = k_0 < k_1 < ... < k_m < k_{m+1} = n`.
pub fn niven_matrix(n: u32, k: u64) -> Result<ExactMatrix> {
    let sig = decode_index(n, k)?;
    let mut pos: Vec<i64> = vec![0];
    pos.extend(
        sig.steps()
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::Up)
            .map(|(i, _)| i as i64 + 1),
    );
    pos.push(n as i64);
    let order = pos.len() - 1;
    Ok(ExactMatrix::from_fn(order, |i, j| {
        binomial_general(pos[i + 1], pos[j] as u32)
    }))
}

/// The determinant over places `1 = s_1 < ... < s_m` of the 1 bits after
/// the leading zeros.
pub fn place_matrix(n: u32, k: u64) -> Result<ExactMatrix> {
    check_range(n, k)?;
    let ts = exponents(k);
    let m = ts.len();
    if m == 0 {
        return Ok(ExactMatrix::identity(1));
    }
    let n = n as i64;
    let t = ts[0] as i64;
    let s: Vec<i64> = ts.iter().map(|&ti| t - ti as i64 + 1).collect();
    Ok(ExactMatrix::from_fn(m + 1, |r, c| {
        if c == 0 {
            return Integer::one();
        }
        if r == m {
            return binomial_general(n, (t + 1 - s[c - 1]) as u32);
        }
        if r == 0 {
            return Integer::from(u8::from(c == 1));
        }
        match c {
            c if c <= r => binomial_general(n - t + s[r] - 1, (s[r] - s[c - 1]) as u32),
            c if c == r + 1 => Integer::one(),
            _ => Integer::from(0),
        }
    }))
}

/// Order `m+1`: first row `1, C(n, t_1), ..., C(n, t_m)`; row `r` has a 1
/// in the first column and on the diagonal, `C(t_r, t_j)` right of it.
/// Its determinant is `(-1)^m {n\k}`.
pub fn exponent_matrix(n: i64, k: u64) -> ExactMatrix {
    let ts = exponents(k);
    ExactMatrix::from_fn(ts.len() + 1, |r, c| match (r, c) {
        (_, 0) => Integer::one(),
        (0, c) => binomial_general(n, ts[c - 1]),
        (r, c) if c == r => Integer::one(),
        (r, c) if c > r => binomial_general(ts[r - 1] as i64, ts[c - 1]),
        _ => Integer::from(0),
    })
}

fn lambda_value(n: i64, k: u64, memo: &mut HashMap<(i64, u64), Integer>) -> Integer {
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let mut total = Integer::from(thue_morse(k));
    for &(i, lambda) in lambda_set(k).members() {
        let j = k - (1u64 << (i - 1)) - (lambda << i);
        let inner = lambda_value(i as i64, j, memo);
        total += binomial_general(n, i) * inner * thue_morse(lambda);
    }
    memo.insert((n, k), total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::counts_all;

    #[test]
    fn worked_examples() {
        for route in ValueRoute::ALL {
            assert_eq!(value(6, 13, route).unwrap(), 40.into(), "{route:?}");
            assert_eq!(value(4, 5, route).unwrap(), 5.into(), "{route:?}");
        }
        for m in 0..8 {
            for n in 0..14 {
                assert_eq!(
                    value(n, 1 << m, ValueRoute::Lambda).unwrap(),
                    binomial_general(n as i64, m + 1) - 1
                );
            }
        }
    }

    #[test]
    fn routes_match_scan() {
        for n in 1..=8 {
            let row = counts_all(n).unwrap();
            for (k, expect) in row.iter().enumerate() {
                for route in ValueRoute::ALL {
                    assert_eq!(
                        &value(n, k as u64, route).unwrap(),
                        expect,
                        "n={n} k={k} {route:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn formal_routes_agree() {
        for k in 0..300 {
            for n in 0..12 {
                let p = value(n, k, ValueRoute::Poly).unwrap();
                assert_eq!(
                    value(n, k, ValueRoute::Exponents).unwrap(),
                    p,
                    "n={n} k={k}"
                );
                assert_eq!(value(n, k, ValueRoute::Lambda).unwrap(), p, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn combinatorial_routes_check_range() {
        assert!(value(3, 4, ValueRoute::Places).is_err());
        assert!(value(3, 4, ValueRoute::Niven).is_err());
        assert!(value(3, 4, ValueRoute::Poly).is_ok());
    }
}
