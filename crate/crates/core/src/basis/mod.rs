//! Basis polynomials `{n\k}`: for fixed `k`, the number of permutations of
//! `n` with up-down index `k`, written as `Σ c_p C(n, t_p) + (-1)^m` over the
//! exponents `t_1 > ... > t_m` of `k`.

mod analysis;
mod construct;
mod formal;
mod routes;
pub mod table;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{binomial_general, factorial, Integer, MonomialPoly, Rational};
use crate::signature::exponents;

pub use analysis::{
    congruence_residue, degree, leading_asymptotic, positive_roots, rank_check, recognize,
    subset_identity_det, subset_identity_matrix, Congruence,
};
pub use construct::{construct, ConstructMethod};
pub use formal::{formal_value, lambda_set, row_sequence, LambdaIndexSet};
pub use routes::{exponent_matrix, niven_matrix, place_matrix, value, ValueRoute};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPolynomial {
    k: u64,
    /// `(t_p, c_p)` by descending `t_p`.
    terms: Vec<(u32, Integer)>,
    constant: i32,
}

impl BasisPolynomial {
    /// Checks that the exponents are exactly those of `k` and the constant is `(-1)^m`.
    pub fn from_terms(k: u64, terms: Vec<(u32, Integer)>, constant: i32) -> Result<Self> {
        let ts: Vec<u32> = terms.iter().map(|(t, _)| *t).collect();
        if ts != exponents(k) {
            return Err(Error::InvalidArgument(format!(
                "exponents {ts:?} do not match index {k}"
            )));
        }
        if constant != sign(terms.len()) {
            return Err(Error::InvalidArgument(format!(
                "constant {constant} should be {} for index {k}",
                sign(terms.len())
            )));
        }
        Ok(Self { k, terms, constant })
    }

    /// Builds from exponents and the coefficients of each, in the same order.
    pub(crate) fn from_coefficients(k: u64, coeffs: Vec<Integer>) -> Self {
        let ts = exponents(k);
        debug_assert_eq!(ts.len(), coeffs.len());
        let m = ts.len();
        Self {
            k,
            terms: ts.into_iter().zip(coeffs).collect(),
            constant: sign(m),
        }
    }

    /// From the full list of binomial-basis coefficients `d_j` (of `C(n, j)`,
    /// `j = 0..`); fails if a nonzero `d_j` sits off the exponents of `k` or
    /// the constant is wrong.
    pub(crate) fn from_binomial_coefficients(k: u64, dense: &[Integer]) -> Result<Self> {
        let ts = exponents(k);
        for (j, d) in dense.iter().enumerate().skip(1) {
            if !d.is_zero() && !ts.contains(&(j as u32)) {
                return Err(Error::StrayTerm { k, t: j as u32 });
            }
        }
        let constant = dense.first().cloned().unwrap_or_default();
        if constant != Integer::from(sign(ts.len())) {
            return Err(Error::StrayTerm { k, t: 0 });
        }
        let coeffs = ts
            .iter()
            .map(|&t| dense.get(t as usize).cloned().unwrap_or_default())
            .collect();
        Ok(Self::from_coefficients(k, coeffs))
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn terms(&self) -> &[(u32, Integer)] {
        &self.terms
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.terms.iter().map(|(t, _)| *t).collect()
    }

    pub fn coefficients(&self) -> Vec<Integer> {
        self.terms.iter().map(|(_, c)| c.clone()).collect()
    }

    pub fn constant(&self) -> i32 {
        self.constant
    }

    pub fn degree(&self) -> u32 {
        self.terms.first().map_or(0, |(t, _)| *t)
    }

    /// Coefficients `d_0..=d_deg` of `C(n, j)`.
    pub fn binomial_coefficients(&self) -> Vec<Integer> {
        let mut dense = vec![Integer::zero(); self.degree() as usize + 1];
        dense[0] = self.constant.into();
        for (t, c) in &self.terms {
            dense[*t as usize] = c.clone();
        }
        dense
    }

    pub fn evaluate(&self, n: i64) -> Integer {
        self.terms
            .iter()
            .map(|(t, c)| c * binomial_general(n, *t))
            .sum::<Integer>()
            + self.constant
    }

    pub fn to_monomial(&self) -> MonomialPoly {
        let mut acc = MonomialPoly::constant(Rational::from_integer(self.constant.into()));
        for (t, c) in &self.terms {
            let mut b = MonomialPoly::constant(Rational::one());
            for i in 0..*t {
                b = &b * &MonomialPoly::linear_root(Rational::from_integer(i.into()));
            }
            let scale = Rational::new(c.clone(), factorial(*t));
            acc = &acc + &b.scale(&scale);
        }
        acc
    }

    /// `t_1! · {n\k}` as integer monomial coefficients, ascending.
    pub fn integer_monomial(&self) -> Vec<Integer> {
        let f = Rational::from_integer(factorial(self.degree()));
        self.to_monomial()
            .scale(&f)
            .coeffs()
            .iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }
}

fn sign(m: usize) -> i32 {
    if m % 2 == 0 {
        1
    } else {
        -1
    }
}

impl fmt::Display for BasisPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (t, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{c}*C(n,{t})")?,
                (0, true) => write!(f, "-{}*C(n,{t})", c.abs())?,
                (_, false) => write!(f, " + {c}*C(n,{t})")?,
                (_, true) => write!(f, " - {}*C(n,{t})", c.abs())?,
            }
        }
        match (self.terms.is_empty(), self.constant < 0) {
            (true, _) => write!(f, "{}", self.constant),
            (false, true) => write!(f, " - 1"),
            (false, false) => write!(f, " + 1"),
        }
    }
}

/// Splits the canonical text form into `(t, c)` terms and the constant,
/// without checking them against any index.
pub fn parse_terms(s: &str) -> Result<(Vec<(u32, Integer)>, i64)> {
    let bad = || Error::InvalidArgument(format!("cannot parse basis polynomial {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pieces = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if i > 0 && (ch == '+' || ch == '-') {
            pieces.push(&compact[start..i]);
            start = i;
        }
    }
    pieces.push(&compact[start..]);
    let (last, body) = pieces.split_last().ok_or_else(bad)?;
    let constant: i64 = last.trim_start_matches('+').parse().map_err(|_| bad())?;
    let mut terms = Vec::new();
    for piece in body {
        let (c, rest) = piece.split_once("*C(n,").ok_or_else(bad)?;
        let t = rest.strip_suffix(')').ok_or_else(bad)?;
        let c: Integer = c.trim_start_matches('+').parse().map_err(|_| bad())?;
        let t: u32 = t.parse().map_err(|_| bad())?;
        if t == 0 || t > 64 {
            return Err(bad());
        }
        terms.push((t, c));
    }
    Ok((terms, constant))
}

/// Parses the canonical text form, e.g. `16*C(n,5) - 2*C(n,3) + 1*C(n,1) - 1`.
impl FromStr for BasisPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse basis polynomial {s:?}"));
        let (terms, constant) = parse_terms(s)?;
        let k = terms.iter().try_fold(0u64, |k, (t, _)| {
            let bit = 1u64 << (t - 1);
            (k & bit == 0).then_some(k | bit)
        });
        let k = k.ok_or_else(bad)?;
        let constant = i32::try_from(constant).map_err(|_| bad())?;
        Self::from_terms(k, terms, constant)
    }
}
