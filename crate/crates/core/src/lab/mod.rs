//! Numerical exploration of open questions about basis polynomials. Every
//! number here is exact except the displayed logarithmic ratio.

mod sturm;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::alternant::{alt_memo, build_weight, WeightKind};
use crate::basis::{self, BasisPolynomial, ConstructMethod, ValueRoute};
use crate::error::{budget, Error, Result};
use crate::kernel::{bit_length, divisors, Integer, MonomialPoly, Rational};
use crate::oracle::{
    alternating_derangements, alternating_stirling_row, DERANGEMENT_LIMIT, STIRLING_LIMIT,
};
use crate::signature::{alternating_index, Signature};

pub use sturm::{
    cauchy_bound, count_in, distinct_real_roots, real_roots_with_multiplicity, square_free,
    sturm_sequence,
};

pub const SCAN_LIMIT: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootProfile {
    pub k: u64,
    pub degree: u32,
    /// Distinct real roots.
    pub real_count: usize,
    pub real_with_multiplicity: usize,
    #[serde(serialize_with = "rationals_as_strings")]
    pub rational_roots: Vec<Rational>,
    pub all_real: bool,
    pub zero_bits: u32,
}

fn rationals_as_strings<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("index must be positive".into()));
    }
    budget("scan index", k, SCAN_LIMIT)
}

pub fn real_root_profile(k: u64) -> Result<RootProfile> {
    check_k(k)?;
    let p = basis::construct(k, ConstructMethod::Recursion);
    Ok(profile_of(&p))
}

fn profile_of(p: &BasisPolynomial) -> RootProfile {
    let k = p.k();
    let g = MonomialPoly::from_integers(p.integer_monomial());
    let degree = p.degree();
    let real_with_multiplicity = real_roots_with_multiplicity(&g);
    RootProfile {
        k,
        degree,
        real_count: distinct_real_roots(&g),
        real_with_multiplicity,
        rational_roots: rational_roots(&g, &p.exponents()),
        all_real: real_with_multiplicity == degree as usize,
        zero_bits: bit_length(k) - k.count_ones(),
    }
}

/// Distinct rational roots, ascending: the known roots are divided out
/// first, then the remaining candidates `±p/q` with `p | a_0`, `q | a_d`
/// inside the Cauchy bound are tested.
fn rational_roots(g: &MonomialPoly, known: &[u32]) -> Vec<Rational> {
    let mut roots: Vec<Rational> = Vec::new();
    let mut rest = g.clone();
    for &t in known {
        let r = Rational::from_integer(t.into());
        let lin = MonomialPoly::linear_root(r.clone());
        let mut hit = false;
        while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
            rest = rest.div_rem(&lin).0;
            hit = true;
        }
        if hit {
            roots.push(r);
        }
    }
    while rest.degree().unwrap_or(0) > 0 {
        let ints = rest.primitive_integer();
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            rest = rest.div_rem(&MonomialPoly::linear_root(Rational::zero())).0;
            continue;
        }
        let bound = cauchy_bound(&rest);
        let lead = divisors(ints.last().unwrap());
        let found = divisors(&ints[0]).into_iter().find_map(|p| {
            lead.iter().find_map(|q| {
                [1, -1].into_iter().find_map(|s| {
                    let x = Rational::new(&p * s, q.clone());
                    (x.abs() < bound && rest.eval(&x).is_zero()).then_some(x)
                })
            })
        });
        let Some(x) = found else { break };
        let lin = MonomialPoly::linear_root(x.clone());
        while rest.degree().unwrap_or(0) > 0 && rest.eval(&x).is_zero() {
            rest = rest.div_rem(&lin).0;
        }
        roots.push(x);
    }
    roots.sort();
    roots
}

/// Profiles for `k = 1..=k_max`.
pub fn root_profiles(k_max: u64) -> Result<Vec<RootProfile>> {
    check_k(k_max)?;
    use rayon::prelude::*;
    Ok((1..=k_max)
        .into_par_iter()
        .map(|k| real_root_profile(k).unwrap())
        .collect())
}

/// All `k ≤ k_max` with `{-1\k} = 0`.
pub fn minus_one_root_scan(k_max: u64) -> Result<Vec<u64>> {
    budget("scan index", k_max, SCAN_LIMIT)?;
    let out = (1..=k_max)
        .filter(|&k| {
            basis::construct(k, ConstructMethod::Recursion)
                .evaluate(-1)
                .is_zero()
        })
        .collect();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerangementReport {
    pub n: u32,
    #[serde(serialize_with = "integer_as_string")]
    pub derangements: Integer,
    #[serde(serialize_with = "integer_as_string")]
    pub alternating: Integer,
    #[serde(serialize_with = "rational_as_string")]
    pub ratio: Rational,
}

fn integer_as_string<S: serde::Serializer>(
    v: &Integer,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn rational_as_string<S: serde::Serializer>(
    v: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Alternating derangements through the alternant of `J - I`.
pub fn derangements_by_alternant(n: u32) -> Result<Integer> {
    budget("derangement order", n as u64, DERANGEMENT_LIMIT as u64)?;
    let a = build_weight(WeightKind::OnesMinusIdentity, n)?;
    alt_memo(&a, &Signature::alternating(n))
}

fn zigzag(n: u32) -> Result<Integer> {
    basis::value(n, alternating_index(n), ValueRoute::Poly)
}

/// Alternating derangements over all alternating permutations.
pub fn derangement_ratio(n: u32) -> Result<DerangementReport> {
    let derangements = alternating_derangements(n)?;
    let alternating = zigzag(n)?;
    let ratio = Rational::new(derangements.clone(), alternating.clone());
    Ok(DerangementReport {
        n,
        derangements,
        alternating,
        ratio,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StirlingReport {
    pub n: u32,
    pub l: u32,
    #[serde(serialize_with = "integer_as_string")]
    pub count: Integer,
    #[serde(serialize_with = "integer_as_string")]
    pub alternating: Integer,
    /// `n · count / a_n`.
    #[serde(serialize_with = "rational_as_string")]
    pub exact: Rational,
    /// `exact / (ln n)^(l-1)`.
    pub ratio: f64,
}

/// Alternating permutations of `n` with `l` cycles, scaled by `n / (a_n (ln n)^(l-1))`.
pub fn stirling_ratio(n: u32, l: u32) -> Result<StirlingReport> {
    Ok(stirling_reports(n)?.swap_remove(
        l.checked_sub(1)
            .filter(|&i| i < n)
            .ok_or_else(|| Error::InvalidArgument(format!("cycle count {l} not in 1..={n}")))?
            as usize,
    ))
}

/// Reports for every `l = 1..=n` from one enumeration.
pub fn stirling_reports(n: u32) -> Result<Vec<StirlingReport>> {
    budget("stirling order", n as u64, STIRLING_LIMIT as u64)?;
    let row = alternating_stirling_row(n)?;
    let alternating = zigzag(n)?;
    let ln = (n as f64).ln();
    Ok((1..=n)
        .map(|l| {
            let count = row[l as usize].clone();
            let exact = Rational::new(&count * n, alternating.clone());
            let ratio = exact.to_f64().unwrap_or(f64::NAN) / ln.powi(l as i32 - 1);
            StirlingReport {
                n,
                l,
                count,
                alternating: alternating.clone(),
                exact,
                ratio,
            }
        })
        .collect())
}

pub const PRINTED_ALL_REAL: [u64; 15] = [1, 2, 3, 5, 6, 7, 11, 13, 14, 15, 23, 27, 29, 30, 31];
pub const PRINTED_MINUS_ONE: [u64; 5] = [2, 5, 8, 11, 23];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::exponents;

    #[test]
    fn all_real_list() {
        let found: Vec<u64> = (1..=32)
            .filter(|&k| real_root_profile(k).unwrap().all_real)
            .collect();
        assert_eq!(found, PRINTED_ALL_REAL);
        let four = real_root_profile(4).unwrap();
        assert!(!four.all_real);
        assert_eq!(four.real_count, 1);
        assert_eq!(four.zero_bits, 2);
    }

    #[test]
    fn rational_roots_contain_exponents() {
        for k in 1..=200 {
            let p = real_root_profile(k).unwrap();
            for t in exponents(k) {
                assert!(p.rational_roots.contains(&Rational::from_integer(t.into())));
            }
            for r in p.rational_roots.iter().filter(|r| r.is_integer()) {
                let v = r.to_integer();
                assert!(
                    v.is_negative() || exponents(k).contains(&v.to_u32().unwrap()),
                    "k={k} root {r}"
                );
            }
            assert!(p.real_count <= p.real_with_multiplicity);
            assert!(p.real_with_multiplicity <= p.degree as usize);
        }
    }

    #[test]
    fn non_integer_rational_root() {
        // 2*C(n,3) - C(n,2) + 1 = (2n + 1)(n - 2)(n - 3) / 6
        let p = real_root_profile(6).unwrap();
        let half = Rational::new((-1).into(), 2.into());
        let int = |v: i64| Rational::from_integer(v.into());
        assert_eq!(p.rational_roots, vec![half, int(2), int(3)]);
        assert!(p.all_real);
    }

    #[test]
    fn minus_one() {
        let scan = minus_one_root_scan(40).unwrap();
        assert_eq!(scan[..5], PRINTED_MINUS_ONE);
        assert!(!scan.contains(&1));
        assert!(minus_one_root_scan(5000).is_err());
    }

    #[test]
    fn derangements_two_ways() {
        for n in 1..=10 {
            let r = derangement_ratio(n).unwrap();
            assert_eq!(r.derangements, derangements_by_alternant(n).unwrap());
        }
        let r = derangement_ratio(4).unwrap();
        assert_eq!(r.alternating, 5.into());
        assert_eq!(r.ratio, Rational::new(2.into(), 5.into()));
    }

    #[test]
    fn stirling_rows_partition() {
        for n in 1..=10 {
            let reports = stirling_reports(n).unwrap();
            let total: Integer = reports.iter().map(|r| r.count.clone()).sum();
            assert_eq!(total, reports[0].alternating);
        }
        let r = stirling_ratio(3, 1).unwrap();
        assert_eq!(r.count, 1.into());
        assert_eq!(r.exact, Rational::new(3.into(), 2.into()));
        assert!(stirling_ratio(3, 4).is_err());
        assert!(stirling_ratio(13, 1).is_err());
    }
}
