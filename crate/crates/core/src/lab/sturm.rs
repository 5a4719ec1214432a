//! Exact real-root counting.

use num_traits::{One, Signed, Zero};

use crate::kernel::{MonomialPoly, Rational};

pub fn sturm_sequence(p: &MonomialPoly) -> Vec<MonomialPoly> {
    let mut seq = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(seq: &[MonomialPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `1 + max |a_i / a_d|`; every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &MonomialPoly) -> Rational {
    let Some(lead) = p.leading() else {
        return Rational::one();
    };
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn count_in(p: &MonomialPoly, a: &Rational, b: &Rational) -> usize {
    let seq = sturm_sequence(p);
    sign_changes(&seq, a).saturating_sub(sign_changes(&seq, b))
}

/// Distinct real roots of a nonzero polynomial.
pub fn distinct_real_roots(p: &MonomialPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let free = square_free(p);
    let b = cauchy_bound(&free);
    count_in(&free, &-b.clone(), &b)
}

pub fn square_free(p: &MonomialPoly) -> MonomialPoly {
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0
}

/// Real roots counted with multiplicity: roots of multiplicity at least
/// `j + 1` are the roots of the `j`-th repeated gcd with the derivative.
pub fn real_roots_with_multiplicity(p: &MonomialPoly) -> usize {
    let mut total = 0;
    let mut f = p.clone();
    while f.degree().unwrap_or(0) > 0 {
        total += distinct_real_roots(&f);
        f = f.gcd(&f.derivative());
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> MonomialPoly {
        MonomialPoly::from_integers(c.iter().copied())
    }

    #[test]
    fn counts() {
        // (n - 3)(n^2 + 2)
        let p = poly(&[-6, 2, -3, 1]);
        assert_eq!(distinct_real_roots(&p), 1);
        assert_eq!(
            distinct_real_roots(&p.scale(&Rational::from_integer(7.into()))),
            1
        );
        // (x - 1)^2 (x + 2)
        let q = poly(&[2, -3, 0, 1]);
        assert_eq!(distinct_real_roots(&q), 2);
        assert_eq!(real_roots_with_multiplicity(&q), 3);
        // x^2 + 1
        assert_eq!(distinct_real_roots(&poly(&[1, 0, 1])), 0);
        // (x-1)(x-2)(x-3)(x-4)
        let r = poly(&[24, -50, 35, -10, 1]);
        assert_eq!(distinct_real_roots(&r), 4);
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(count_in(&r, &half, &Rational::from_integer(2.into())), 2);
        assert_eq!(distinct_real_roots(&poly(&[5])), 0);
    }

    #[test]
    fn bound_contains_roots() {
        let p = poly(&[-1000, 0, 1]);
        let b = cauchy_bound(&p);
        assert!(b > Rational::from_integer(31.into()));
        assert_eq!(distinct_real_roots(&p), 2);
    }
}
