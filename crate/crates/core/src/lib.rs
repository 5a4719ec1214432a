//! Exact enumeration of permutations by up-down structure.
//!
//! A permutation of `1..=n` has a signature of `n - 1` rises and falls.
//! Reading rises as binary 1s (first comparison most significant) gives
//! the up-down index `k`, and the number of permutations with index `k`
//! is, for fixed `k`, a polynomial in `n` written in the binomial basis.
//! This crate counts those permutations by several independent routes
//! (brute force, boustrophedon triangle, weighted alternant, determinant
//! formulas) and builds the counting polynomials themselves.
//!
//! ```
//! use updown::{basis, signature::Signature};
//!
//! let sig: Signature = "-1,1,1,-1,1".parse().unwrap();
//! let k = updown::signature::encode_index(&sig).unwrap();
//! let poly = basis::construct(k.value(), basis::ConstructMethod::Recursion);
//! assert_eq!(poly.evaluate(6), 40.into());
//! ```

pub mod alternant;
pub mod basis;
pub mod error;
pub mod kernel;
pub mod lab;
pub mod oracle;
pub mod output;
pub mod series;
pub mod signature;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::{Integer, Rational};
