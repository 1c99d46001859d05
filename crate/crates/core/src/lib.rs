//! Exact enumeration of labeled trees and parking functions by inversion,
//! cosum, leaf, excedance and descent statistics.
//!
//! The two bivariate generating polynomials at the centre of the crate are
//!
//! * `I_n(q,t) = Σ_T q^inv(T) t^(lev(T)-1)` over trees on `{0..n}` rooted at 0;
//! * `Ĩ_n(q,t) = Σ_π q^cosum(π) t^exced(π)` over parking functions of length `n`.
//!
//! [`enumerate`] computes them by brute force (optionally in parallel) and by
//! recurrence, and [`verify`] turns the known identities and open
//! conjectures about them into checks with counterexample witnesses.

pub mod bipoly;
pub mod budget;
pub mod combinat;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod genspace;
pub mod golden;
pub mod verify;

pub use bipoly::{BivariatePolynomial, MonomialDifference, UnivariatePolynomial, Var};
pub use budget::Budget;
pub use combinat::{is_parking_function, ParkingFunction, Permutation, PruferCode, Tree};
pub use enumerate::{DistributionSpec, ObjectKind, QStatistic, TStatistic};
pub use error::{Error, Result};
pub use genspace::IndexShard;
pub use verify::{CheckReport, SubCheck, Verdict, Verifier};
