//! Exact verification engine for classical and modern representation-number
//! identities: sums of squares and triangular numbers, their Lambert series
//! and Hankel determinant forms, theta-function pfaffian evaluations, Schur
//! and Schur Q-polynomial expansions, and correlation functions of the
//! orthogonal polynomial ensembles attached to tangent-number moments.
//!
//! Everything is computed in exact arithmetic: arbitrary-precision rationals
//! ([`rat::Rat`]) and truncated formal power series in `u` with `u^2 = q`
//! ([`series::QSeries`]). Every identity in the catalog is checked
//! coefficient-by-coefficient against an independent brute-force oracle or a
//! second algebraic route; nothing is ever compared in floating point except
//! the two explicitly numeric modular-transformation spot checks.
//!
//! Module map:
//! - [`rat`]: exact rationals, parsing/formatting.
//! - [`ring`]: the small ring abstraction shared by rationals and series.
//! - [`series`]: the truncated power-series ring, q-Pochhammer products,
//!   theta functions, theta log-derivatives, Lambert sums.
//! - [`linalg`]: determinants, pfaffians (even and normalized odd), Hankel
//!   matrices, over any exact ring.
//! - [`symfun`]: bialternants, Schur polynomials and Schur Q-polynomials
//!   (including negative labels), principal specializations.
//! - [`orthopoly`]: Bernoulli/tangent numbers, moment functionals, monic
//!   orthogonal polynomials from moments, correlation functions.
//! - [`oracle`]: ground-truth representation counts (series powers, direct
//!   enumeration) and classical divisor-sum formulas.
//! - [`identities`]: the identity catalog and verification runners.
//! - [`report`]: verification reports and their JSON serialization.

pub mod identities;
pub mod linalg;
pub mod oracle;
pub mod orthopoly;
pub mod rat;
pub mod report;
pub mod ring;
pub mod series;
pub mod symfun;

#[cfg(test)]
pub(crate) mod testutil;

pub use rat::Rat;
pub use report::{Discrepancy, Status, VerifyReport};
pub use series::QSeries;
