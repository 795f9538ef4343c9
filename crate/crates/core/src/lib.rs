//! Exact computation of motivic Donaldson-Thomas invariants of symmetric
//! quivers, Kac polynomials via Hua's formula, and the refined Hua series.
//!
//! Everything is exact: coefficients are rational functions in
//! `v = q^(1/2)` over arbitrary-precision rationals, and generating series
//! are truncated by a weighted total degree.
//!
//! - [`qalg`]: rationals, Laurent polynomials and rational functions in `v`
//! - [`series`]: truncated power series, Adams operations, `Exp`/`Log`,
//!   quantum-torus product and diagonal operators
//! - [`quiver`]: quivers, Euler/Tits/antisymmetric forms, slopes
//! - [`dt`]: the `A`-series, DT invariants, Harder-Narasimhan strata,
//!   stable counts and positivity transfer checkers
//! - [`kac`]: Hua's series, Kac polynomials, the refined series
//! - [`oracle`]: brute-force counts of representations over prime fields
//! - [`cli`]: the `quiverdt` batch front end

pub mod cli;
pub mod dt;
pub mod error;
pub mod kac;
pub mod oracle;
mod par;
pub mod qalg;
pub mod quiver;
pub mod series;

pub use error::{Error, Result};
