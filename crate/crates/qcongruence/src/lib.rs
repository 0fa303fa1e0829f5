//! Exact-arithmetic verification of q-congruences, q-series identities,
//! eta-product modular form coefficients, and p-adic supercongruences.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: integer Laurent polynomials and lazy rational functions;
//! - [`cyclotomic`]: memoized cyclotomic polynomials and divisibility tests;
//! - [`quotient`]: arithmetic in `Q[q]/(Phi_n(q)^k)` with tracked valuation;
//! - [`qseries`]: q-Pochhammer products, a declarative summand DSL, exact and
//!   quotient-ring evaluation of truncated basic hypergeometric sums;
//! - [`series`]: truncated integer power series for infinite products;
//! - [`identities`]: classical summation formulas checked exactly or as series;
//! - [`congruences`]: one checker per congruence statement plus a residue scanner;
//! - [`modforms`]: eta-product coefficients, closed forms, numeric L-values;
//! - [`supercong`]: rational truncations mod `p^m` and the p-adic Gamma function;
//! - [`runner`]: batch driver with parallel fan-out, caching and report output.

pub mod cyclic;
pub mod cyclotomic;
pub mod error;
pub mod poly;
pub mod quotient;
pub mod qseries;
pub mod series;
pub mod identities;
pub mod congruences;
pub mod modforms;
pub mod supercong;
pub mod runner;

pub use error::QcError;
pub use poly::{LaurentPoly, RatPoly};
pub use quotient::QuotientElem;
