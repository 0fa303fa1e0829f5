//! Work with truncated integer power series directly: expand Pochhammer
//! products, divide binomials exactly, and turn a declarative summand into a
//! q-expansion.
//!
//! Run with: `cargo run --example power_series`

use qcongruence::qseries::{preset, PochFactor};
use qcongruence::series::{series_from_product, series_from_sum};
use qcongruence::QcError;

fn main() -> Result<(), QcError> {
    // Euler's pentagonal expansion of (q;q)_infinity
    let euler = series_from_product(&[PochFactor { sign: 1, a_exp: 1, step: 1, mult: 1 }], 40)?;
    println!("(q;q)_inf  = {}", head(euler.coeffs(), 30));

    // its inverse, the partition generating function
    let parts = series_from_product(&[PochFactor { sign: 1, a_exp: 1, step: 1, mult: -1 }], 40)?;
    println!("1/(q;q)_inf = {}", head(parts.coeffs(), 20));

    // the central q-series truncations expand as honest power series too
    let s2 = series_from_sum(&preset("S2")?, 30)?;
    println!("S2 series   = {}", head(s2.coeffs(), 20));
    Ok(())
}

fn head(coeffs: &[num_bigint::BigInt], k: usize) -> String {
    coeffs.iter().take(k).map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
