//! Verify the central binomial supercongruences modulo `p^3`/`p^2` for all
//! odd primes up to 100, the p-adic Gamma evaluations in the split residue
//! classes, and the floating-point limits of the three archimedean series.
//!
//! Run with: `cargo run --example supercongruences`

use qcongruence::supercong::{
    check_a2_style, check_b2, check_cong2, check_gamma, numeric_bauer, numeric_h1, numeric_h2,
};
use qcongruence::QcError;

fn main() -> Result<(), QcError> {
    for p in (3u64..=100).filter(|p| (2..*p).all(|d| p % d != 0)) {
        let b2 = check_b2(p)?;
        let a2 = check_a2_style(p)?;
        let c2 = check_cong2(p)?;
        let g = check_gamma(p)?;
        println!(
            "p={p:<3} B2: {:?}  A2: {:?}  cong2: {:?}  gamma: {:?}",
            b2.status, a2.status, c2.status, g.status
        );
    }

    let (v, t) = numeric_bauer();
    println!("alternating (4k+1) series: {v:.9} vs 2/pi = {t:.9}");
    let (v, t) = numeric_h1(200_000);
    println!("plain central series:      {v:.4} vs Gamma closed form {t:.4}");
    let (v, t) = numeric_h2();
    println!("alternating central sum:   {v:.9} vs Gamma closed form {t:.9}");
    Ok(())
}
