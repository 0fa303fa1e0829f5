//! Test the two conjectural vanishing families: truncations to `rn-1` and
//! `rn+(n-1)/2` vanish modulo `Phi_n(q)^2` for `n = 3 (mod 4)`.
//!
//! Run with: `cargo run --example conjectures`

use qcongruence::congruences::{check_conj41, check_conj42};
use qcongruence::QcError;

fn main() -> Result<(), QcError> {
    for n in (3u64..=31).step_by(4) {
        for r in 1..=3 {
            let a = check_conj41(n, r)?;
            let b = check_conj42(n, r)?;
            println!("n={n:<3} r={r}   conj41: {:?}   conj42: {:?}", a.status, b.status);
        }
    }
    Ok(())
}
