//! Scan the canonical residues of the alternating half truncation modulo
//! `Phi_n(q)` by residue class of `n mod 8`: the classes 1, 5 and 7 are
//! settled (closed form or vanishing), the class 3 is open — the scan prints
//! what the residues look like there.
//!
//! Run with: `cargo run --example residue_scan`

use qcongruence::congruences::residue_report;
use qcongruence::qseries::preset;
use qcongruence::QcError;

fn main() -> Result<(), QcError> {
    let spec = preset("S5")?;
    for n in (3u64..=43).step_by(2) {
        let residue = residue_report(&spec, ((n - 1) / 2) as u32, n, 1)?;
        println!("n={n:<3} (mod 8: {})  residue: {residue}", n % 8);
    }
    Ok(())
}
