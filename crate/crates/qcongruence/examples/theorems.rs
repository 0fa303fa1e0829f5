//! Verify the proved truncation congruences over a moderate range of
//! odd modulus indices, one checker per statement family.
//!
//! Run with: `cargo run --example theorems`

use qcongruence::congruences::{
    check_problem36, check_th31, check_th31_corollary, check_th32, check_th32_parametric,
    check_th33, check_th34, check_th35, check_th414, CongruenceReport,
};
use qcongruence::QcError;

fn show(r: &CongruenceReport) {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    println!("{:<18} {:<8} {:?}", r.statement_id, params.join(" "), r.status);
}

fn main() -> Result<(), QcError> {
    for n in (3u64..=41).step_by(2) {
        show(&check_th31(n)?);
        show(&check_th31_corollary(n)?);
        show(&check_th32(n)?);
        show(&check_th32_parametric(n)?);
        show(&check_th33(n)?);
        show(&check_th34(n)?);
        if n % 4 == 1 {
            show(&check_th35(n)?);
        }
        if n % 8 == 7 {
            show(&check_problem36(n)?);
        }
        if n % 4 == 3 {
            show(&check_th414(n)?);
        }
    }
    Ok(())
}
