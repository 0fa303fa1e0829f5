//! Expand the two weight-3 eta products, compare prime coefficients with
//! their binary-quadratic-form closed forms, rebuild everything through the
//! Hecke recurrence, and estimate the central L-values numerically.
//!
//! Run with: `cargo run --example modular_forms`

use qcongruence::modforms::{closed_form_a, form_coeffs, hecke_coeffs, l_value, Form};
use qcongruence::QcError;

fn main() -> Result<(), QcError> {
    for form in [Form::F1, Form::F2] {
        let limit = 200;
        let a = form_coeffs(form, limit)?;
        print!("{form:?} head:");
        for n in 1..14 {
            print!(" {}", a[n]);
        }
        println!();

        // closed form at primes, Hecke recurrence everywhere
        for p in (2u64..limit as u64).filter(|p| (2..*p).all(|d| p % d != 0)) {
            assert_eq!(closed_form_a(form, p), a[p as usize], "{form:?} p={p}");
        }
        assert_eq!(hecke_coeffs(form, limit), a);
        println!("{form:?}: closed forms and Hecke rebuild agree up to n < {limit}");

        let (v, spread) = l_value(form, 2, 200_000);
        println!("{form:?}: L(2) ~ {v:.6} (partial-sum spread {spread:.2e})");
    }
    Ok(())
}
