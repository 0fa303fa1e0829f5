//! Coefficients of two weight-3 eta products and their arithmetic shadows.
//!
//! - [`form_coeffs`] expands the eta products exactly as integer q-series;
//! - [`closed_form_a`] gives the prime coefficients via binary quadratic
//!   forms (`p = a^2 + b^2` resp. `p = a^2 + 2b^2`);
//! - [`hecke_coeffs`] rebuilds all coefficients from the prime data through
//!   the Hecke recurrence, providing an independent oracle for the expansion;
//! - [`l_value`] and [`dirichlet_l_chi4`] are floating-point partial sums
//!   used only by the numeric cross-checks, never by exact verification.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::QcError;
use crate::qseries::PochFactor;
use crate::series::series_from_product;

/// The two eta products:
/// `F1 = q prod (1-q^{4m})^6` and
/// `F2 = q prod (1-q^m)^2 (1-q^{2m}) (1-q^{4m}) (1-q^{8m})^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    F1,
    F2,
}

impl Form {
    pub fn parse(s: &str) -> Result<Form, QcError> {
        match s {
            "f1" => Ok(Form::F1),
            "f2" => Ok(Form::F2),
            other => Err(QcError::Parse(format!("unknown form '{other}' (expected f1 or f2)"))),
        }
    }

    /// Nebentypus at an odd prime: `+1`, `-1`, or `0` never occurs for odd p.
    fn character(self, p: u64) -> i64 {
        match self {
            Form::F1 => {
                if p % 4 == 1 {
                    1
                } else {
                    -1
                }
            }
            Form::F2 => {
                if p % 8 == 1 || p % 8 == 3 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// Coefficients `a(0), a(1), ..., a(limit-1)` of the eta product (`a(0) = 0`).
pub fn form_coeffs(form: Form, limit: usize) -> Result<Vec<BigInt>, QcError> {
    if limit > 1_000_000 {
        return Err(QcError::TooLarge(format!("coefficient limit {limit} exceeds 10^6")));
    }
    let pf = |a_exp: i64, step: u32, mult: i32| PochFactor { sign: 1, a_exp, step, mult };
    let factors: Vec<PochFactor> = match form {
        Form::F1 => vec![pf(4, 4, 6)],
        Form::F2 => vec![pf(1, 1, 2), pf(2, 2, 1), pf(4, 4, 1), pf(8, 8, 2)],
    };
    let mut s = series_from_product(&factors, limit)?;
    s.shift_up(1);
    Ok(s.coeffs().to_vec())
}

/// Representation `p = a^2 + d*b^2` with `a, b >= 0` (and `a` odd when
/// `d = 1`, which is always possible for odd `p`), if one exists.
pub fn quad_rep(p: u64, d: u64) -> Option<(u64, u64)> {
    let mut b = 0u64;
    while d * b * b <= p {
        let rest = p - d * b * b;
        let a = rest.isqrt();
        if a * a == rest {
            return if d == 1 && a % 2 == 0 && p % 2 == 1 {
                Some((b, a))
            } else {
                Some((a, b))
            };
        }
        b += 1;
    }
    None
}

/// The coefficient `a(p)` at a prime `p` in closed form:
/// `2(a^2 - b^2)` from `p = a^2 + b^2` (odd `a`) for the first form,
/// `2(a^2 - 2b^2)` from `p = a^2 + 2b^2` for the second, and `0` in the
/// inert congruence classes.
pub fn closed_form_a(form: Form, p: u64) -> BigInt {
    match form {
        Form::F1 => {
            if p == 2 || p % 4 == 3 {
                return BigInt::zero();
            }
            let (a, b) = quad_rep(p, 1).expect("p = 1 mod 4 is a sum of two squares");
            BigInt::from(2) * (BigInt::from(a * a) - BigInt::from(b * b))
        }
        Form::F2 => {
            if p == 2 {
                return BigInt::from(-2);
            }
            if p % 8 == 5 || p % 8 == 7 {
                return BigInt::zero();
            }
            let (a, b) = quad_rep(p, 2).expect("p = 1,3 mod 8 is a^2 + 2b^2");
            BigInt::from(2) * (BigInt::from(a * a) - BigInt::from(2 * b * b))
        }
    }
}

/// All coefficients `a(0)..a(limit-1)` rebuilt from the prime values via the
/// weight-3 Hecke recurrence
/// `a(p^{e+1}) = a(p) a(p^e) - chi(p) p^2 a(p^{e-1})` (odd `p`)
/// and `a(2^e) = a(2)^e`, extended multiplicatively.
pub fn hecke_coeffs(form: Form, limit: usize) -> Vec<BigInt> {
    let mut spf = vec![0u32; limit.max(2)]; // smallest prime factor sieve
    for i in 2..limit {
        if spf[i] == 0 {
            let mut j = i;
            while j < limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    let mut a = vec![BigInt::zero(); limit.max(2)];
    if limit > 1 {
        a[1] = BigInt::one();
    }
    for n in 2..limit {
        let p = spf[n] as usize;
        let mut m = n;
        let mut e = 0u32;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        let ape = prime_power_coeff(form, p as u64, e);
        a[n] = &a[m] * ape;
    }
    a
}

fn prime_power_coeff(form: Form, p: u64, e: u32) -> BigInt {
    let ap = closed_form_a(form, p);
    if p == 2 {
        return ap.pow(e);
    }
    let chi_p2 = BigInt::from(form.character(p)) * BigInt::from(p * p);
    let mut prev = BigInt::one();
    let mut cur = ap.clone();
    for _ in 1..e {
        let next = &ap * &cur - &chi_p2 * &prev;
        prev = cur;
        cur = next;
    }
    if e == 0 {
        BigInt::one()
    } else {
        cur
    }
}

/// Partial sum of `L(f, s) = sum a(n)/n^s` over `n < terms`, tail-damped by
/// averaging the trailing half of the partial sums (the series converges only
/// conditionally at `s = 2`).  Returns `(value, error_estimate)`, where the
/// estimate is the half-spread of the partial sums over the averaged window;
/// advisory only, never a verification oracle.
pub fn l_value(form: Form, s: u32, terms: usize) -> (f64, f64) {
    let a = hecke_coeffs(form, terms);
    let mut partial = 0.0f64;
    let mut avg = 0.0f64;
    let mut count = 0u64;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (n, an) in a.iter().enumerate().skip(1) {
        partial += an.to_f64().unwrap_or(0.0) / (n as f64).powi(s as i32);
        if 2 * n >= terms {
            avg += partial;
            count += 1;
            lo = lo.min(partial);
            hi = hi.max(partial);
        }
    }
    (avg / count as f64, (hi - lo) / 2.0)
}

/// `sum_{m=0}^{N} (-1)^m / (2m+1)^{s-1}` with the alternating-series error
/// bound (the first omitted term); at `s = 2` the limit is `pi/4`.
pub fn dirichlet_l_chi4(s: f64, n_terms: u64) -> (f64, f64) {
    let mut sum = 0.0;
    for m in 0..=n_terms {
        let v = 1.0 / ((2 * m + 1) as f64).powf(s - 1.0);
        sum += if m % 2 == 0 { v } else { -v };
    }
    let bound = 1.0 / ((2 * n_terms + 3) as f64).powf(s - 1.0);
    (sum, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_heads() {
        let a1 = form_coeffs(Form::F1, 30).unwrap();
        assert_eq!(a1[1], BigInt::from(1));
        assert_eq!(a1[5], BigInt::from(-6));
        assert_eq!(a1[9], BigInt::from(9));
        // supported only on n = 1 mod 4
        for n in 1..30 {
            if n % 4 != 1 {
                assert!(a1[n].is_zero(), "n={n}");
            }
        }
        let a2 = form_coeffs(Form::F2, 12).unwrap();
        assert_eq!(a2[1], BigInt::from(1));
        assert_eq!(a2[2], BigInt::from(-2));
        assert_eq!(a2[3], BigInt::from(-2));
        assert_eq!(a2[4], BigInt::from(4));
    }

    #[test]
    fn closed_form_matches_expansion_at_primes() {
        let limit = 500;
        for form in [Form::F1, Form::F2] {
            let a = form_coeffs(form, limit).unwrap();
            for p in 2..limit as u64 {
                if (2..p).all(|d| p % d != 0) {
                    assert_eq!(
                        closed_form_a(form, p),
                        a[p as usize],
                        "{form:?} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn hecke_rebuild_matches_expansion() {
        let limit = 400;
        for form in [Form::F1, Form::F2] {
            let direct = form_coeffs(form, limit).unwrap();
            let rebuilt = hecke_coeffs(form, limit);
            assert_eq!(direct, rebuilt, "{form:?}");
        }
    }

    #[test]
    fn quad_reps() {
        assert_eq!(quad_rep(5, 1), Some((1, 2)));
        assert_eq!(quad_rep(13, 1), Some((3, 2)));
        assert_eq!(quad_rep(11, 2), Some((3, 1)));
        assert_eq!(quad_rep(7, 1), None);
        assert_eq!(quad_rep(3, 2), Some((1, 1)));
    }

    #[test]
    fn quad_rep_exists_iff_residue_class_splits() {
        for p in (3u64..10_000).filter(|p| (2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0))
        {
            assert_eq!(quad_rep(p, 1).is_some(), p % 4 == 1, "d=1 p={p}");
            assert_eq!(quad_rep(p, 2).is_some(), p % 8 == 1 || p % 8 == 3, "d=2 p={p}");
            if let Some((a, b)) = quad_rep(p, 1) {
                assert!(a % 2 == 1 && a * a + b * b == p);
            }
        }
    }

    #[test]
    fn chi4_partial_sums() {
        let (v, bound) = dirichlet_l_chi4(2.0, 1_000_000);
        assert!((v - std::f64::consts::FRAC_PI_4).abs() < bound.max(1e-6), "{v}");
        // N = 0 keeps only the first term
        assert_eq!(dirichlet_l_chi4(2.0, 0).0, 1.0);
    }

    #[test]
    fn l_value_is_stable() {
        // two truncation lengths agree within the reported spreads
        let (v1, e1) = l_value(Form::F1, 2, 200_000);
        let (v2, e2) = l_value(Form::F1, 2, 400_000);
        assert!((v1 - v2).abs() < (e1 + e2).max(1e-3), "{v1} vs {v2}");
    }
}
