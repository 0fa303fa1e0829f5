//! Supercongruences for central binomial sums, their p-adic Gamma
//! evaluations, and floating-point sanity checks of the archimedean limits.
//!
//! Exact checks accumulate partial sums as `BigRational` and reduce modulo
//! `p^2`/`p^3` only at the end; `p`-adic Gamma values are computed modulo
//! `p^2` through the integer-argument product formula and continuity.
//! The `numeric_*` functions are the only floating-point code and are used
//! solely as tripwires, never as verification oracles.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::congruences::{CongruenceReport, Status};
use crate::error::QcError;
use crate::modforms::{closed_form_a, Form};

/// Reduces a rational `r` modulo `m` (denominator must be coprime to `m`).
pub fn rational_mod(r: &BigRational, m: &BigInt) -> Result<BigInt, QcError> {
    let den = r.denom().mod_floor(m);
    let inv = mod_inverse(&den, m).ok_or(QcError::NotPAdicallyIntegral)?;
    Ok((r.numer() * inv).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// `(1/2)_k / k!` as a rational; equals `binomial(2k,k)/4^k`.
pub fn half_ratio(k: u64) -> BigRational {
    let mut t = BigRational::one();
    for j in 0..k {
        t *= BigRational::new(BigInt::from(2 * j + 1), BigInt::from(2 * j + 2));
    }
    t
}

/// `sum_{k=0}^{upper} (4k+1) (1/2)_k^3/k!^3 (-1)^k`, exactly.
pub fn bauer_partial(upper: u64) -> BigRational {
    let mut sum = BigRational::zero();
    let mut t = BigRational::one(); // (1/2)_k^3 / k!^3
    for k in 0..=upper {
        let signed = if k % 2 == 0 { 1 } else { -1 };
        sum += &t * BigRational::from(BigInt::from(signed * (4 * k as i64 + 1)));
        let step = BigRational::new(BigInt::from(2 * k + 1), BigInt::from(2 * k + 2));
        t *= &step * &step * &step;
    }
    sum
}

fn central_sum(upper: u64, alternating: bool) -> BigRational {
    let mut sum = BigRational::zero();
    let mut t = BigRational::one();
    for k in 0..=upper {
        if alternating && k % 2 == 1 {
            sum -= &t;
        } else {
            sum += &t;
        }
        let step = BigRational::new(BigInt::from(2 * k + 1), BigInt::from(2 * k + 2));
        t *= &step * &step * &step;
    }
    sum
}

fn require_odd_prime(p: u64, statement: &str) -> Result<(), QcError> {
    let is_prime = p > 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if !is_prime {
        return Err(QcError::OutOfDomain(format!("{statement} needs an odd prime, got {p}")));
    }
    Ok(())
}

fn params_p(p: u64) -> BTreeMap<String, i64> {
    BTreeMap::from([("p".to_string(), p as i64)])
}

fn verdict(id: &str, p: u64, start: Instant, ok: bool, note: &str) -> CongruenceReport {
    CongruenceReport {
        statement_id: id.to_string(),
        params: params_p(p),
        status: if ok { Status::Pass } else { Status::Fail },
        witness: if ok { None } else { Some(note.to_string()) },
        elapsed: start.elapsed(),
    }
}

/// Both truncations of the alternating `(4k+1)` sum (to `(p-1)/2` and to
/// `p-1`) are `(-1)^{(p-1)/2} p` modulo `p^3`.
pub fn check_b2(p: u64) -> Result<CongruenceReport, QcError> {
    require_odd_prime(p, "B2")?;
    let start = Instant::now();
    let p3 = BigInt::from(p).pow(3);
    let sign = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
    let target = (BigInt::from(sign) * BigInt::from(p)).mod_floor(&p3);
    for upper in [(p - 1) / 2, p - 1] {
        let s = rational_mod(&bauer_partial(upper), &p3)?;
        if s != target {
            return Ok(verdict("B2", p, start, false, &format!("upper {upper} misses mod p^3")));
        }
    }
    Ok(verdict("B2", p, start, true, ""))
}

/// `sum_{k<p} (1/2)_k^3/k!^3 = a_1(p) (mod p^2)`, plus the central binomial
/// form `a_1(p) = (1/2)_m^2/m!^2` when `m = (p-1)/4` is integral.
pub fn check_a2_style(p: u64) -> Result<CongruenceReport, QcError> {
    require_odd_prime(p, "A2")?;
    let start = Instant::now();
    let p2 = BigInt::from(p).pow(2);
    let a1 = closed_form_a(Form::F1, p).mod_floor(&p2);
    let s = rational_mod(&central_sum(p - 1, false), &p2)?;
    if s != a1 {
        return Ok(verdict("A2", p, start, false, "truncation differs from a_1(p) mod p^2"));
    }
    if p % 4 == 1 {
        let m = (p - 1) / 4;
        let r = half_ratio(m);
        let rhs = rational_mod(&(&r * &r), &p2)?;
        if a1 != rhs {
            return Ok(verdict("A2", p, start, false, "central binomial form fails"));
        }
    }
    Ok(verdict("A2", p, start, true, ""))
}

/// `(1/4)_m / m!` as a rational.
fn quarter_ratio(m: u64) -> BigRational {
    let mut t = BigRational::one();
    for j in 0..m {
        t *= BigRational::new(BigInt::from(4 * j + 1), BigInt::from(4 * j + 4));
    }
    t
}

/// `(-1)^{(p-1)/2} sum_{k<p} (1/2)_k^3/k!^3 (-1)^k = a_2(p) (mod p^2)`, plus
/// the `(1/4)_m^2/m!^2` branches at `m = (p-1)/8` and `m = (3p-1)/8`.
pub fn check_cong2(p: u64) -> Result<CongruenceReport, QcError> {
    require_odd_prime(p, "cong2")?;
    let start = Instant::now();
    let p2 = BigInt::from(p).pow(2);
    let a2 = closed_form_a(Form::F2, p).mod_floor(&p2);
    let mut s = central_sum(p - 1, true);
    if (p - 1) / 2 % 2 == 1 {
        s = -s;
    }
    if rational_mod(&s, &p2)? != a2 {
        return Ok(verdict("cong2", p, start, false, "truncation differs from a_2(p) mod p^2"));
    }
    let branch = match p % 8 {
        1 => Some(((p - 1) / 8, BigRational::one())),
        3 => Some(((3 * p - 1) / 8, -BigRational::new(BigInt::one(), BigInt::from(2)))),
        _ => None,
    };
    if let Some((m, scale)) = branch {
        let r = quarter_ratio(m);
        let rhs = rational_mod(&(&r * &r * scale), &p2)?;
        if a2 != rhs {
            return Ok(verdict("cong2", p, start, false, "quarter-Pochhammer form fails"));
        }
    }
    Ok(verdict("cong2", p, start, true, ""))
}

/// `Gamma_p(num/den)` modulo `p^2`, via the integer lift `n = num/den mod p^2`
/// and `Gamma_p(n) = (-1)^n prod_{0<j<n, p. not dividing j} j`; continuity of
/// `Gamma_p` makes the lift exact modulo `p^2`.  `den` must be coprime to `p`.
pub fn padic_gamma(p: u64, num: i64, den: u64) -> Result<BigInt, QcError> {
    let p2 = BigInt::from(p).pow(2);
    let d_inv = mod_inverse(&BigInt::from(den).mod_floor(&p2), &p2)
        .ok_or(QcError::NotPAdicallyIntegral)?;
    let n = (BigInt::from(num) * d_inv)
        .mod_floor(&p2)
        .to_u64()
        .expect("lift fits in u64 for p <= 2^31");
    let p2u = (p * p) as u128;
    let mut prod: u128 = 1;
    for j in 1..n {
        if j % p != 0 {
            prod = prod * j as u128 % p2u;
        }
    }
    let mut g = BigInt::from(prod);
    if n % 2 == 1 {
        g = (&p2 - g).mod_floor(&p2);
    }
    Ok(g)
}

/// The two p-adic Gamma evaluations of the closed-form coefficients:
/// `a_1(p) = Gamma_p(1/2)^2 / Gamma_p(3/4)^4` for `p = 1 (mod 4)` and
/// `a_2(p) = Gamma_p(1/2)^2 / (Gamma_p(5/8)^2 Gamma_p(7/8)^2)` for
/// `p = 1, 3 (mod 8)`, both mod `p^2`.  In the complementary classes the
/// coefficient vanishes while the Gamma_p side is a p-adic unit, so the
/// evaluation only applies in the split classes.
pub fn check_gamma(p: u64) -> Result<CongruenceReport, QcError> {
    require_odd_prime(p, "gamma")?;
    let start = Instant::now();
    let p2 = BigInt::from(p).pow(2);
    let g12 = padic_gamma(p, 1, 2)?;
    if p % 4 == 1 {
        let g34 = padic_gamma(p, 3, 4)?;
        let a1 = closed_form_a(Form::F1, p).mod_floor(&p2);
        let inv34 = mod_inverse(&g34.modpow(&BigInt::from(4), &p2), &p2)
            .ok_or(QcError::NotPAdicallyIntegral)?;
        if a1 != (&g12 * &g12 * inv34).mod_floor(&p2) {
            return Ok(verdict("gamma", p, start, false, "a_1 Gamma_p evaluation fails"));
        }
    }
    if p % 8 == 1 || p % 8 == 3 {
        let g58 = padic_gamma(p, 5, 8)?;
        let g78 = padic_gamma(p, 7, 8)?;
        let a2 = closed_form_a(Form::F2, p).mod_floor(&p2);
        let den = (&g58 * &g58 * &g78 * &g78).mod_floor(&p2);
        let inv = mod_inverse(&den, &p2).ok_or(QcError::NotPAdicallyIntegral)?;
        if a2 != (&g12 * &g12 * inv).mod_floor(&p2) {
            return Ok(verdict("gamma", p, start, false, "a_2 Gamma_p evaluation fails"));
        }
    }
    if p % 8 == 5 || p % 8 == 7 {
        return Ok(CongruenceReport {
            statement_id: "gamma".to_string(),
            params: params_p(p),
            status: if p % 4 == 1 { Status::Pass } else { Status::Skipped },
            witness: if p % 4 == 1 {
                None
            } else {
                Some("both coefficients vanish in this residue class".to_string())
            },
            elapsed: start.elapsed(),
        });
    }
    Ok(verdict("gamma", p, start, true, ""))
}

// ---------------------------------------------------------------------------
// floating-point tripwires

/// Lanczos approximation of `Gamma(x)` for real `x > 0`.
pub fn gamma_fn(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma_fn(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = C[0];
    for (i, &c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// Euler transform of the alternating series `sum (-1)^k a(k)` with `head`
/// plain terms and a 40-term transformed tail.
fn euler_alternating(a: impl Fn(u64) -> f64, head: u64) -> f64 {
    let mut sum = 0.0;
    for k in 0..head {
        let v = a(k);
        sum += if k % 2 == 0 { v } else { -v };
    }
    let mut row: Vec<f64> = (0..40).map(|j| a(head + j)).collect();
    let sign = if head % 2 == 0 { 1.0 } else { -1.0 };
    let mut tail = 0.0;
    let mut weight = 0.5;
    while !row.is_empty() {
        tail += weight * row[0];
        for j in 0..row.len() - 1 {
            row[j] -= row[j + 1];
        }
        row.pop();
        weight *= 0.5;
    }
    sum + sign * tail
}

/// Bauer's alternating `(4k+1)` series vs `2/pi`; returns (computed, target).
pub fn numeric_bauer() -> (f64, f64) {
    let mut t = vec![1.0f64; 600];
    for k in 1..t.len() {
        let r = (2 * k - 1) as f64 / (2 * k) as f64;
        t[k] = t[k - 1] * r * r * r;
    }
    let v = euler_alternating(|k| (4 * k + 1) as f64 * t[k as usize], 500);
    (v, 2.0 / std::f64::consts::PI)
}

/// The non-alternating central series vs `Gamma(1/2)^2/Gamma(3/4)^4`; plain
/// partial sum over `terms` terms plus an integral tail estimate.
pub fn numeric_h1(terms: u64) -> (f64, f64) {
    let mut sum = 0.0f64;
    let mut t = 1.0f64;
    for k in 0..terms {
        sum += t;
        let r = (2 * k + 1) as f64 / (2 * k + 2) as f64;
        t *= r * r * r;
    }
    // t_k ~ (pi k)^{-3/2}: integral tail estimate
    let tail = 2.0 / (std::f64::consts::PI.powf(1.5) * (terms as f64).sqrt());
    let target = gamma_fn(0.5).powi(2) / gamma_fn(0.75).powi(4);
    (sum + tail, target)
}

/// The alternating central series vs
/// `Gamma(1/2)^2/(sqrt(2) Gamma(5/8)^2 Gamma(7/8)^2)`; returns (computed, target).
pub fn numeric_h2() -> (f64, f64) {
    let mut t = vec![1.0f64; 600];
    for k in 1..t.len() {
        let r = (2 * k - 1) as f64 / (2 * k) as f64;
        t[k] = t[k - 1] * r * r * r;
    }
    let v = euler_alternating(|k| t[k as usize], 500);
    let target = gamma_fn(0.5).powi(2)
        / (2.0f64.sqrt() * gamma_fn(0.625).powi(2) * gamma_fn(0.875).powi(2));
    (v, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bauer_partial_values() {
        assert_eq!(
            bauer_partial(2),
            BigRational::new(BigInt::from(435), BigInt::from(512))
        );
        assert_eq!(bauer_partial(0), BigRational::one());
    }

    #[test]
    fn half_ratio_is_central_binomial() {
        // (1/2)_k / k! = binomial(2k, k) / 4^k
        for k in 0..=100u64 {
            let mut binom = BigInt::one();
            for j in 0..k {
                binom = binom * BigInt::from(2 * k - j) / BigInt::from(j + 1);
            }
            let expected = BigRational::new(binom, BigInt::from(4u64).pow(k as u32));
            assert_eq!(half_ratio(k), expected, "k={k}");
        }
    }

    #[test]
    fn term_recurrence_matches_direct_products() {
        // T_k = (1/2)_k^3 / k!^3 satisfies T_{k+1} = T_k ((2k+1)/(2k+2))^3;
        // the recurrence must reproduce the direct factorial-product values
        let mut t = BigRational::one();
        for k in 0..=100u64 {
            assert_eq!(t, half_ratio(k).pow(3), "k={k}");
            let step = BigRational::new(BigInt::from(2 * k + 1), BigInt::from(2 * k + 2));
            t *= step.pow(3);
        }
    }

    #[test]
    fn denominators_are_odd_prime_free() {
        // every summand denominator is a power of 2, hence a unit modulo p^m
        // for every odd prime p (in particular all odd p <= 499)
        for k in 0..=200u64 {
            let mut d = half_ratio(k).denom().clone();
            while (&d).mod_floor(&BigInt::from(2)) == BigInt::zero() {
                d /= 2;
            }
            assert_eq!(d, BigInt::one(), "k={k}");
        }
        for p in (3u64..=499).filter(|p| (2..*p).all(|d| p % d != 0)) {
            let m = BigInt::from(p).pow(3);
            assert!(rational_mod(&bauer_partial(p - 1), &m).is_ok(), "p={p}");
        }
    }

    #[test]
    fn b2_small_primes() {
        for p in [3, 5, 7, 11, 13, 17, 19, 23] {
            let r = check_b2(p).unwrap();
            assert_eq!(r.status, Status::Pass, "p={p}: {:?}", r.witness);
        }
    }

    #[test]
    fn a2_style_small_primes() {
        for p in [3, 5, 7, 11, 13, 17, 19, 29, 37] {
            let r = check_a2_style(p).unwrap();
            assert_eq!(r.status, Status::Pass, "p={p}: {:?}", r.witness);
        }
    }

    #[test]
    fn cong2_small_primes() {
        for p in [3, 5, 7, 11, 13, 17, 19, 41, 43] {
            let r = check_cong2(p).unwrap();
            assert_eq!(r.status, Status::Pass, "p={p}: {:?}", r.witness);
        }
    }

    #[test]
    fn gamma_congruences_small_primes() {
        for p in [3, 5, 11, 13, 17, 19, 29, 41, 43, 53, 73, 89, 97] {
            let r = check_gamma(p).unwrap();
            assert_eq!(r.status, Status::Pass, "p={p}: {:?}", r.witness);
        }
        // p = 7 mod 8: both coefficients vanish, nothing to evaluate
        for p in [7, 23, 31, 47] {
            assert_eq!(check_gamma(p).unwrap().status, Status::Skipped, "p={p}");
        }
    }

    #[test]
    fn padic_gamma_integer_values() {
        // Gamma_p(1) = -1 and Gamma_p(2) = 1 for every p
        for p in [5u64, 7, 13] {
            let p2 = BigInt::from(p * p);
            assert_eq!(padic_gamma(p, 1, 1).unwrap(), &p2 - 1);
            assert_eq!(padic_gamma(p, 2, 1).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn padic_gamma_reflection() {
        // Gamma_p(x) Gamma_p(1-x) = (-1)^{x0} mod p^2, where x0 in {1,...,p}
        // is the representative of x mod p (sign rule checked empirically on
        // small primes before being asserted here at scale)
        for p in (3u64..=199).filter(|p| (2..*p).all(|d| p % d != 0)) {
            let p2 = BigInt::from(p * p);
            for (num, den) in [(1i64, 2u64), (1, 4), (3, 4)] {
                if p == den {
                    continue;
                }
                let a = padic_gamma(p, num, den).unwrap();
                let b = padic_gamma(p, den as i64 - num, den).unwrap();
                let prod = (&a * &b).mod_floor(&p2);
                let x0 = rational_mod(
                    &BigRational::new(BigInt::from(num), BigInt::from(den)),
                    &BigInt::from(p),
                )
                .unwrap();
                let x0 = if x0.is_zero() { p as i64 } else { x0.to_i64().unwrap() };
                let expect = if x0 % 2 == 0 { BigInt::one() } else { &p2 - 1 };
                assert_eq!(prod, expect, "p={p} x={num}/{den}");
            }
        }
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(check_b2(9), Err(QcError::OutOfDomain(_))));
        assert!(matches!(check_gamma(2), Err(QcError::OutOfDomain(_))));
    }

    #[test]
    fn numeric_tripwires() {
        let (v, t) = numeric_bauer();
        assert!((v - t).abs() < 1e-6, "bauer {v} vs {t}");
        let (v, t) = numeric_h2();
        assert!((v - t).abs() < 1e-6, "h2 {v} vs {t}");
        let (v, t) = numeric_h1(200_000);
        assert!((v - t).abs() < 1e-2, "h1 {v} vs {t}");
    }

    #[test]
    fn gamma_fn_sane() {
        assert!((gamma_fn(0.5) - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!((gamma_fn(5.0) - 24.0).abs() < 1e-9);
    }
}
