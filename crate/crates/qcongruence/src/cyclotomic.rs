//! Cyclotomic polynomials and cyclotomic divisibility predicates.
//!
//! - `cyclotomic(n)` computes `Phi_n(q)` as `(q^n - 1) / prod_{d|n, d<n} Phi_d(q)`
//!   by exact division, memoized behind a read-write lock;
//! - `divides_power(f, n, k)` decides whether `Phi_n^k` divides `f` up to a
//!   `q`-power shift (`q` is a unit, so the shift is irrelevant);
//! - `phi_valuation` extracts the exact `Phi_n`-adic valuation of a polynomial.

use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use crate::poly::LaurentPoly;

static CACHE: Lazy<RwLock<HashMap<u64, LaurentPoly>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Euler totient by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The n-th cyclotomic polynomial `Phi_n(q)`, memoized.
pub fn cyclotomic(n: u64) -> LaurentPoly {
    assert!(n >= 1);
    if let Some(p) = CACHE.read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = &LaurentPoly::monomial(1, n as i64) - &LaurentPoly::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic(d);
            num = num.div_exact(&phi_d).expect("cyclotomic division is exact");
        }
    }
    CACHE.write().unwrap().entry(n).or_insert_with(|| num.clone());
    num
}

/// `Psi_n = (q^n - 1) / Phi_n = prod_{d|n, d<n} Phi_d`.
pub fn cofactor(n: u64) -> LaurentPoly {
    let num = &LaurentPoly::monomial(1, n as i64) - &LaurentPoly::one();
    num.div_exact(&cyclotomic(n)).expect("Phi_n divides q^n - 1")
}

/// True iff `Phi_n(q)^k` divides `q^M * f` for the shift `M` clearing
/// negative exponents.
pub fn divides_power(f: &LaurentPoly, n: u64, k: u32) -> bool {
    phi_valuation(f, n).map_or(true, |v| v >= k)
}

/// Exact `Phi_n`-adic valuation of `f`; `None` for the zero polynomial.
/// The Laurent shift to an ordinary polynomial does not change the valuation.
pub fn phi_valuation(f: &LaurentPoly, n: u64) -> Option<u32> {
    if f.is_zero() {
        return None;
    }
    let phi = cyclotomic(n);
    let mut g = f.shifted(-f.min_exp());
    let mut v = 0u32;
    loop {
        match g.divrem(&phi) {
            Ok((quot, rem)) if rem.is_zero() => {
                g = quot;
                v += 1;
            }
            _ => return Some(v),
        }
    }
}

/// Divides `f` by `Phi_n^v` exactly; panics if the division is inexact.
pub fn div_phi_power(f: &LaurentPoly, n: u64, v: u32) -> LaurentPoly {
    let phi = cyclotomic(n);
    let shift = f.min_exp();
    let mut g = f.shifted(-shift);
    for _ in 0..v {
        g = g.div_exact(&phi).expect("requested cyclotomic power must divide");
    }
    g.shifted(shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p("q - 1"));
        assert_eq!(cyclotomic(2), p("q + 1"));
        assert_eq!(cyclotomic(3), p("q^2 + q + 1"));
        assert_eq!(cyclotomic(4), p("q^2 + 1"));
        // independent oracle: divide q^6 - 1 by Phi_1 Phi_2 Phi_3
        let oracle = p("q^6 - 1")
            .div_exact(&cyclotomic(1))
            .unwrap()
            .div_exact(&cyclotomic(2))
            .unwrap()
            .div_exact(&cyclotomic(3))
            .unwrap();
        assert_eq!(cyclotomic(6), oracle);
        assert_eq!(cyclotomic(6), p("q^2 - q + 1"));
    }

    #[test]
    fn product_over_divisors_and_degree() {
        for n in 1..=60u64 {
            let mut prod = LaurentPoly::one();
            for d in divisors(n) {
                prod = &prod * &cyclotomic(d);
            }
            let target = &LaurentPoly::monomial(1, n as i64) - &LaurentPoly::one();
            assert_eq!(prod, target, "n={n}");
            assert_eq!(cyclotomic(n).degree().unwrap() as u64, totient(n), "n={n}");
        }
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(97), 96);
        assert_eq!(totient(100), 40);
    }

    #[test]
    fn divides_power_examples() {
        let phi7sq = cyclotomic(7).pow(2);
        assert!(divides_power(&phi7sq, 7, 2));
        // q^3 - 1 shifted by q^-1 is still divisible by Phi_3
        let f = p("q^3 - 1").shifted(-1);
        assert!(divides_power(&f, 3, 1));
        // 1 - q^12 is squarefree, so Phi_3^2 does not divide it
        assert!(!divides_power(&p("1 - q^12"), 3, 2));
        assert!(divides_power(&p("1 - q^12"), 3, 1));
    }

    #[test]
    fn valuation_extraction() {
        let f = &cyclotomic(5).pow(3) * &p("1 + q");
        assert_eq!(phi_valuation(&f, 5), Some(3));
        assert_eq!(phi_valuation(&f, 2), Some(1));
        assert_eq!(phi_valuation(&f, 7), Some(0));
        assert_eq!(phi_valuation(&LaurentPoly::zero(), 5), None);
        let g = div_phi_power(&f, 5, 3);
        assert_eq!(g, p("1 + q"));
    }

    #[test]
    fn phi105_has_coefficient_two() {
        // first index with a cyclotomic coefficient outside {-1,0,1}
        let phi = cyclotomic(105);
        assert_eq!(phi.coeff(7), BigInt::from(-2));
    }
}
