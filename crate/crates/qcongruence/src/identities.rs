//! Classical basic hypergeometric summation formulas.
//!
//! Terminating identities are verified exactly: both sides are built as
//! rational functions in `q` at parameters specialized to signed `q`-powers
//! and compared by cross-multiplication.  Non-terminating identities are
//! verified coefficientwise as truncated integer power series.  There is no
//! floating-point evaluation anywhere in this module.

use std::collections::BTreeMap;

use crate::error::QcError;
use crate::poly::{LaurentPoly, RatPoly};
use crate::qseries::{hyper_sum_exact, pochhammer, preset, PochFactor, TermSpec};
use crate::series::{series_from_product, series_from_sum, PowerSeriesZ};

/// Identity names accepted by [`verify_terminating`].
pub const TERMINATING_IDS: &[&str] = &[
    "q_chu_vandermonde",
    "q_kummer",
    "andrews_q_watson",
    "jackson_q_dixon_even",
    "jackson_q_dixon_odd",
    "spec_8k1",
    "spec_8k3",
    "spec_8k5",
    "spec_8k7",
];

/// Identity names accepted by [`verify_product_identity`].
pub const PRODUCT_IDS: &[&str] = &["hqA", "hqB", "hqB2", "q_kummer_special"];

/// A signed power of `q`: `sign * q^exp`.
#[derive(Clone, Copy, Debug)]
pub struct SignedMonomial {
    pub sign: i8,
    pub exp: i64,
}

fn sm(sign: i8, exp: i64) -> SignedMonomial {
    SignedMonomial { sign, exp }
}

/// `sum_k prod_num (m; q^step)_k / prod_den (m; q^step)_k * z^k` as an exact
/// rational function.  The implicit `(q^step; q^step)_k` of a phi-series must
/// be listed in `den` by the caller.
fn phi_sum_exact(
    step: u32,
    num: &[SignedMonomial],
    den: &[SignedMonomial],
    z: SignedMonomial,
    upper: u32,
) -> Result<RatPoly, QcError> {
    let mut factors = Vec::new();
    for m in num {
        factors.push(PochFactor { sign: m.sign, a_exp: m.exp, step, mult: 1 });
    }
    for m in den {
        factors.push(PochFactor { sign: m.sign, a_exp: m.exp, step, mult: -1 });
    }
    hyper_sum_exact(&TermSpec::plain(factors, z.sign, 0, z.exp), upper)
}

/// Finite product `prod_i (sign_i q^{e_i}; q^{step_i})_{len_i}`.
fn poch_product(items: &[(SignedMonomial, u32, u32)]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (m, step, len) in items {
        let f = PochFactor { sign: m.sign, a_exp: m.exp, step: *step, mult: 1 };
        acc = &acc * &pochhammer(&f, *len);
    }
    acc
}

fn get(params: &BTreeMap<String, i64>, key: &str) -> Result<i64, QcError> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| QcError::OutOfDomain(format!("missing parameter '{key}'")))
}

fn get_or(params: &BTreeMap<String, i64>, key: &str, default: i64) -> i64 {
    params.get(key).copied().unwrap_or(default)
}

/// Builds both sides of a terminating identity as exact rational functions.
fn terminating_sides(
    id: &str,
    params: &BTreeMap<String, i64>,
) -> Result<(RatPoly, RatPoly), QcError> {
    match id {
        "q_chu_vandermonde" => {
            // 2phi1[a, q^-n; c; q, c q^n / a] = (c/a;q)_n / (c;q)_n
            // with a = q^alpha, c = q^gamma
            let alpha = get(params, "alpha")?;
            let gamma = get(params, "gamma")?;
            let n = get(params, "n")? as u32;
            let lhs = phi_sum_exact(
                1,
                &[sm(1, alpha), sm(1, -i64::from(n))],
                &[sm(1, 1), sm(1, gamma)],
                sm(1, gamma + i64::from(n) - alpha),
                n,
            )?;
            let rhs = RatPoly::new(
                poch_product(&[(sm(1, gamma - alpha), 1, n)]),
                poch_product(&[(sm(1, gamma), 1, n)]),
            )?;
            Ok((lhs, rhs))
        }
        "q_kummer" => {
            // terminating Bailey-Daum sum: 2phi1[a, q^-m; a q^{1+m}; q, -q^{1+m}]
            // with a = q^alpha; the infinite products collapse to
            //   (-q;q)_m (aq;q^2)_{ceil(m/2)} / (a q^{2+m} resp. a q^{1+m}; q^2)_{ceil(m/2)}
            let alpha = get(params, "alpha")?;
            let m = get(params, "m")? as u32;
            let lhs = phi_sum_exact(
                1,
                &[sm(1, alpha), sm(1, -i64::from(m))],
                &[sm(1, 1), sm(1, alpha + 1 + i64::from(m))],
                sm(-1, 1 + i64::from(m)),
                m,
            )?;
            let rhs = if m % 2 == 0 {
                RatPoly::new(
                    poch_product(&[(sm(-1, 1), 1, m), (sm(1, alpha + 1), 2, m / 2)]),
                    poch_product(&[(sm(1, alpha + 2 + i64::from(m)), 2, m / 2)]),
                )?
            } else {
                RatPoly::new(
                    poch_product(&[(sm(-1, 1), 1, m), (sm(1, alpha + 1), 2, (m + 1) / 2)]),
                    poch_product(&[(sm(1, alpha + 1 + i64::from(m)), 2, (m + 1) / 2)]),
                )?
            };
            Ok((lhs, rhs))
        }
        "andrews_q_watson" => {
            // 4phi3[q^-m, a^2 q^{m+1}, b, -b; aq, -aq, b^2; q, q]
            // with a = q^alpha, b = q^beta; the sum vanishes for odd m
            let alpha = get(params, "alpha")?;
            let beta = get(params, "beta")?;
            let m = get(params, "m")? as u32;
            let lhs = phi_sum_exact(
                1,
                &[
                    sm(1, -i64::from(m)),
                    sm(1, 2 * alpha + i64::from(m) + 1),
                    sm(1, beta),
                    sm(-1, beta),
                ],
                &[sm(1, 1), sm(1, alpha + 1), sm(-1, alpha + 1), sm(1, 2 * beta)],
                sm(1, 1),
                m,
            )?;
            if m % 2 == 1 {
                return Ok((lhs, RatPoly::zero()));
            }
            let h = m / 2;
            let rhs = RatPoly::new(
                poch_product(&[(sm(1, 1), 2, h), (sm(1, 2 * alpha + 2 - 2 * beta), 2, h)])
                    .shifted(beta * i64::from(m)),
                poch_product(&[(sm(1, 2 * alpha + 2), 2, h), (sm(1, 2 * beta + 1), 2, h)]),
            )?;
            Ok((lhs, rhs))
        }
        "jackson_q_dixon_even" => {
            // 3phi2[q^-2N, b, c; q^{1-2N}/b, q^{1-2N}/c; q, q^{2-N}/(bc)]
            //   = (b,c;q)_N (q,bc;q)_{2N} / ((q,bc;q)_N (b,c;q)_{2N})
            // in base q^step with b = sb q^beta, c = sc q^gamma
            let s = get_or(params, "step", 1) as u32;
            let si = i64::from(s);
            let sb = get(params, "sb")? as i8;
            let sc = get(params, "sc")? as i8;
            let beta = get(params, "beta")?;
            let gamma = get(params, "gamma")?;
            let nn = get(params, "n")?;
            let lhs = phi_sum_exact(
                s,
                &[sm(1, -2 * nn * si), sm(sb, beta), sm(sc, gamma)],
                &[
                    sm(1, si),
                    sm(sb, si * (1 - 2 * nn) - beta),
                    sm(sc, si * (1 - 2 * nn) - gamma),
                ],
                sm(sb * sc, si * (2 - nn) - beta - gamma),
                (2 * nn) as u32,
            )?;
            let n1 = nn as u32;
            let rhs = RatPoly::new(
                poch_product(&[
                    (sm(sb, beta), s, n1),
                    (sm(sc, gamma), s, n1),
                    (sm(1, si), s, 2 * n1),
                    (sm(sb * sc, beta + gamma), s, 2 * n1),
                ]),
                poch_product(&[
                    (sm(1, si), s, n1),
                    (sm(sb * sc, beta + gamma), s, n1),
                    (sm(sb, beta), s, 2 * n1),
                    (sm(sc, gamma), s, 2 * n1),
                ]),
            )
            .map_err(|_| QcError::SingularSpecialization)?;
            Ok((lhs, rhs))
        }
        "jackson_q_dixon_odd" => {
            // 3phi2[q^{1-2N}, b, c; q^{2-2N}/b, q^{1-2N}/c; q, q^{2-N}/(bc)]
            //   = (b,c;q)_N (q,bc;q)_{2N-1}
            //     / ((q;q)_{N-1} (bc;q)_N (b;q)_{2N-1} (c;q)_{2N})
            let s = get_or(params, "step", 1) as u32;
            let si = i64::from(s);
            let sb = get(params, "sb")? as i8;
            let sc = get(params, "sc")? as i8;
            let beta = get(params, "beta")?;
            let gamma = get(params, "gamma")?;
            let nn = get(params, "n")?;
            let lhs = phi_sum_exact(
                s,
                &[sm(1, si * (1 - 2 * nn)), sm(sb, beta), sm(sc, gamma)],
                &[
                    sm(1, si),
                    sm(sb, si * (2 - 2 * nn) - beta),
                    sm(sc, si * (1 - 2 * nn) - gamma),
                ],
                sm(sb * sc, si * (2 - nn) - beta - gamma),
                (2 * nn - 1) as u32,
            )?;
            let n1 = nn as u32;
            let rhs = RatPoly::new(
                poch_product(&[
                    (sm(sb, beta), s, n1),
                    (sm(sc, gamma), s, n1),
                    (sm(1, si), s, 2 * n1 - 1),
                    (sm(sb * sc, beta + gamma), s, 2 * n1 - 1),
                ]),
                poch_product(&[
                    (sm(1, si), s, n1 - 1),
                    (sm(sb * sc, beta + gamma), s, n1),
                    (sm(sb, beta), s, 2 * n1 - 1),
                    (sm(sc, gamma), s, 2 * n1),
                ]),
            )
            .map_err(|_| QcError::SingularSpecialization)?;
            Ok((lhs, rhs))
        }
        "spec_8k1" | "spec_8k3" => {
            // 2phi1[q^{1-cn}, q; q^{4-cn}; q^4, -q^3]
            //   = (q^{5-cn}, q^{7-cn}; q^8)_{(cn-1)/8} / (q^{4-cn}; q^4)_{(cn-1)/4}
            // with c = 1 for n = 1 mod 8 and c = 3 for n = 3 mod 8
            let n = get(params, "n")?;
            let (c, residue): (i64, i64) = if id == "spec_8k1" { (1, 1) } else { (3, 3) };
            if n % 8 != residue {
                return Err(QcError::OutOfDomain(format!("{id} needs n = {residue} mod 8")));
            }
            let cn = c * n;
            let lhs = phi_sum_exact(
                4,
                &[sm(1, 1 - cn), sm(1, 1)],
                &[sm(1, 4), sm(1, 4 - cn)],
                sm(-1, 3),
                ((cn - 1) / 4) as u32,
            )?;
            let m8 = ((cn - 1) / 8) as u32;
            let m4 = ((cn - 1) / 4) as u32;
            let rhs = RatPoly::new(
                poch_product(&[(sm(1, 5 - cn), 8, m8), (sm(1, 7 - cn), 8, m8)]),
                poch_product(&[(sm(1, 4 - cn), 4, m4)]),
            )?;
            Ok((lhs, rhs))
        }
        "spec_8k5" | "spec_8k7" => {
            // sum_{k=0}^{n-1} (q^{1-cn};q^4)_k (q;q^4)_k
            //   / ((q^4;q^4)_k (q^{4-cn};q^4)_k) * (-q)^{3k} = 0
            let n = get(params, "n")?;
            let (c, residue): (i64, i64) = if id == "spec_8k5" { (1, 5) } else { (3, 7) };
            if n % 8 != residue {
                return Err(QcError::OutOfDomain(format!("{id} needs n = {residue} mod 8")));
            }
            let cn = c * n;
            let lhs = phi_sum_exact(
                4,
                &[sm(1, 1 - cn), sm(1, 1)],
                &[sm(1, 4), sm(1, 4 - cn)],
                sm(-1, 3),
                (n - 1) as u32,
            )?;
            Ok((lhs, RatPoly::zero()))
        }
        other => Err(QcError::OutOfDomain(format!("unknown terminating identity '{other}'"))),
    }
}

/// Verifies a terminating summation formula exactly at the given integer
/// specialization; both sides are compared by cross-multiplication.
pub fn verify_terminating(id: &str, params: &BTreeMap<String, i64>) -> Result<bool, QcError> {
    let (lhs, rhs) = terminating_sides(id, params)?;
    Ok(lhs.equiv(&rhs))
}

/// Metamorphic check: a terminating identity must still hold after the
/// substitution `q -> 1/q` (both sides reversed as Laurent fractions).
pub fn verify_terminating_reversed(
    id: &str,
    params: &BTreeMap<String, i64>,
) -> Result<bool, QcError> {
    let (lhs, rhs) = terminating_sides(id, params)?;
    Ok(lhs.reversed().equiv(&rhs.reversed()))
}

/// Expands `sum_k prod_num (m; q^step)_k / prod_den (m; q^step)_k * z^k` as a
/// power series to the given order.  Numerator arguments may involve negative
/// powers of `q` (terminating parameters); denominator arguments must give
/// unit series.  `z` must have a positive `q`-exponent so the term order grows.
fn phi_series(
    step: u32,
    num: &[SignedMonomial],
    den: &[SignedMonomial],
    z: SignedMonomial,
    order: usize,
) -> Result<PowerSeriesZ, QcError> {
    if z.exp < 1 {
        return Err(QcError::NotSummableAsSeries);
    }
    for m in den {
        if m.exp < 1 {
            return Err(QcError::NotSummableAsSeries);
        }
    }
    // lower bound on the q-order contributed by the numerator Pochhammers
    let mut negsum: i64 = 0;
    for m in num {
        let mut e = m.exp;
        while e < 0 {
            negsum += e;
            e += i64::from(step);
        }
    }
    let mut acc = PowerSeriesZ::zero(order);
    let mut num_cum = LaurentPoly::one();
    let mut k: i64 = 0;
    loop {
        if z.exp * k + negsum >= order as i64 {
            break;
        }
        if k > 0 {
            for m in num {
                let e = m.exp + (k - 1) * i64::from(step);
                if e == 0 && m.sign == 1 {
                    num_cum = LaurentPoly::zero();
                    break;
                }
                num_cum = &num_cum * &LaurentPoly::binomial(m.sign, e);
            }
        }
        if num_cum.is_zero() {
            break;
        }
        let shifted = num_cum.shifted(z.exp * k);
        if shifted.min_exp() < 0 {
            return Err(QcError::NotSummableAsSeries);
        }
        let mut term = PowerSeriesZ::from_poly(&shifted, order);
        for m in den {
            for j in 0..k {
                let e = m.exp + j * i64::from(step);
                if (e as usize) < order {
                    term.div_binomial(m.sign, e as usize);
                }
            }
        }
        if z.sign == -1 && k % 2 == 1 {
            term.negate();
        }
        acc.add_assign(&term);
        k += 1;
    }
    Ok(acc)
}

/// The square-root side of the q-analogue of Clausen's identity, whose summand
/// mixes bases `q^2` and `q^4`:
/// `sum_k (q^{1+a};q^2)_k (q^{1-a};q^2)_k (q^2;q^4)_k / ((q^2;q^2)_k^2 (q^4;q^4)_k) z^k`.
fn clausen_rhs_series(alpha: i64, z: SignedMonomial, order: usize) -> Result<PowerSeriesZ, QcError> {
    if z.exp < 1 {
        return Err(QcError::NotSummableAsSeries);
    }
    let mut negsum: i64 = 0;
    for e0 in [1 + alpha, 1 - alpha] {
        let mut e = e0;
        while e < 0 {
            negsum += e;
            e += 2;
        }
    }
    let mut acc = PowerSeriesZ::zero(order);
    let mut num_cum = LaurentPoly::one();
    let mut k: i64 = 0;
    loop {
        if z.exp * k + negsum >= order as i64 {
            break;
        }
        if k > 0 {
            let j = k - 1;
            for e0 in [1 + alpha, 1 - alpha] {
                let e = e0 + 2 * j;
                if e == 0 {
                    num_cum = LaurentPoly::zero();
                    break;
                }
                num_cum = &num_cum * &LaurentPoly::binomial(1, e);
            }
            if !num_cum.is_zero() {
                num_cum = &num_cum * &LaurentPoly::binomial(1, 2 + 4 * j);
            }
        }
        if num_cum.is_zero() {
            break;
        }
        let shifted = num_cum.shifted(z.exp * k);
        if shifted.min_exp() < 0 {
            return Err(QcError::NotSummableAsSeries);
        }
        let mut term = PowerSeriesZ::from_poly(&shifted, order);
        for j in 0..k {
            for e in [2 + 2 * j, 2 + 2 * j, 4 + 4 * j] {
                if (e as usize) < order {
                    term.div_binomial(1, e as usize);
                }
            }
        }
        if z.sign == -1 && k % 2 == 1 {
            term.negate();
        }
        acc.add_assign(&term);
        k += 1;
    }
    Ok(acc)
}

/// Jackson's q-analogue of Clausen's identity at `a = q^alpha`, `z = s*q^e`:
/// `2phi1[qa, q/a; q^4; q^4, z] * 2phi1[qa, q/a; q^4; q^4, q^2 z]` equals the
/// mixed-base sum of [`clausen_rhs_series`], compared coefficientwise.
pub fn verify_q_clausen(alpha: i64, z: SignedMonomial, order: usize) -> Result<bool, QcError> {
    let num = [sm(1, 1 + alpha), sm(1, 1 - alpha)];
    let den4 = [sm(1, 4), sm(1, 4)];
    let left1 = phi_series(4, &num, &den4, z, order)?;
    let left2 = phi_series(4, &num, &den4, sm(z.sign, z.exp + 2), order)?;
    let lhs = left1.mul(&left2);
    let rhs = clausen_rhs_series(alpha, z, order)?;
    Ok(lhs == rhs)
}

fn ipf(sign: i8, a_exp: i64, step: u32, mult: i32) -> PochFactor {
    PochFactor { sign, a_exp, step, mult }
}

/// Verifies a sum = infinite-product identity coefficientwise to the given
/// order.
pub fn verify_product_identity(id: &str, order: usize) -> Result<bool, QcError> {
    match id {
        "hqA" => {
            let lhs = series_from_sum(&preset("S8")?, order)?;
            let rhs = series_from_product(
                &[ipf(1, 2, 4, 2), ipf(1, 3, 4, 2), ipf(1, 1, 4, -2), ipf(1, 4, 4, -2)],
                order,
            )?;
            Ok(lhs == rhs)
        }
        "hqB" => {
            let lhs = series_from_sum(&preset("S9")?, order)?;
            let mut rhs = series_from_product(
                &[ipf(1, 2, 4, 2), ipf(-1, 3, 4, 2), ipf(-1, 1, 4, -2), ipf(1, 4, 4, -2)],
                order,
            )?;
            rhs.div_binomial(1, 1); // the 1/(1-q) prefactor
            Ok(lhs == rhs)
        }
        "hqB2" => {
            let lhs = series_from_sum(&preset("S10")?, order)?;
            let rhs = series_from_product(
                &[ipf(1, 1, 2, 1), ipf(1, 3, 2, 1), ipf(1, 2, 2, -2)],
                order,
            )?;
            Ok(lhs == rhs)
        }
        "q_kummer_special" => {
            // 2phi1[a, b; aq/b; q, -q/b] with a = q^alpha (alpha >= 0) and
            // b = q^{-m}: both sides are genuine unit power series
            for (alpha, m) in [(1i64, 3i64), (0, 4), (2, 5), (3, 2)] {
                let lhs = phi_series(
                    1,
                    &[sm(1, alpha), sm(1, -m)],
                    &[sm(1, 1), sm(1, alpha + 1 + m)],
                    sm(-1, 1 + m),
                    order,
                )?;
                let rhs = series_from_product(
                    &[
                        ipf(-1, 1, 1, 1),                // (-q;q)_inf
                        ipf(1, alpha + 1, 2, 1),         // (aq;q^2)_inf
                        ipf(1, alpha + 2 + 2 * m, 2, 1), // (aq^2/b^2;q^2)_inf
                        ipf(-1, 1 + m, 1, -1),           // 1/(-q/b;q)_inf
                        ipf(1, alpha + 1 + m, 1, -1),    // 1/(aq/b;q)_inf
                    ],
                    order,
                )?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        other => Err(QcError::OutOfDomain(format!("unknown product identity '{other}'"))),
    }
}

/// The q-Gauss evaluation underpinning the Clausen-type specializations:
/// `2phi1[q, q; q^4; q^4, q^2] = (q^3,q^3;q^4)_inf / (q^2,q^4;q^4)_inf`.
pub fn verify_q_gauss_specialization(order: usize) -> Result<bool, QcError> {
    let lhs = phi_series(4, &[sm(1, 1), sm(1, 1)], &[sm(1, 4), sm(1, 4)], sm(1, 2), order)?;
    let rhs =
        series_from_product(&[ipf(1, 3, 4, 2), ipf(1, 2, 4, -1), ipf(1, 4, 4, -1)], order)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, i64)]) -> BTreeMap<String, i64> {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn chu_vandermonde_cases() {
        for (alpha, gamma, n) in [(2, 3, 1), (0, 1, 3), (-2, 2, 4), (5, 1, 6), (1, 4, 2)] {
            let p = params(&[("alpha", alpha), ("gamma", gamma), ("n", n)]);
            assert!(
                verify_terminating("q_chu_vandermonde", &p).unwrap(),
                "alpha={alpha} gamma={gamma} n={n}"
            );
            assert!(verify_terminating_reversed("q_chu_vandermonde", &p).unwrap());
        }
    }

    #[test]
    fn kummer_terminating() {
        for (alpha, m) in [(0, 2), (1, 3), (2, 4), (-1, 5), (3, 1)] {
            assert!(
                verify_terminating("q_kummer", &params(&[("alpha", alpha), ("m", m)])).unwrap(),
                "alpha={alpha} m={m}"
            );
        }
    }

    #[test]
    fn andrews_watson_both_parities() {
        for (alpha, beta, m) in [(1, 2, 4), (0, 1, 2), (2, 1, 6), (1, 3, 0)] {
            assert!(
                verify_terminating(
                    "andrews_q_watson",
                    &params(&[("alpha", alpha), ("beta", beta), ("m", m)])
                )
                .unwrap(),
                "even case alpha={alpha} beta={beta} m={m}"
            );
        }
        for (alpha, beta, m) in [(1, 2, 3), (0, 1, 5), (2, 2, 1)] {
            assert!(
                verify_terminating(
                    "andrews_q_watson",
                    &params(&[("alpha", alpha), ("beta", beta), ("m", m)])
                )
                .unwrap(),
                "odd case alpha={alpha} beta={beta} m={m}"
            );
        }
    }

    #[test]
    fn dixon_even_and_odd() {
        // generic base-q specializations
        for (sb, beta, sc, gamma, n) in [(1, 1, 1, 2, 2), (-1, 2, 1, 1, 3), (1, 3, -1, 2, 2)] {
            let p = params(&[("sb", sb), ("beta", beta), ("sc", sc), ("gamma", gamma), ("n", n)]);
            assert!(
                verify_terminating("jackson_q_dixon_even", &p).unwrap(),
                "even sb={sb} beta={beta} sc={sc} gamma={gamma} n={n}"
            );
            assert!(
                verify_terminating("jackson_q_dixon_odd", &p).unwrap(),
                "odd sb={sb} beta={beta} sc={sc} gamma={gamma} n={n}"
            );
        }
        // the base-q^4 shape used with b = q, c = -q^{2-4N}
        for n in [1i64, 2, 3] {
            let p = params(&[
                ("step", 4),
                ("sb", 1),
                ("beta", 1),
                ("sc", -1),
                ("gamma", 2 - 4 * n),
                ("n", n),
            ]);
            assert!(verify_terminating("jackson_q_dixon_even", &p).unwrap());
            assert!(verify_terminating("jackson_q_dixon_odd", &p).unwrap());
        }
    }

    #[test]
    fn finite_kummer_instances() {
        assert!(verify_terminating("spec_8k1", &params(&[("n", 9)])).unwrap());
        assert!(verify_terminating("spec_8k1", &params(&[("n", 17)])).unwrap());
        assert!(verify_terminating("spec_8k3", &params(&[("n", 11)])).unwrap());
        assert!(verify_terminating("spec_8k5", &params(&[("n", 5)])).unwrap());
        assert!(verify_terminating("spec_8k5", &params(&[("n", 13)])).unwrap());
        assert!(verify_terminating("spec_8k7", &params(&[("n", 7)])).unwrap());
        assert!(verify_terminating_reversed("spec_8k3", &params(&[("n", 11)])).unwrap());
    }

    #[test]
    fn wrong_residue_class_rejected() {
        assert!(matches!(
            verify_terminating("spec_8k1", &params(&[("n", 3)])),
            Err(QcError::OutOfDomain(_))
        ));
    }

    #[test]
    fn clausen_specializations() {
        assert!(verify_q_clausen(0, sm(1, 2), 80).unwrap());
        assert!(verify_q_clausen(0, sm(-1, 1), 80).unwrap());
        assert!(verify_q_clausen(2, sm(1, 3), 60).unwrap());
    }

    #[test]
    fn product_identities_short() {
        assert!(verify_product_identity("hqA", 80).unwrap());
        assert!(verify_product_identity("hqB", 80).unwrap());
        assert!(verify_product_identity("hqB2", 80).unwrap());
        assert!(verify_product_identity("q_kummer_special", 60).unwrap());
    }

    #[test]
    fn q_gauss() {
        assert!(verify_q_gauss_specialization(100).unwrap());
    }
}
