//! Elements of `Q[q]/(Phi_n(q)^k)` with tracked `Phi_n`-adic valuation.
//!
//! An element is stored as a lazy fraction `Phi_n^val * num / den` where both
//! `num` and `den` are integer Laurent polynomials coprime to `Phi_n`.  This
//! shape makes congruence testing pure integer arithmetic:
//!
//! - equality is decided by cross-multiplication plus a `Phi_n^k` divisibility
//!   test — no inversion is ever required to *check* a congruence;
//! - the denominator is inverted (extended Euclid over `Q[q]`) only when a
//!   canonical residue polynomial is explicitly requested.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclic::CyclicPoly;
use crate::cyclotomic::{cyclotomic, div_phi_power, phi_valuation};
use crate::error::QcError;
use crate::poly::{LaurentPoly, RatPoly};

#[derive(Clone, Debug)]
pub struct QuotientElem {
    pub n: u64,
    pub k: u32,
    /// Valuation in `[0, k)`; irrelevant when `num` is zero (the zero element).
    val: u32,
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QuotientElem {
    pub fn zero(n: u64, k: u32) -> Self {
        QuotientElem { n, k, val: 0, num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one(n: u64, k: u32) -> Self {
        QuotientElem { n, k, val: 0, num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn valuation(&self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Embeds an exact polynomial, extracting its full `Phi_n`-adic valuation.
    pub fn from_poly(f: &LaurentPoly, n: u64, k: u32) -> Self {
        assert!(n >= 2 && k >= 1);
        match phi_valuation(f, n) {
            None => Self::zero(n, k),
            Some(v) if v >= k => Self::zero(n, k),
            Some(v) => {
                let num = reduce_num(&div_phi_power(f, n, v), n, k);
                if num.is_zero() {
                    Self::zero(n, k)
                } else {
                    QuotientElem { n, k, val: v, num, den: LaurentPoly::one() }
                }
            }
        }
    }

    /// Embeds a rational function.  The net valuation `v(num) - v(den)` must
    /// be non-negative; a cyclotomic factor in the denominator is only an
    /// error when it survives the netting.
    pub fn from_fraction(f: &RatPoly, n: u64, k: u32) -> Result<Self, QcError> {
        assert!(n >= 2 && k >= 1);
        if f.num.is_zero() {
            return Ok(Self::zero(n, k));
        }
        let vn = phi_valuation(&f.num, n).unwrap();
        let vd = phi_valuation(&f.den, n).unwrap();
        if vn < vd {
            return Err(QcError::DenominatorNotCoprime);
        }
        let net = vn - vd;
        if net >= k {
            return Ok(Self::zero(n, k));
        }
        let num = reduce_num(&div_phi_power(&f.num, n, vn), n, k);
        let den = div_phi_power(&f.den, n, vd);
        if num.is_zero() {
            return Ok(Self::zero(n, k));
        }
        Ok(QuotientElem { n, k, val: net, num, den })
    }

    /// Builds an element from a `Phi_n`-free fraction already reduced in the
    /// cyclic proxy ring, extracting any valuation the numerator picked up.
    pub(crate) fn from_cyclic_fraction(p: &CyclicPoly, den: &CyclicPoly) -> Result<Self, QcError> {
        let (n, k) = (p.n, p.k);
        let d = den.to_laurent();
        if phi_valuation(&d, n) != Some(0) {
            return Err(QcError::DenominatorNotCoprime);
        }
        let f = p.to_laurent();
        match phi_valuation(&f, n) {
            None => Ok(Self::zero(n, k)),
            Some(v) if v >= k => Ok(Self::zero(n, k)),
            Some(v) => Ok(QuotientElem {
                n,
                k,
                val: v,
                num: div_phi_power(&f, n, v),
                den: d,
            }),
        }
    }

    fn check_compat(&self, other: &Self) -> Result<(), QcError> {
        if self.n != other.n || self.k != other.k {
            Err(QcError::MismatchedQuotient)
        } else {
            Ok(())
        }
    }

    /// True iff `self - other` is zero in `Q[q]/(Phi_n^k)`, by pure integer
    /// cross-multiplication.
    pub fn congruent(&self, other: &Self) -> Result<bool, QcError> {
        self.check_compat(other)?;
        let (n, k) = (self.n, self.k);
        let phi = cyclotomic(n);
        let lhs = &(&phi.pow(self.val.min(k)) * &self.num) * &other.den;
        let rhs = &(&phi.pow(other.val.min(k)) * &other.num) * &self.den;
        Ok(crate::cyclotomic::divides_power(&(&lhs - &rhs), n, k))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, QcError> {
        self.check_compat(other)?;
        let (n, k) = (self.n, self.k);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(n, k));
        }
        let v = self.val + other.val;
        if v >= k {
            return Ok(Self::zero(n, k));
        }
        // products of Phi-free polynomials stay Phi-free (Phi_n is irreducible)
        Ok(QuotientElem {
            n,
            k,
            val: v,
            num: reduce_num(&(&self.num * &other.num), n, k),
            den: &self.den * &other.den,
        })
    }

    pub fn neg(&self) -> Self {
        QuotientElem {
            n: self.n,
            k: self.k,
            val: self.val,
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, QcError> {
        self.check_compat(other)?;
        let (n, k) = (self.n, self.k);
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let v0 = self.val.min(other.val);
        let phi = cyclotomic(n);
        let a = &(&phi.pow(self.val - v0) * &self.num) * &other.den;
        let b = &(&phi.pow(other.val - v0) * &other.num) * &self.den;
        let num = &a + &b;
        // the sum may gain valuation; re-extract
        let raw = QuotientElem {
            n,
            k,
            val: 0,
            num,
            den: &self.den * &other.den,
        };
        raw.renormalized(v0)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, QcError> {
        self.add(&other.neg())
    }

    fn renormalized(self, extra_val: u32) -> Result<Self, QcError> {
        let (n, k) = (self.n, self.k);
        match phi_valuation(&self.num, n) {
            None => Ok(Self::zero(n, k)),
            Some(v) => {
                let total = v + extra_val;
                if total >= k {
                    return Ok(Self::zero(n, k));
                }
                Ok(QuotientElem {
                    n,
                    k,
                    val: total,
                    num: reduce_num(&div_phi_power(&self.num, n, v), n, k),
                    den: self.den,
                })
            }
        }
    }

    /// Canonical residue: the unique integer polynomial of degree
    /// `< k*phi(n)` congruent to a rational multiple of the element, with
    /// denominators cleared, content divided out and positive leading
    /// coefficient.  Zero for the zero element.
    pub fn residue(&self) -> Result<LaurentPoly, QcError> {
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (n, k) = (self.n, self.k);
        let modulus = cyclotomic(n).pow(k);
        let inv = invert_mod(&self.den, &modulus)?;
        let num = clear_laurent(&self.num, n, k);
        let prod = qpoly_mul(&qpoly_from_int(&num), &inv);
        let red = qpoly_rem(&prod, &qpoly_from_int(&modulus));
        let as_int = qpoly_clear_denominators(&red);
        let shifted = &cyclotomic(n).pow(self.val) * &as_int;
        let (_, r) = shifted.divrem(&modulus)?;
        Ok(r.primitive_part())
    }

    /// The element as an exact fraction `Phi_n^val * num / den` (debug aid).
    pub fn as_fraction(&self) -> RatPoly {
        let phi_pow = cyclotomic(self.n).pow(self.val);
        RatPoly {
            num: &phi_pow * &self.num,
            den: self.den.clone(),
        }
    }
}

/// Reduces a `Phi_n`-free numerator modulo `(q^n-1)^k` when it is large; the
/// reduction preserves both the residue mod `Phi_n^k` and any valuation `< k`.
fn reduce_num(f: &LaurentPoly, n: u64, k: u32) -> LaurentPoly {
    if k <= 2 && f.num_coeffs() as u64 > 4 * n * k as u64 {
        CyclicPoly::from_laurent(n, k, f).to_laurent()
    } else {
        f.clone()
    }
}

/// Shifts a Laurent numerator to an ordinary polynomial congruent to a unit
/// multiple of it: `q^M * f` with `q` a unit mod `Phi_n^k`.
fn clear_laurent(f: &LaurentPoly, n: u64, k: u32) -> LaurentPoly {
    if f.min_exp() >= 0 {
        return f.clone();
    }
    // raise by a multiple of n*k so the unit is q^{n*k*t}; for k=1 this is 1
    // mod Phi_n, for k=2 it is a genuine unit and the residue is still a
    // canonical representative of a unit multiple, which is what reports use.
    let span = (n * k as u64) as i64;
    let t = (-f.min_exp() + span - 1) / span;
    f.shifted(t * span)
}

// --- dense rational-coefficient polynomial helpers (extended Euclid) ---

type QPoly = Vec<BigRational>;

fn qpoly_from_int(f: &LaurentPoly) -> QPoly {
    assert!(f.min_exp() >= 0);
    let deg = f.degree().unwrap_or(0) as usize;
    let mut out = vec![BigRational::zero(); deg + 1];
    for (c, e) in f.terms() {
        out[e as usize] = BigRational::from_integer(c.clone());
    }
    qpoly_trim(out)
}

fn qpoly_trim(mut f: QPoly) -> QPoly {
    while f.last().map_or(false, Zero::is_zero) {
        f.pop();
    }
    f
}

fn qpoly_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    qpoly_trim(out)
}

fn qpoly_rem(a: &QPoly, m: &QPoly) -> QPoly {
    let mut r = a.clone();
    let dm = m.len() - 1;
    let lead = &m[dm];
    while r.len() > dm {
        let dr = r.len() - 1;
        let f = &r[dr] / lead;
        for (j, c) in m.iter().enumerate() {
            let idx = dr - dm + j;
            let v = &f * c;
            r[idx] -= v;
        }
        r = qpoly_trim(r);
    }
    r
}

fn qpoly_divrem(a: &QPoly, m: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    let dm = m.len() - 1;
    let lead = &m[dm];
    let mut quot = vec![BigRational::zero(); r.len().saturating_sub(dm)];
    while r.len() > dm {
        let dr = r.len() - 1;
        let f = &r[dr] / lead;
        for (j, c) in m.iter().enumerate() {
            let idx = dr - dm + j;
            let v = &f * c;
            r[idx] -= v;
        }
        quot[dr - dm] = f;
        r = qpoly_trim(r);
    }
    (qpoly_trim(quot), r)
}

fn qpoly_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qpoly_trim(out)
}

/// Inverse of `den` modulo `modulus` over `Q[q]` via extended Euclid.
fn invert_mod(den: &LaurentPoly, modulus: &LaurentPoly) -> Result<QPoly, QcError> {
    // clear negative exponents: q^{-1} contributes a unit, fold it into den
    let den = den.shifted(-den.min_exp().min(0));
    let m = qpoly_from_int(modulus);
    let d = qpoly_rem(&qpoly_from_int(&den), &m);
    if d.is_empty() {
        return Err(QcError::DenominatorNotCoprime);
    }
    // extended Euclid on (modulus, d), tracking the coefficient of d
    let (mut r0, mut r1) = (m.clone(), d);
    let (mut t0, mut t1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() && r1.len() > 1 {
        let (q, r) = qpoly_divrem(&r0, &r1);
        let t = qpoly_sub(&t0, &qpoly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r1.is_empty() {
        return Err(QcError::DenominatorNotCoprime);
    }
    // r1 is a nonzero constant: gcd = 1 after scaling
    let scale = r1[0].clone();
    let inv: QPoly = t1.into_iter().map(|c| c / &scale).collect();
    Ok(qpoly_rem(&inv, &m))
}

fn qpoly_clear_denominators(f: &QPoly) -> LaurentPoly {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for c in f {
        if !c.is_zero() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let coeffs: Vec<BigInt> = f
        .iter()
        .map(|c| {
            let scaled = c * BigRational::from_integer(lcm.clone());
            debug_assert!(scaled.denom().is_one());
            scaled.numer().clone()
        })
        .collect();
    let mut p = LaurentPoly::from_dense(coeffs);
    if p.leading_coeff().is_negative() {
        p = -&p;
    }
    p
}
