//! Exact Laurent polynomial arithmetic over arbitrary-precision integers.
//!
//! [`LaurentPoly`] is the universal exact object of the crate: a dense
//! integer-coefficient polynomial in `q` allowed to start at a negative
//! exponent.  [`RatPoly`] is a lazy quotient of two Laurent polynomials;
//! equality is tested by cross-multiplication, never by gcd reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::QcError;

/// Schoolbook multiplication below this many coefficients, Karatsuba above.
const KARATSUBA_THRESHOLD: usize = 64;

/// Dense integer Laurent polynomial in canonical form: the coefficient
/// vector is trimmed at both ends, and zero is `{ min_exp: 0, coeffs: [] }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { min_exp: 0, coeffs: vec![c] }
        }
    }

    /// `c * q^e`.
    pub fn monomial<T: Into<BigInt>>(c: T, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { min_exp: e, coeffs: vec![c] }
        }
    }

    /// `1 - sign*q^e` with `sign` in `{-1, 1}` and any integer `e`.
    pub fn binomial(sign: i8, e: i64) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        if e == 0 {
            return Self::constant(1 - i64::from(sign));
        }
        let mut p = Self::one();
        p = &p - &Self::monomial(i64::from(sign), e);
        p
    }

    pub fn from_terms(terms: &[(BigInt, i64)]) -> Self {
        let mut acc = Self::zero();
        for (c, e) in terms {
            acc = &acc + &Self::monomial(c.clone(), *e);
        }
        acc
    }

    /// Builds an ordinary polynomial from the dense coefficient slice
    /// `coeffs[i] = coefficient of q^i`.
    pub fn from_dense(coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp: 0, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, i64)> {
        let base = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (c, base + i as i64))
    }

    pub fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }

    /// Multiplies by `q^e`.
    pub fn shifted(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_exp: self.min_exp + e, coeffs: self.coeffs.clone() }
    }

    /// The substitution `q -> 1/q`.
    pub fn reversed(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let mut p = LaurentPoly {
            min_exp: -(self.min_exp + self.coeffs.len() as i64 - 1),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Gcd of all coefficients (non-negative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and fixes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        if self.is_zero() {
            let mut r = other.clone();
            if negate_other {
                r = -&r;
            }
            return r;
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(other.min_exp + other.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.min_exp - lo) as usize + i];
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        let mut p = LaurentPoly { min_exp: lo, coeffs };
        p.normalize();
        p
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let coeffs = mul_vecs(&self.coeffs, &other.coeffs);
        let mut p = LaurentPoly { min_exp: self.min_exp + other.min_exp, coeffs };
        p.normalize();
        p
    }

    /// Euclidean division by a monic ordinary polynomial: `self = quot*m + rem`
    /// with `deg rem < deg m`.  Exact over the integers because `m` is monic.
    pub fn divrem(&self, m: &Self) -> Result<(Self, Self), QcError> {
        if m.is_zero() || m.min_exp < 0 || !m.leading_coeff().is_one() {
            return Err(QcError::NonMonicModulus);
        }
        if self.min_exp < 0 {
            return Err(QcError::NonMonicModulus);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let md = (m.min_exp + m.coeffs.len() as i64 - 1) as usize;
        let mut rem: Vec<BigInt> = vec![BigInt::zero(); (self.min_exp as usize) + self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            rem[self.min_exp as usize + i] = c.clone();
        }
        if rem.len() <= md {
            return Ok((Self::zero(), self.clone()));
        }
        // dense copy of m including its low zero padding
        let mut mc = vec![BigInt::zero(); md + 1];
        for (i, c) in m.coeffs.iter().enumerate() {
            mc[m.min_exp as usize + i] = c.clone();
        }
        let mut quot = vec![BigInt::zero(); rem.len() - md];
        for i in (md..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut rem[i], BigInt::zero());
            for (j, c) in mc.iter().enumerate().take(md) {
                if !c.is_zero() {
                    rem[i - md + j] -= &f * c;
                }
            }
            quot[i - md] = f;
        }
        rem.truncate(md);
        Ok((Self::from_dense(quot), Self::from_dense(rem)))
    }

    /// Exact division; errors out if the division leaves a remainder.
    pub fn div_exact(&self, m: &Self) -> Result<Self, QcError> {
        let (q, r) = self.divrem(m)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(QcError::InexactDivision)
        }
    }

    /// Text form: sparse `c*q^e` terms, e.g. `1 - q^3 + 2*q^5`.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }

    pub fn parse(s: &str) -> Result<Self, QcError> {
        parse_poly(s)
    }

    /// JSON form: ascending `[coefficient-string, exponent]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(c, e)| serde_json::json!([c.to_string(), e]))
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, QcError> {
        let arr = v.as_array().ok_or_else(|| QcError::Parse("expected array".into()))?;
        let mut terms = Vec::with_capacity(arr.len());
        for pair in arr {
            let pair = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                QcError::Parse("expected [coefficient, exponent] pair".into())
            })?;
            let c: BigInt = pair[0]
                .as_str()
                .ok_or_else(|| QcError::Parse("coefficient must be a string".into()))?
                .parse()
                .map_err(|_| QcError::Parse("bad coefficient".into()))?;
            let e = pair[1]
                .as_i64()
                .ok_or_else(|| QcError::Parse("exponent must be an integer".into()))?;
            terms.push((c, e));
        }
        Ok(Self::from_terms(&terms))
    }
}

fn mul_vecs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
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
        out
    } else {
        karatsuba(a, b)
    }
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let half = n / 2;
    if a.len() <= half || b.len() <= half {
        // unbalanced split: fall back to splitting the longer operand
        let (long, short, _swapped) = if a.len() >= b.len() { (a, b, false) } else { (b, a, true) };
        let (lo, hi) = long.split_at(half.min(long.len()));
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (part, off) in [(lo, 0usize), (hi, half)] {
            if part.is_empty() {
                continue;
            }
            let prod = mul_vecs(part, short);
            for (i, c) in prod.into_iter().enumerate() {
                out[off + i] += c;
            }
        }
        return out;
    }
    let (a0, a1) = a.split_at(half);
    let (b0, b1) = b.split_at(half);
    let z0 = mul_vecs(a0, b0);
    let z2 = mul_vecs(a1, b1);
    let asum: Vec<BigInt> = sum_pad(a0, a1);
    let bsum: Vec<BigInt> = sum_pad(b0, b1);
    let mut z1 = mul_vecs(&asum, &bsum);
    for (i, c) in z0.iter().enumerate() {
        z1[i] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        z1[i] -= c;
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in z1.into_iter().enumerate() {
        out[half + i] += c;
    }
    for (i, c) in z2.into_iter().enumerate() {
        out[2 * half + i] += c;
    }
    out
}

fn sum_pad(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, e) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

fn parse_poly(s: &str) -> Result<LaurentPoly, QcError> {
    let mut acc = LaurentPoly::zero();
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err(QcError::Parse("empty polynomial".into()));
    }
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        // find end of this term: next top-level '+' or '-' not inside an exponent
        let mut term_end = rest.len();
        let mut prev_was_caret = true;
        for (i, ch) in rest.char_indices() {
            if (ch == '+' || ch == '-') && !prev_was_caret {
                term_end = i;
                break;
            }
            prev_was_caret = ch == '^';
        }
        let term = rest[..term_end].trim();
        acc = &acc + &parse_term(term, sign)?;
        rest = rest[term_end..].trim_start();
        if rest.is_empty() {
            break;
        }
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            sign = 1;
            rest = r.trim_start();
        } else {
            return Err(QcError::Parse(format!("unexpected input: {rest}")));
        }
    }
    Ok(acc)
}

fn parse_term(term: &str, sign: i64) -> Result<LaurentPoly, QcError> {
    let term = term.trim();
    if term.is_empty() {
        return Err(QcError::Parse("empty term".into()));
    }
    let (coeff_str, var_str) = match term.find('q') {
        None => (term, ""),
        Some(i) => (&term[..i], &term[i..]),
    };
    let coeff_str = coeff_str.trim().trim_end_matches('*').trim();
    let coeff: BigInt = if coeff_str.is_empty() {
        BigInt::one()
    } else {
        coeff_str
            .parse()
            .map_err(|_| QcError::Parse(format!("bad coefficient: {coeff_str}")))?
    };
    let exp: i64 = if var_str.is_empty() {
        0
    } else if var_str == "q" {
        1
    } else {
        let e = var_str
            .strip_prefix("q^")
            .ok_or_else(|| QcError::Parse(format!("bad term: {term}")))?;
        e.trim()
            .parse()
            .map_err(|_| QcError::Parse(format!("bad exponent: {e}")))?
    };
    Ok(LaurentPoly::monomial(coeff * sign, exp))
}

/// Quotient of Laurent polynomials in lazy normal form.  The denominator is
/// nonzero; no gcd reduction is performed and equality is decided by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatPoly {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RatPoly {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QcError> {
        if den.is_zero() {
            return Err(QcError::ZeroDenominator);
        }
        Ok(RatPoly { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatPoly { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatPoly { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatPoly {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatPoly {
            num: &(&self.num * &other.den) - &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    /// Equality by cross-multiplication.
    pub fn equiv(&self, other: &Self) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }

    /// The substitution `q -> 1/q` applied to both parts.
    pub fn reversed(&self) -> Self {
        RatPoly { num: self.num.reversed(), den: self.den.reversed() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn product_difference_of_squares() {
        // (1-q)(1+q) = 1-q^2
        assert_eq!(&p("1 - q") * &p("1 + q"), p("1 - q^2"));
    }

    #[test]
    fn laurent_shift_product() {
        // (q^-1 + 1) * q = 1 + q
        assert_eq!(&p("q^-1 + 1") * &p("q"), p("1 + q"));
    }

    #[test]
    fn q_q4_pochhammer_expansion() {
        // (1-q)(1-q^5) = 1 - q - q^5 + q^6
        assert_eq!(&p("1 - q") * &p("1 - q^5"), p("1 - q - q^5 + q^6"));
    }

    #[test]
    fn divrem_basic() {
        let (q, r) = p("q^2 + q + 1").divrem(&p("q + 1")).unwrap();
        assert_eq!(q, p("q"));
        assert_eq!(r, p("1"));
    }

    #[test]
    fn phi3_divides_q3_minus_1() {
        let (q, r) = p("q^3 - 1").divrem(&p("q^2 + q + 1")).unwrap();
        assert_eq!(q, p("q - 1"));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_rejects_non_monic() {
        assert!(p("q^2").divrem(&p("2*q + 1")).is_err());
        assert!(p("q^2").divrem(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let x = p("1 - q^3 + 2*q^5");
        assert_eq!(x.to_text(), "1 - q^3 + 2*q^5");
        assert_eq!(LaurentPoly::parse(&x.to_text()).unwrap(), x);
        let y = p("-3*q^-2 + q");
        assert_eq!(LaurentPoly::parse(&y.to_text()).unwrap(), y);
    }

    #[test]
    fn json_roundtrip() {
        let x = p("1 - q^3 + 2*q^5");
        assert_eq!(LaurentPoly::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn reversed_is_involutive() {
        let x = p("q^-2 + 3 - q^4");
        assert_eq!(x.reversed().reversed(), x);
        assert_eq!(p("1 - q").reversed(), p("-q^-1 + 1"));
    }

    #[test]
    fn ratpoly_cross_equality() {
        // (1-q^2)/(1-q) == (1+q)/1
        let a = RatPoly::new(p("1 - q^2"), p("1 - q")).unwrap();
        let b = RatPoly::from_poly(p("1 + q"));
        assert!(a.equiv(&b));
        assert!(!a.equiv(&RatPoly::one()));
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        // degree past the threshold with a structured product we can verify:
        // (1+q+...+q^127)*(1-q) = 1-q^128
        let ones = LaurentPoly::from_dense(vec![BigInt::one(); 128]);
        let prod = &ones * &p("1 - q");
        assert_eq!(prod, p("1 - q^128"));
        let sq = &ones * &ones;
        assert_eq!(sq.coeff(127), BigInt::from(128));
        assert_eq!(sq.coeff(200), BigInt::from(55));
    }
}
