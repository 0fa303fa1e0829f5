//! Truncated integer power series, used to compare infinite products and
//! non-terminating sums coefficientwise.
//!
//! - every factor handled here is a binomial `1 - s*q^e`, so multiplication
//!   and (geometric) division are both `O(N)` per factor;
//! - [`series_from_product`] expands `prod (±q^s; q^t)_inf^mult`;
//! - [`series_from_sum`] expands a [`TermSpec`] sum by the term ratio
//!   recurrence, stopping once the leading `q`-order of the terms passes `N`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::QcError;
use crate::poly::LaurentPoly;
use crate::qseries::{PochFactor, TermSpec};

/// Integer power series truncated at order `N`: coefficients of `q^0..q^{N-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeriesZ {
    coeffs: Vec<BigInt>,
}

impl PowerSeriesZ {
    pub fn zero(order: usize) -> Self {
        PowerSeriesZ { coeffs: vec![BigInt::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
    }

    /// Multiplies in place by `1 - sign*q^e`, `e >= 1`.
    pub fn mul_binomial(&mut self, sign: i8, e: usize) {
        assert!(e >= 1);
        let n = self.coeffs.len();
        for i in (e..n).rev() {
            let delta = &self.coeffs[i - e] * sign;
            self.coeffs[i] -= delta;
        }
    }

    /// Divides in place by `1 - sign*q^e` (geometric expansion), `e >= 1`.
    pub fn div_binomial(&mut self, sign: i8, e: usize) {
        assert!(e >= 1);
        let n = self.coeffs.len();
        for i in e..n {
            let delta = &self.coeffs[i - e] * sign;
            self.coeffs[i] += delta;
        }
    }

    /// Full truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplies in place by `q^e`, discarding the top `e` coefficients.
    pub fn shift_up(&mut self, e: usize) {
        let n = self.coeffs.len();
        if e >= n {
            for c in self.coeffs.iter_mut() {
                *c = BigInt::zero();
            }
            return;
        }
        for i in (e..n).rev() {
            self.coeffs[i] = std::mem::take(&mut self.coeffs[i - e]);
        }
        for c in self.coeffs.iter_mut().take(e) {
            *c = BigInt::zero();
        }
    }

    pub fn negate(&mut self) {
        for c in self.coeffs.iter_mut() {
            let v = std::mem::take(c);
            *c = -v;
        }
    }

    pub fn from_poly(f: &LaurentPoly, order: usize) -> Self {
        assert!(f.min_exp() >= 0, "power series need non-negative exponents");
        let mut s = Self::zero(order);
        for (c, e) in f.terms() {
            if (e as usize) < order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        s
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_dense(self.coeffs.clone())
    }
}

/// Expands `prod_i (sign_i * q^{a_i}; q^{step_i})_inf ^ mult_i` to order `N`.
/// Each factor must have `a_exp >= 1` so its constant term is 1.
pub fn series_from_product(factors: &[PochFactor], n: usize) -> Result<PowerSeriesZ, QcError> {
    let mut s = PowerSeriesZ::one(n);
    for f in factors {
        if f.a_exp < 1 {
            return Err(QcError::DivergentProduct);
        }
        let mut e = f.a_exp as usize;
        while e < n {
            for _ in 0..f.mult.unsigned_abs() {
                if f.mult > 0 {
                    s.mul_binomial(f.sign, e);
                } else {
                    s.div_binomial(f.sign, e);
                }
            }
            e += f.step as usize;
        }
    }
    Ok(s)
}

/// Expands a [`TermSpec`] sum to order `N` via the term-ratio recurrence.
/// Every Pochhammer binomial must be a unit series (`a_exp + j*step >= 0`);
/// termination needs the term order `A k^2 + B k` to grow.
pub fn series_from_sum(t: &TermSpec, n: usize) -> Result<PowerSeriesZ, QcError> {
    if t.quad_coef < 0 || t.lin_coef < 0 || (t.quad_coef == 0 && t.lin_coef == 0) {
        return Err(QcError::NotSummableAsSeries);
    }
    for a in &t.affine_factors {
        if a.mult == -1 && a.c != 0 {
            return Err(QcError::OutOfDomain(
                "affine denominator factors must be constant in k".into(),
            ));
        }
    }
    let mut base = PowerSeriesZ::one(n); // sign^k q^{Ak^2+Bk} * prod poch^mult
    for a in &t.affine_factors {
        if a.mult == -1 {
            if a.d < 1 {
                return Err(QcError::NotSummableAsSeries);
            }
            base.div_binomial(-a.sign, a.d as usize);
        }
    }
    let mut acc = PowerSeriesZ::zero(n);
    let mut shift: i64 = 0; // current A k^2 + B k
    let mut k: i64 = 0;
    loop {
        // term = base * affine numerators at this k
        let mut term = base.clone();
        let mut term_zero = false;
        for a in &t.affine_factors {
            if a.mult == 1 {
                let e = a.c * k + a.d;
                if e == 0 {
                    if a.sign == -1 {
                        term_zero = true;
                        break;
                    }
                    let two = BigInt::from(2);
                    for c in term.coeffs.iter_mut() {
                        *c *= &two;
                    }
                } else if e < 0 {
                    return Err(QcError::NotSummableAsSeries);
                } else {
                    term.mul_binomial(-a.sign, e as usize);
                }
            }
        }
        if !term_zero {
            acc.add_assign(&term);
        }
        // advance to k+1
        k += 1;
        let new_shift = t.quad_coef * k * k + t.lin_coef * k;
        if new_shift >= n as i64 {
            break;
        }
        let mut dead = false;
        for f in &t.factors {
            let m = f.a_exp + (k - 1) * i64::from(f.step);
            if m < 0 || (m == 0 && f.mult < 0) {
                return Err(QcError::NotSummableAsSeries);
            }
            if m == 0 && f.sign == 1 {
                dead = true; // numerator factor (1 - q^0) = 0
                break;
            }
            for _ in 0..f.mult.unsigned_abs() {
                if m == 0 {
                    // 1 - sign*q^0 = 2 for sign = -1
                    let two = BigInt::from(2);
                    if f.mult > 0 {
                        for c in base.coeffs.iter_mut() {
                            *c *= &two;
                        }
                    } else {
                        unreachable!("checked above");
                    }
                } else if f.mult > 0 {
                    base.mul_binomial(f.sign, m as usize);
                } else {
                    base.div_binomial(f.sign, m as usize);
                }
            }
        }
        if dead {
            break;
        }
        base.shift_up((new_shift - shift) as usize);
        shift = new_shift;
        if t.sign_k == -1 {
            base.negate();
        }
    }
    Ok(acc)
}
