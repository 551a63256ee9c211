//! Truncated Laurent series with exact rational coefficients.
//!
//! Every series carries an explicit truncation `order`: the coefficient of
//! t^e is known exactly for shift <= e < order, and *unknown* (not zero!)
//! from `order` on. Reading past the window is an error, never a silent
//! zero -- silent zero-padding is the classic source of wrong residues.

use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    /// Lowest represented exponent.
    shift: i64,
    /// Coefficient of t^{shift + k} at index k.
    coeffs: Vec<Rat>,
}

impl LaurentSeries {
    pub fn new(shift: i64, coeffs: Vec<Rat>) -> Self {
        LaurentSeries { shift, coeffs }.normalized()
    }

    /// The zero series known up to (excluding) `order`.
    pub fn zero_to(order: i64) -> Self {
        LaurentSeries { shift: order, coeffs: vec![] }
    }

    /// A polynomial regarded as a series known up to `order`.
    pub fn from_poly(p: &Polynomial, order: i64) -> Result<Self> {
        let deg = p.degree().map_or(0, |d| d as i64);
        if p.is_zero() {
            return Ok(LaurentSeries::zero_to(order));
        }
        if order <= deg {
            return Err(Error::InvalidOrder { order, shift: deg });
        }
        let len = usize::try_from(order.max(0)).unwrap();
        let mut coeffs = vec![Rat::zero(); len];
        for (k, c) in p.coeffs().iter().enumerate() {
            coeffs[k] = c.clone();
        }
        Ok(LaurentSeries { shift: 0, coeffs })
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// First unknown exponent.
    pub fn order(&self) -> i64 {
        self.shift + self.coeffs.len() as i64
    }

    /// Number of known coefficients.
    pub fn window(&self) -> usize {
        self.coeffs.len()
    }

    fn normalized(mut self) -> Self {
        // Leading zeros carry no information; fold them into the shift.
        // Trailing zeros are *known* zeros and must be kept.
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.shift += lead as i64;
        }
        self
    }

    /// Exact coefficient of t^e. Exponents below the shift are genuinely
    /// zero; exponents at or past `order` are unknown and raise OutOfWindow.
    pub fn coeff(&self, e: i64) -> Result<Rat> {
        if e >= self.order() {
            return Err(Error::OutOfWindow { wanted: e, order: self.order() });
        }
        if e < self.shift {
            return Ok(Rat::zero());
        }
        Ok(self.coeffs[(e - self.shift) as usize].clone())
    }

    /// Lowest exponent with a nonzero known coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|k| self.shift + k as i64)
    }

    pub fn is_zero_to_order(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        LaurentSeries {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
        .normalized()
    }

    /// Multiply by t^k.
    pub fn mul_tk(&self, k: i64) -> Self {
        LaurentSeries { shift: self.shift + k, coeffs: self.coeffs.clone() }
    }

    /// Reciprocal on the shared window; the lowest known coefficient must be
    /// nonzero and at the bottom of the window.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::NonInvertible)?;
        let len = (self.order() - v) as usize;
        let unit: Vec<Rat> = self.coeffs[(v - self.shift) as usize..].to_vec();
        let c0 = unit[0].clone();
        let mut inv = vec![Rat::zero(); len];
        inv[0] = Rat::one() / &c0;
        for k in 1..len {
            let mut s = Rat::zero();
            for j in 1..=k {
                if !unit[j].is_zero() {
                    s = s + &unit[j] * &inv[k - j];
                }
            }
            inv[k] = -s / &c0;
        }
        Ok(LaurentSeries { shift: -v, coeffs: inv }.normalized())
    }

    /// s^e with correct window bookkeeping; negative e inverts the unit part.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            let mut coeffs = vec![Rat::zero(); self.window().max(1)];
            coeffs[0] = Rat::one();
            return Ok(LaurentSeries { shift: 0, coeffs });
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = base.clone();
        for _ in 1..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The polynomial part (all known coefficients), failing on negative
    /// exponents with nonzero coefficients.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        if self.valuation().map_or(false, |v| v < 0) {
            return Err(Error::NonInteger("negative exponents present".into()));
        }
        let mut coeffs = vec![Rat::zero(); usize::try_from(self.order().max(0)).unwrap()];
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.shift + k as i64;
            if e >= 0 {
                coeffs[e as usize] = c.clone();
            }
        }
        Ok(Polynomial::new(coeffs))
    }
}

use num::One;

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = self.order().min(rhs.order());
        let shift = self.shift.min(rhs.shift).min(order);
        let mut coeffs = vec![Rat::zero(); (order - shift) as usize];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let e = shift + k as i64;
            let a = if e >= self.shift && e < self.order() { self.coeffs[(e - self.shift) as usize].clone() } else { Rat::zero() };
            let b = if e >= rhs.shift && e < rhs.order() { rhs.coeffs[(e - rhs.shift) as usize].clone() } else { Rat::zero() };
            *c = a + b;
        }
        LaurentSeries { shift, coeffs }.normalized()
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        // Tightest provable order: an unknown term of one factor meets the
        // lowest term of the other.
        let order = (self.order() + rhs.shift).min(rhs.order() + self.shift);
        let shift = self.shift + rhs.shift;
        if order <= shift {
            return LaurentSeries::zero_to(order);
        }
        let mut coeffs = vec![Rat::zero(); (order - shift) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if (i + j) < coeffs.len() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                } else {
                    break;
                }
            }
        }
        LaurentSeries { shift, coeffs }.normalized()
    }
}
