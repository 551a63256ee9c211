//! Exact rational functions of one variable with a monomial shift.
//!
//! A `RationalLaurent` represents t^shift * num(t)/den(t) exactly. This is
//! the canonical form for generating functions: expansion at t = 0 to any
//! order is deterministic, and identities like antisymmetry under t -> 1/t
//! can be checked exactly by cross-multiplication.

use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::laurent::LaurentSeries;
use crate::poly::Polynomial;
use crate::rat::Rat;

#[derive(Clone, Debug)]
pub struct RationalLaurent {
    shift: i64,
    num: Polynomial,
    den: Polynomial,
}

impl RationalLaurent {
    /// Normalization folds powers of t out of both numerator and denominator
    /// into the shift, so den(0) != 0 always holds (and num(0) != 0 unless
    /// the function is zero).
    pub fn new(shift: i64, num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalLaurent { shift: 0, num, den: Polynomial::one() });
        }
        let vn = num.valuation().unwrap() as i64;
        let vd = den.valuation().unwrap() as i64;
        Ok(RationalLaurent {
            shift: shift + vn - vd,
            num: num.shift_down(vn as usize).unwrap(),
            den: den.shift_down(vd as usize).unwrap(),
        })
    }

    pub fn zero() -> Self {
        RationalLaurent { shift: 0, num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalLaurent { shift: 0, num: Polynomial::one(), den: Polynomial::one() }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalLaurent::new(0, p, Polynomial::one()).unwrap()
    }

    /// c * t^k
    pub fn monomial(k: i64, c: Rat) -> Self {
        RationalLaurent::new(k, Polynomial::constant(c), Polynomial::one()).unwrap()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// r^e; negative exponents swap numerator and denominator.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::NonInvertible);
        }
        let (num, den, shift) = if e < 0 {
            (self.den.clone(), self.num.clone(), -self.shift)
        } else {
            (self.num.clone(), self.den.clone(), self.shift)
        };
        let k = e.unsigned_abs() as u32;
        RationalLaurent::new(shift * e.abs(), num.pow(k), den.pow(k))
    }

    /// Exact expansion at t = 0 through exponent order-1.
    pub fn expand(&self, order: i64) -> Result<LaurentSeries> {
        if self.is_zero() {
            return Ok(LaurentSeries::zero_to(order));
        }
        if order <= self.shift {
            return Err(Error::InvalidOrder { order, shift: self.shift });
        }
        let len = (order - self.shift) as usize;
        let inv = self.den.series_inv(len - 1)?;
        let prod = self.num.mul_trunc(&inv, len - 1);
        let mut coeffs = vec![Rat::zero(); len];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = prod.coeff(k);
        }
        Ok(LaurentSeries::new(self.shift, coeffs))
    }

    /// The exact rational function r(1/t), renormalized.
    pub fn subst_reciprocal(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        RationalLaurent::new(-self.shift - dn + dd, self.num.reverse(), self.den.reverse())
            .unwrap()
    }
}

/// Equality by cross-multiplication of normalized forms.
impl PartialEq for RationalLaurent {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() == other.is_zero();
        }
        if self.shift != other.shift {
            // After normalization num(0) != 0 and den(0) != 0, so equal
            // functions have equal shifts.
            return false;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalLaurent {}

impl Mul for &RationalLaurent {
    type Output = RationalLaurent;
    fn mul(self, rhs: &RationalLaurent) -> RationalLaurent {
        RationalLaurent::new(
            self.shift + rhs.shift,
            &self.num * &rhs.num,
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Add for &RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, rhs: &RationalLaurent) -> RationalLaurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = rhs.num.shift_up((rhs.shift - s) as usize);
        RationalLaurent::new(s, &(&a * &rhs.den) + &(&b * &self.den), &self.den * &rhs.den)
            .unwrap()
    }
}

impl Sub for &RationalLaurent {
    type Output = RationalLaurent;
    fn sub(self, rhs: &RationalLaurent) -> RationalLaurent {
        self + &(-rhs)
    }
}

impl Neg for &RationalLaurent {
    type Output = RationalLaurent;
    fn neg(self) -> RationalLaurent {
        RationalLaurent { shift: self.shift, num: -&self.num, den: self.den.clone() }
    }
}
