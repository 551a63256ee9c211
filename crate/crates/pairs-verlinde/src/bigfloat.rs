//! Minimal arbitrary-precision fixed-point arithmetic over big integers,
//! with just enough transcendental support (pi, sin, cos) for the
//! trigonometric Verlinde sum and the root-of-unity residue check.
//!
//! A value is mantissa / 2^bits. All operations truncate toward zero at
//! the working precision; callers pick a precision with guard digits and
//! compare defects against tolerances well above the truncation noise.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};

use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    bits: u32,
}

impl BigFloat {
    pub fn zero(bits: u32) -> Self {
        BigFloat { mant: BigInt::zero(), bits }
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        BigFloat { mant: BigInt::from(v) << bits, bits }
    }

    pub fn from_rat(r: &Rat, bits: u32) -> Self {
        BigFloat { mant: (r.numer() << bits) / r.denom(), bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        BigFloat { mant: &self.mant + &rhs.mant, bits: self.bits }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        BigFloat { mant: &self.mant - &rhs.mant, bits: self.bits }
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -&self.mant, bits: self.bits }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        BigFloat { mant: (&self.mant * &rhs.mant) >> self.bits, bits: self.bits }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        assert!(!rhs.mant.is_zero(), "division by zero");
        BigFloat { mant: (&self.mant << self.bits) / &rhs.mant, bits: self.bits }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        BigFloat { mant: &self.mant * BigInt::from(k), bits: self.bits }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), bits: self.bits }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BigFloat::from_i64(1, self.bits);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_rational(&self) -> Rat {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.to_rational();
        let n = r.numer();
        let d = r.denom();
        // good enough for display purposes
        let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
        let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
        nf / df
    }

    /// |self| < 2^{-k}
    pub fn below_power_of_two(&self, k: u32) -> bool {
        if k > self.bits {
            return self.mant.is_zero();
        }
        self.mant.abs() < (BigInt::one() << (self.bits - k))
    }

    /// |self| < 10^{-digits}
    pub fn below_decimal(&self, digits: u32) -> bool {
        let bound = BigInt::from(10).pow(digits);
        &self.mant.abs() * bound < BigInt::one() << self.bits
    }

    /// Nearest integer (ties away from zero).
    pub fn round(&self) -> BigInt {
        let half = BigInt::one() << (self.bits - 1);
        let mag = (self.mant.abs() + half) >> self.bits;
        if self.mant.is_negative() {
            -mag
        } else {
            mag
        }
    }
}

/// pi by Machin's formula: 16 atan(1/5) - 4 atan(1/239).
pub fn pi(bits: u32) -> BigFloat {
    fn atan_inv(x: i64, bits: u32) -> BigFloat {
        // atan(1/x) = sum (-1)^k / ((2k+1) x^{2k+1}), computed in scaled
        // integers for speed
        let scale = BigInt::one() << bits;
        let x2 = BigInt::from(x) * BigInt::from(x);
        let mut term = scale / BigInt::from(x);
        let mut acc = BigInt::zero();
        let mut k: i64 = 0;
        while !term.is_zero() {
            let contrib = &term / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                acc += contrib;
            } else {
                acc -= contrib;
            }
            term = term / &x2;
            k += 1;
        }
        BigFloat { mant: acc, bits }
    }
    let guard = bits + 16;
    let p = atan_inv(5, guard).scale_int(16).sub(&atan_inv(239, guard).scale_int(4));
    BigFloat { mant: p.mant >> 16, bits }
}

/// sin by Taylor series; adequate for |x| < ~2 pi given guard bits.
pub fn sin(x: &BigFloat, bits: u32) -> BigFloat {
    sin_cos(x, bits).0
}

pub fn cos(x: &BigFloat, bits: u32) -> BigFloat {
    sin_cos(x, bits).1
}

pub fn sin_cos(x: &BigFloat, bits: u32) -> (BigFloat, BigFloat) {
    let guard = bits + 32;
    let xe = BigFloat { mant: &x.mant << (guard - x.bits), bits: guard };
    let x2 = xe.mul(&xe);
    let mut sin_acc = xe.clone();
    let mut term = xe.clone();
    let mut k: i64 = 1;
    loop {
        term = term.mul(&x2);
        term = BigFloat { mant: -term.mant / BigInt::from((2 * k) * (2 * k + 1)), bits: guard };
        if term.mant.is_zero() {
            break;
        }
        sin_acc = sin_acc.add(&term);
        k += 1;
    }
    let mut cos_acc = BigFloat::from_i64(1, guard);
    let mut term = BigFloat::from_i64(1, guard);
    let mut k: i64 = 1;
    loop {
        term = term.mul(&x2);
        term = BigFloat { mant: -term.mant / BigInt::from((2 * k - 1) * (2 * k)), bits: guard };
        if term.mant.is_zero() {
            break;
        }
        cos_acc = cos_acc.add(&term);
        k += 1;
    }
    (
        BigFloat { mant: sin_acc.mant >> 32, bits },
        BigFloat { mant: cos_acc.mant >> 32, bits },
    )
}

/// Complex number over BigFloat.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn zero(bits: u32) -> Self {
        Complex { re: BigFloat::zero(bits), im: BigFloat::zero(bits) }
    }

    pub fn from_rat(r: &Rat, bits: u32) -> Self {
        Complex { re: BigFloat::from_rat(r, bits), im: BigFloat::zero(bits) }
    }

    /// e^{2 pi i j / n}
    pub fn root_of_unity(j: i64, n: i64, bits: u32) -> Self {
        let two_pi = pi(bits + 16).scale_int(2);
        let angle = BigFloat {
            mant: two_pi.mant * BigInt::from(j.rem_euclid(n)) / BigInt::from(n),
            bits: bits + 16,
        };
        let (s, c) = sin_cos(&angle, bits);
        Complex { re: c, im: s }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Complex { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Complex { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Complex {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        let den = rhs.re.mul(&rhs.re).add(&rhs.im.mul(&rhs.im));
        let num = self.mul(&rhs.conj());
        Complex { re: num.re.div(&den), im: num.im.div(&den) }
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn scale(&self, f: &BigFloat) -> Self {
        Complex { re: self.re.mul(f), im: self.im.mul(f) }
    }

    pub fn abs_bound(&self) -> BigFloat {
        // |re| + |im| as a cheap modulus bound
        self.re.abs().add(&self.im.abs())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Complex { re: BigFloat::from_i64(1, self.re.bits()), im: BigFloat::zero(self.re.bits()) };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Decimal digits -> mantissa bits with headroom.
pub fn digits_to_bits(digits: u32) -> u32 {
    digits * 4 + 32
}
