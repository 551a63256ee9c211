//! Dense univariate polynomials over the exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{gen_binomial, rat_i64, rat_string, Rat};

/// Polynomial with rational coefficients indexed by degree.
/// Trailing zero coefficients are stripped; the zero polynomial has an empty
/// coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        Polynomial::new(cs.iter().map(|&c| rat_i64(c)).collect())
    }

    /// c * x^k
    pub fn monomial(k: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Lowest exponent with a nonzero coefficient, or None for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Divide by x^k, failing if any of the low k coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Polynomial::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Coefficients reversed: x^deg * p(1/x). Zero maps to zero.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `NotDivisible` if a nonzero remainder is left.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let dd = d.degree().unwrap();
        let lead = d.coeff(dd);
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Err(Error::NotDivisible);
        }
        let qdeg = rem.len() - 1 - dd;
        let mut q = vec![Rat::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for j in 0..=dd {
                    let t = &c * &d.coeff(j);
                    rem[k + j] = &rem[k + j] - &t;
                }
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Polynomial::new(q))
    }

    /// Product truncated to degree <= deg.
    pub fn mul_trunc(&self, other: &Polynomial, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(deg + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > deg {
                    break;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }

    pub fn truncate(&self, deg: usize) -> Self {
        Polynomial::new(self.coeffs.iter().take(deg + 1).cloned().collect())
    }

    /// Reciprocal as a power series mod x^{deg+1}; requires nonzero constant term.
    pub fn series_inv(&self, deg: usize) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::NonInvertible);
        }
        let mut inv = vec![Rat::zero(); deg + 1];
        inv[0] = Rat::one() / &c0;
        for k in 1..=deg {
            let mut s = Rat::zero();
            for j in 1..=k {
                let a = self.coeff(j);
                if !a.is_zero() {
                    s = s + a * &inv[k - j];
                }
            }
            inv[k] = -s / &c0;
        }
        Ok(Polynomial::new(inv))
    }

    /// Integer power as a power series mod x^{deg+1}; negative exponents
    /// require a nonzero constant term.
    pub fn series_pow(&self, e: i64, deg: usize) -> Result<Self> {
        let base = if e < 0 { self.series_inv(deg)? } else { self.truncate(deg) };
        let mut acc = Polynomial::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_trunc(&base, deg);
        }
        Ok(acc)
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Palindrome test P(t) = t^{2n} P(1/t) for complex dimension n.
    pub fn is_palindrome(&self, two_n: usize) -> bool {
        if self.is_zero() {
            return true;
        }
        match self.degree() {
            Some(d) if d <= two_n => {
                (0..=two_n).all(|k| self.coeff(k) == self.coeff(two_n - k))
            }
            _ => false,
        }
    }
}

/// e^{a x} truncated to degree <= deg.
pub fn exp_series(a: &Rat, deg: usize) -> Polynomial {
    let mut coeffs = Vec::with_capacity(deg + 1);
    let mut term = Rat::one();
    coeffs.push(term.clone());
    for k in 1..=deg {
        term = term * a / rat_i64(k as i64);
        coeffs.push(term.clone());
    }
    Polynomial::new(coeffs)
}

/// (1 - x)^e truncated to degree <= deg, for any integer e.
pub fn one_minus_x_pow(e: i64, deg: usize) -> Polynomial {
    let mut coeffs = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
        coeffs.push(gen_binomial(e, k as u64) * sign);
    }
    Polynomial::new(coeffs)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self, "x"))
    }
}

/// Human-readable rendering like `1 + 4t^3 - t^6`.
pub fn render(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sep = if out.is_empty() {
            if c.is_negative() { "-".into() } else { String::new() }
        } else if c.is_negative() {
            " - ".into()
        } else {
            " + ".into()
        };
        out.push_str(&sep);
        let coeff_part = if mag.is_one() && k > 0 { String::new() } else { rat_string(&mag) };
        let var_part = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        out.push_str(&coeff_part);
        out.push_str(&var_part);
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}
