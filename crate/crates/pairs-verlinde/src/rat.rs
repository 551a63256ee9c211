//! Exact rational scalars.
//!
//! Everything in this crate is computed over `Q` with arbitrary precision;
//! no floating point enters any formula (the high-precision numerics in
//! [`crate::bigfloat`] are used only for consistency *checks*).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Converts to `i64`, failing if the value is not an integer or does not fit.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

pub fn to_bigint(r: &Rat) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for any integer a.
pub fn gen_binomial(a: i64, k: u64) -> Rat {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(a) - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    Rat::new(num, den)
}

/// Ordinary binomial coefficient C(n, k) as a big integer; zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let r = gen_binomial(n as i64, k);
    debug_assert!(is_integer(&r));
    r.numer().clone()
}

/// Renders a rational as `p/q`, or just `p` when the denominator is 1.
/// This is the serialization used in all JSON/CSV output.
pub fn rat_string(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_binomial_values() {
        assert_eq!(gen_binomial(5, 2), rat_i64(10));
        assert_eq!(gen_binomial(-3, 2), rat_i64(6));
        assert_eq!(gen_binomial(0, 0), rat_i64(1));
        assert_eq!(gen_binomial(-1, 3), rat_i64(-1));
        assert_eq!(gen_binomial(3, 5), rat_i64(0));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 2), BigInt::from(21));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn rat_strings() {
        assert_eq!(rat_string(&Rat::new(BigInt::from(2), BigInt::from(4))), "1/2");
        assert_eq!(rat_string(&rat_i64(-7)), "-7");
    }
}
