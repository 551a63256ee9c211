//! dim V_{m,n} by residue and alternating-sum routes, the dispatcher over
//! all parameter regions, the Verlinde formula in exact and trigonometric
//! forms, and the global residue-theorem consistency check.

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde::Serialize;

use crate::bigfloat::{digits_to_bits, pi, sin, BigFloat, Complex};
use crate::chambers::{blowup_level_b, region_ok, ChamberSpec};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::{binomial, gen_binomial, rat_i64, rat_string, to_bigint, Rat};
use crate::ratfun::RationalLaurent;
use crate::symprod::ni_ring;

/// The (g, d, m, n) of a dim V_{m,n} query together with the derived
/// exponents h = (d-2)m - 2n and h' = -h - d + 2g - 2 that govern the pole
/// structure of the generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FSpec {
    pub g: i64,
    pub d: i64,
    pub m: i64,
    pub n: i64,
}

impl FSpec {
    pub fn new(g: i64, d: i64, m: i64, n: i64) -> Result<Self> {
        ChamberSpec::new(g, d)?;
        Ok(FSpec { g, d, m, n })
    }

    pub fn h(&self) -> i64 {
        (self.d - 2) * self.m - 2 * self.n
    }

    pub fn hprime(&self) -> i64 {
        -self.h() - self.d + 2 * self.g - 2
    }

    pub fn chamber_spec(&self) -> ChamberSpec {
        ChamberSpec::new(self.g, self.d).unwrap()
    }

    /// The region condition h > -d + 2g - 2, equivalently h > h'.
    pub fn region_ok(&self) -> bool {
        region_ok(self.m, self.n, &self.chamber_spec())
    }
}

/// Which rule of the case analysis produced a dim V_{m,n} value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DimStatus {
    ResidueRegion,
    ZeroMNegative,
    BinomialNNegative,
    ZeroUnstable,
    OutsideRegion,
}

/// Outcome of a dim V_{m,n} query: the value (absent only outside the
/// validated region) and the per-route trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimResult {
    pub status: DimStatus,
    pub value: Option<BigInt>,
    pub trace: Vec<(String, BigInt)>,
}

/// The generating function
///   F(t) = (1-t^{m+2})^{-h-1} (1-t^{m+1})^{-h'-1}
///          (1-(2m+3)(1-t)t^{m+1}-t^{2m+3})^g / ((1-t)^{d+g-1} t^{m+n})
/// as an exact rational function.
pub fn f_build(spec: &FSpec) -> RationalLaurent {
    let (m, n, d, g) = (spec.m, spec.n, spec.d, spec.g);
    let h = spec.h();
    let hp = spec.hprime();
    let one_minus_tk = |k: usize| {
        let mut c = vec![Rat::zero(); k + 1];
        c[0] = Rat::one();
        c[k] = -Rat::one();
        RationalLaurent::from_poly(Polynomial::new(c))
    };
    let f1 = one_minus_tk((m + 2) as usize).pow(-h - 1).unwrap();
    let f2 = one_minus_tk((m + 1) as usize).pow(-hp - 1).unwrap();
    let f3 = one_minus_tk(1).pow(-(d + g - 1)).unwrap();
    // 1 - (2m+3) t^{m+1} + (2m+3) t^{m+2} - t^{2m+3}
    let mut core = vec![Rat::zero(); (2 * m + 3) as usize + 1];
    core[0] = Rat::one();
    core[(m + 1) as usize] = rat_i64(-(2 * m + 3));
    core[(m + 2) as usize] = rat_i64(2 * m + 3);
    core[(2 * m + 3) as usize] = -Rat::one();
    let f4 = RationalLaurent::from_poly(Polynomial::new(core)).pow(g).unwrap();
    let shift = RationalLaurent::monomial(-(m + n), Rat::one());
    &(&(&f1 * &f2) * &(&f3 * &f4)) * &shift
}

/// dim V_{m,n} as the constant term of the Laurent expansion of F at t = 0.
pub fn dimv_residue(spec: &FSpec) -> Result<BigInt> {
    if spec.m < 0 || spec.n < 0 || !spec.region_ok() {
        return Err(Error::RegionViolation);
    }
    let f = f_build(spec);
    let c = f.expand(1)?.coeff(0)?;
    to_bigint(&c).ok_or_else(|| Error::NonInteger(rat_string(&c)))
}

/// dim V_{m,n} as the alternating sum of the wall-crossing Euler
/// characteristics N_i; the terms beyond the blow-up level b are verified
/// to vanish.
pub fn dimv_sum(spec: &FSpec) -> Result<BigInt> {
    if spec.m < 0 || spec.n < 0 || !spec.region_ok() {
        return Err(Error::RegionViolation);
    }
    let chamber = spec.chamber_spec();
    let b = blowup_level_b(spec.m, spec.n, &chamber)?;
    let mut acc = BigInt::zero();
    for i in 0..=b {
        let ni = ni_ring(i, spec.m, spec.n, spec.d, spec.g)?;
        if i % 2 == 0 {
            acc += ni;
        } else {
            acc -= ni;
        }
    }
    for i in (b + 1)..=chamber.w() {
        let ni = ni_ring(i, spec.m, spec.n, spec.d, spec.g)?;
        if !ni.is_zero() {
            return Err(Error::NonInteger(format!("N_{i} = {ni} nonzero beyond b = {b}")));
        }
    }
    Ok(acc)
}

/// Full dispatcher over the case analysis. Region gaps are a status, not
/// an error; inside the residue region both routes run and must agree.
pub fn dimv(g: i64, d: i64, m: i64, n: i64) -> Result<DimResult> {
    let spec = FSpec::new(g, d, m, n)?;
    if m < 0 {
        return Ok(DimResult {
            status: DimStatus::ZeroMNegative,
            value: Some(BigInt::zero()),
            trace: vec![("rule".into(), BigInt::zero())],
        });
    }
    if n < 0 {
        let k = m + n;
        let value = if k < 0 {
            BigInt::zero()
        } else {
            binomial((k + d + g - 2) as u64, k as u64)
        };
        return Ok(DimResult {
            status: DimStatus::BinomialNNegative,
            value: Some(value.clone()),
            trace: vec![("binomial".into(), value)],
        });
    }
    if spec.region_ok() {
        let r = dimv_residue(&spec)?;
        let s = dimv_sum(&spec)?;
        if r != s {
            return Err(Error::NonInteger(format!(
                "route disagreement: residue {r} vs sum {s} at g={g} d={d} m={m} n={n}"
            )));
        }
        return Ok(DimResult {
            status: DimStatus::ResidueRegion,
            value: Some(r.clone()),
            trace: vec![("residue".into(), r), ("sum".into(), s)],
        });
    }
    if d >= 2 * g && spec.h() < 0 {
        return Ok(DimResult {
            status: DimStatus::ZeroUnstable,
            value: Some(BigInt::zero()),
            trace: vec![("instability".into(), BigInt::zero())],
        });
    }
    Ok(DimResult { status: DimStatus::OutsideRegion, value: None, trace: vec![] })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// A Verlinde-dimension query: level k sections over the moduli space of
/// bundles with determinant of the given degree parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerlindeQuery {
    pub g: i64,
    pub k: i64,
    pub parity: Parity,
}

/// Canonical degree for a parity: the minimal d > 2g-2 with that parity.
pub fn canonical_degree(g: i64, parity: Parity) -> i64 {
    match parity {
        Parity::Even => 2 * g,
        Parity::Odd => 2 * g + 1,
    }
}

/// Exact Verlinde dimension via dim V_{k, k(d/2-1)} at a chosen degree
/// d > 2g-2 of the right parity. Odd degree with odd level is 0 by
/// convention (the theta power is not integral there).
pub fn verlinde_exact_at(q: &VerlindeQuery, d: i64) -> Result<BigInt> {
    assert!(d > 2 * q.g - 2, "theta identification needs d > 2g-2");
    if q.k < 0 {
        return Err(Error::RegionViolation);
    }
    if k_d_both_odd(q.k, d) {
        return Ok(BigInt::zero());
    }
    let n = q.k * (d - 2) / 2;
    let res = dimv(q.g, d, q.k, n)?;
    Ok(res.value.expect("h = 0 lies inside the residue region"))
}

fn k_d_both_odd(k: i64, d: i64) -> bool {
    k % 2 != 0 && d % 2 != 0
}

pub fn verlinde_exact(q: &VerlindeQuery) -> Result<BigInt> {
    verlinde_exact_at(q, canonical_degree(q.g, q.parity))
}

/// The trigonometric Verlinde sum
///   ((k+2)/2)^{g-1} sum_{j=1}^{k+1} (-1)^{d(j+1)} / sin(j pi/(k+2))^{2g-2}
/// evaluated with at least `digits` decimal digits of working precision.
pub fn verlinde_trig(q: &VerlindeQuery, digits: u32) -> BigFloat {
    let digits = digits.max(30);
    let bits = digits_to_bits(digits);
    let kk = q.k + 2;
    let p = pi(bits + 16);
    let mut acc = BigFloat::zero(bits);
    for j in 1..=(q.k + 1) {
        let angle = BigFloat::from_rat(&Rat::new((j).into(), kk.into()), bits + 16);
        let x = angle.mul(&p);
        let x = BigFloat::from_rat(&x.to_rational(), bits);
        let s = sin(&x, bits).pow(2 * q.g as u32 - 2);
        let sign = match q.parity {
            Parity::Even => 1,
            Parity::Odd => {
                if (j + 1) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        };
        let term = BigFloat::from_i64(sign, bits).div(&s);
        acc = acc.add(&term);
    }
    let pref = BigFloat::from_rat(&Rat::new(kk.into(), 2.into()), bits).pow(q.g as u32 - 1);
    acc.mul(&pref)
}

/// Global residue check: the residues of F(t) dt/t at the nontrivial
/// (m+1)-th and (m+2)-th roots of unity must sum to -2 dim V_{m,n}.
/// Returns the absolute defect; errors only if the defect stays above
/// 10^{-digits/2} after doubling the precision twice.
pub fn residue_sum_check(spec: &FSpec, digits: u32) -> Result<Rat> {
    let dim = dimv_residue(spec)?;
    let mut digits = digits.max(30);
    for attempt in 0..3 {
        let defect = residue_defect(spec, &dim, digits);
        let tol = Rat::new(BigInt::one(), BigInt::from(10).pow(digits / 2));
        if defect < tol {
            return Ok(defect);
        }
        if attempt == 2 {
            return Err(Error::PrecisionInsufficient { defect: rat_string(&defect) });
        }
        digits *= 2;
    }
    unreachable!()
}

/// |2 dim V + sum of residues| at the given precision.
pub fn residue_defect(spec: &FSpec, dim: &BigInt, digits: u32) -> Rat {
    let bits = digits_to_bits(digits);
    let f = f_build(spec);
    let h = spec.h();
    let hp = spec.hprime();
    let m = spec.m;

    let mut total = Complex::zero(bits);
    // poles at the (m+2)-th roots iff h >= 0, at the (m+1)-th iff h' >= 0
    for (order, mult) in [(m + 2, h + 1), (m + 1, hp + 1)] {
        if mult <= 0 {
            continue;
        }
        for j in 1..order {
            let zeta = Complex::root_of_unity(j, order, bits);
            total = total.add(&residue_at(&f, &zeta, mult as usize, bits));
        }
    }
    let two_dim = Complex::from_rat(&Rat::from_integer(dim * BigInt::from(2)), bits);
    total.add(&two_dim).abs_bound().to_rational().abs()
}

/// Residue of F(t) dt/t at t = zeta, where zeta is a root of the
/// denominator of known multiplicity `mult`. Works by Taylor-expanding
/// numerator and denominator at zeta and dividing the series.
fn residue_at(f: &RationalLaurent, zeta: &Complex, mult: usize, bits: u32) -> Complex {
    let p = mult;
    let terms = p + 1;
    // Taylor coefficients of den(zeta + u): the first p are zero in exact
    // arithmetic; drop them and keep the unit part.
    let den_taylor = taylor_at(f.den(), zeta, p + terms, bits);
    let unit: Vec<Complex> = den_taylor[p..].to_vec();
    // Taylor of num(zeta + u) * (zeta + u)^{shift - 1}
    let num_taylor = taylor_at(f.num(), zeta, terms, bits);
    let shifted = mul_series(
        &num_taylor,
        &power_taylor(zeta, f.shift() - 1, terms, bits),
        terms,
    );
    // residue = [u^{p-1}] shifted / unit
    let quot = div_series(&shifted, &unit, terms);
    quot[p - 1].clone()
}

/// Taylor coefficients of p(zeta + u) up to u^{terms-1}, by repeated
/// synthetic division.
fn taylor_at(p: &Polynomial, zeta: &Complex, terms: usize, bits: u32) -> Vec<Complex> {
    let mut coeffs: Vec<Complex> =
        p.coeffs().iter().map(|c| Complex::from_rat(c, bits)).collect();
    if coeffs.is_empty() {
        coeffs.push(Complex::zero(bits));
    }
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        // divide by (t - zeta): remainder is the next Taylor coefficient
        let mut rem = Complex::zero(bits);
        for c in coeffs.iter_mut().rev() {
            let tmp = c.add(&rem.mul(zeta));
            rem = tmp.clone();
            *c = tmp;
        }
        // after the pass, coeffs[0] holds the remainder and the quotient
        // sits in coeffs[1..] shifted down
        out.push(coeffs[0].clone());
        coeffs.remove(0);
        if coeffs.is_empty() {
            coeffs.push(Complex::zero(bits));
        }
    }
    out
}

/// Taylor coefficients of (zeta + u)^e around u = 0 (e may be negative;
/// zeta must be nonzero).
fn power_taylor(zeta: &Complex, e: i64, terms: usize, bits: u32) -> Vec<Complex> {
    // (zeta + u)^e = zeta^e sum_k binom(e, k) (u/zeta)^k
    let one = Complex::from_rat(&Rat::one(), bits);
    let zeta_inv = one.div(zeta);
    let zeta_e = if e >= 0 { zeta.pow(e as u32) } else { zeta_inv.pow((-e) as u32) };
    let mut out = Vec::with_capacity(terms);
    let mut pw = zeta_e;
    for k in 0..terms {
        let c = BigFloat::from_rat(&gen_binomial(e, k as u64), bits);
        out.push(pw.scale(&c));
        pw = pw.mul(&zeta_inv);
    }
    out
}

fn mul_series(a: &[Complex], b: &[Complex], terms: usize) -> Vec<Complex> {
    let bits = a[0].re.bits();
    let mut out = vec![Complex::zero(bits); terms];
    for (i, ai) in a.iter().enumerate().take(terms) {
        for (j, bj) in b.iter().enumerate() {
            if i + j >= terms {
                break;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

fn div_series(a: &[Complex], b: &[Complex], terms: usize) -> Vec<Complex> {
    let bits = a[0].re.bits();
    let mut out = vec![Complex::zero(bits); terms];
    for k in 0..terms.min(a.len()) {
        let mut acc = a[k].clone();
        for j in 1..=k {
            if j < b.len() {
                acc = acc.sub(&b[j].mul(&out[k - j]));
            }
        }
        out[k] = acc.div(&b[0]);
    }
    out
}
