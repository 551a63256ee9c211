//! Poincare polynomials: Macdonald's formula for symmetric products, the
//! closed form and the telescoping recursion for the pair moduli spaces,
//! the Harder-Narasimhan formula for the bundle moduli space, and Zagier's
//! two-route F(a,b,c,t) identity.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::{binomial, Rat};
use crate::ratfun::RationalLaurent;

/// Betti-number checks every emitted polynomial must pass.
pub fn assert_betti(p: &Polynomial, two_n: usize) -> Result<()> {
    if !p.is_integral() {
        return Err(Error::NonInteger(format!("{:?}", p)));
    }
    if !p.is_nonnegative() {
        return Err(Error::NonInteger(format!("negative Betti number in {:?}", p)));
    }
    if !p.is_palindrome(two_n) {
        return Err(Error::NonInteger(format!("Poincare duality fails in {:?}", p)));
    }
    Ok(())
}

/// P_t(X_j) = Coeff_{x^j} (1+xt)^{2g} / ((1-x)(1-x t^2)).
///
/// The x^j coefficient is a finite sum: pick x^a from the binomial, x^c
/// from the geometric series in x t^2, and the rest from 1/(1-x).
pub fn p_symprod(j: i64, g: i64) -> Polynomial {
    let j = j as usize;
    let mut acc = Polynomial::zero();
    for a in 0..=j.min(2 * g as usize) {
        let c = Rat::from_integer(binomial(2 * g as u64, a as u64));
        // sum_{b=0}^{j-a} t^{2b}, times t^a
        let mut geo = vec![Rat::zero(); 2 * (j - a) + 1 + a];
        for b in 0..=(j - a) {
            geo[a + 2 * b] = c.clone();
        }
        acc = &acc + &Polynomial::new(geo);
    }
    acc
}

/// Independent brute force for `p_symprod`: enumerate monomials
/// x^a y^b xi_I with a + b + |I| = j over the super-symmetric algebra on
/// one degree-0 even, one degree-2 even and 2g degree-1 odd generators,
/// counting t^{2b + |I|}. Only feasible for small j, g.
pub fn p_symprod_oracle(j: i64, g: i64) -> Polynomial {
    let j = j as usize;
    let odd = 2 * g as usize;
    let mut counts = vec![0u64; 2 * j + 1];
    for mask in 0u64..(1 << odd) {
        let size = mask.count_ones() as usize;
        if size > j {
            continue;
        }
        for b in 0..=(j - size) {
            // a = j - size - b is forced
            counts[2 * b + size] += 1;
        }
    }
    Polynomial::new(counts.into_iter().map(|c| Rat::from_integer(c.into())).collect())
}

/// Multiply two series in x (coefficients are exact Laurent polynomials in
/// t) truncated past x^cap.
fn xseries_mul(a: &[RationalLaurent], b: &[RationalLaurent], cap: usize) -> Vec<RationalLaurent> {
    let mut out = vec![RationalLaurent::zero(); cap + 1];
    for (i, ai) in a.iter().enumerate().take(cap + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > cap {
                break;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// P_t(M_i) by the closed coefficient-extraction formula, expanded as an
/// honest bivariate series in x with Laurent-polynomial t-coefficients
/// (independent of `p_symprod` and of the telescoped route).
pub fn p_pairs_moduli(i: i64, d: i64, g: i64) -> Result<Polynomial> {
    let w = (d - 1).div_euclid(2);
    if i < 0 || i > w || d < 3 || g < 2 {
        return Err(Error::InvalidChamber { i, w });
    }
    let cap = i as usize;
    let mono = |e: i64, c: Rat| RationalLaurent::monomial(e, c);
    // 1/(xt^4 - 1) = -sum_k x^k t^{4k}
    let s1: Vec<_> = (0..=cap).map(|k| mono(4 * k as i64, -Rat::one())).collect();
    // 1/(x - t^2) = -sum_k x^k t^{-2k-2}
    let s2: Vec<_> = (0..=cap).map(|k| mono(-2 * k as i64 - 2, -Rat::one())).collect();
    // 1/(1-x), 1/(1-xt^2), (1+xt)^{2g}
    let s3: Vec<_> = (0..=cap).map(|_| RationalLaurent::one()).collect();
    let s4: Vec<_> = (0..=cap).map(|k| mono(2 * k as i64, Rat::one())).collect();
    let s5: Vec<_> = (0..=cap)
        .map(|k| mono(k as i64, Rat::from_integer(binomial(2 * g as u64, k as u64))))
        .collect();

    let front = {
        let a: Vec<_> = s1
            .iter()
            .map(|f| &mono(2 * d + 2 * g - 2 - 4 * i, Rat::one()) * f)
            .collect();
        let b: Vec<_> = s2.iter().map(|f| &mono(2 * i + 2, Rat::one()) * f).collect();
        a.iter().zip(b.iter()).map(|(x, y)| x - y).collect::<Vec<_>>()
    };
    let prod = xseries_mul(
        &xseries_mul(&front, &s3, cap),
        &xseries_mul(&s4, &s5, cap),
        cap,
    );
    let coeff = &prod[cap];
    // the x^i coefficient is a genuine polynomial in t divisible by 1-t^2
    if !coeff.den().eq(&Polynomial::one()) || coeff.shift() < 0 {
        return Err(Error::NotDivisible);
    }
    let as_poly = coeff.num().shift_up(coeff.shift() as usize);
    let p = as_poly.div_exact(&Polynomial::from_i64(&[1, 0, -1]))?;
    assert_betti(&p, 2 * (d + g - 2) as usize)?;
    Ok(p)
}

/// P_t(M_i) by the telescoped blow-up/blow-down recursion; independent of
/// the closed form above.
pub fn p_pairs_moduli_sum(i: i64, d: i64, g: i64) -> Result<Polynomial> {
    let w = (d - 1).div_euclid(2);
    if i < 0 || i > w || d < 3 || g < 2 {
        return Err(Error::InvalidChamber { i, w });
    }
    let mut total = Polynomial::zero();
    for j in 0..=i {
        total = &total + &blowup_increment(j, d, g)?;
    }
    assert_betti(&total, 2 * (d + g - 2) as usize)?;
    Ok(total)
}

/// (t^{2j} - t^{2d+2g-2-4j})/(1-t^2) * P_t(X_j): the Betti increment from
/// the j-th flip (for j = 0 this is P_t(M_0) itself).
pub fn blowup_increment(j: i64, d: i64, g: i64) -> Result<Polynomial> {
    let lo = (2 * j) as usize;
    let hi = (2 * d + 2 * g - 2 - 4 * j) as usize;
    let diff = &Polynomial::monomial(lo, Rat::one()) - &Polynomial::monomial(hi, Rat::one());
    let quot = diff.div_exact(&Polynomial::from_i64(&[1, 0, -1]))?;
    Ok(&quot * &p_symprod(j, g))
}

/// Harder-Narasimhan: P_t(N) = ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)).
pub fn p_bundles_hn(g: i64) -> Result<Polynomial> {
    let num = &Polynomial::from_i64(&[1, 0, 0, 1]).pow(2 * g as u32)
        - &Polynomial::from_i64(&[1, 1]).pow(2 * g as u32).shift_up(2 * g as usize);
    let den = &Polynomial::from_i64(&[1, 0, -1]) * &Polynomial::from_i64(&[1, 0, 0, 0, -1]);
    let p = num.div_exact(&den)?;
    assert_betti(&p, 2 * (3 * g - 3) as usize)?;
    Ok(p)
}

/// P_t(N) recovered from the pair moduli space: for odd d > 4g-4,
/// P_t(N) = (1-t^2)/(1-t^{2d-4g+4}) P_t(M_w).
pub fn p_bundles_from_pairs(g: i64, d: i64) -> Result<Polynomial> {
    if d % 2 == 0 || d <= 4 * g - 4 {
        return Err(Error::InvalidChamber { i: d, w: 4 * g - 4 });
    }
    let w = (d - 1).div_euclid(2);
    let mw = p_pairs_moduli(w, d, g)?;
    let num = &mw * &Polynomial::from_i64(&[1, 0, -1]);
    let mut den = vec![Rat::zero(); (2 * d - 4 * g + 4) as usize + 1];
    den[0] = Rat::one();
    den[(2 * d - 4 * g + 4) as usize] = -Rat::one();
    let p = num.div_exact(&Polynomial::new(den))?;
    assert_betti(&p, 2 * (3 * g - 3) as usize)?;
    Ok(p)
}

/// Zagier's F(a,b,c,t) with a = t^{e1}, b = t^{e2}, c = t^{e3}, by both
/// routes: direct coefficient extraction, and the partial-fraction closed
/// form obtained from the residue theorem. Returns (coefficient route,
/// closed-form route); the two must be equal as exact rational functions.
pub fn f_abc(e1: i64, e2: i64, e3: i64, g: i64) -> Result<(RationalLaurent, RationalLaurent)> {
    if e1 == e2 || e1 == e3 || e2 == e3 {
        return Err(Error::DegenerateParameters);
    }
    let coeff_route = f_abc_coeff(e1, e2, e3, g);
    let closed_route = f_abc_closed(e1, e2, e3, g)?;
    Ok((coeff_route, closed_route))
}

/// Coeff_{x^{2g-2}} (1+xt)^{2g} / ((1-ax)(1-bx)(1-cx)): a Laurent
/// polynomial in t, assembled from complete homogeneous symmetric sums.
fn f_abc_coeff(e1: i64, e2: i64, e3: i64, g: i64) -> RationalLaurent {
    let target = (2 * g - 2) as u64;
    let mut acc = RationalLaurent::zero();
    for p in 0..=target.min(2 * g as u64) {
        let rest = target - p;
        // h_rest(t^{e1}, t^{e2}, t^{e3})
        let mut sym = RationalLaurent::zero();
        for alpha in 0..=rest {
            for beta in 0..=(rest - alpha) {
                let gamma = rest - alpha - beta;
                let e = e1 * alpha as i64 + e2 * beta as i64 + e3 * gamma as i64;
                sym = &sym + &RationalLaurent::monomial(e, Rat::one());
            }
        }
        let c = Rat::from_integer(binomial(2 * g as u64, p));
        let t_pow = RationalLaurent::monomial(p as i64, c);
        acc = &acc + &(&t_pow * &sym);
    }
    acc
}

/// (a+t)^{2g}/((a-b)(a-c)) + cyclic, as an exact rational function.
fn f_abc_closed(e1: i64, e2: i64, e3: i64, g: i64) -> Result<RationalLaurent> {
    let term = |ea: i64, eb: i64, ec: i64| -> Result<RationalLaurent> {
        let a = RationalLaurent::monomial(ea, Rat::one());
        let b = RationalLaurent::monomial(eb, Rat::one());
        let c = RationalLaurent::monomial(ec, Rat::one());
        let t = RationalLaurent::monomial(1, Rat::one());
        let num = (&a + &t).pow(2 * g)?;
        let den = &(&a - &b) * &(&a - &c);
        Ok(&num * &den.pow(-1)?)
    };
    let t1 = term(e1, e2, e3)?;
    let t2 = term(e2, e1, e3)?;
    let t3 = term(e3, e1, e2)?;
    Ok(&(&t1 + &t2) + &t3)
}

/// The assembly identity recovering the Harder-Narasimhan formula from the
/// two F specializations at d = 4g-3:
/// (t^{4g-4} F(1, t^2, t^{-2}) - t^{2g} F(1, t^2, t^4)) / (1 - t^{4g-2}).
pub fn hn_from_f(g: i64) -> Result<RationalLaurent> {
    let f1 = f_abc_coeff(0, 2, -2, g);
    let f2 = f_abc_coeff(0, 2, 4, g);
    let num = &(&RationalLaurent::monomial(4 * g as i64 - 4, Rat::one()) * &f1)
        - &(&RationalLaurent::monomial(2 * g as i64, Rat::one()) * &f2);
    let mut den = vec![Rat::zero(); (4 * g - 2) as usize + 1];
    den[0] = Rat::one();
    den[(4 * g - 2) as usize] = -Rat::one();
    let den = RationalLaurent::from_poly(Polynomial::new(den));
    Ok(&num * &den.pow(-1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i64;

    #[test]
    fn symprod_small_values() {
        assert_eq!(p_symprod(0, 2), Polynomial::one());
        assert_eq!(p_symprod(1, 2), Polynomial::from_i64(&[1, 4, 1]));
        assert_eq!(p_symprod(2, 2), Polynomial::from_i64(&[1, 4, 7, 4, 1]));
    }

    #[test]
    fn symprod_matches_oracle() {
        for j in 0..=5 {
            for g in 2..=3 {
                assert_eq!(p_symprod(j, g), p_symprod_oracle(j, g), "j={j} g={g}");
            }
        }
    }

    #[test]
    fn oracle_euler_characteristic() {
        // chi(X_2) = (chi^2 + chi)/2 with chi(X) = -2 for g = 2
        let p = p_symprod_oracle(2, 2);
        assert_eq!(p.eval(&rat_i64(-1)), rat_i64(1));
    }

    #[test]
    fn pairs_moduli_chamber_zero_is_projective_space() {
        for (d, g) in [(3, 2), (5, 2), (7, 3)] {
            let p = p_pairs_moduli(0, d, g).unwrap();
            let n = (d + g - 2) as usize;
            let expect = Polynomial::new(
                (0..=2 * n).map(|k| if k % 2 == 0 { Rat::one() } else { Rat::zero() }).collect(),
            );
            assert_eq!(p, expect);
        }
    }

    #[test]
    fn closed_form_equals_telescoped_sum() {
        for g in 2..=3 {
            for d in 3..=9 {
                let w = (d - 1) / 2;
                for i in 0..=w {
                    assert_eq!(
                        p_pairs_moduli(i, d, g).unwrap(),
                        p_pairs_moduli_sum(i, d, g).unwrap(),
                        "i={i} d={d} g={g}"
                    );
                }
            }
        }
    }

    #[test]
    fn blowup_relation() {
        for (i, d, g) in [(1, 5, 2), (2, 7, 2), (2, 8, 3)] {
            let diff = &p_pairs_moduli(i, d, g).unwrap() - &p_pairs_moduli(i - 1, d, g).unwrap();
            assert_eq!(diff, blowup_increment(i, d, g).unwrap());
        }
    }

    #[test]
    fn out_of_range_chamber_rejected() {
        assert!(matches!(p_pairs_moduli(3, 5, 2), Err(Error::InvalidChamber { .. })));
        assert!(matches!(p_pairs_moduli(-1, 5, 2), Err(Error::InvalidChamber { .. })));
    }

    #[test]
    fn hn_genus_two() {
        assert_eq!(p_bundles_hn(2).unwrap(), Polynomial::from_i64(&[1, 0, 1, 4, 1, 0, 1]));
    }

    #[test]
    fn hn_euler_characteristic_vanishes() {
        for g in 2..=4 {
            assert_eq!(p_bundles_hn(g).unwrap().eval(&rat_i64(-1)), Rat::zero());
        }
    }

    #[test]
    fn bundles_from_pairs_agrees_with_hn() {
        for g in 2..=3 {
            let d = 4 * g - 3;
            assert_eq!(p_bundles_from_pairs(g, d).unwrap(), p_bundles_hn(g).unwrap());
        }
    }

    #[test]
    fn f_abc_two_routes_agree() {
        for (e1, e2, e3, g) in [(0, 2, -2, 2), (0, 2, 4, 2), (1, -1, 3, 3), (0, 1, 2, 2)] {
            let (a, b) = f_abc(e1, e2, e3, g).unwrap();
            assert_eq!(a, b, "({e1},{e2},{e3}) g={g}");
        }
        assert!(matches!(f_abc(1, 1, 2, 2), Err(Error::DegenerateParameters)));
    }

    #[test]
    fn hn_assembly_identity() {
        for g in 2..=3 {
            let lhs = hn_from_f(g).unwrap();
            let rhs = RationalLaurent::from_poly(p_bundles_hn(g).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
