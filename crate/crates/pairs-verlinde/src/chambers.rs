//! Chamber combinatorics for the stability parameter, ample cones, the
//! line-bundle dictionary, the canonical bundle and the blow-up level.
//!
//! The moduli space of pairs depends on a rational stability parameter
//! sigma in (0, d/2); walls sit at sigma = d/2 - i and the space is
//! constant on the open chambers in between, indexed by i = 0..=w with
//! w = floor((d-1)/2).

use num::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::{rat_i64, rat_string, Rat};

/// The (g, d) numerology a chamber computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberSpec {
    pub g: i64,
    pub d: i64,
}

impl ChamberSpec {
    pub fn new(g: i64, d: i64) -> Result<Self> {
        // d >= 3 keeps w >= 1, the standing assumption everywhere.
        if g < 2 || d < 3 {
            return Err(Error::InvalidChamber { i: 0, w: 0 });
        }
        Ok(ChamberSpec { g, d })
    }

    /// Index of the last chamber: w = floor((d-1)/2).
    pub fn w(&self) -> i64 {
        (self.d - 1).div_euclid(2)
    }
}

/// The label (m, n) of the line bundle O_i(m,n), transported across all
/// chambers by the canonical identification of Picard groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineBundleLabel {
    pub m: i64,
    pub n: i64,
    pub i: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AmplenessVerdict {
    Ample,
    NotAmple,
    /// Only possible for i = w with d <= 2g-2, where one side of the cone
    /// is not pinned down.
    Undetermined,
}

/// Walls in (0, d/2): sigma = d/2 - i for i = 1..=w, in decreasing order.
pub fn walls(spec: &ChamberSpec) -> Vec<Rat> {
    let half_d = Rat::new(spec.d.into(), 2.into());
    (1..=spec.w()).map(|i| &half_d - rat_i64(i)).collect()
}

/// The unique chamber index i with sigma in (max(0, d/2-i-1), d/2-i).
pub fn chamber_index(sigma: &Rat, spec: &ChamberSpec) -> Result<i64> {
    let half_d = Rat::new(spec.d.into(), 2.into());
    if !sigma.is_positive() || *sigma >= half_d {
        return Err(Error::OutOfRange(rat_string(sigma)));
    }
    let gap = &half_d - sigma; // in (0, d/2)
    if gap.is_integer() {
        // sigma = d/2 - j with 1 <= j <= w is a wall
        return Err(Error::OnWall(rat_string(sigma)));
    }
    let i = gap.floor().to_integer();
    let i = i64::try_from(i).unwrap();
    Ok(i.min(spec.w()))
}

/// Ampleness of O_i(m,n) on M_i. The cones are open: boundary bundles are
/// nef but not ample, so boundaries report NotAmple.
pub fn is_ample(label: &LineBundleLabel, spec: &ChamberSpec) -> Result<AmplenessVerdict> {
    let w = spec.w();
    let LineBundleLabel { m, n, i } = *label;
    if i == 0 {
        return Err(Error::UnsupportedChamber);
    }
    if i < 0 || i > w {
        return Err(Error::InvalidChamber { i, w });
    }
    let lower = (i - 1) * m < n;
    if i < w {
        return Ok(if lower && n < i * m { AmplenessVerdict::Ample } else { AmplenessVerdict::NotAmple });
    }
    // i = w: the upper boundary is the theta ray O_w(2, d-2)
    let upper = 2 * n < m * (spec.d - 2);
    if spec.d > 2 * spec.g - 2 {
        Ok(if lower && upper { AmplenessVerdict::Ample } else { AmplenessVerdict::NotAmple })
    } else if lower && upper {
        Ok(AmplenessVerdict::Ample)
    } else if !lower {
        Ok(AmplenessVerdict::NotAmple)
    } else {
        Ok(AmplenessVerdict::Undetermined)
    }
}

/// K_{M_i} = O_i(-3, 4-d-g) in every chamber.
pub fn canonical_label(i: i64, spec: &ChamberSpec) -> LineBundleLabel {
    LineBundleLabel { m: -3, n: 4 - spec.d - spec.g, i }
}

/// The chamber b where the Euler characteristic equals dim V_{m,n}:
/// b = floor((n+d+g-4)/(m+3)) + 1. Requires m, n >= 0 and the region
/// condition m(d-2) - 2n > -d + 2g - 2.
pub fn blowup_level_b(m: i64, n: i64, spec: &ChamberSpec) -> Result<i64> {
    if m < 0 || n < 0 || !region_ok(m, n, spec) {
        return Err(Error::RegionViolation);
    }
    let b = (n + spec.d + spec.g - 4).div_euclid(m + 3) + 1;
    debug_assert!(b <= spec.w());
    Ok(b)
}

/// Eq-of-region test: m(d-2) - 2n > -d + 2g - 2.
pub fn region_ok(m: i64, n: i64, spec: &ChamberSpec) -> bool {
    m * (spec.d - 2) - 2 * n > -spec.d + 2 * spec.g - 2
}

/// Degrees of O_i(m,n) restricted to the three kinds of contracted fibres:
/// a fibre of P W^+_i, a fibre of P W^-_i, and (for i = w) a fibre of the
/// Abel-Jacobi map.
pub fn restriction_degrees(m: i64, n: i64, i: i64, spec: &ChamberSpec) -> (i64, i64, i64) {
    (n - (i - 1) * m, (i - 1) * m - n, m * (spec.d - 2) - 2 * n)
}

/// Pullback of the theta bundle: (1, d/2 - 1) with half-integer second
/// coordinate when d is odd.
pub fn theta_pullback(spec: &ChamberSpec) -> (Rat, Rat) {
    (Rat::one(), Rat::new(spec.d.into(), 2.into()) - Rat::one())
}

/// Label of k*Theta; None when d and k are both odd (the label is not
/// integral, matching the convention that the Verlinde space is 0 there).
pub fn theta_label(k: i64, spec: &ChamberSpec) -> Option<(i64, i64)> {
    if k * spec.d % 2 != 0 {
        return None;
    }
    Some((k, k * (spec.d - 2) / 2))
}

/// Pullback along the embedding that adds a fixed divisor of degree |D|.
pub fn iota_pullback(m: i64, n: i64, deg_d: u64) -> (i64, i64) {
    (m, n - m * deg_d as i64)
}

/// O_i(m,n) written in the geometric basis: det^{a} pi_! E tensor
/// (Lambda^2 E_x)^{c}, with a = -m and c = (d-g)m - n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DictionaryRecord {
    pub det_power: i64,
    pub fibre_power: i64,
}

pub fn dictionary(m: i64, n: i64, spec: &ChamberSpec) -> DictionaryRecord {
    DictionaryRecord { det_power: -m, fibre_power: (spec.d - spec.g) * m - n }
}

/// Inverse of `dictionary`: recovers (m, n) from the geometric basis.
pub fn dictionary_inverse(rec: &DictionaryRecord, spec: &ChamberSpec) -> (i64, i64) {
    let m = -rec.det_power;
    (m, (spec.d - spec.g) * m - rec.fibre_power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn walls_for_small_degrees() {
        let d7 = ChamberSpec::new(2, 7).unwrap();
        assert_eq!(walls(&d7), vec![rat(5, 2), rat(3, 2), rat(1, 2)]);
        assert_eq!(walls(&ChamberSpec::new(2, 3).unwrap()), vec![rat(1, 2)]);
        assert_eq!(walls(&ChamberSpec::new(2, 4).unwrap()), vec![rat(1, 1)]);
    }

    #[test]
    fn chamber_lookup() {
        let spec = ChamberSpec::new(2, 7).unwrap();
        assert_eq!(chamber_index(&rat(1, 4), &spec).unwrap(), 3);
        assert_eq!(chamber_index(&rat(3, 1), &spec).unwrap(), 0);
        assert!(matches!(chamber_index(&rat(5, 2), &spec), Err(Error::OnWall(_))));
        assert!(matches!(chamber_index(&rat(4, 1), &spec), Err(Error::OutOfRange(_))));
        assert!(matches!(chamber_index(&rat(-1, 2), &spec), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn chamber_constant_between_walls() {
        let spec = ChamberSpec::new(3, 8).unwrap();
        // sample many sigmas; index must be constant between consecutive walls
        let mut seen = vec![];
        for q in 1..32 {
            let sigma = rat(q, 8);
            match chamber_index(&sigma, &spec) {
                Ok(i) => seen.push((sigma, i)),
                Err(_) => {}
            }
        }
        for w in seen.windows(2) {
            let (ref s1, i1) = w[0];
            let (ref s2, i2) = w[1];
            // crossing a wall decrements the index by exactly one
            let crossed = walls(&spec).iter().any(|wall| s1 < wall && wall < s2);
            if crossed {
                assert_eq!(i1, i2 + 1);
            } else {
                assert_eq!(i1, i2);
            }
        }
    }

    #[test]
    fn ample_cone_examples_d7_g2() {
        let spec = ChamberSpec::new(2, 7).unwrap();
        // O_2(1,1) lies on the boundary ray of slope i-1 = 1
        let v = is_ample(&LineBundleLabel { m: 1, n: 1, i: 2 }, &spec).unwrap();
        assert_eq!(v, AmplenessVerdict::NotAmple);
        let v = is_ample(&LineBundleLabel { m: 2, n: 3, i: 2 }, &spec).unwrap();
        assert_eq!(v, AmplenessVerdict::Ample);
        // theta boundary at i = w: 2n = m(d-2)
        let v = is_ample(&LineBundleLabel { m: 2, n: 5, i: 3 }, &spec).unwrap();
        assert_eq!(v, AmplenessVerdict::NotAmple);
        assert!(matches!(
            is_ample(&LineBundleLabel { m: 1, n: 0, i: 0 }, &spec),
            Err(Error::UnsupportedChamber)
        ));
    }

    #[test]
    fn ample_cones_flip_across_shared_ray() {
        let spec = ChamberSpec::new(2, 9).unwrap();
        for i in 1..spec.w() {
            // the ray n/m = i is upper boundary for chamber i and lower for i+1
            let inside_i = LineBundleLabel { m: 2, n: 2 * i - 1, i };
            // slope i + 1/4 lies inside chamber i+1 even when i+1 = w,
            // where the cone narrows to (w-1, (d-2)/2)
            let inside_next = LineBundleLabel { m: 4, n: 4 * i + 1, i: i + 1 };
            assert_eq!(is_ample(&inside_i, &spec).unwrap(), AmplenessVerdict::Ample);
            assert_eq!(is_ample(&inside_next, &spec).unwrap(), AmplenessVerdict::Ample);
            let on_ray = LineBundleLabel { m: 1, n: i, i };
            assert_eq!(is_ample(&on_ray, &spec).unwrap(), AmplenessVerdict::NotAmple);
        }
    }

    #[test]
    fn undetermined_only_when_paper_is_silent() {
        // d <= 2g-2 needs g >= 3 to be reachable with d >= 3
        let spec = ChamberSpec::new(4, 6).unwrap(); // 2g-2 = 6 = d
        let w = spec.w();
        let v = is_ample(&LineBundleLabel { m: 1, n: w - 1 + 1, i: w }, &spec).unwrap();
        // n > (w-1)m but 2n >= m(d-2): w=2, n=2, 2n=4 = m(d-2)=4
        assert_eq!(v, AmplenessVerdict::Undetermined);
    }

    #[test]
    fn canonical_labels() {
        let spec = ChamberSpec::new(2, 5).unwrap();
        let k = canonical_label(1, &spec);
        assert_eq!((k.m, k.n), (-3, -3));
        let spec = ChamberSpec::new(2, 3).unwrap();
        assert_eq!(canonical_label(0, &spec).n, -1);
    }

    #[test]
    fn blowup_levels() {
        let spec = ChamberSpec::new(2, 5).unwrap();
        assert_eq!(blowup_level_b(1, 1, &spec).unwrap(), 2);
        assert_eq!(blowup_level_b(0, 0, &spec).unwrap(), 2);
        let spec7 = ChamberSpec::new(2, 7).unwrap();
        assert_eq!(blowup_level_b(3, 0, &spec7).unwrap(), 1);
        // region violation
        let spec34 = ChamberSpec::new(3, 4).unwrap();
        assert!(matches!(blowup_level_b(0, 1, &spec34), Err(Error::RegionViolation)));
    }

    #[test]
    fn b_stays_below_w_on_grid() {
        for g in 2..=4 {
            for d in 3..=12 {
                let spec = ChamberSpec::new(g, d).unwrap();
                for m in 0..=8 {
                    for n in 0..=8 {
                        if region_ok(m, n, &spec) {
                            let b = blowup_level_b(m, n, &spec).unwrap();
                            assert!(b <= spec.w(), "b={b} > w for g={g} d={d} m={m} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_degree_identities() {
        let spec = ChamberSpec::new(2, 7).unwrap();
        let (a, b, c) = restriction_degrees(1, 1, 1, &spec);
        assert_eq!((a, b, c), (1, -1, 3)); // c = d-4 for m=1, n=1
        let (a, b, _) = restriction_degrees(0, -1, 1, &spec);
        assert_eq!((a, b), (-1, 1));
        for m in -3..=3 {
            for n in -3..=3 {
                for i in 0..=3 {
                    let (x, y, _) = restriction_degrees(m, n, i, &spec);
                    assert_eq!(x + y, 0);
                }
            }
        }
    }

    #[test]
    fn theta_labels() {
        let d6 = ChamberSpec::new(2, 6).unwrap();
        assert_eq!(theta_pullback(&d6), (rat(1, 1), rat(2, 1)));
        let d5 = ChamberSpec::new(2, 5).unwrap();
        assert_eq!(theta_label(2, &d5), Some((2, 3)));
        assert_eq!(theta_label(1, &d5), None); // d and k both odd
    }

    #[test]
    fn iota_additivity() {
        assert_eq!(iota_pullback(1, 3, 2), (1, 1));
        assert_eq!(iota_pullback(0, 5, 7), (0, 5));
        let (m1, n1) = iota_pullback(2, 9, 3);
        let (m2, n2) = iota_pullback(m1, n1, 4);
        assert_eq!((m2, n2), iota_pullback(2, 9, 7));
    }

    #[test]
    fn dictionary_roundtrip() {
        let spec = ChamberSpec::new(3, 8).unwrap();
        // the generators themselves
        assert_eq!(dictionary(0, -1, &spec), DictionaryRecord { det_power: 0, fibre_power: 1 });
        assert_eq!(
            dictionary(-1, spec.g - spec.d, &spec),
            DictionaryRecord { det_power: 1, fibre_power: 0 }
        );
        for m in -4..=4 {
            for n in -4..=4 {
                let rec = dictionary(m, n, &spec);
                assert_eq!(dictionary_inverse(&rec, &spec), (m, n));
            }
        }
    }
}
