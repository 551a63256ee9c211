//! Truncated bivariate power series over the rationals.
//!
//! Used internally for the two coefficient/residue extraction routes, where
//! an integrand is regular in both variables once the known pole order has
//! been factored out by hand. Both windows are hard truncations: retained
//! coefficients are exact because every factor is a genuine power series.

use num::{One, Zero};

use crate::poly::Polynomial;
use crate::rat::{rat_i64, Rat};

/// Coefficient of x^i t^j at `c[i][j]`, for i <= dx and j <= dt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivSeries {
    pub dx: usize,
    pub dt: usize,
    c: Vec<Vec<Rat>>,
}

impl BivSeries {
    pub fn zero(dx: usize, dt: usize) -> Self {
        BivSeries { dx, dt, c: vec![vec![Rat::zero(); dt + 1]; dx + 1] }
    }

    pub fn one(dx: usize, dt: usize) -> Self {
        let mut s = Self::zero(dx, dt);
        s.c[0][0] = Rat::one();
        s
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.c[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        if i <= self.dx && j <= self.dt {
            self.c[i][j] = v;
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Rat) {
        if i <= self.dx && j <= self.dt {
            self.c[i][j] = &self.c[i][j] + v;
        }
    }

    /// A polynomial in x alone.
    pub fn from_x_poly(p: &Polynomial, dx: usize, dt: usize) -> Self {
        let mut s = Self::zero(dx, dt);
        for (i, a) in p.coeffs().iter().enumerate().take(dx + 1) {
            s.c[i][0] = a.clone();
        }
        s
    }

    /// A polynomial in t alone.
    pub fn from_t_poly(p: &Polynomial, dx: usize, dt: usize) -> Self {
        let mut s = Self::zero(dx, dt);
        for (j, a) in p.coeffs().iter().enumerate().take(dt + 1) {
            s.c[0][j] = a.clone();
        }
        s
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = self.clone();
        for row in &mut out.c {
            for v in row {
                *v = &*v * r;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.dx, self.dt), (rhs.dx, rhs.dt));
        let mut out = self.clone();
        for i in 0..=self.dx {
            for j in 0..=self.dt {
                out.c[i][j] = &out.c[i][j] + &rhs.c[i][j];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&rat_i64(-1)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((self.dx, self.dt), (rhs.dx, rhs.dt));
        let mut out = Self::zero(self.dx, self.dt);
        for i in 0..=self.dx {
            for j in 0..=self.dt {
                let a = &self.c[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..=(self.dx - i) {
                    for l in 0..=(self.dt - j) {
                        let b = &rhs.c[k][l];
                        if !b.is_zero() {
                            out.c[i + k][j + l] = &out.c[i + k][j + l] + &(a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.dx, self.dt);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The x-coefficients as polynomials in t (index = x-power).
    pub fn x_rows(&self) -> Vec<Polynomial> {
        self.c.iter().map(|row| Polynomial::new(row.clone())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    #[test]
    fn bivariate_product() {
        // (1 + x t) * (1 + x t) = 1 + 2xt + x^2 t^2
        let mut a = BivSeries::zero(2, 2);
        a.set(0, 0, rat_i64(1));
        a.set(1, 1, rat_i64(1));
        let sq = a.pow(2);
        assert_eq!(*sq.get(1, 1), rat_i64(2));
        assert_eq!(*sq.get(2, 2), rat_i64(1));
        assert_eq!(*sq.get(2, 1), rat_i64(0));
    }

    #[test]
    fn embeddings() {
        let p = Polynomial::from_i64(&[1, 2]);
        let x = BivSeries::from_x_poly(&p, 3, 1);
        let t = BivSeries::from_t_poly(&p, 1, 3);
        assert_eq!(*x.get(1, 0), rat_i64(2));
        assert_eq!(*t.get(0, 1), rat_i64(2));
    }
}
