//! Exact dimension formulas for spaces of sections over moduli of stable
//! pairs on a curve, with independent cross-checking routes.
//!
//! The crate computes dim V_{m,n}, the dimension of the space of sections
//! of the line bundle O(m, n) over the moduli space of stable pairs of
//! degree d on a smooth curve of genus g, by three independent methods:
//!
//! * a residue route: constant-term extraction from an exact rational
//!   generating function ([`verlinde::f_build`], [`verlinde::dimv_residue`]);
//! * an intersection-theory route: alternating sums of Euler
//!   characteristics computed by Riemann-Roch on symmetric products
//!   ([`symprod::ni_ring`], [`verlinde::dimv_sum`]);
//! * for special parameters, the trigonometric Verlinde sum
//!   ([`verlinde::verlinde_trig`]).
//!
//! Supporting modules provide Poincare polynomials of the moduli spaces
//! ([`poincare`]), the chamber structure and ample cones of the birational
//! models ([`chambers`]), and the exact series/rational-function arithmetic
//! everything is built on ([`poly`], [`laurent`], [`ratfun`]).
//!
//! See the `examples/` directory for runnable entry points covering each
//! capability, and the `pairs-verlinde` binary for a scriptable interface.

pub mod bigfloat;
pub mod biv;
pub mod chambers;
pub mod crosscheck;
pub mod error;
pub mod laurent;
pub mod poincare;
pub mod poly;
pub mod rat;
pub mod ratfun;
pub mod symprod;
pub mod verlinde;

pub use chambers::{AmplenessVerdict, ChamberSpec, LineBundleLabel};
pub use error::{Error, Result};
pub use rat::Rat;
pub use verlinde::{dimv, verlinde_exact, verlinde_trig, DimResult, DimStatus, FSpec, Parity, VerlindeQuery};
