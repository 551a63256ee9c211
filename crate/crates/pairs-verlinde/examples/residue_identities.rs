//! Structural identities of the generating function F: the antisymmetry
//! F(1/t) = -F(t), and the global residue theorem pinning -2 dim V to
//! the residues at roots of unity, checked in 40-digit arithmetic.

use pairs_verlinde::rat::rat_string;
use pairs_verlinde::verlinde::{f_build, residue_sum_check, FSpec};

fn main() {
    for (g, d, m, n) in [(2, 5, 1, 1), (2, 5, 2, 1), (2, 6, 1, 1), (3, 7, 1, 1)] {
        let spec = FSpec::new(g, d, m, n).unwrap();
        let f = f_build(&spec);
        assert_eq!(f.subst_reciprocal(), -&f, "antisymmetry under t -> 1/t");
        let defect = residue_sum_check(&spec, 40).unwrap();
        println!(
            "g={g} d={d} m={m} n={n}: h={:>3}  antisymmetric, residue defect {}",
            spec.h(),
            approx(&rat_string(&defect))
        );
    }
}

fn approx(s: &str) -> String {
    match s.split_once('/') {
        Some((p, q)) => {
            let digits = q.len() as i32 - p.len() as i32;
            format!("~10^-{digits}")
        }
        None => s.into(),
    }
}
