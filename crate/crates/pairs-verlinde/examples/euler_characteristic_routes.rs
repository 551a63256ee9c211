//! The wall-crossing Euler characteristics N_i computed three independent
//! ways: by the intersection ring of the symmetric product, by residue
//! extraction, and by the two-variable series substitution. Their
//! alternating sum is dim V_{m,n}.

use num::bigint::BigInt;
use num::Zero;
use pairs_verlinde::chambers::{blowup_level_b, ChamberSpec};
use pairs_verlinde::symprod::{ni_residue, ni_ring, ni_y};
use pairs_verlinde::verlinde::{dimv_residue, FSpec};

fn main() {
    let (g, d, m, n) = (2, 5, 1, 1);
    let spec = ChamberSpec::new(g, d).unwrap();
    let b = blowup_level_b(m, n, &spec).unwrap();
    println!("g = {g}, d = {d}, m = {m}, n = {n}, b = {b}");
    println!("{:>3} {:>8} {:>8} {:>8}", "i", "ring", "residue", "series");
    let mut alternating = BigInt::zero();
    for i in 0..=b {
        let a = ni_ring(i, m, n, d, g).unwrap();
        let r = ni_residue(i, m, n, d, g).unwrap();
        let y = ni_y(i, m, n, d, g).unwrap();
        assert_eq!(a, r);
        assert_eq!(r, y);
        println!("{i:>3} {a:>8} {r:>8} {y:>8}");
        if i % 2 == 0 {
            alternating += &a;
        } else {
            alternating -= &a;
        }
    }
    let direct = dimv_residue(&FSpec::new(g, d, m, n).unwrap()).unwrap();
    println!("alternating sum = {alternating}, generating function = {direct}");
    assert_eq!(alternating, direct);
}
