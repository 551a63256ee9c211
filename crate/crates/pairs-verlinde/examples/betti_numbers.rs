//! Poincare polynomials of the three families of spaces: symmetric
//! products of the curve, the pair moduli in each chamber, and the
//! fixed-determinant bundle moduli, with the quotient relation between
//! the last two.

use pairs_verlinde::chambers::ChamberSpec;
use pairs_verlinde::poincare::{
    p_bundles_from_pairs, p_bundles_hn, p_pairs_moduli, p_symprod,
};
use pairs_verlinde::poly::render;

fn main() {
    let g = 2;
    println!("symmetric products, g = {g}:");
    for j in 0..=4 {
        println!("  P(X_{j}) = {}", render(&p_symprod(j, g), "t"));
    }

    let d = 5;
    let w = ChamberSpec::new(g, d).unwrap().w();
    println!("\npair moduli, g = {g}, d = {d} (chambers 0..={w}):");
    for i in 0..=w {
        let p = p_pairs_moduli(i, d, g).expect("valid chamber");
        println!("  P(M_{i}) = {}", render(&p, "t"));
    }

    println!("\nbundle moduli:");
    let hn = p_bundles_hn(g).unwrap();
    println!("  P(N) directly      = {}", render(&hn, "t"));
    let via = p_bundles_from_pairs(g, 4 * g - 3).unwrap();
    println!("  P(N) from pairs    = {}", render(&via, "t"));
    assert_eq!(hn, via, "the fibration over N divides out exactly");
}
