//! Tabulate Verlinde dimensions for small genus and level, checking the
//! exact residue value against the trigonometric sum each time.

use pairs_verlinde::bigfloat::BigFloat;
use pairs_verlinde::rat::Rat;
use pairs_verlinde::verlinde::{verlinde_exact, verlinde_trig, Parity, VerlindeQuery};

fn main() {
    println!("{:>3} {:>3}  {:>14} {:>14}", "g", "k", "even degree", "odd degree");
    for g in 2..=4 {
        for k in 0..=6 {
            let mut row = Vec::new();
            for parity in [Parity::Even, Parity::Odd] {
                let q = VerlindeQuery { g, k, parity };
                let exact = verlinde_exact(&q).expect("valid query");
                let trig = verlinde_trig(&q, 40);
                assert_eq!(trig.round(), exact, "trig sum must round to the exact value");
                let err = trig.sub(&BigFloat::from_rat(
                    &Rat::from_integer(exact.clone()),
                    trig.bits(),
                ));
                assert!(err.below_decimal(10), "pre-rounding error must be tiny");
                row.push(exact);
            }
            println!("{g:>3} {k:>3}  {:>14} {:>14}", row[0], row[1]);
        }
        println!();
    }
}
