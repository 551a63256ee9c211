//! Query dim V_{m,n} over a small grid, showing the case analysis: the
//! residue region with its two agreeing routes, the binomial rule for
//! n < 0, forced zeros, and the honest outside_region answer.

use pairs_verlinde::verlinde::{dimv, DimStatus};

fn main() {
    let (g, d) = (2, 5);
    println!("g = {g}, d = {d}");
    println!("{:>4} {:>4}  {:>18}  value", "m", "n", "status");
    for m in -1..=3i64 {
        for n in -1..=4i64 {
            let r = dimv(g, d, m, n).expect("computation succeeds");
            let value = match &r.value {
                Some(v) => v.to_string(),
                None => "-".into(),
            };
            println!("{m:>4} {n:>4}  {:>18}  {value}", status_name(r.status));
            if r.status == DimStatus::ResidueRegion {
                for (route, v) in &r.trace {
                    println!("{:>12} route {route}: {v}", "");
                }
            }
        }
    }
}

fn status_name(s: DimStatus) -> &'static str {
    match s {
        DimStatus::ResidueRegion => "residue_region",
        DimStatus::ZeroMNegative => "zero_m_negative",
        DimStatus::BinomialNNegative => "binomial_n_negative",
        DimStatus::ZeroUnstable => "zero_unstable",
        DimStatus::OutsideRegion => "outside_region",
    }
}
