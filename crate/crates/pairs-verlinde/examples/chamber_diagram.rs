//! Walls, chambers and ample cones for the pair moduli spaces, plus the
//! dictionary between the two natural coordinate systems on their Picard
//! groups.

use pairs_verlinde::chambers::{
    canonical_label, chamber_index, dictionary, is_ample, theta_label, walls, ChamberSpec,
    LineBundleLabel,
};
use pairs_verlinde::rat::{rat_string, Rat};

fn main() {
    let spec = ChamberSpec::new(2, 7).unwrap();
    let w = spec.w();
    println!("g = 2, d = 7, w = {w}");
    let ws = walls(&spec);
    println!(
        "walls at sigma = {}",
        ws.iter().map(rat_string).collect::<Vec<_>>().join(", ")
    );
    let sigma = Rat::new(1.into(), 4.into());
    println!(
        "sigma = {} lies in chamber {}",
        rat_string(&sigma),
        chamber_index(&sigma, &spec).unwrap()
    );

    println!("\nampleness of O_i(m, n) across chambers:");
    for (m, n) in [(1, 1), (2, 3), (1, 2), (2, 5)] {
        let verdicts: Vec<String> = (1..=w)
            .map(|i| {
                let v = is_ample(&LineBundleLabel { m, n, i }, &spec).unwrap();
                format!("M_{i}: {v:?}")
            })
            .collect();
        println!("  O({m}, {n}): {}", verdicts.join("  "));
    }

    let k = canonical_label(w, &spec);
    println!("\ncanonical bundle: O({}, {}) in every chamber", k.m, k.n);
    if let Some((tm, tn)) = theta_label(1, &spec) {
        println!("theta pullback on M_{w}: O({tm}, {tn})");
    } else {
        println!("theta pullback is not integral for odd degree at level 1");
    }
    let rec = dictionary(3, 4, &spec);
    println!(
        "O(3, 4) = det^{} (x) fibre^{}",
        rec.det_power, rec.fibre_power
    );
}
