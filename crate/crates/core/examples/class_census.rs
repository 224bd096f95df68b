//! Split all over/under choices on one shadow into region-crossing-change
//! classes and compare with 2^(c - rank M).

use rcc_surfaces::moves::random_diagram;
use rcc_surfaces::rcc::{rcc_equivalent, RccAnalysis};

fn main() -> rcc_surfaces::Result<()> {
    for (c, p, seed) in [(4, 0.0, 2), (5, 0.5, 8), (6, 1.0, 3)] {
        let d = random_diagram(c, p, seed)?;
        let mut reps = Vec::new();
        for mask in 0u32..(1 << c) {
            let candidate = d.with_over_pairs((0..c).map(|i| (mask >> i & 1) as u8).collect())?;
            let mut known = false;
            for rep in &reps {
                if rcc_equivalent(rep, &candidate)?.is_some() {
                    known = true;
                    break;
                }
            }
            if !known {
                reps.push(candidate);
            }
        }
        let a = RccAnalysis::new(&d)?;
        println!("c = {c} on {}: {} classes, 2^{} expected", a.surface.name(), reps.len(), a.class_exponent());
    }
    Ok(())
}
