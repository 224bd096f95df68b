//! rank(M) = r - n - 1 + rank(N) on a batch of random diagrams.
//!
//!     cargo run --example rank_formula -- 500

use rcc_surfaces::moves::random_diagram;
use rcc_surfaces::rcc::RccAnalysis;

fn main() -> rcc_surfaces::Result<()> {
    let count: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let mut by_surface = std::collections::BTreeMap::<String, usize>::new();
    for seed in 0..count {
        let d = random_diagram(1 + (seed % 10) as usize, [0.0, 0.5, 1.0][(seed % 3) as usize], seed)?;
        let a = RccAnalysis::new(&d)?;
        let report = a.rank_report();
        assert!(report.equal, "seed {seed}: {} != {}", report.lhs, report.rhs);
        *by_surface.entry(a.surface.name()).or_default() += 1;
    }
    println!("rank formula held on {count} diagrams");
    for (surface, k) in by_surface {
        println!("  {k:4} on {surface}");
    }
    Ok(())
}
