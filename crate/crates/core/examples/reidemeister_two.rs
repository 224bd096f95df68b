//! Second Reidemeister moves keep r - rank(M), n and rank(N).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rcc_surfaces::moves::{random_diagram, random_r2_spec, reidemeister_two};
use rcc_surfaces::rcc::RccAnalysis;

fn main() -> rcc_surfaces::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut d = random_diagram(3, 0.5, 4)?;
    for step in 0..5 {
        let a = RccAnalysis::new(&d)?;
        println!(
            "step {step}: c = {:2}, r = {:2}, rank M = {:2}, r - rank M = {}, n = {}, rank N = {} ({})",
            d.crossing_count(),
            a.region_count(),
            a.incidence_rank,
            a.region_count() - a.incidence_rank,
            a.component_count,
            a.homology_matrix.rank,
            a.surface.name()
        );
        let Some(spec) = random_r2_spec(&d, &mut rng)? else { break };
        d = reidemeister_two(&d, spec)?;
    }
    Ok(())
}
