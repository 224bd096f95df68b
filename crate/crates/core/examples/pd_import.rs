//! Import a PD code and print it in the diagram format.
//!
//!     cargo run --example pd_import -- fixtures/figure_eight_pd.json

use rcc_surfaces::fixtures::TREFOIL_PD;
use rcc_surfaces::rcc::RccAnalysis;
use rcc_surfaces::scheme::{import_pd, parse_diagram, serialize_diagram};

fn main() -> rcc_surfaces::Result<()> {
    let d = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| rcc_surfaces::Error::Parse(format!("{path}: {e}")))?;
            parse_diagram(&text)?
        }
        None => import_pd(&TREFOIL_PD)?,
    };
    let a = RccAnalysis::new(&d)?;
    eprintln!("{} crossings, {} regions, rank M = {}", d.crossing_count(), a.region_count(), a.incidence_rank);
    print!("{}", serialize_diagram(&d));
    Ok(())
}
