//! Region sets whose changes cancel out, and the checkerboard classes of
//! the trefoil.

use rcc_surfaces::fixtures;
use rcc_surfaces::rcc::RccAnalysis;

fn main() -> rcc_surfaces::Result<()> {
    let d = fixtures::trefoil();
    let a = RccAnalysis::new(&d)?;
    println!("trefoil: {} regions, rank M = {}", a.region_count(), a.incidence_rank);
    for s in a.ineffective_basis() {
        println!("  ineffective: {:?}", s.iter().collect::<Vec<_>>());
    }
    if let Some(board) = a.checkerboard()? {
        for color in 0..2 {
            let class = board.color_class(color);
            println!("  color {color}: {:?} changes {:?}", class.iter().collect::<Vec<_>>(), a.effect(&class)?.to_bits());
        }
    }
    Ok(())
}
