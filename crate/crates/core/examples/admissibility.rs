//! Which crossing sets can be switched by region crossing changes, with
//! the matrix answer checked against the bi-coloring answer.

use rcc_surfaces::bicolor::admissible_by_bicoloring;
use rcc_surfaces::fixtures;
use rcc_surfaces::moves::random_diagram;
use rcc_surfaces::rcc::{CrossingSet, RccAnalysis};

fn main() -> rcc_surfaces::Result<()> {
    let diagrams = [
        ("(1,1) torus curve", fixtures::torus11()),
        ("projective-plane curl", fixtures::rp2_curl()),
        ("random, 4 crossings", random_diagram(4, 0.5, 17)?),
    ];
    for (name, d) in diagrams {
        let a = RccAnalysis::new(&d)?;
        let c = d.crossing_count();
        println!("{name} ({}, {} regions):", a.surface.name(), a.region_count());
        for mask in 1u32..(1 << c) {
            let p = CrossingSet::new((0..c).filter(|i| mask >> i & 1 == 1));
            let by_matrix = a.admissible(&p)?;
            let by_coloring = admissible_by_bicoloring(&d, &a.homology, &p)?;
            assert_eq!(by_matrix.is_some(), by_coloring.is_some());
            match by_matrix {
                Some(s) => println!("  {:?} <- regions {:?}", p.iter().collect::<Vec<_>>(), s.iter().collect::<Vec<_>>()),
                None => println!("  {:?} infeasible", p.iter().collect::<Vec<_>>()),
            }
        }
    }
    Ok(())
}
