//! Bi-colorings of semi-arcs and their homology classes.

use rcc_surfaces::bicolor::{admissible_by_bicoloring, bicoloring, phi_class};
use rcc_surfaces::fixtures;
use rcc_surfaces::homology::homology_context;
use rcc_surfaces::rcc::CrossingSet;

fn main() -> rcc_surfaces::Result<()> {
    for (name, d) in [("(1,1) torus curve", fixtures::torus11()), ("projective-plane curl", fixtures::rp2_curl())] {
        let ctx = homology_context(&d)?;
        let p = CrossingSet::new([0]);
        let Some(phi) = bicoloring(&d, &p)? else {
            println!("{name}: no bi-coloring for {{0}}");
            continue;
        };
        println!("{name}: colors {} in class [{}]", phi.colors, phi_class(&d, &ctx, &phi)?);
        match admissible_by_bicoloring(&d, &ctx, &p)? {
            Some(w) => println!("  null-homologous witness {}", w.colors),
            None => println!("  every bi-coloring is essential, so {{0}} is not admissible"),
        }
    }
    Ok(())
}
