//! Faces, surface type and double cover for the built-in one-crossing
//! diagrams and the trefoil.

use rcc_surfaces::fixtures;
use rcc_surfaces::scheme::{components, faces, orientation_double_cover, surface_info};

fn main() -> rcc_surfaces::Result<()> {
    let diagrams = [
        ("curl", fixtures::curl()),
        ("(1,1) torus curve", fixtures::torus11()),
        ("projective-plane curl", fixtures::rp2_curl()),
        ("trefoil", fixtures::trefoil()),
    ];
    for (name, d) in diagrams {
        let fs = faces(&d)?;
        let s = surface_info(&d)?;
        let cover = orientation_double_cover(&d);
        println!("{name}: {} crossing(s) on the {}", d.crossing_count(), s.name());
        println!("  chi = {}, H1 dimension {}, {} component(s)", s.euler_characteristic, s.h1_dim, components(&d).len());
        println!("  double cover: {} piece(s), {} faces", cover.component_count(), fs.cover_face_count());
        for (i, r) in fs.regions().iter().enumerate() {
            println!("  region {i}: corners {:?}, odd edges {}", r.corner_counts, r.edge_parity);
        }
    }
    Ok(())
}
