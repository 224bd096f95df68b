//! Small named diagrams used throughout the tests and examples.

use crate::scheme::{import_pd, EmbeddingScheme, Edge, Sign};

/// One-crossing kink on the sphere: two loops on adjacent darts.
pub fn curl() -> EmbeddingScheme {
    EmbeddingScheme::new(
        vec![0],
        vec![Edge::new(0, 1, Sign::Plus), Edge::new(2, 3, Sign::Plus)],
    )
    .expect("valid fixture")
}

/// One crossing on the torus: two loops on opposite darts, one face.
pub fn torus11() -> EmbeddingScheme {
    EmbeddingScheme::new(
        vec![0],
        vec![Edge::new(0, 2, Sign::Plus), Edge::new(1, 3, Sign::Plus)],
    )
    .expect("valid fixture")
}

/// The kink with one loop twisted through a cross-cap: a knot on the
/// projective plane.
pub fn rp2_curl() -> EmbeddingScheme {
    EmbeddingScheme::new(
        vec![0],
        vec![Edge::new(0, 1, Sign::Minus), Edge::new(2, 3, Sign::Plus)],
    )
    .expect("valid fixture")
}

pub const TREFOIL_PD: [[i64; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];

pub fn trefoil() -> EmbeddingScheme {
    import_pd(&TREFOIL_PD).expect("valid fixture")
}
