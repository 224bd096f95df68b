//! Face tracing through the orientation double cover.
//!
//! Cover dart `2d + s` is base dart `d` on sheet `s` (0 = `+`, 1 = `−`).
//! Sheet `+` keeps the base rotation, sheet `−` reverses it; a `+1` edge
//! stays on its sheet and a `−1` edge swaps sheets. The cover is orientable
//! with every sign positive, so faces are the orbits of `σ ∘ θ`. Each base
//! region lifts to exactly two cover faces exchanged by the deck map.

use crate::error::{Error, Result};
use crate::gf2::BitVec;

use super::{crossing_of, EmbeddingScheme, Sign};

/// The orientation double cover as an all-positive rotation system.
#[derive(Clone, Debug)]
pub struct CoverScheme {
    sigma: Vec<usize>,
    theta: Vec<usize>,
    vertex_count: usize,
}

impl CoverScheme {
    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    /// Rotation successor at the dart's cover vertex.
    pub fn sigma(&self, x: usize) -> usize {
        self.sigma[x]
    }

    /// Edge involution.
    pub fn theta(&self, x: usize) -> usize {
        self.theta[x]
    }

    /// Deck transformation `d^± ↦ d^∓`.
    pub fn deck(&self, x: usize) -> usize {
        x ^ 1
    }

    /// Cover vertex `2v + s` of a cover dart.
    pub fn vertex_of(&self, x: usize) -> usize {
        2 * crossing_of(x / 2) + (x & 1)
    }

    /// Face-tracing successor.
    pub fn next(&self, x: usize) -> usize {
        self.sigma[self.theta[x]]
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.vertex_count;
        for x in 0..self.dart_count() {
            let a = find(&mut parent, self.vertex_of(x));
            let b = find(&mut parent, self.vertex_of(self.theta[x]));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Face orbits of `next`, numbered in order of their lowest cover dart.
    /// Returns the face id of every cover dart and the face count.
    pub fn trace_faces(&self) -> (Vec<usize>, usize) {
        let n = self.dart_count();
        let mut face = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if face[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while face[x] == usize::MAX {
                face[x] = count;
                x = self.next(x);
            }
            count += 1;
        }
        (face, count)
    }
}

pub fn orientation_double_cover(d: &EmbeddingScheme) -> CoverScheme {
    let n = 2 * d.dart_count();
    let mut sigma = vec![0; n];
    let mut theta = vec![0; n];
    for base in 0..d.dart_count() {
        let v = crossing_of(base);
        let k = base % 4;
        sigma[2 * base] = 2 * (4 * v + (k + 1) % 4);
        sigma[2 * base + 1] = 2 * (4 * v + (k + 3) % 4) + 1;
        let other = d.opposite_end(base);
        let flip = usize::from(d.sign_of_dart(base) == Sign::Minus);
        theta[2 * base] = 2 * other + flip;
        theta[2 * base + 1] = 2 * other + (1 ^ flip);
    }
    CoverScheme {
        sigma,
        theta,
        vertex_count: 2 * d.crossing_count(),
    }
}

/// A region of the surface minus the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    /// Times the region appears around each crossing.
    pub corner_counts: Vec<u8>,
    /// Times the boundary walk runs along each edge (0, 1 or 2).
    pub edge_counts: Vec<u8>,
    /// `edge_counts` mod 2: the region's boundary as a Z₂ chain.
    pub edge_parity: BitVec,
    /// Smallest base dart with a lift in either cover face of the region.
    pub min_dart: usize,
    /// The two cover faces over this region, lower id first.
    pub cover_faces: [usize; 2],
}

impl Region {
    pub fn degree(&self) -> usize {
        self.edge_counts.iter().map(|&k| k as usize).sum()
    }
}

/// Regions of a diagram together with the cover data they came from.
#[derive(Clone, Debug)]
pub struct FaceStructure {
    regions: Vec<Region>,
    cover_face_of: Vec<usize>,
    cover_face_region: Vec<usize>,
    cover_face_pair: Vec<usize>,
    cover_components: usize,
    cover_vertices: usize,
    cover_edges: usize,
}

impl FaceStructure {
    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region(&self, i: usize) -> &Region {
        &self.regions[i]
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn cover_face_count(&self) -> usize {
        self.cover_face_pair.len()
    }

    /// The face pairing `g` on cover faces.
    pub fn cover_face_pair(&self, f: usize) -> usize {
        self.cover_face_pair[f]
    }

    pub fn cover_face_of(&self, cover_dart: usize) -> usize {
        self.cover_face_of[cover_dart]
    }

    pub fn region_of_cover_face(&self, f: usize) -> usize {
        self.cover_face_region[f]
    }

    /// The region containing the corner just before `dart` in rotation order.
    pub fn region_of_dart_side(&self, dart: usize) -> usize {
        self.cover_face_region[self.cover_face_of[2 * dart]]
    }

    pub fn orientable(&self) -> bool {
        self.cover_components == 2
    }

    pub fn cover_euler_characteristic(&self) -> i64 {
        self.cover_vertices as i64 - self.cover_edges as i64 + self.cover_face_count() as i64
    }
}

pub fn faces(d: &EmbeddingScheme) -> Result<FaceStructure> {
    let cover = orientation_double_cover(d);
    let (face_of, face_count) = cover.trace_faces();

    let mut pair = vec![usize::MAX; face_count];
    for x in 0..cover.dart_count() {
        let f = face_of[x];
        let g = face_of[cover.theta(cover.deck(x))];
        if pair[f] == usize::MAX {
            pair[f] = g;
        } else if pair[f] != g {
            return Err(Error::Internal(format!(
                "face pairing of cover face {f} depends on the representative dart"
            )));
        }
    }
    for f in 0..face_count {
        let g = pair[f];
        if g == f || pair[g] != f {
            return Err(Error::Internal(format!(
                "face pairing is not a fixed-point-free involution at cover face {f}"
            )));
        }
    }

    let mut min_dart = vec![usize::MAX; face_count];
    for x in 0..cover.dart_count() {
        let f = face_of[x];
        min_dart[f] = min_dart[f].min(x / 2);
    }
    let mut reps: Vec<usize> = (0..face_count).filter(|&f| f < pair[f]).collect();
    reps.sort_by_key(|&f| (min_dart[f].min(min_dart[pair[f]]), f));

    let c = d.crossing_count();
    let e = d.edge_count();
    let mut regions: Vec<Region> = reps
        .iter()
        .map(|&f| Region {
            corner_counts: vec![0; c],
            edge_counts: vec![0; e],
            edge_parity: BitVec::zeros(e),
            min_dart: min_dart[f].min(min_dart[pair[f]]),
            cover_faces: [f, pair[f]],
        })
        .collect();
    let mut face_region = vec![usize::MAX; face_count];
    for (i, &f) in reps.iter().enumerate() {
        face_region[f] = i;
        face_region[pair[f]] = i;
    }
    // Counting the darts of one of the two faces gives each corner and each
    // edge traversal of the region exactly once.
    for x in 0..cover.dart_count() {
        let f = face_of[x];
        if f > pair[f] {
            continue;
        }
        let r = &mut regions[face_region[f]];
        let base = x / 2;
        r.corner_counts[crossing_of(base)] += 1;
        r.edge_counts[d.edge_of(base)] += 1;
    }
    for r in &mut regions {
        for (i, &k) in r.edge_counts.iter().enumerate() {
            if k % 2 == 1 {
                r.edge_parity.set(i, true);
            }
        }
    }

    Ok(FaceStructure {
        regions,
        cover_face_of: face_of,
        cover_face_region: face_region,
        cover_face_pair: pair,
        cover_components: cover.component_count(),
        cover_vertices: cover.vertex_count(),
        cover_edges: cover.edge_count(),
    })
}
