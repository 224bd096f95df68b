//! Diagram transformations: crossing switches, the second Reidemeister move,
//! and seeded random diagrams.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scheme::{faces, orientation_double_cover, EmbeddingScheme, Edge, FaceStructure, Sign};

pub fn switch_crossing(d: &EmbeddingScheme, i: usize) -> Result<EmbeddingScheme> {
    if i >= d.crossing_count() {
        return Err(Error::OutOfRange {
            kind: "crossing",
            index: i,
            count: d.crossing_count(),
        });
    }
    let mut out = d.clone();
    out.toggle_over(i);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverStrand {
    A,
    B,
}

/// A finger move of the strand through `dart_a` across the strand through
/// `dart_b`.
///
/// A dart names one side of its edge: the side facing the corner just
/// before the dart in rotation order. Both sides must border the same
/// region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct R2Spec {
    pub dart_a: usize,
    pub dart_b: usize,
    pub over: OverStrand,
}

/// Pushes strand `a` across strand `b` inside their common region, adding
/// two crossings (indices `c` and `c + 1`) and a bigon between them.
///
/// Each split edge keeps its index for the segment holding its lower
/// original dart; the other four segments are appended. Strand `a` carries
/// its sign on that kept segment. Strand `b`'s signs are whatever makes the
/// new crossings' local orientation agree with the region, which can put
/// `−1` on a new segment of `b`; the product along `b` is always its old
/// sign.
pub fn reidemeister_two(d: &EmbeddingScheme, spec: R2Spec) -> Result<EmbeddingScheme> {
    let fs = faces(d)?;
    let out = reidemeister_two_with(d, &fs, spec)?;
    let after = faces(&out)?;
    if after.region_count() != fs.region_count() + 2 || !has_bigon(&after, d.crossing_count()) {
        return Err(Error::Internal(format!(
            "Reidemeister II produced {} regions from {} without the expected bigon",
            after.region_count(),
            fs.region_count()
        )));
    }
    Ok(out)
}

fn has_bigon(fs: &FaceStructure, p: usize) -> bool {
    fs.regions().iter().any(|r| {
        r.degree() == 2
            && r.corner_counts[p] == 1
            && r.corner_counts[p + 1] == 1
            && r.corner_counts.iter().map(|&k| k as usize).sum::<usize>() == 2
    })
}

fn sheet_sign(cover_dart: usize) -> Sign {
    if cover_dart & 1 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn reidemeister_two_with(
    d: &EmbeddingScheme,
    fs: &FaceStructure,
    spec: R2Spec,
) -> Result<EmbeddingScheme> {
    let n = d.dart_count();
    for dart in [spec.dart_a, spec.dart_b] {
        if dart >= n {
            return Err(Error::OutOfRange {
                kind: "dart",
                index: dart,
                count: n,
            });
        }
    }
    let (ea, eb) = (d.edge_of(spec.dart_a), d.edge_of(spec.dart_b));
    if spec.dart_a == spec.dart_b || ea == eb {
        return Err(Error::Reidemeister("the two darts lie on the same edge".into()));
    }

    // Work in one cover face f over the common region. Its boundary walk
    // runs a0 -> a1 along edge a and b0 -> b1 along edge b, with f on the
    // right of both in the orientation of f's sheet.
    let cover = orientation_double_cover(d);
    let a0 = 2 * spec.dart_a;
    let f = fs.cover_face_of(a0);
    let yb = 2 * spec.dart_b;
    let b0 = if fs.cover_face_of(yb) == f {
        yb
    } else if fs.cover_face_of(yb) == fs.cover_face_pair(f) {
        cover.deck(cover.theta(yb))
    } else {
        return Err(Error::Reidemeister(format!(
            "darts {} and {} do not border a common region",
            spec.dart_a, spec.dart_b
        )));
    };
    let a1 = cover.theta(a0);
    let b1 = cover.theta(b0);
    let (da, qa) = (spec.dart_a, a1 / 2);
    let (xb, yb1) = (b0 / 2, b1 / 2);
    let sign_a = d.edge(ea).sign;

    // Sheet of the new crossings relative to f, chosen so that strand a keeps
    // its sign on the segment with its lower dart.
    let eps = if da < qa { sign_a } else { Sign::Plus };

    let c = d.crossing_count();
    let (p, q) = (4 * c, 4 * (c + 1));
    // Layout in f's sheet: strand a climbs north through P, arcs over to Q
    // and heads south; strand b runs east through Q then P. Rotation order
    // is E, N, W, S; on the reversed sheet N and S trade positions.
    let (north, south) = if eps == Sign::Plus { (1, 3) } else { (3, 1) };
    let (east, west) = (0, 2);

    let a_first = Edge::new(da, p + south, eps);
    let a_mid = Edge::new(p + north, q + north, Sign::Plus);
    let a_last = Edge::new(q + south, qa, eps.times(sign_a));
    let b_first = Edge::new(xb, q + west, sheet_sign(b0).times(eps));
    let b_mid = Edge::new(q + east, p + west, Sign::Plus);
    let b_last = Edge::new(p + east, yb1, eps.times(sheet_sign(b1)));

    let (a_keep, a_rest) = if da < qa {
        (a_first, [a_mid, a_last])
    } else {
        (a_last, [a_first, a_mid])
    };
    let (b_keep, b_rest) = if xb < yb1 {
        (b_first, [b_mid, b_last])
    } else {
        (b_last, [b_first, b_mid])
    };

    let mut edges = d.edges().to_vec();
    edges[ea] = a_keep;
    edges[eb] = b_keep;
    edges.extend(a_rest);
    edges.extend(b_rest);

    let flag = match spec.over {
        OverStrand::A => 1,
        OverStrand::B => 0,
    };
    let mut over = d.over_pairs().to_vec();
    over.extend([flag, flag]);
    EmbeddingScheme::new(over, edges)
}

/// Every valid R2 move whose strand-a side is named by `dart_a`.
pub fn r2_partners(d: &EmbeddingScheme, fs: &FaceStructure, dart_a: usize) -> Vec<usize> {
    let region = fs.region_of_dart_side(dart_a);
    let ea = d.edge_of(dart_a);
    (0..d.dart_count())
        .filter(|&x| d.edge_of(x) != ea && fs.region_of_dart_side(x) == region)
        .collect()
}

/// A uniformly chosen valid R2 move, or `None` when the diagram has none.
pub fn random_r2_spec<R: Rng + ?Sized>(d: &EmbeddingScheme, rng: &mut R) -> Result<Option<R2Spec>> {
    let fs = faces(d)?;
    let mut moves = Vec::new();
    for a in 0..d.dart_count() {
        for b in r2_partners(d, &fs, a) {
            moves.push((a, b));
        }
    }
    Ok(moves.choose(rng).map(|&(dart_a, dart_b)| R2Spec {
        dart_a,
        dart_b,
        over: if rng.gen_bool(0.5) { OverStrand::A } else { OverStrand::B },
    }))
}

pub const MAX_GENERATION_ATTEMPTS: usize = 10_000;

/// A random connected diagram with `c` crossings.
///
/// Uses ChaCha8 seeded from `seed`: shuffle the `4c` darts and pair them up
/// consecutively, then draw each edge sign (negative with probability
/// `negative_sign_probability`) and each over flag. Disconnected draws are
/// discarded and redrawn from the same stream.
pub fn random_diagram(c: usize, negative_sign_probability: f64, seed: u64) -> Result<EmbeddingScheme> {
    if c == 0 {
        return Err(Error::OutOfRange {
            kind: "crossing count",
            index: 0,
            count: 0,
        });
    }
    if !(0.0..=1.0).contains(&negative_sign_probability) {
        return Err(Error::Parse(format!(
            "negative sign probability {negative_sign_probability} is outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_GENERATION_ATTEMPTS {
        let mut darts: Vec<usize> = (0..4 * c).collect();
        darts.shuffle(&mut rng);
        let edges: Vec<Edge> = darts
            .chunks(2)
            .map(|pair| {
                let sign = if rng.gen_bool(negative_sign_probability) {
                    Sign::Minus
                } else {
                    Sign::Plus
                };
                Edge::new(pair[0], pair[1], sign)
            })
            .collect();
        let over: Vec<u8> = (0..c).map(|_| rng.gen_range(0..2)).collect();
        match EmbeddingScheme::new(over, edges) {
            Ok(d) => return Ok(d),
            Err(Error::Invalid(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_GENERATION_ATTEMPTS,
    })
}
