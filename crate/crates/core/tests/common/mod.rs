//! Independent oracles and diagram generators shared by the integration
//! tests. Nothing here goes through the double cover or the echelon solvers.

#![allow(dead_code)]

use std::collections::HashSet;

use rcc_surfaces::gf2::{BitMatrix, BitVec};
use rcc_surfaces::scheme::{rotation_next, rotation_prev, EmbeddingScheme, Sign};

/// Faces by direct signed tracing: walk `(dart, orientation)` states, flip
/// the orientation across `−1` edges and turn the other way while flipped.
/// Every face shows up as two mirror orbits. Returns the corner-count vector
/// of every face, sorted.
pub fn signed_trace_corner_counts(d: &EmbeddingScheme) -> Vec<Vec<u8>> {
    let n = d.dart_count();
    let mut seen = vec![[false; 2]; n];
    let mut orbits: Vec<Vec<u8>> = Vec::new();
    for start in 0..n {
        for start_flip in 0..2 {
            if seen[start][start_flip] {
                continue;
            }
            let mut counts = vec![0u8; d.crossing_count()];
            let (mut dart, mut flip) = (start, start_flip);
            while !seen[dart][flip] {
                seen[dart][flip] = true;
                counts[dart / 4] += 1;
                let arrive = d.opposite_end(dart);
                if d.sign_of_dart(dart) == Sign::Minus {
                    flip ^= 1;
                }
                dart = if flip == 0 { rotation_next(arrive) } else { rotation_prev(arrive) };
            }
            orbits.push(counts);
        }
    }
    orbits.sort();
    assert_eq!(orbits.len() % 2, 0, "mirror orbits must pair up");
    orbits.into_iter().step_by(2).collect()
}

pub fn signed_trace_region_count(d: &EmbeddingScheme) -> usize {
    signed_trace_corner_counts(d).len()
}

/// Orientability by trying to 2-color crossings so that every `−1` edge
/// joins opposite colors and every `+1` edge equal colors (vertex flips).
pub fn orientable_by_flips(d: &EmbeddingScheme) -> bool {
    let c = d.crossing_count();
    let mut color = vec![u8::MAX; c];
    color[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for e in d.edges() {
            let (u, v) = (e.darts[0] / 4, e.darts[1] / 4);
            let want = u8::from(e.sign == Sign::Minus);
            match (color[u], color[v]) {
                (a, b) if a != u8::MAX && b != u8::MAX => {
                    if a ^ b != want {
                        return false;
                    }
                }
                (a, _) if a != u8::MAX => {
                    color[v] = a ^ want;
                    changed = true;
                }
                (_, b) if b != u8::MAX => {
                    color[u] = b ^ want;
                    changed = true;
                }
                _ => {}
            }
        }
    }
    true
}

/// All sums of subsets of `vectors`, by enumeration.
pub fn subset_sums(vectors: &[BitVec], len: usize) -> HashSet<BitVec> {
    assert!(vectors.len() <= 20, "enumeration too large");
    let mut out = HashSet::new();
    for mask in 0u32..(1 << vectors.len()) {
        let mut acc = BitVec::zeros(len);
        for (i, v) in vectors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc.xor_assign(v);
            }
        }
        out.insert(acc);
    }
    out
}

/// Rank as log₂ of the number of distinct row-subset sums.
pub fn brute_rank(m: &BitMatrix) -> usize {
    let rows: Vec<BitVec> = m.row_iter().cloned().collect();
    let count = subset_sums(&rows, m.cols()).len();
    assert!(count.is_power_of_two());
    count.trailing_zeros() as usize
}

/// Some row subset summing to `target`, by exhaustive search.
pub fn brute_row_subset(m: &BitMatrix, target: &BitVec) -> Option<u32> {
    assert!(m.rows() <= 20);
    (0u32..(1 << m.rows())).find(|mask| {
        let mut acc = BitVec::zeros(m.cols());
        for i in 0..m.rows() {
            if mask >> i & 1 == 1 {
                acc.xor_assign(m.row(i));
            }
        }
        &acc == target
    })
}

/// Z₂ incidence matrix assembled from the signed-trace corner counts. Row
/// order is the oracle's own, which only matters up to permutation.
pub fn oracle_incidence(d: &EmbeddingScheme) -> BitMatrix {
    let faces = signed_trace_corner_counts(d);
    let rows = faces
        .iter()
        .map(|f| BitVec::from_bits(&f.iter().map(|k| k % 2).collect::<Vec<_>>()))
        .collect();
    BitMatrix::from_rows(d.crossing_count(), rows).unwrap()
}

/// PD code of the closure of a braid on `strands` strands. Letter `±i`
/// is the generator crossing strand positions `i − 1` and `i`; the sign
/// picks which strand goes under. Returns `None` when some strand takes
/// part in no crossing.
pub fn braid_closure_pd(strands: usize, word: &[i32]) -> Option<Vec<[i64; 4]>> {
    let mut current: Vec<i64> = (1..=strands as i64).collect();
    let mut next = strands as i64 + 1;
    let mut code = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        assert!(i + 1 < strands);
        let (l_in, r_in) = (current[i], current[i + 1]);
        let (l_out, r_out) = (next, next + 1);
        next += 2;
        code.push(if g > 0 {
            [l_in, r_in, r_out, l_out]
        } else {
            [r_in, r_out, l_out, l_in]
        });
        current[i] = l_out;
        current[i + 1] = r_out;
    }
    for (p, &label) in current.iter().enumerate() {
        if label == p as i64 + 1 {
            return None;
        }
    }
    for tuple in &mut code {
        for label in tuple.iter_mut() {
            if let Some(p) = current.iter().position(|&x| x == *label) {
                *label = p as i64 + 1;
            }
        }
    }
    Some(code)
}

/// A fixed list of braid words whose closures are knots or links.
pub fn braid_words() -> Vec<(usize, Vec<i32>)> {
    let mut out = vec![
        (2, vec![1, 1, 1]),
        (2, vec![1, 1, 1, 1, 1]),
        (2, vec![1, 1, 1, 1, 1, 1, 1]),
        (2, vec![1, 1, 1, 1, 1, 1, 1, 1, 1]),
        (2, vec![1, -1, 1]),
        (3, vec![1, -2, 1, -2]),
        (3, vec![1, 1, 2, 2]),
        (3, vec![1, 2, 1, 2]),
        (3, vec![1, 1, 1, 2, -1, 2]),
        (3, vec![1, 2, 2, 2, 1, 2]),
        (3, vec![1, -2, 1, -2, 1, -2, 1]),
        (4, vec![1, 2, 3]),
        (4, vec![1, -2, 3, -2, 1]),
        (4, vec![1, 2, -3, 2, 1, 2, 3]),
        (2, vec![1, 1]),
        (2, vec![1, 1, 1, 1]),
        (3, vec![1, 1, 2, 2, 1, 1]),
        (3, vec![1, 2, 1, 2, 1, 2]),
        (4, vec![1, 1, 2, 2, 3, 3]),
    ];
    // deterministic pseudo-random words on 3 to 5 strands
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for len in 4..40 {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let strands = 3 + (state >> 60) as usize % 3;
        let mut word = Vec::with_capacity(len);
        for _ in 0..len {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let g = 1 + ((state >> 33) as usize % (strands - 1)) as i32;
            word.push(if (state >> 20) & 1 == 1 { g } else { -g });
        }
        out.push((strands, word));
    }
    out
}

/// Published PD codes of small knots.
pub const KNOT_PDS: &[&[[i64; 4]]] = &[
    &[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
    &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    &[[1, 6, 2, 7], [3, 8, 4, 9], [5, 10, 6, 1], [7, 2, 8, 3], [9, 4, 10, 5]],
    &[[1, 1, 2, 2]],
];

/// Like [`signed_trace_corner_counts`] but also records which edges each
/// face runs along an odd number of times. Sorted, one entry per face.
pub fn signed_trace_faces(d: &EmbeddingScheme) -> Vec<(Vec<u8>, BitVec)> {
    let n = d.dart_count();
    let mut seen = vec![[false; 2]; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        for start_flip in 0..2 {
            if seen[start][start_flip] {
                continue;
            }
            let mut counts = vec![0u8; d.crossing_count()];
            let mut parity = BitVec::zeros(d.edge_count());
            let (mut dart, mut flip) = (start, start_flip);
            while !seen[dart][flip] {
                seen[dart][flip] = true;
                counts[dart / 4] += 1;
                parity.toggle(d.edge_of(dart));
                let arrive = d.opposite_end(dart);
                if d.sign_of_dart(dart) == Sign::Minus {
                    flip ^= 1;
                }
                dart = if flip == 0 { rotation_next(arrive) } else { rotation_prev(arrive) };
            }
            orbits.push((counts, parity));
        }
    }
    orbits.sort_by(|a, b| (&a.0, a.1.to_bits()).cmp(&(&b.0, b.1.to_bits())));
    orbits.into_iter().step_by(2).collect()
}

/// Edge sets of the link components, found by walking straight through
/// every crossing.
pub fn walked_components(d: &EmbeddingScheme) -> Vec<BitVec> {
    let mut used = vec![false; d.edge_count()];
    let mut out = Vec::new();
    for e0 in 0..d.edge_count() {
        if used[e0] {
            continue;
        }
        let mut set = BitVec::zeros(d.edge_count());
        let mut dart = d.edge(e0).darts[0];
        loop {
            let e = d.edge_of(dart);
            if used[e] {
                break;
            }
            used[e] = true;
            set.set(e, true);
            let arrive = d.opposite_end(dart);
            dart = 4 * (arrive / 4) + (arrive % 4 + 2) % 4;
        }
        out.push(set);
    }
    out
}

/// rank(N) as log₂ |span(components ∪ boundaries)| / |span(boundaries)|,
/// both spans enumerated.
pub fn brute_homology_rank(d: &EmbeddingScheme) -> usize {
    let boundaries: Vec<BitVec> = signed_trace_faces(d).into_iter().map(|(_, p)| p).collect();
    let comps = walked_components(d);
    let b = subset_sums(&boundaries, d.edge_count()).len();
    let all: Vec<BitVec> = boundaries.iter().chain(comps.iter()).cloned().collect();
    let t = subset_sums(&all, d.edge_count()).len();
    (t / b).trailing_zeros() as usize
}
