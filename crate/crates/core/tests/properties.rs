mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rcc_surfaces::bicolor::{admissible_by_bicoloring, bicoloring, constraint_matrix, phi_class};
use rcc_surfaces::gf2::{self, BitMatrix, BitVec};
use rcc_surfaces::moves::{random_diagram, random_r2_spec, reidemeister_two};
use rcc_surfaces::rcc::{apply_rcc, CrossingSet, RccAnalysis, RegionSet};
use rcc_surfaces::scheme::{
    components, faces, import_pd, orientation_double_cover, parse_diagram, serialize_diagram,
    surface_info,
};

use common::*;

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(0u8..2, c), r).prop_map(move |rows| {
            let rows = rows.iter().map(|row| BitVec::from_bits(row)).collect();
            BitMatrix::from_rows(c, rows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in matrix_strategy(12, 80)) {
        prop_assert_eq!(gf2::rank(&m), gf2::rank(&m.transpose()));
        prop_assert!(gf2::rank(&m) <= m.rows().min(m.cols()));
    }

    #[test]
    fn rank_counts_row_subset_sums(m in matrix_strategy(12, 10)) {
        prop_assert_eq!(gf2::rank(&m), brute_rank(&m));
    }

    #[test]
    fn nullspace_is_a_kernel_basis(m in matrix_strategy(10, 70)) {
        let basis = gf2::nullspace_basis(&m);
        prop_assert_eq!(basis.len(), m.cols() - gf2::rank(&m));
        for x in &basis {
            prop_assert!(m.mul_vec(x).unwrap().is_zero());
        }
        let stacked = BitMatrix::from_rows(m.cols(), basis.clone()).unwrap();
        prop_assert_eq!(gf2::rank(&stacked), basis.len());
    }

    #[test]
    fn solutions_substitute_back(m in matrix_strategy(10, 10), seed in any::<u64>()) {
        // b chosen in the column space half the time
        let mut x = BitVec::zeros(m.cols());
        for i in 0..m.cols() {
            if (seed >> (i % 64)) & 1 == 1 { x.set(i, true); }
        }
        let b = if seed & 1 == 0 {
            m.mul_vec(&x).unwrap()
        } else {
            BitVec::from_indices(m.rows(), (0..m.rows()).filter(|i| (seed >> (i + 7)) & 1 == 1))
        };
        let reachable = brute_row_subset(&m.transpose(), &b).is_some();
        match gf2::solve(&m, &b).unwrap() {
            Some(sol) => prop_assert_eq!(m.mul_vec(&sol).unwrap(), b.clone()),
            None => prop_assert!(!reachable),
        }
        match gf2::in_rowspace(&m.transpose(), &b).unwrap() {
            Some(y) => prop_assert_eq!(m.transpose().combine_rows(&y).unwrap(), b),
            None => prop_assert!(!reachable),
        }
    }

    #[test]
    fn serialize_then_parse_is_identity(c in 1usize..9, p in 0u8..3, seed in any::<u64>()) {
        let d = random_diagram(c, f64::from(p) / 2.0, seed).unwrap();
        let text = serialize_diagram(&d);
        prop_assert_eq!(parse_diagram(&text).unwrap(), d);
    }

    #[test]
    fn apply_is_an_involution(c in 1usize..9, seed in any::<u64>(), mask in any::<u32>()) {
        let d = random_diagram(c, 0.5, seed).unwrap();
        let r = faces(&d).unwrap().region_count();
        let s = RegionSet::new((0..r).filter(|i| mask >> (i % 32) & 1 == 1));
        let once = apply_rcc(&d, &s).unwrap();
        prop_assert!(once.same_shadow(&d));
        prop_assert_eq!(apply_rcc(&once, &s).unwrap(), d);
    }
}

#[test]
fn face_structure_invariants_on_random_diagrams() {
    for seed in 0..300u64 {
        let c = 1 + (seed % 10) as usize;
        let d = random_diagram(c, [0.0, 0.5, 1.0][(seed % 3) as usize], seed).unwrap();
        let fs = faces(&d).unwrap();
        let cover = orientation_double_cover(&d);
        for v in 0..c {
            let total: u32 = fs.regions().iter().map(|r| r.corner_counts[v] as u32).sum();
            assert_eq!(total, 4);
        }
        let degrees: usize = fs.regions().iter().map(|r| r.degree()).sum();
        assert_eq!(degrees, 2 * d.edge_count());
        let mut parity_sum = BitVec::zeros(d.edge_count());
        for r in fs.regions() {
            parity_sum.xor_assign(&r.edge_parity);
        }
        assert!(parity_sum.is_zero());
        assert_eq!(fs.cover_face_count(), 2 * fs.region_count());
        let info = surface_info(&d).unwrap();
        assert_eq!(fs.cover_euler_characteristic(), 2 * info.euler_characteristic);
        assert!(info.euler_characteristic <= 2);
        assert_eq!(info.orientable, !cover.is_connected());
        assert_eq!(info.orientable, orientable_by_flips(&d));
        assert_eq!(fs.region_count(), signed_trace_region_count(&d));
        let mut ours: Vec<Vec<u8>> = fs.regions().iter().map(|r| r.corner_counts.clone()).collect();
        ours.sort();
        assert_eq!(ours, signed_trace_corner_counts(&d));
        let comps = components(&d);
        let passages: usize = comps.iter().map(|k| k.passages.len()).sum();
        assert_eq!(passages, 2 * c);
        let mut edges: Vec<usize> = comps.iter().flat_map(|k| k.edges.clone()).collect();
        edges.sort_unstable();
        assert_eq!(edges, (0..d.edge_count()).collect::<Vec<_>>());
    }
}

#[test]
fn homology_dimension_matches_euler_characteristic() {
    for seed in 0..200u64 {
        let d = random_diagram(1 + (seed % 9) as usize, 0.5, seed).unwrap();
        let a = RccAnalysis::new(&d).unwrap();
        let cycles = d.edge_count() - d.crossing_count() + 1;
        assert_eq!(cycles - a.homology.boundary_rank(), a.surface.h1_dim);
        assert_eq!(a.homology.dimension(), a.surface.h1_dim);
    }
}

#[test]
fn class_map_is_linear() {
    for seed in 0..100u64 {
        let d = random_diagram(2 + (seed % 7) as usize, 0.5, seed).unwrap();
        let a = RccAnalysis::new(&d).unwrap();
        let cycles = gf2::nullspace_basis(&rcc_surfaces::homology::boundary_matrix(&d));
        for pair in cycles.windows(2) {
            let sum = pair[0].xor(&pair[1]);
            let lhs = a.homology.class_of(&sum).unwrap();
            let rhs = a.homology.class_of(&pair[0]).unwrap().xor(&a.homology.class_of(&pair[1]).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn homology_rank_is_relabeling_invariant() {
    use rcc_surfaces::scheme::{Edge, EmbeddingScheme};
    for seed in 0..100u64 {
        let d = random_diagram(2 + (seed % 6) as usize, 0.5, seed).unwrap();
        let c = d.crossing_count();
        // reverse the crossing order and the edge order
        let map = |x: usize| 4 * (c - 1 - x / 4) + x % 4;
        let edges: Vec<Edge> = d
            .edges()
            .iter()
            .rev()
            .map(|e| Edge::new(map(e.darts[1]), map(e.darts[0]), e.sign))
            .collect();
        let over: Vec<u8> = d.over_pairs().iter().rev().copied().collect();
        let relabeled = EmbeddingScheme::new(over, edges).unwrap();
        let a = RccAnalysis::new(&d).unwrap();
        let b = RccAnalysis::new(&relabeled).unwrap();
        assert_eq!(a.homology_matrix.rank, b.homology_matrix.rank);
        assert_eq!(a.incidence_rank, b.incidence_rank);
        assert_eq!(a.region_count(), b.region_count());
    }
}

#[test]
fn bicolorings_for_knots_always_exist() {
    let mut checked = 0;
    for seed in 0..400u64 {
        let d = random_diagram(1 + (seed % 8) as usize, 0.5, seed).unwrap();
        if components(&d).len() != 1 {
            continue;
        }
        checked += 1;
        for mask in 0u32..(1 << d.crossing_count().min(5)) {
            let p = CrossingSet::new((0..d.crossing_count()).filter(|i| mask >> i & 1 == 1));
            let phi = bicoloring(&d, &p).unwrap().expect("knots admit bi-colorings");
            assert_eq!(phi.violation(&d), None);
        }
    }
    assert!(checked > 20);
}

#[test]
fn bicoloring_space_has_two_to_the_n_elements() {
    for seed in 0..200u64 {
        let d = random_diagram(1 + (seed % 6) as usize, 0.5, seed).unwrap();
        let n = components(&d).len();
        let kernel = gf2::nullspace_basis(&constraint_matrix(&d));
        assert_eq!(kernel.len(), n);
        let a = RccAnalysis::new(&d).unwrap();
        let span = gf2::RowEchelon::new(d.edge_count(), a.homology.component_cycles().iter());
        for k in &kernel {
            assert!(span.contains(k));
        }
        // exhaustive count when small enough
        if d.edge_count() <= 12 {
            for v in 0..d.crossing_count() {
                let p = CrossingSet::new([v]);
                let count = (0u32..(1 << d.edge_count()))
                    .filter(|mask| {
                        let colors = BitVec::from_indices(
                            d.edge_count(),
                            (0..d.edge_count()).filter(|i| mask >> i & 1 == 1),
                        );
                        let phi = rcc_surfaces::bicolor::Bicoloring { colors, crossings: p.clone() };
                        phi.violation(&d).is_none()
                    })
                    .count();
                assert!(count == 0 || count == 1 << n, "count {count} for n = {n}");
                assert_eq!(count > 0, bicoloring(&d, &p).unwrap().is_some());
            }
        }
    }
}

#[test]
fn bicolor_one_sets_are_cycles() {
    for seed in 0..200u64 {
        let d = random_diagram(1 + (seed % 8) as usize, 0.5, seed).unwrap();
        let a = RccAnalysis::new(&d).unwrap();
        for v in 0..d.crossing_count() {
            if let Some(phi) = bicoloring(&d, &CrossingSet::new([v])).unwrap() {
                assert_eq!(a.homology.odd_crossing(&phi.colors), None);
                phi_class(&d, &a.homology, &phi).unwrap();
            }
        }
    }
}

#[test]
fn admissibility_matches_enumeration() {
    for seed in 0..150u64 {
        let d = random_diagram(1 + (seed % 6) as usize, [0.0, 0.5][(seed % 2) as usize], seed).unwrap();
        let a = RccAnalysis::new(&d).unwrap();
        if a.region_count() > 14 {
            continue;
        }
        let reachable = subset_sums(
            &a.incidence.matrix().row_iter().cloned().collect::<Vec<_>>(),
            d.crossing_count(),
        );
        for mask in 0u32..(1 << d.crossing_count()) {
            let p = CrossingSet::new((0..d.crossing_count()).filter(|i| mask >> i & 1 == 1));
            let target = p.indicator(d.crossing_count()).unwrap();
            let matrix = a.admissible(&p).unwrap();
            let colored = admissible_by_bicoloring(&d, &a.homology, &p).unwrap();
            assert_eq!(matrix.is_some(), reachable.contains(&target));
            assert_eq!(colored.is_some(), matrix.is_some());
            if let Some(s) = matrix {
                assert_eq!(a.effect(&s).unwrap(), target);
            }
        }
    }
}

#[test]
fn reidemeister_two_preserves_everything_it_should() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut applied = 0;
    for seed in 0..150u64 {
        let d = random_diagram(1 + (seed % 7) as usize, [0.0, 0.5, 1.0][(seed % 3) as usize], seed).unwrap();
        let Some(spec) = random_r2_spec(&d, &mut rng).unwrap() else { continue };
        let out = reidemeister_two(&d, spec).unwrap();
        let (a, b) = (RccAnalysis::new(&d).unwrap(), RccAnalysis::new(&out).unwrap());
        assert_eq!(b.region_count(), a.region_count() + 2);
        assert_eq!(b.surface, a.surface);
        assert_eq!(b.component_count, a.component_count);
        assert_eq!(b.homology_matrix.rank, a.homology_matrix.rank);
        assert_eq!(b.region_count() - b.incidence_rank, a.region_count() - a.incidence_rank);
        assert!(b.rank_report().equal);
        applied += 1;
    }
    assert!(applied > 100);
}

#[test]
fn cyclically_chosen_crossings_are_admissible_on_planar_links() {
    let mut tested = 0;
    for (strands, word) in braid_words() {
        let Some(code) = braid_closure_pd(strands, &word) else { continue };
        let d = import_pd(&code).unwrap();
        let a = RccAnalysis::new(&d).unwrap();
        assert_eq!(a.surface.euler_characteristic, 2);
        let comps = components(&d);
        // components through each crossing
        let mut through: Vec<Vec<usize>> = vec![Vec::new(); d.crossing_count()];
        for (k, comp) in comps.iter().enumerate() {
            for passage in &comp.passages {
                through[passage.crossing].push(k);
            }
        }
        let between = |i: usize, j: usize| -> Vec<usize> {
            (0..d.crossing_count())
                .filter(|&v| {
                    let mut t = through[v].clone();
                    t.sort_unstable();
                    let mut want = vec![i, j];
                    want.sort_unstable();
                    t == want
                })
                .collect()
        };
        let n = comps.len();
        // single self-crossings, and pairs / triangles of mixed crossings
        for i in 0..n {
            for v in between(i, i) {
                assert!(a.admissible(&CrossingSet::new([v])).unwrap().is_some());
                tested += 1;
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let ij = between(i, j);
                for w in ij.windows(2) {
                    assert!(a.admissible(&CrossingSet::new([w[0], w[1]])).unwrap().is_some());
                    tested += 1;
                }
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    let (jk, ki) = (between(j, k), between(k, i));
                    if let (Some(&x), Some(&y), Some(&z)) = (ij.first(), jk.first(), ki.first()) {
                        assert!(a.admissible(&CrossingSet::new([x, y, z])).unwrap().is_some());
                        tested += 1;
                    }
                }
            }
        }
    }
    assert!(tested > 50, "only {tested} cyclic sets exercised");
}
