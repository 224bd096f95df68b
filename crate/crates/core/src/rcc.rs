//! Region crossing change as linear algebra over Z₂.
//!
//! Applying a region crossing change on `R` switches each crossing once for
//! every time `R` appears around it, so only the parity of the corner count
//! matters. The incidence matrix `M` records those parities, a set of
//! regions acts through the sum of its rows, and everything below reduces
//! to rank, solving and kernels of `M` and `Mᵀ`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVec, RowEchelon};
use crate::homology::{HomologyContext, HomologyMatrix};
use crate::scheme::{components, faces, surface_info_from, EmbeddingScheme, FaceStructure, SurfaceInfo};

macro_rules! index_set {
    ($(#[$meta:meta])* $name:ident, $kind:literal) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
        pub struct $name(BTreeSet<usize>);

        impl $name {
            pub fn new<I: IntoIterator<Item = usize>>(items: I) -> Self {
                $name(items.into_iter().collect())
            }

            pub fn empty() -> Self {
                $name(BTreeSet::new())
            }

            pub fn from_indicator(v: &BitVec) -> Self {
                $name(v.ones().collect())
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, i: usize) -> bool {
                self.0.contains(&i)
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.iter().copied()
            }

            /// Checks every index against `count`.
            pub fn check(&self, count: usize) -> Result<()> {
                match self.0.iter().next_back() {
                    Some(&i) if i >= count => Err(Error::OutOfRange { kind: $kind, index: i, count }),
                    _ => Ok(()),
                }
            }

            pub fn indicator(&self, count: usize) -> Result<BitVec> {
                self.check(count)?;
                Ok(BitVec::from_indices(count, self.iter()))
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                $name::new(iter)
            }
        }
    };
}

index_set!(
    /// A subset of crossing indices.
    CrossingSet,
    "crossing"
);
index_set!(
    /// A subset of region indices, in the canonical region order.
    RegionSet,
    "region"
);

/// The `r × c` incidence matrix: entry `(i, j)` is the parity of the number
/// of times region `i` appears around crossing `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix(pub BitMatrix);

impl IncidenceMatrix {
    pub fn from_faces(d: &EmbeddingScheme, fs: &FaceStructure) -> Self {
        let mut m = BitMatrix::zeros(fs.region_count(), d.crossing_count());
        for (i, r) in fs.regions().iter().enumerate() {
            for (j, &k) in r.corner_counts.iter().enumerate() {
                if k % 2 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        IncidenceMatrix(m)
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        gf2::rank(&self.0)
    }
}

/// Both sides of `rank(M) = r − n − 1 + rank(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
}

/// Everything derived from one diagram, computed once.
#[derive(Clone, Debug)]
pub struct RccAnalysis {
    pub faces: FaceStructure,
    pub surface: SurfaceInfo,
    pub incidence: IncidenceMatrix,
    pub incidence_rank: usize,
    pub component_count: usize,
    pub homology: HomologyContext,
    pub homology_matrix: HomologyMatrix,
    row_space: RowEchelon,
}

impl RccAnalysis {
    pub fn new(d: &EmbeddingScheme) -> Result<Self> {
        let fs = faces(d)?;
        let surface = surface_info_from(d, &fs);
        let incidence = IncidenceMatrix::from_faces(d, &fs);
        let row_space = RowEchelon::of_matrix(incidence.matrix());
        let homology = HomologyContext::new(d, &fs)?;
        let homology_matrix = HomologyMatrix::from_context(&homology)?;
        Ok(RccAnalysis {
            incidence_rank: row_space.rank(),
            component_count: components(d).len(),
            faces: fs,
            surface,
            incidence,
            homology,
            homology_matrix,
            row_space,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.incidence.0.cols()
    }

    pub fn region_count(&self) -> usize {
        self.faces.region_count()
    }

    pub fn rank_report(&self) -> RankReport {
        let lhs = self.incidence_rank as i64;
        let rhs = self.region_count() as i64 - self.component_count as i64 - 1
            + self.homology_matrix.rank as i64;
        RankReport {
            lhs,
            rhs,
            equal: lhs == rhs,
        }
    }

    /// `k` such that the shadow's `2^c` diagrams fall into `2^k` classes.
    pub fn class_exponent(&self) -> usize {
        self.crossing_count() - self.incidence_rank
    }

    /// Crossings switched by applying region crossing changes on `s`.
    pub fn effect(&self, s: &RegionSet) -> Result<BitVec> {
        self.incidence.0.combine_rows(&s.indicator(self.region_count())?)
    }

    /// Regions whose changes switch exactly the crossings of `target`, or
    /// `None`. The certificate is the pivot solution of `Mᵀx = target`.
    pub fn solve_crossings(&self, target: &BitVec) -> Result<Option<RegionSet>> {
        if target.len() != self.crossing_count() {
            return Err(Error::DimensionMismatch {
                expected: self.crossing_count(),
                found: target.len(),
            });
        }
        if !self.row_space.contains(target) {
            return Ok(None);
        }
        let x = gf2::in_rowspace(&self.incidence.0, target)?
            .ok_or_else(|| Error::Internal("row space membership disagrees with echelon".into()))?;
        let set = RegionSet::from_indicator(&x);
        if &self.effect(&set)? != target {
            return Err(Error::Internal("region certificate failed substitution".into()));
        }
        Ok(Some(set))
    }

    pub fn admissible(&self, p: &CrossingSet) -> Result<Option<RegionSet>> {
        self.solve_crossings(&p.indicator(self.crossing_count())?)
    }

    pub fn ineffective_basis(&self) -> Vec<RegionSet> {
        gf2::nullspace_basis(&self.incidence.0.transpose())
            .iter()
            .map(RegionSet::from_indicator)
            .collect()
    }

    /// Region sets turning over flags `a` into `b` on this shadow.
    pub fn equivalent_flags(&self, a: &[u8], b: &[u8]) -> Result<Option<RegionSet>> {
        let c = self.crossing_count();
        if a.len() != c || b.len() != c {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: if a.len() != c { a.len() } else { b.len() },
            });
        }
        let diff = BitVec::from_bools(&a.iter().zip(b).map(|(x, y)| x != y).collect::<Vec<_>>());
        self.solve_crossings(&diff)
    }

    pub fn checkerboard(&self) -> Result<Option<Checkerboard>> {
        let r = self.region_count();
        let e = self.homology.edge_count();
        let mut adj = vec![Vec::new(); r];
        for edge in 0..e {
            let sides: Vec<usize> = self
                .faces
                .regions()
                .iter()
                .enumerate()
                .flat_map(|(i, reg)| std::iter::repeat_n(i, reg.edge_counts[edge] as usize))
                .collect();
            if sides.len() != 2 {
                return Err(Error::Internal(format!("edge {edge} has {} sides", sides.len())));
            }
            if sides[0] == sides[1] {
                return Ok(None);
            }
            adj[sides[0]].push(sides[1]);
            adj[sides[1]].push(sides[0]);
        }
        let mut colors = vec![u8::MAX; r];
        for start in 0..r {
            if colors[start] != u8::MAX {
                continue;
            }
            colors[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if colors[v] == u8::MAX {
                        colors[v] = colors[u] ^ 1;
                        queue.push_back(v);
                    } else if colors[v] == colors[u] {
                        return Ok(None);
                    }
                }
            }
        }
        let board = Checkerboard { colors };
        for color in 0..2 {
            if !self.effect(&board.color_class(color))?.is_zero() {
                return Err(Error::Internal(format!(
                    "checkerboard color class {color} is not ineffective"
                )));
            }
        }
        Ok(Some(board))
    }
}

/// A proper 2-coloring of the regions: the two sides of every edge differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkerboard {
    pub colors: Vec<u8>,
}

impl Checkerboard {
    pub fn color_class(&self, color: u8) -> RegionSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn incidence_matrix(d: &EmbeddingScheme) -> Result<IncidenceMatrix> {
    Ok(IncidenceMatrix::from_faces(d, &faces(d)?))
}

pub fn verify_rank_formula(d: &EmbeddingScheme) -> Result<RankReport> {
    Ok(RccAnalysis::new(d)?.rank_report())
}

pub fn count_classes(d: &EmbeddingScheme) -> Result<usize> {
    let fs = faces(d)?;
    let m = IncidenceMatrix::from_faces(d, &fs);
    Ok(d.crossing_count() - m.rank())
}

pub fn admissible(d: &EmbeddingScheme, p: &CrossingSet) -> Result<Option<RegionSet>> {
    p.check(d.crossing_count())?;
    RccAnalysis::new(d)?.admissible(p)
}

pub fn ineffective_basis(d: &EmbeddingScheme) -> Result<Vec<RegionSet>> {
    Ok(gf2::nullspace_basis(&incidence_matrix(d)?.0.transpose())
        .iter()
        .map(RegionSet::from_indicator)
        .collect())
}

pub fn apply_rcc(d: &EmbeddingScheme, s: &RegionSet) -> Result<EmbeddingScheme> {
    let m = incidence_matrix(d)?;
    let effect = m.0.combine_rows(&s.indicator(m.0.rows())?)?;
    let mut out = d.clone();
    for j in effect.ones() {
        out.toggle_over(j);
    }
    Ok(out)
}

pub fn rcc_equivalent(d1: &EmbeddingScheme, d2: &EmbeddingScheme) -> Result<Option<RegionSet>> {
    if !d1.same_shadow(d2) {
        return Err(Error::ShadowMismatch(
            "crossings, edges or signs differ".into(),
        ));
    }
    RccAnalysis::new(d1)?.equivalent_flags(d1.over_pairs(), d2.over_pairs())
}

pub fn checkerboard(d: &EmbeddingScheme) -> Result<Option<Checkerboard>> {
    RccAnalysis::new(d)?.checkerboard()
}
