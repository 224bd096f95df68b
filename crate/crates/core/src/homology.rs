//! First homology of the surface with Z₂ coefficients, computed from the
//! embedded shadow.
//!
//! Chains live in the edge space Z₂^E. The region boundaries span a subspace
//! of the cycle space of dimension `r − 1`; the quotient has dimension
//! `2 − χ`. A cycle's class is obtained by reducing it against the echelon
//! form of the boundary space and reading the remainder in an echelon basis
//! of the reduced cycle space. The basis is computed rather than geometric,
//! so individual entries of the homology matrix depend on labeling while its
//! rank does not.

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVec, RowEchelon};
use crate::scheme::{components, faces, EmbeddingScheme, FaceStructure};

#[derive(Clone, Debug)]
pub struct HomologyContext {
    edge_count: usize,
    endpoints: Vec<(usize, usize)>,
    crossing_count: usize,
    boundaries: RowEchelon,
    classes: RowEchelon,
    component_cycles: Vec<BitVec>,
}

/// Vertex-edge incidence of the shadow over Z₂; loops give zero columns.
pub fn boundary_matrix(d: &EmbeddingScheme) -> BitMatrix {
    let mut m = BitMatrix::zeros(d.crossing_count(), d.edge_count());
    for e in 0..d.edge_count() {
        let (u, v) = d.edge_endpoints(e);
        if u != v {
            m.set(u, e, true);
            m.set(v, e, true);
        }
    }
    m
}

impl HomologyContext {
    pub fn new(d: &EmbeddingScheme, fs: &FaceStructure) -> Result<Self> {
        let e = d.edge_count();
        let boundaries = RowEchelon::new(e, fs.regions().iter().map(|r| &r.edge_parity));
        let cycles = gf2::nullspace_basis(&boundary_matrix(d));
        let reduced: Vec<BitVec> = cycles.iter().map(|z| boundaries.reduce(z)).collect();
        let classes = RowEchelon::new(e, reduced.iter());

        let chi = d.crossing_count() as i64 - e as i64 + fs.region_count() as i64;
        if boundaries.rank() + 1 != fs.region_count() || classes.rank() as i64 != 2 - chi {
            return Err(Error::Internal(format!(
                "homology dimensions disagree: boundary rank {} for {} regions, quotient {} for χ = {chi}",
                boundaries.rank(),
                fs.region_count(),
                classes.rank()
            )));
        }

        let component_cycles = components(d)
            .iter()
            .map(|c| BitVec::from_indices(e, c.edges.iter().copied()))
            .collect();
        Ok(HomologyContext {
            edge_count: e,
            endpoints: (0..e).map(|i| d.edge_endpoints(i)).collect(),
            crossing_count: d.crossing_count(),
            boundaries,
            classes,
            component_cycles,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `2 − χ`, the length of every class vector.
    pub fn dimension(&self) -> usize {
        self.classes.rank()
    }

    pub fn boundary_rank(&self) -> usize {
        self.boundaries.rank()
    }

    pub fn component_cycles(&self) -> &[BitVec] {
        &self.component_cycles
    }

    /// First crossing met by an odd number of edge-ends of `z`, if any.
    pub fn odd_crossing(&self, z: &BitVec) -> Option<usize> {
        let mut parity = vec![false; self.crossing_count];
        for e in z.ones() {
            let (u, v) = self.endpoints[e];
            parity[u] ^= true;
            parity[v] ^= true;
        }
        parity.iter().position(|&p| p)
    }

    /// Homology class of the Z₂ cycle `z`.
    pub fn class_of(&self, z: &BitVec) -> Result<BitVec> {
        if z.len() != self.edge_count {
            return Err(Error::DimensionMismatch {
                expected: self.edge_count,
                found: z.len(),
            });
        }
        if let Some(crossing) = self.odd_crossing(z) {
            return Err(Error::NotACycle { crossing });
        }
        Ok(self.classes.coordinates(&self.boundaries.reduce(z)))
    }
}

pub fn homology_context(d: &EmbeddingScheme) -> Result<HomologyContext> {
    HomologyContext::new(d, &faces(d)?)
}

pub fn class_of(ctx: &HomologyContext, z: &BitVec) -> Result<BitVec> {
    ctx.class_of(z)
}

/// Rows are the classes of the link components.
#[derive(Clone, Debug)]
pub struct HomologyMatrix {
    pub matrix: BitMatrix,
    pub rank: usize,
}

impl HomologyMatrix {
    pub fn from_context(ctx: &HomologyContext) -> Result<Self> {
        let rows = ctx
            .component_cycles
            .iter()
            .map(|z| ctx.class_of(z))
            .collect::<Result<Vec<_>>>()?;
        let matrix = BitMatrix::from_rows(ctx.dimension(), rows)?;
        let rank = gf2::rank(&matrix);
        Ok(HomologyMatrix { matrix, rank })
    }
}

pub fn homology_matrix(d: &EmbeddingScheme) -> Result<HomologyMatrix> {
    HomologyMatrix::from_context(&homology_context(d)?)
}
