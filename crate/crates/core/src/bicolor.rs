//! Admissibility through bi-colorings of semi-arcs.
//!
//! A bi-coloring of `(L, P)` assigns a color in Z₂ to every edge so that the
//! two edges of a strand passing through a crossing differ exactly when the
//! crossing is in `P`. `P` is admissible iff some bi-coloring has a
//! null-homologous 1-colored set. Flipping every color along component `K`
//! gives another bi-coloring and shifts its class by `[K]`, so it suffices
//! to test one particular coloring against the span of the component
//! classes. None of this consults the incidence matrix.

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVec};
use crate::homology::{HomologyContext, HomologyMatrix};
use crate::rcc::CrossingSet;
use crate::scheme::EmbeddingScheme;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicoloring {
    /// One color per edge.
    pub colors: BitVec,
    pub crossings: CrossingSet,
}

/// One row per through-pair (crossing `v` gives rows `2v` and `2v + 1`),
/// one column per edge.
pub fn constraint_matrix(d: &EmbeddingScheme) -> BitMatrix {
    let mut m = BitMatrix::zeros(2 * d.crossing_count(), d.edge_count());
    for v in 0..d.crossing_count() {
        for pair in 0..2 {
            let a = d.edge_of(4 * v + pair);
            let b = d.edge_of(4 * v + pair + 2);
            // a strand closing up on itself contributes φ(e) + φ(e) = 0
            if a != b {
                m.set(2 * v + pair, a, true);
                m.set(2 * v + pair, b, true);
            }
        }
    }
    m
}

fn right_hand_side(d: &EmbeddingScheme, p: &CrossingSet) -> Result<BitVec> {
    p.check(d.crossing_count())?;
    let mut b = BitVec::zeros(2 * d.crossing_count());
    for v in p.iter() {
        b.set(2 * v, true);
        b.set(2 * v + 1, true);
    }
    Ok(b)
}

/// A particular bi-coloring, or `None` when the constraints are inconsistent.
pub fn bicoloring(d: &EmbeddingScheme, p: &CrossingSet) -> Result<Option<Bicoloring>> {
    let b = right_hand_side(d, p)?;
    Ok(gf2::solve(&constraint_matrix(d), &b)?.map(|colors| Bicoloring {
        colors,
        crossings: p.clone(),
    }))
}

impl Bicoloring {
    /// First crossing where the coloring breaks its constraint.
    pub fn violation(&self, d: &EmbeddingScheme) -> Option<usize> {
        if self.colors.len() != d.edge_count() {
            return Some(0);
        }
        (0..d.crossing_count()).find(|&v| {
            let want = self.crossings.contains(v);
            (0..2).any(|pair| {
                let a = self.colors.get(d.edge_of(4 * v + pair));
                let b = self.colors.get(d.edge_of(4 * v + pair + 2));
                (a != b) != want
            })
        })
    }
}

/// Homology class of the 1-colored edges.
pub fn phi_class(d: &EmbeddingScheme, ctx: &HomologyContext, phi: &Bicoloring) -> Result<BitVec> {
    if let Some(crossing) = phi.violation(d) {
        return Err(Error::BadBicoloring { crossing });
    }
    ctx.class_of(&phi.colors)
}

/// Decides admissibility of `p` and, when admissible, returns a bi-coloring
/// whose class vanishes.
pub fn admissible_by_bicoloring(
    d: &EmbeddingScheme,
    ctx: &HomologyContext,
    p: &CrossingSet,
) -> Result<Option<Bicoloring>> {
    let Some(mut phi) = bicoloring(d, p)? else {
        return Ok(None);
    };
    let class = phi_class(d, ctx, &phi)?;
    let n = HomologyMatrix::from_context(ctx)?;
    let Some(flips) = gf2::in_rowspace(&n.matrix, &class)? else {
        return Ok(None);
    };
    for k in flips.ones() {
        phi.colors.xor_assign(&ctx.component_cycles()[k]);
    }
    if !ctx.class_of(&phi.colors)?.is_zero() {
        return Err(Error::Internal("flipped bi-coloring is not null-homologous".into()));
    }
    Ok(Some(phi))
}
