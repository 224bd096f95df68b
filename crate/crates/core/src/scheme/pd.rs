//! Planar diagram (PD) codes.
//!
//! Each 4-tuple lists the edge labels around one crossing counterclockwise,
//! starting from the incoming under-strand. Crossing `i` gets darts
//! `4i..4i+4` in listed order, so the under-strand sits at positions
//! `{0, 2}` and `over_pair` is 1.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{EmbeddingScheme, Edge, Sign};

pub fn import_pd(code: &[[i64; 4]]) -> Result<EmbeddingScheme> {
    if code.is_empty() {
        return Err(Error::Pd("empty code".into()));
    }
    // label -> darts, in order of first appearance
    let mut order: Vec<i64> = Vec::new();
    let mut darts: HashMap<i64, Vec<usize>> = HashMap::new();
    for (i, tuple) in code.iter().enumerate() {
        for (k, &label) in tuple.iter().enumerate() {
            let slot = darts.entry(label).or_insert_with(|| {
                order.push(label);
                Vec::new()
            });
            slot.push(4 * i + k);
        }
    }
    let mut edges = Vec::with_capacity(order.len());
    for label in order {
        let ends = &darts[&label];
        if ends.len() != 2 {
            return Err(Error::Pd(format!(
                "label {label} occurs {} times, expected 2",
                ends.len()
            )));
        }
        edges.push(Edge::new(ends[0], ends[1], Sign::Plus));
    }
    EmbeddingScheme::new(vec![1; code.len()], edges)
}
