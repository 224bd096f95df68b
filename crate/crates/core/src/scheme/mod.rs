//! The diagram data model.
//!
//! A link diagram is stored as a signed rotation system on its 4-valent
//! shadow. Crossing `i` owns darts `4i..4i+4`, listed in rotation order, so
//! the dart at rotation position `k` is `4i + k`. Positions `{0, 2}` and
//! `{1, 3}` are the two strands passing straight through the crossing, and
//! `over_pair` says which of them is on top. Each edge (semi-arc) joins two
//! darts and carries a sign; a `-1` edge reverses the local orientation, which
//! is how nonorientable surfaces are encoded.
//!
//! The scheme defines its surface: the regions are the faces of the cellular
//! embedding it describes.

mod cover;
mod format;
mod pd;

use std::collections::VecDeque;

pub use cover::{faces, orientation_double_cover, CoverScheme, FaceStructure, Region};
pub use format::{parse_diagram, serialize_diagram, RawCrossing, RawDiagram, RawEdge};
pub use pd::import_pd;

use crate::error::{Error, Result, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub darts: [usize; 2],
    pub sign: Sign,
}

impl Edge {
    pub fn new(a: usize, b: usize, sign: Sign) -> Self {
        Edge { darts: [a, b], sign }
    }

    /// The dart at the far end from `dart`.
    pub fn other(&self, dart: usize) -> usize {
        if self.darts[0] == dart {
            self.darts[1]
        } else {
            self.darts[0]
        }
    }
}

/// A validated link diagram on a closed surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddingScheme {
    over: Vec<u8>,
    edges: Vec<Edge>,
    edge_of_dart: Vec<usize>,
}

pub fn crossing_of(dart: usize) -> usize {
    dart / 4
}

pub fn position_of(dart: usize) -> usize {
    dart % 4
}

/// The dart on the same strand at the same crossing.
pub fn through_partner(dart: usize) -> usize {
    (dart & !3) | ((dart + 2) & 3)
}

/// The next dart in rotation order at the same crossing.
pub fn rotation_next(dart: usize) -> usize {
    (dart & !3) | ((dart + 1) & 3)
}

pub fn rotation_prev(dart: usize) -> usize {
    (dart & !3) | ((dart + 3) & 3)
}

impl EmbeddingScheme {
    /// Checks the raw data and builds a scheme. `over` has one 0/1 flag per
    /// crossing.
    pub fn new(over: Vec<u8>, edges: Vec<Edge>) -> Result<Self> {
        let raw = RawDiagram {
            crossings: over
                .iter()
                .enumerate()
                .map(|(i, &o)| RawCrossing {
                    rotation: (0..4).map(|k| (4 * i + k) as i64).collect(),
                    over: o as i64,
                })
                .collect(),
            edges: edges
                .iter()
                .map(|e| RawEdge {
                    darts: vec![e.darts[0] as i64, e.darts[1] as i64],
                    sign: e.sign.as_int(),
                })
                .collect(),
        };
        validate(&raw)
    }

    pub fn crossing_count(&self) -> usize {
        self.over.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        4 * self.over.len()
    }

    /// Rotation of crossing `i`: always `[4i, 4i+1, 4i+2, 4i+3]`.
    pub fn rotation(&self, i: usize) -> [usize; 4] {
        [4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3]
    }

    /// 0 when positions `{0, 2}` form the over-strand, 1 for `{1, 3}`.
    pub fn over_pair(&self, i: usize) -> u8 {
        self.over[i]
    }

    pub fn over_pairs(&self) -> &[u8] {
        &self.over
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_of(&self, dart: usize) -> usize {
        self.edge_of_dart[dart]
    }

    /// The dart joined to `dart` by its edge.
    pub fn opposite_end(&self, dart: usize) -> usize {
        self.edges[self.edge_of_dart[dart]].other(dart)
    }

    pub fn sign_of_dart(&self, dart: usize) -> Sign {
        self.edges[self.edge_of_dart[dart]].sign
    }

    /// Same shadow with the given over flags. The flags must be 0/1 and one
    /// per crossing.
    pub fn with_over_pairs(&self, over: Vec<u8>) -> Result<Self> {
        if over.len() != self.over.len() {
            return Err(Error::DimensionMismatch {
                expected: self.over.len(),
                found: over.len(),
            });
        }
        if let Some((i, &v)) = over.iter().enumerate().find(|(_, &v)| v > 1) {
            return Err(Error::Invalid(vec![Violation::BadOverFlag {
                crossing: i,
                value: v as i64,
            }]));
        }
        Ok(EmbeddingScheme {
            over,
            edges: self.edges.clone(),
            edge_of_dart: self.edge_of_dart.clone(),
        })
    }

    pub(crate) fn toggle_over(&mut self, i: usize) {
        self.over[i] ^= 1;
    }

    /// True when both diagrams have identical crossings and edges, ignoring
    /// over flags.
    pub fn same_shadow(&self, other: &EmbeddingScheme) -> bool {
        self.over.len() == other.over.len() && self.edges == other.edges
    }

    pub fn to_raw(&self) -> RawDiagram {
        RawDiagram {
            crossings: (0..self.crossing_count())
                .map(|i| RawCrossing {
                    rotation: self.rotation(i).iter().map(|&d| d as i64).collect(),
                    over: self.over[i] as i64,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge {
                    darts: vec![e.darts[0] as i64, e.darts[1] as i64],
                    sign: e.sign.as_int(),
                })
                .collect(),
        }
    }

    /// Crossing endpoints of each edge (equal for a loop).
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e].darts;
        (crossing_of(a), crossing_of(b))
    }
}

/// Checks every invariant of a raw diagram and reports all violations found.
pub fn validate(raw: &RawDiagram) -> Result<EmbeddingScheme> {
    let mut violations = Vec::new();
    let c = raw.crossings.len();
    if c == 0 {
        violations.push(Violation::NoCrossings);
    }
    let mut over = Vec::with_capacity(c);
    for (i, x) in raw.crossings.iter().enumerate() {
        if x.rotation.len() != 4 {
            violations.push(Violation::RotationLength {
                crossing: i,
                len: x.rotation.len(),
            });
        } else if x
            .rotation
            .iter()
            .enumerate()
            .any(|(k, &d)| d != (4 * i + k) as i64)
        {
            violations.push(Violation::RotationDarts { crossing: i });
        }
        match x.over {
            0 | 1 => over.push(x.over as u8),
            v => {
                violations.push(Violation::BadOverFlag {
                    crossing: i,
                    value: v,
                });
                over.push(0);
            }
        }
    }

    let darts = 4 * c;
    let mut edge_of_dart = vec![usize::MAX; darts];
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (ei, e) in raw.edges.iter().enumerate() {
        let sign = Sign::from_int(e.sign);
        if sign.is_none() {
            violations.push(Violation::BadSign {
                edge: ei,
                value: e.sign,
            });
        }
        if e.darts.len() != 2 {
            violations.push(Violation::EdgeLength {
                edge: ei,
                len: e.darts.len(),
            });
            continue;
        }
        let (a, b) = (e.darts[0], e.darts[1]);
        if a == b {
            violations.push(Violation::SelfPairedDart { edge: ei, dart: a });
            continue;
        }
        let mut ok = true;
        for d in [a, b] {
            if d < 0 || d as usize >= darts {
                violations.push(Violation::DartOutOfRange { edge: ei, dart: d });
                ok = false;
            } else if edge_of_dart[d as usize] != usize::MAX {
                violations.push(Violation::DartReused { edge: ei, dart: d });
                ok = false;
            } else {
                edge_of_dart[d as usize] = ei;
            }
        }
        if ok {
            edges.push(Edge::new(a as usize, b as usize, sign.unwrap_or(Sign::Plus)));
        }
    }
    for (d, &e) in edge_of_dart.iter().enumerate() {
        if e == usize::MAX {
            violations.push(Violation::DartUnused { dart: d });
        }
    }

    if violations.is_empty() {
        if let Some(unreached) = first_unreachable_crossing(c, &edges) {
            violations.push(Violation::Disconnected {
                unreachable_crossing: unreached,
            });
        }
    }

    if violations.is_empty() {
        Ok(EmbeddingScheme {
            over,
            edges,
            edge_of_dart,
        })
    } else {
        Err(Error::Invalid(violations))
    }
}

fn first_unreachable_crossing(c: usize, edges: &[Edge]) -> Option<usize> {
    let mut adj = vec![Vec::new(); c];
    for e in edges {
        let (u, v) = (crossing_of(e.darts[0]), crossing_of(e.darts[1]));
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; c];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.iter().position(|&s| !s)
}

/// One visit of a component to a crossing along a through-pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    /// 0 for positions `{0, 2}`, 1 for `{1, 3}`.
    pub pair: u8,
}

/// A link component: a closed walk through the shadow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Edges in traversal order, starting from the component's lowest edge.
    pub edges: Vec<usize>,
    pub passages: Vec<Passage>,
}

/// Splits the diagram into link components, ordered by their lowest edge.
pub fn components(d: &EmbeddingScheme) -> Vec<Component> {
    let mut used = vec![false; d.edge_count()];
    let mut out = Vec::new();
    for start in 0..d.edge_count() {
        if used[start] {
            continue;
        }
        let start_dart = d.edge(start).darts[0];
        let mut edges = Vec::new();
        let mut passages = Vec::new();
        let mut from = start_dart;
        loop {
            let e = d.edge_of(from);
            used[e] = true;
            edges.push(e);
            let arrive = d.opposite_end(from);
            passages.push(Passage {
                crossing: crossing_of(arrive),
                pair: (position_of(arrive) % 2) as u8,
            });
            from = through_partner(arrive);
            if from == start_dart {
                break;
            }
        }
        out.push(Component { edges, passages });
    }
    out
}

/// Component index of every edge.
pub fn component_of_edges(d: &EmbeddingScheme, comps: &[Component]) -> Vec<usize> {
    let mut out = vec![0; d.edge_count()];
    for (i, c) in comps.iter().enumerate() {
        for &e in &c.edges {
            out[e] = i;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceInfo {
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Number of handles when orientable, of cross-caps otherwise.
    pub genus: u64,
    /// Dimension of the first homology with Z₂ coefficients, `2 − χ`.
    pub h1_dim: usize,
}

impl SurfaceInfo {
    pub fn from_parts(euler_characteristic: i64, orientable: bool) -> Self {
        let h1 = 2 - euler_characteristic;
        assert!(h1 >= 0, "Euler characteristic {euler_characteristic} exceeds 2");
        let genus = if orientable { h1 / 2 } else { h1 } as u64;
        SurfaceInfo {
            euler_characteristic,
            orientable,
            genus,
            h1_dim: h1 as usize,
        }
    }

    pub fn name(&self) -> String {
        match (self.orientable, self.genus) {
            (true, 0) => "sphere".into(),
            (true, 1) => "torus".into(),
            (true, g) => format!("orientable genus {g}"),
            (false, 1) => "projective plane".into(),
            (false, 2) => "Klein bottle".into(),
            (false, g) => format!("nonorientable genus {g}"),
        }
    }
}

pub fn surface_info(d: &EmbeddingScheme) -> Result<SurfaceInfo> {
    let fs = faces(d)?;
    Ok(surface_info_from(d, &fs))
}

pub(crate) fn surface_info_from(d: &EmbeddingScheme, fs: &FaceStructure) -> SurfaceInfo {
    let chi = d.crossing_count() as i64 - d.edge_count() as i64 + fs.region_count() as i64;
    SurfaceInfo::from_parts(chi, fs.orientable())
}
