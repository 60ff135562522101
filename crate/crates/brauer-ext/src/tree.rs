//! Brauer trees: finite trees with a cyclic ordering of the edges around
//! each vertex and at most one exceptional vertex carrying a multiplicity
//! m >= 2. Edges are labelled 1..=e and stand for the simple modules of the
//! associated algebra. Cyclic orders are compared up to rotation only;
//! mirror images are genuinely different trees.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// A vertex together with the counterclockwise cyclic order of its incident
/// edge labels. The order is stored rotated so its smallest label is first,
/// which makes rotation-equal inputs compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    id: usize,
    order: Vec<usize>,
}

impl Vertex {
    pub fn id(&self) -> usize {
        self.id
    }

    /// Cyclic order of incident edges, canonically rotated.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn degree(&self) -> usize {
        self.order.len()
    }

    /// Next edge counterclockwise after `edge` around this vertex.
    pub fn successor(&self, edge: usize) -> usize {
        let pos = self
            .order
            .iter()
            .position(|&x| x == edge)
            .expect("edge not incident to vertex");
        self.order[(pos + 1) % self.order.len()]
    }
}

fn rotate_min_first(mut order: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = order.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i) {
        order.rotate_left(pos);
    }
    order
}

/// A structural problem found while validating tree data. Reported as data
/// so callers can show all problems at once instead of dying on the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoEdges,
    WrongVertexCount { vertices: usize, edges: usize },
    DuplicateVertexId { id: usize },
    VertexIdOutOfRange { id: usize, max: usize },
    EdgeLabelOutOfRange { vertex: usize, label: usize, edges: usize },
    RepeatedLabelAtVertex { vertex: usize, label: usize },
    EdgeIncidenceCount { label: usize, count: usize },
    IsolatedVertex { vertex: usize },
    NotConnected,
    ZeroMultiplicity { vertex: usize },
    MultipleExceptionalVertices { vertices: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoEdges => write!(f, "tree must have at least one edge"),
            Violation::WrongVertexCount { vertices, edges } => write!(
                f,
                "a tree with {edges} edges needs {} vertices, found {vertices}",
                edges + 1
            ),
            Violation::DuplicateVertexId { id } => write!(f, "vertex id {id} appears twice"),
            Violation::VertexIdOutOfRange { id, max } => {
                write!(f, "vertex id {id} out of range 0..={max}")
            }
            Violation::EdgeLabelOutOfRange { vertex, label, edges } => write!(
                f,
                "vertex {vertex} lists edge {label}, outside 1..={edges}"
            ),
            Violation::RepeatedLabelAtVertex { vertex, label } => {
                write!(f, "vertex {vertex} lists edge {label} more than once")
            }
            Violation::EdgeIncidenceCount { label, count } => write!(
                f,
                "edge {label} must have exactly 2 endpoints, found {count}"
            ),
            Violation::IsolatedVertex { vertex } => write!(f, "vertex {vertex} has no edges"),
            Violation::NotConnected => write!(f, "graph is not connected"),
            Violation::ZeroMultiplicity { vertex } => {
                write!(f, "vertex {vertex} has multiplicity 0")
            }
            Violation::MultipleExceptionalVertices { vertices } => write!(
                f,
                "at most one vertex may have multiplicity > 1, found {vertices:?}"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("invalid tree: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("malformed tree JSON: {0}")]
    Json(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(Violation::to_string).collect::<Vec<_>>().join("; ")
}

/// A validated Brauer tree. Edge labels are 1..=e. Vertices are indexed by
/// id 0..=e. Multiplicity 1 is normalized away: `exceptional` is only set
/// for m >= 2, so two descriptions of the same plain tree compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerTree {
    edges: usize,
    vertices: Vec<Vertex>,
    exceptional: Option<(usize, u64)>,
}

impl BrauerTree {
    /// Build from raw parts: (vertex id, cyclic order, multiplicity).
    pub fn new(edges: usize, parts: Vec<(usize, Vec<usize>, u64)>) -> Result<Self, TreeError> {
        let violations = validate(edges, &parts);
        if !violations.is_empty() {
            return Err(TreeError::Invalid(violations));
        }
        let mut vertices: Vec<Vertex> = parts
            .iter()
            .map(|(id, order, _)| Vertex { id: *id, order: rotate_min_first(order.clone()) })
            .collect();
        vertices.sort_by_key(|v| v.id);
        let exceptional = parts
            .iter()
            .find(|&&(_, _, m)| m > 1)
            .map(|&(id, _, m)| (id, m));
        Ok(BrauerTree { edges, vertices, exceptional })
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &Vertex {
        &self.vertices[id]
    }

    /// The exceptional vertex and its multiplicity, if any (m >= 2).
    pub fn exceptional(&self) -> Option<(usize, u64)> {
        self.exceptional
    }

    /// Multiplicity of a vertex (1 unless it is the exceptional one).
    pub fn multiplicity(&self, vertex: usize) -> u64 {
        match self.exceptional {
            Some((v, m)) if v == vertex => m,
            _ => 1,
        }
    }

    /// The two endpoints of an edge, smaller vertex id first.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        assert!(edge >= 1 && edge <= self.edges, "edge label out of range");
        let mut found = self
            .vertices
            .iter()
            .filter(|v| v.order.contains(&edge))
            .map(Vertex::id);
        let a = found.next().expect("validated tree");
        let b = found.next().expect("validated tree");
        (a.min(b), a.max(b))
    }

    /// Parse the JSON interchange format:
    /// `{"edges": 2, "vertices": [{"id": 0, "order": [1], "multiplicity": 3}, ...]}`
    /// where `multiplicity` defaults to 1.
    pub fn from_json(text: &str) -> Result<Self, TreeError> {
        let file: TreeFile =
            serde_json::from_str(text).map_err(|e| TreeError::Json(e.to_string()))?;
        let parts = file
            .vertices
            .into_iter()
            .map(|v| (v.id, v.order, v.multiplicity))
            .collect();
        BrauerTree::new(file.edges, parts)
    }

    /// Serialize to the JSON interchange format. Output is canonical: one
    /// vertex per id in ascending order, orders rotated to smallest label
    /// first, multiplicity omitted when 1.
    pub fn to_json(&self) -> String {
        let file = TreeFile {
            edges: self.edges,
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexFile {
                    id: v.id,
                    order: v.order.clone(),
                    multiplicity: self.multiplicity(v.id),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeFile {
    edges: usize,
    vertices: Vec<VertexFile>,
}

fn one() -> u64 {
    1
}

fn is_one(m: &u64) -> bool {
    *m == 1
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexFile {
    id: usize,
    order: Vec<usize>,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    multiplicity: u64,
}

/// Collect every structural violation in the raw data.
pub fn validate(edges: usize, parts: &[(usize, Vec<usize>, u64)]) -> Vec<Violation> {
    let mut out = Vec::new();
    if edges == 0 {
        out.push(Violation::NoEdges);
        return out;
    }
    if parts.len() != edges + 1 {
        out.push(Violation::WrongVertexCount { vertices: parts.len(), edges });
    }

    let mut seen_ids = vec![false; parts.len().max(edges + 1)];
    for &(id, _, _) in parts {
        if id > edges {
            out.push(Violation::VertexIdOutOfRange { id, max: edges });
        } else if seen_ids[id] {
            out.push(Violation::DuplicateVertexId { id });
        } else {
            seen_ids[id] = true;
        }
    }

    let mut incidence = vec![0usize; edges + 1];
    for (id, order, _) in parts {
        if order.is_empty() {
            out.push(Violation::IsolatedVertex { vertex: *id });
        }
        let mut local = vec![false; edges + 1];
        for &label in order {
            if label == 0 || label > edges {
                out.push(Violation::EdgeLabelOutOfRange { vertex: *id, label, edges });
            } else if local[label] {
                out.push(Violation::RepeatedLabelAtVertex { vertex: *id, label });
            } else {
                local[label] = true;
                incidence[label] += 1;
            }
        }
    }
    for (label, &count) in incidence.iter().enumerate().skip(1) {
        if count != 2 {
            out.push(Violation::EdgeIncidenceCount { label, count });
        }
    }

    for &(id, _, m) in parts {
        if m == 0 {
            out.push(Violation::ZeroMultiplicity { vertex: id });
        }
    }
    let exceptional: Vec<usize> =
        parts.iter().filter(|&&(_, _, m)| m > 1).map(|&(id, _, _)| id).collect();
    if exceptional.len() > 1 {
        out.push(Violation::MultipleExceptionalVertices { vertices: exceptional });
    }

    // Connectivity, only meaningful once the incidence structure is sound.
    if out.is_empty() {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
        let mut touch: Vec<Vec<usize>> = vec![Vec::new(); edges + 1];
        for (id, order, _) in parts {
            for &label in order {
                touch[label].push(*id);
            }
        }
        for ends in touch.iter().skip(1) {
            adj[ends[0]].push(ends[1]);
            adj[ends[1]].push(ends[0]);
        }
        let mut seen = vec![false; parts.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            out.push(Violation::NotConnected);
        }
    }
    out
}

/// Position of the exceptional vertex on a line preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinePosition {
    /// No exceptional vertex (equivalently m = 1).
    Plain,
    /// At the end of the line, adjacent to edge 1.
    Outer,
    /// Between edges a and a+1 (1 <= a < e).
    Inner(usize),
}

/// Ready-made tree shapes. Star and line presets use canonical labels:
/// stars list edges 1..e counterclockwise around the center, lines list
/// edges 1..e along the path. The group presets (sz_*, ree_*) use the edge
/// numbering of their published Ext tables, see `tables`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreePreset {
    /// e edges around an exceptional center.
    StarCentral { e: usize, m: u64 },
    /// e edges around a plain center; exceptional leaf at edge 1.
    StarOuter { e: usize, m: u64 },
    /// Path of e edges, exceptional vertex in the middle (between edges
    /// ceil(e/2) and ceil(e/2)+1).
    LineCentral { e: usize, m: u64 },
    /// Path of e edges, exceptional vertex at the end next to edge 1.
    LineOuter { e: usize, m: u64 },
    /// Path of e edges, exceptional vertex between edges a and a+1.
    LineInner { e: usize, m: u64, a: usize },
    /// Sz(q), r | q-1: two edges, exceptional vertex in the middle.
    SzQm1 { m: u64 },
    /// Sz(q), r | q-s+1: path k(1)-V(3) into an exceptional vertex that also
    /// carries leaves U(2) and W(4), cyclic order (V, U, W).
    SzQmsp1 { m: u64 },
    /// Sz(q), r | q+s+1: 4-star, center order (V, W, k, U) = (3, 4, 1, 2),
    /// exceptional leaf at the far end of V(3).
    SzQpsp1 { m: u64 },
    /// Ree(q), r | q-1: same shape as SzQm1 (each of the two blocks).
    ReeQm1 { m: u64 },
    /// Ree(q), r | q+1, principal block: leaf edge 1 into a 4-valent vertex
    /// with order (2, 3, 1, 4); edge 2 continues to the exceptional vertex
    /// with order (2, 6, 5).
    ReeQp1Principal { m: u64 },
    /// Ree(q), r | q+1, the two-simple blocks: path T1(1)-T2(2) with the
    /// exceptional vertex at the far end of T2.
    ReeQp1Aux { m: u64 },
    /// Ree(q), r | q+s+1: 6-star, center order (1, 6, 5, 4, 3, 2),
    /// exceptional leaf at the far end of edge 1.
    ReeQpsp1 { m: u64 },
    /// Ree(q), r | q-s+1: leaf edge 1 into a vertex with order (1, 2); edge 2
    /// continues to the exceptional vertex carrying leaves 3..6.
    /// `reversed` flips that vertex's cyclic order (2,3,4,5,6) -> (2,6,5,4,3);
    /// the two orientations are mirror images and genuinely differ.
    ReeQmsp1 { m: u64, reversed: bool },
    /// PSU3(q): 3-star with exceptional center.
    Psu3Star3 { m: u64 },
    /// PSU3(q): path of e edges, exceptional position as given.
    Psu3Line { e: usize, m: u64, position: LinePosition },
    /// One edge. The algebra is k[x]/x^(m+1).
    SingleEdge { m: u64 },
}

#[derive(Debug, Error)]
pub enum PresetError {
    #[error("preset needs e >= {min}, got {e}")]
    EdgeCountTooSmall { e: usize, min: usize },
    #[error("inner position must satisfy 1 <= a < e, got a={a}, e={e}")]
    BadInnerPosition { a: usize, e: usize },
    #[error("multiplicity must be >= 1, got 0")]
    ZeroMultiplicity,
    #[error("unknown preset name `{0}`")]
    UnknownName(String),
    #[error("preset `{name}` requires `{flag}`")]
    MissingParameter { name: String, flag: String },
}

/// Path of e edges: vertex k sits between edges k and k+1.
fn line_parts(e: usize) -> Vec<(usize, Vec<usize>, u64)> {
    let mut parts = vec![(0, vec![1], 1)];
    for k in 1..e {
        parts.push((k, vec![k, k + 1], 1));
    }
    parts.push((e, vec![e], 1));
    parts
}

fn star_parts(e: usize, center_order: Vec<usize>) -> Vec<(usize, Vec<usize>, u64)> {
    let mut parts = vec![(0, center_order, 1)];
    for i in 1..=e {
        parts.push((i, vec![i], 1));
    }
    parts
}

impl TreePreset {
    pub fn instantiate(&self) -> Result<BrauerTree, PresetError> {
        let tree = |edges, parts: Vec<(usize, Vec<usize>, u64)>| {
            BrauerTree::new(edges, parts).expect("preset trees are valid by construction")
        };
        let check_m = |m: u64| if m == 0 { Err(PresetError::ZeroMultiplicity) } else { Ok(()) };
        let set_mult = |parts: &mut Vec<(usize, Vec<usize>, u64)>, id: usize, m: u64| {
            parts.iter_mut().find(|p| p.0 == id).expect("vertex exists").2 = m;
        };
        match *self {
            TreePreset::StarCentral { e, m } => {
                check_m(m)?;
                if e < 1 {
                    return Err(PresetError::EdgeCountTooSmall { e, min: 1 });
                }
                let mut parts = star_parts(e, (1..=e).collect());
                set_mult(&mut parts, 0, m);
                Ok(tree(e, parts))
            }
            TreePreset::StarOuter { e, m } => {
                check_m(m)?;
                if e < 2 {
                    return Err(PresetError::EdgeCountTooSmall { e, min: 2 });
                }
                let mut parts = star_parts(e, (1..=e).collect());
                set_mult(&mut parts, 1, m);
                Ok(tree(e, parts))
            }
            TreePreset::LineCentral { e, m } => {
                check_m(m)?;
                if e < 2 {
                    return Err(PresetError::EdgeCountTooSmall { e, min: 2 });
                }
                let mut parts = line_parts(e);
                set_mult(&mut parts, e.div_ceil(2), m);
                Ok(tree(e, parts))
            }
            TreePreset::LineOuter { e, m } => {
                check_m(m)?;
                if e < 2 {
                    return Err(PresetError::EdgeCountTooSmall { e, min: 2 });
                }
                let mut parts = line_parts(e);
                set_mult(&mut parts, 0, m);
                Ok(tree(e, parts))
            }
            TreePreset::LineInner { e, m, a } => {
                check_m(m)?;
                if e < 2 {
                    return Err(PresetError::EdgeCountTooSmall { e, min: 2 });
                }
                if a == 0 || a >= e {
                    return Err(PresetError::BadInnerPosition { a, e });
                }
                let mut parts = line_parts(e);
                set_mult(&mut parts, a, m);
                Ok(tree(e, parts))
            }
            TreePreset::SzQm1 { m } | TreePreset::ReeQm1 { m } => {
                TreePreset::LineCentral { e: 2, m }.instantiate()
            }
            TreePreset::SzQmsp1 { m } => {
                check_m(m)?;
                let parts = vec![
                    (0, vec![1], 1),
                    (1, vec![1, 3], 1),
                    (2, vec![3, 2, 4], m),
                    (3, vec![2], 1),
                    (4, vec![4], 1),
                ];
                Ok(tree(4, parts))
            }
            TreePreset::SzQpsp1 { m } => {
                check_m(m)?;
                let mut parts = star_parts(4, vec![3, 4, 1, 2]);
                set_mult(&mut parts, 3, m);
                Ok(tree(4, parts))
            }
            TreePreset::ReeQp1Principal { m } => {
                check_m(m)?;
                let parts = vec![
                    (0, vec![1], 1),
                    (1, vec![2, 3, 1, 4], 1),
                    (2, vec![2, 6, 5], m),
                    (3, vec![3], 1),
                    (4, vec![4], 1),
                    (5, vec![5], 1),
                    (6, vec![6], 1),
                ];
                Ok(tree(6, parts))
            }
            TreePreset::ReeQp1Aux { m } => {
                check_m(m)?;
                let parts = vec![(0, vec![1], 1), (1, vec![1, 2], 1), (2, vec![2], m)];
                Ok(tree(2, parts))
            }
            TreePreset::ReeQpsp1 { m } => {
                check_m(m)?;
                let mut parts = star_parts(6, vec![1, 6, 5, 4, 3, 2]);
                set_mult(&mut parts, 1, m);
                Ok(tree(6, parts))
            }
            TreePreset::ReeQmsp1 { m, reversed } => {
                check_m(m)?;
                let hub = if reversed { vec![2, 6, 5, 4, 3] } else { vec![2, 3, 4, 5, 6] };
                let parts = vec![
                    (0, vec![1], 1),
                    (1, vec![1, 2], 1),
                    (2, hub, m),
                    (3, vec![3], 1),
                    (4, vec![4], 1),
                    (5, vec![5], 1),
                    (6, vec![6], 1),
                ];
                Ok(tree(6, parts))
            }
            TreePreset::Psu3Star3 { m } => TreePreset::StarCentral { e: 3, m }.instantiate(),
            TreePreset::Psu3Line { e, m, position } => match position {
                LinePosition::Plain => {
                    check_m(m)?;
                    if e < 2 {
                        return Err(PresetError::EdgeCountTooSmall { e, min: 2 });
                    }
                    Ok(tree(e, line_parts(e)))
                }
                LinePosition::Outer => TreePreset::LineOuter { e, m }.instantiate(),
                LinePosition::Inner(a) => TreePreset::LineInner { e, m, a }.instantiate(),
            },
            TreePreset::SingleEdge { m } => {
                check_m(m)?;
                Ok(tree(1, vec![(0, vec![1], 1), (1, vec![1], m)]))
            }
        }
    }

    /// Resolve a preset from its command-line name plus whichever of the
    /// optional parameters that name needs; missing ones are reported with
    /// the flag that would supply them.
    pub fn from_name(
        name: &str,
        e: Option<usize>,
        m: Option<u64>,
        a: Option<usize>,
        position: Option<LinePosition>,
        reversed: bool,
    ) -> Result<TreePreset, PresetError> {
        let missing = |flag: &str| PresetError::MissingParameter {
            name: name.to_string(),
            flag: flag.to_string(),
        };
        let need_e = e.ok_or_else(|| missing("--e"));
        let need_m = m.ok_or_else(|| missing("--m"));
        let need_a = a.ok_or_else(|| missing("--a"));
        Ok(match name {
            "star_central" => TreePreset::StarCentral { e: need_e?, m: need_m? },
            "star_outer" => TreePreset::StarOuter { e: need_e?, m: need_m? },
            "line_central" => TreePreset::LineCentral { e: need_e?, m: need_m? },
            "line_outer" => TreePreset::LineOuter { e: need_e?, m: need_m? },
            "line_inner" => TreePreset::LineInner { e: need_e?, m: need_m?, a: need_a? },
            "sz_qm1" => TreePreset::SzQm1 { m: need_m? },
            "sz_qmsp1" => TreePreset::SzQmsp1 { m: need_m? },
            "sz_qpsp1" => TreePreset::SzQpsp1 { m: need_m? },
            "ree_qm1" => TreePreset::ReeQm1 { m: need_m? },
            "ree_qp1_principal" => TreePreset::ReeQp1Principal { m: need_m? },
            "ree_qp1_aux" => TreePreset::ReeQp1Aux { m: need_m? },
            "ree_qpsp1" => TreePreset::ReeQpsp1 { m: need_m? },
            "ree_qmsp1" => TreePreset::ReeQmsp1 { m: need_m?, reversed },
            "psu3_star3" => TreePreset::Psu3Star3 { m: need_m? },
            "psu3_line" => TreePreset::Psu3Line {
                e: need_e?,
                m: need_m?,
                position: position.ok_or_else(|| missing("--position"))?,
            },
            "single_edge" => TreePreset::SingleEdge { m: need_m? },
            other => return Err(PresetError::UnknownName(other.to_string())),
        })
    }
}
