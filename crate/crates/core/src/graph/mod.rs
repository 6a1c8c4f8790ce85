//! Finite k-graphs presented by a colored 1-skeleton plus factorization
//! squares.
//!
//! A presentation is entered as a [`RawGraph`] and promoted to a [`KGraph`]
//! by [`RawGraph::validate`], which checks that the square table really
//! defines a small category with the unique factorization property:
//!
//! * completeness — every composable bicolored pair `(e, f)` with
//!   `color(e) < color(f)` is the left side of exactly one square;
//! * bijectivity — the map from left sides to right sides is a bijection
//!   onto the composable pairs in the opposite color order;
//! * associativity (k ≥ 3) — for every composable tricolored triple the two
//!   reorderings through squares agree.
//!
//! Morphisms are held in color-sorted normal form ([`Path`]); composition
//! bubble-sorts out-of-order color pairs through the square table, and each
//! swap strictly decreases the number of color inversions.

mod minimal;
mod path;

pub use minimal::{is_exhaustive, lambda_min, witness_scan_bounded, CoverOutcome, ExhaustiveReport};
pub(crate) use minimal::{common_extensions, cover_search};
pub use path::{compose, enumerate_paths, factorize, parse_path, Path};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Index of a vertex in its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Index of an edge in its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

/// An element of ℕᵏ: the value of the degree functor on a morphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(pub Vec<u32>);

impl Degree {
    pub fn zero(rank: usize) -> Self {
        Degree(alloc::vec![0; rank])
    }

    pub fn unit(rank: usize, color: usize) -> Self {
        let mut d = Degree::zero(rank);
        d.0[color] += 1;
        d
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn add(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` unless `other ≤ self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Degree(out))
    }

    /// Truncated difference `(self − other)⁺`.
    pub fn saturating_sub(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Componentwise max (`n ∨ m`).
    pub fn join(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise min (`n ∧ m`).
    pub fn meet(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn leq(&self, other: &Degree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Edge data as entered by the user. Colors are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    pub color: usize,
    pub source: String,
    pub range: String,
}

/// A factorization square `e f = f' e'`: the left word has its lower-color
/// edge first, the right word the higher-color edge first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSquare {
    pub left: (String, String),
    pub right: (String, String),
}

/// An unvalidated presentation of a k-graph.
#[derive(Debug, Clone, Default)]
pub struct RawGraph {
    /// Number of colors. Zero means "infer from the largest edge color".
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<RawEdge>,
    pub squares: Vec<RawSquare>,
}

/// One violated condition found by validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    DuplicateVertex(String),
    DuplicateEdge(String),
    DanglingEndpoint { edge: String, vertex: String },
    BadColor { edge: String, color: usize },
    UnknownEdgeInSquare(String),
    MalformedSquare { square: String, reason: String },
    MissingSquare { pair: (String, String) },
    DuplicateLeft { pair: (String, String) },
    NonBijective { right: (String, String), lefts: Vec<(String, String)> },
    AssociativityFailure { triple: (String, String, String), via_low_first: String, via_high_first: String },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::DuplicateVertex(v) => write!(f, "duplicate vertex id `{v}`"),
            ValidationIssue::DuplicateEdge(e) => write!(f, "duplicate edge id `{e}`"),
            ValidationIssue::DanglingEndpoint { edge, vertex } => {
                write!(f, "edge `{edge}` references undeclared vertex `{vertex}`")
            }
            ValidationIssue::BadColor { edge, color } => {
                write!(f, "edge `{edge}` has color {color} outside 1..=rank")
            }
            ValidationIssue::UnknownEdgeInSquare(e) => write!(f, "square references unknown edge `{e}`"),
            ValidationIssue::MalformedSquare { square, reason } => {
                write!(f, "square `{square}` is malformed: {reason}")
            }
            ValidationIssue::MissingSquare { pair } => {
                write!(f, "no square for composable pair ({}, {})", pair.0, pair.1)
            }
            ValidationIssue::DuplicateLeft { pair } => {
                write!(f, "pair ({}, {}) appears as the left side of more than one square", pair.0, pair.1)
            }
            ValidationIssue::NonBijective { right, lefts } => {
                write!(f, "right side ({}, {}) is shared by left sides ", right.0, right.1)?;
                for (i, l) in lefts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "({}, {})", l.0, l.1)?;
                }
                Ok(())
            }
            ValidationIssue::AssociativityFailure { triple, via_low_first, via_high_first } => write!(
                f,
                "associativity fails on triple ({}, {}, {}): reordering gives {} vs {}",
                triple.0, triple.1, triple.2, via_low_first, via_high_first
            ),
        }
    }
}

/// Everything validation found. Empty means the data is a k-graph.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            write!(f, "valid k-graph")
        } else {
            for issue in &self.issues {
                writeln!(f, "{issue}")?;
            }
            Ok(())
        }
    }
}

/// Errors raised by graph operations invoked with incompatible arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    NotComposable { left_source: String, right_range: String },
    DegreeTooLarge { wanted: Degree, available: Degree },
    RangeMismatch,
    NotInVertexCone { path: String, vertex: String },
    SearchBudgetExhausted,
    UnknownVertex(String),
    UnknownEdge(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NotComposable { left_source, right_range } => {
                write!(f, "paths not composable: left source `{left_source}` != right range `{right_range}`")
            }
            GraphError::DegreeTooLarge { wanted, available } => {
                write!(f, "cannot factor degree {wanted} out of a path of degree {available}")
            }
            GraphError::RangeMismatch => write!(f, "paths have different ranges"),
            GraphError::NotInVertexCone { path, vertex } => {
                write!(f, "path `{path}` does not have range `{vertex}`")
            }
            GraphError::SearchBudgetExhausted => write!(f, "state search budget exhausted"),
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            GraphError::UnknownEdge(e) => write!(f, "unknown edge `{e}`"),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct EdgeData {
    pub name: String,
    /// 0-based color.
    pub color: usize,
    pub source: VertexId,
    pub range: VertexId,
}

/// A validated finite k-graph.
#[derive(Debug, Clone)]
pub struct KGraph {
    rank: usize,
    vertex_names: Vec<String>,
    edges: Vec<EdgeData>,
    /// (lower-color edge, higher-color edge) → (higher-color edge, lower-color edge)
    square_fwd: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    square_rev: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    /// edges_in[v][c] = edges of color c with range v (the sets vΛ^{e_c})
    edges_in: Vec<Vec<Vec<EdgeId>>>,
}

impl KGraph {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0 as usize]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0 as usize].name
    }

    /// 0-based color of an edge.
    pub fn edge_color(&self, e: EdgeId) -> usize {
        self.edges[e.0 as usize].color
    }

    pub fn edge_source(&self, e: EdgeId) -> VertexId {
        self.edges[e.0 as usize].source
    }

    pub fn edge_range(&self, e: EdgeId) -> VertexId {
        self.edges[e.0 as usize].range
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertex_names
            .iter()
            .position(|n| n == name)
            .map(|i| VertexId(i as u32))
            .ok_or_else(|| GraphError::UnknownVertex(String::from(name)))
    }

    pub fn edge_by_name(&self, name: &str) -> Result<EdgeId, GraphError> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .map(|i| EdgeId(i as u32))
            .ok_or_else(|| GraphError::UnknownEdge(String::from(name)))
    }

    /// The edge set `vΛ^{e_{c+1}}` (edges of 0-based color `c` with range `v`).
    pub fn edges_into(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.edges_in[v.0 as usize][color]
    }

    /// All edges with range `v`, colors ascending.
    pub fn all_edges_into(&self, v: VertexId) -> Vec<EdgeId> {
        (0..self.rank).flat_map(|c| self.edges_into(v, c).iter().copied()).collect()
    }

    /// Whether every `vΛ^{e_i}` is nonempty (row-finiteness is automatic for
    /// finite graphs, so this is exactly "row-finite with no sources").
    pub fn has_no_sources(&self) -> bool {
        self.vertices().all(|v| (0..self.rank).all(|c| !self.edges_into(v, c).is_empty()))
    }

    pub(crate) fn square_forward(&self, lo: EdgeId, hi: EdgeId) -> (EdgeId, EdgeId) {
        *self
            .square_fwd
            .get(&(lo, hi))
            .expect("validated graph has a complete square table")
    }

    pub(crate) fn square_reverse(&self, hi: EdgeId, lo: EdgeId) -> (EdgeId, EdgeId) {
        *self
            .square_rev
            .get(&(hi, lo))
            .expect("validated graph has a bijective square table")
    }
}

impl RawGraph {
    /// Check the k-graph axioms; list every violation found.
    pub fn validate(&self) -> ValidationReport {
        match self.build_internal() {
            Ok((_, report)) | Err(report) => report,
        }
    }

    /// Validate and, on success, return the graph.
    pub fn build(&self) -> Result<KGraph, ValidationReport> {
        match self.build_internal() {
            Ok((g, _)) => Ok(g),
            Err(report) => Err(report),
        }
    }

    fn build_internal(&self) -> Result<(KGraph, ValidationReport), ValidationReport> {
        let mut issues = Vec::new();

        let rank = if self.rank > 0 {
            self.rank
        } else {
            self.edges.iter().map(|e| e.color).max().unwrap_or(1)
        };

        // Structural layer: ids and endpoints must make sense before any
        // rule checking.
        let mut vertex_ix: BTreeMap<&str, VertexId> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if vertex_ix.insert(v.as_str(), VertexId(i as u32)).is_some() {
                issues.push(ValidationIssue::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_ix: BTreeMap<&str, EdgeId> = BTreeMap::new();
        let mut edges: Vec<EdgeData> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if edge_ix.insert(e.id.as_str(), EdgeId(i as u32)).is_some() {
                issues.push(ValidationIssue::DuplicateEdge(e.id.clone()));
            }
            if e.color == 0 || e.color > rank {
                issues.push(ValidationIssue::BadColor { edge: e.id.clone(), color: e.color });
            }
            let source = match vertex_ix.get(e.source.as_str()) {
                Some(v) => *v,
                None => {
                    issues.push(ValidationIssue::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: e.source.clone(),
                    });
                    VertexId(0)
                }
            };
            let range = match vertex_ix.get(e.range.as_str()) {
                Some(v) => *v,
                None => {
                    issues.push(ValidationIssue::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: e.range.clone(),
                    });
                    VertexId(0)
                }
            };
            edges.push(EdgeData {
                name: e.id.clone(),
                color: e.color.saturating_sub(1),
                source,
                range,
            });
        }
        if !issues.is_empty() {
            return Err(ValidationReport { issues });
        }

        // Square table layer.
        let mut square_fwd: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)> = BTreeMap::new();
        let mut square_rev: BTreeMap<(EdgeId, EdgeId), Vec<(EdgeId, EdgeId)>> = BTreeMap::new();
        for sq in &self.squares {
            let mut lookup = |name: &String| -> Option<EdgeId> {
                match edge_ix.get(name.as_str()) {
                    Some(e) => Some(*e),
                    None => {
                        issues.push(ValidationIssue::UnknownEdgeInSquare(name.clone()));
                        None
                    }
                }
            };
            let (Some(a), Some(b), Some(c), Some(d)) = (
                lookup(&sq.left.0),
                lookup(&sq.left.1),
                lookup(&sq.right.0),
                lookup(&sq.right.1),
            ) else {
                continue;
            };
            let sq_name = alloc::format!(
                "{} {} = {} {}",
                sq.left.0, sq.left.1, sq.right.0, sq.right.1
            );
            let bad = |reason: &str, issues: &mut Vec<ValidationIssue>| {
                issues.push(ValidationIssue::MalformedSquare {
                    square: sq_name.clone(),
                    reason: String::from(reason),
                });
            };
            let (ca, cb, cc, cd) = (
                edges[a.0 as usize].color,
                edges[b.0 as usize].color,
                edges[c.0 as usize].color,
                edges[d.0 as usize].color,
            );
            if ca >= cb {
                bad("left side must have strictly ascending colors", &mut issues);
                continue;
            }
            if (cc, cd) != (cb, ca) {
                bad("right side must carry the same two colors in the opposite order", &mut issues);
                continue;
            }
            if edges[a.0 as usize].source != edges[b.0 as usize].range {
                bad("left side is not composable", &mut issues);
                continue;
            }
            if edges[c.0 as usize].source != edges[d.0 as usize].range {
                bad("right side is not composable", &mut issues);
                continue;
            }
            if edges[a.0 as usize].range != edges[c.0 as usize].range
                || edges[b.0 as usize].source != edges[d.0 as usize].source
            {
                bad("sides do not share range and source", &mut issues);
                continue;
            }
            if square_fwd.insert((a, b), (c, d)).is_some() {
                issues.push(ValidationIssue::DuplicateLeft {
                    pair: (sq.left.0.clone(), sq.left.1.clone()),
                });
            }
            square_rev.entry((c, d)).or_default().push((a, b));
        }

        let name_of = |e: EdgeId| edges[e.0 as usize].name.clone();

        // Completeness: every composable (lo, hi) pair appears as a left side.
        for (i, lo) in edges.iter().enumerate() {
            for (j, hi) in edges.iter().enumerate() {
                if lo.color < hi.color && lo.source == hi.range {
                    let key = (EdgeId(i as u32), EdgeId(j as u32));
                    if !square_fwd.contains_key(&key) {
                        issues.push(ValidationIssue::MissingSquare {
                            pair: (lo.name.clone(), hi.name.clone()),
                        });
                    }
                }
            }
        }

        // Bijectivity: right sides are hit exactly once and every composable
        // (hi, lo) pair is hit.
        for (right, lefts) in &square_rev {
            if lefts.len() > 1 {
                issues.push(ValidationIssue::NonBijective {
                    right: (name_of(right.0), name_of(right.1)),
                    lefts: lefts.iter().map(|(a, b)| (name_of(*a), name_of(*b))).collect(),
                });
            }
        }
        for (i, hi) in edges.iter().enumerate() {
            for (j, lo) in edges.iter().enumerate() {
                if lo.color < hi.color && hi.source == lo.range {
                    let key = (EdgeId(i as u32), EdgeId(j as u32));
                    if !square_rev.contains_key(&key) {
                        issues.push(ValidationIssue::NonBijective {
                            right: (hi.name.clone(), lo.name.clone()),
                            lefts: Vec::new(),
                        });
                    }
                }
            }
        }

        if !issues.is_empty() {
            return Err(ValidationReport { issues });
        }

        let mut edges_in = alloc::vec![alloc::vec![Vec::new(); rank]; self.vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            edges_in[e.range.0 as usize][e.color].push(EdgeId(i as u32));
        }

        let graph = KGraph {
            rank,
            vertex_names: self.vertices.clone(),
            edges,
            square_fwd,
            square_rev: square_rev
                .into_iter()
                .map(|(k, v)| (k, v[0]))
                .collect(),
            edges_in,
        };

        // Associativity: only meaningful once the square table is usable.
        if rank >= 3 {
            graph.check_associativity(&mut issues);
        }

        if issues.is_empty() {
            Ok((graph, ValidationReport::default()))
        } else {
            Err(ValidationReport { issues })
        }
    }
}

impl KGraph {
    /// For every composable triple of pairwise-distinct colors, reorder the
    /// word to descending colors along the two swap routes and compare.
    fn check_associativity(&self, issues: &mut Vec<ValidationIssue>) {
        for (i, a) in self.edges.iter().enumerate() {
            for (j, b) in self.edges.iter().enumerate() {
                if b.range != a.source || b.color <= a.color {
                    continue;
                }
                for (l, c) in self.edges.iter().enumerate() {
                    if c.range != b.source || c.color <= b.color {
                        continue;
                    }
                    // Word a·b·c with colors strictly ascending. Route one:
                    // swap (a,b) first; route two: swap (b,c) first.
                    let (ea, eb, ec) = (EdgeId(i as u32), EdgeId(j as u32), EdgeId(l as u32));
                    let r1 = self.reorder_desc_route(ea, eb, ec, true);
                    let r2 = self.reorder_desc_route(ea, eb, ec, false);
                    if r1 != r2 {
                        let word = |w: &[EdgeId]| {
                            let names: Vec<&str> =
                                w.iter().map(|e| self.edge_name(*e)).collect();
                            names.join(" ")
                        };
                        issues.push(ValidationIssue::AssociativityFailure {
                            triple: (a.name.clone(), b.name.clone(), c.name.clone()),
                            via_low_first: word(&r1),
                            via_high_first: word(&r2),
                        });
                    }
                }
            }
        }
    }

    /// Reorder the ascending word a·b·c to descending color order, starting
    /// with the (a,b) swap or the (b,c) swap.
    fn reorder_desc_route(&self, a: EdgeId, b: EdgeId, c: EdgeId, ab_first: bool) -> [EdgeId; 3] {
        if ab_first {
            let (b1, a1) = self.square_forward(a, b);
            let (c1, a2) = self.square_forward(a1, c);
            let (c2, b2) = self.square_forward(b1, c1);
            [c2, b2, a2]
        } else {
            let (c1, b1) = self.square_forward(b, c);
            let (c2, a1) = self.square_forward(a, c1);
            let (b2, a2) = self.square_forward(a1, b1);
            [c2, b2, a2]
        }
    }
}

/// Convenience free function matching the operation name in the interface:
/// validate a skeleton-plus-squares presentation.
pub fn validate_kgraph(raw: &RawGraph) -> ValidationReport {
    raw.validate()
}
