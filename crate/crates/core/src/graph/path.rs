//! Morphisms of a k-graph in color-sorted normal form.

use super::{Degree, EdgeId, GraphError, KGraph, VertexId};
use alloc::string::String;
use alloc::vec::Vec;

/// A morphism of the path category.
///
/// `word` lists edges in composition order (the first edge is adjacent to the
/// range) with colors nondecreasing; this normal form is unique by the
/// factorization property, so `==` on paths is morphism equality. A degree-0
/// morphism is the identity at `range` with an empty word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub(crate) range: VertexId,
    pub(crate) word: Vec<EdgeId>,
}

impl Path {
    /// The identity morphism at a vertex.
    pub fn vertex(v: VertexId) -> Path {
        Path { range: v, word: Vec::new() }
    }

    /// A single edge as a path.
    pub fn edge(g: &KGraph, e: EdgeId) -> Path {
        Path { range: g.edge_range(e), word: alloc::vec![e] }
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self, g: &KGraph) -> VertexId {
        match self.word.last() {
            Some(e) => g.edge_source(*e),
            None => self.range,
        }
    }

    pub fn word(&self) -> &[EdgeId] {
        &self.word
    }

    pub fn is_vertex(&self) -> bool {
        self.word.is_empty()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn degree(&self, g: &KGraph) -> Degree {
        let mut d = Degree::zero(g.rank());
        for e in &self.word {
            d.0[g.edge_color(*e)] += 1;
        }
        d
    }

    /// Render as space-separated edge ids, or the vertex id for identities.
    pub fn display(&self, g: &KGraph) -> String {
        if self.word.is_empty() {
            return String::from(g.vertex_name(self.range));
        }
        let names: Vec<&str> = self.word.iter().map(|e| g.edge_name(*e)).collect();
        names.join(" ")
    }

    /// True when `self = prefix · rest` for some `rest`.
    pub fn has_prefix(&self, g: &KGraph, prefix: &Path) -> bool {
        if self.range != prefix.range {
            return false;
        }
        let pd = prefix.degree(g);
        if !pd.leq(&self.degree(g)) {
            return false;
        }
        match factorize(g, self, &pd) {
            Ok((front, _)) => front == *prefix,
            Err(_) => false,
        }
    }
}

/// Compose two paths (`p` then `q`; requires `s(p) = r(q)`), normalizing the
/// concatenated word by bubbling lower-color edges leftward through squares.
pub fn compose(g: &KGraph, p: &Path, q: &Path) -> Result<Path, GraphError> {
    if p.source(g) != q.range {
        return Err(GraphError::NotComposable {
            left_source: String::from(g.vertex_name(p.source(g))),
            right_range: String::from(g.vertex_name(q.range)),
        });
    }
    let mut word = p.word.clone();
    for e in &q.word {
        insert_sorted(g, &mut word, *e);
    }
    Ok(Path { range: p.range, word })
}

/// Append edge `e` to a normal-form word and restore normality. Each swap
/// rewrites an adjacent out-of-order pair through its square, decreasing the
/// number of color inversions by one.
fn insert_sorted(g: &KGraph, word: &mut Vec<EdgeId>, e: EdgeId) {
    word.push(e);
    let mut i = word.len() - 1;
    while i > 0 && g.edge_color(word[i - 1]) > g.edge_color(word[i]) {
        // word[i-1]·word[i] has descending colors: it is the right side of a
        // unique square whose left side restores ascending order.
        let (lo, hi) = g.square_reverse(word[i - 1], word[i]);
        word[i - 1] = lo;
        word[i] = hi;
        i -= 1;
    }
}

/// Remove one edge of 0-based color `c` from the front of the path.
/// The path must have positive degree in that color.
fn peel_color(g: &KGraph, p: &Path, c: usize) -> (EdgeId, Path) {
    let pos = p
        .word
        .iter()
        .position(|e| g.edge_color(*e) == c)
        .expect("peel_color requires positive degree in the color");
    let mut word = p.word.clone();
    // Move the edge to the front. Each hop swaps it with a lower-color
    // neighbor via the forward square; the bystanders keep their colors and
    // relative order, so the remainder stays normal.
    let mut i = pos;
    while i > 0 {
        let (hi, lo) = g.square_forward(word[i - 1], word[i]);
        word[i - 1] = hi;
        word[i] = lo;
        i -= 1;
    }
    let front = word.remove(0);
    (front, Path { range: g.edge_source(front), word })
}

/// Unique factorization `p = front · back` with `degree(front) = n`.
pub fn factorize(g: &KGraph, p: &Path, n: &Degree) -> Result<(Path, Path), GraphError> {
    let d = p.degree(g);
    if !n.leq(&d) {
        return Err(GraphError::DegreeTooLarge { wanted: n.clone(), available: d });
    }
    let mut front = Vec::new();
    let mut rest = p.clone();
    for c in 0..g.rank() {
        for _ in 0..n.0[c] {
            let (e, r) = peel_color(g, &rest, c);
            front.push(e);
            rest = r;
        }
    }
    Ok((Path { range: p.range, word: front }, rest))
}

/// All normal forms in `vΛⁿ`.
pub fn enumerate_paths(g: &KGraph, v: VertexId, n: &Degree) -> Vec<Path> {
    let mut out = Vec::new();
    let mut word: Vec<EdgeId> = Vec::new();
    fn go(
        g: &KGraph,
        at: VertexId,
        n: &Degree,
        color: usize,
        used: u32,
        word: &mut Vec<EdgeId>,
        out: &mut Vec<Path>,
        range: VertexId,
    ) {
        if color == g.rank() {
            out.push(Path { range, word: word.clone() });
            return;
        }
        if used == n.0[color] {
            go(g, at, n, color + 1, 0, word, out, range);
            return;
        }
        for e in g.edges_into(at, color) {
            word.push(*e);
            go(g, g.edge_source(*e), n, color, used + 1, word, out, range);
            word.pop();
        }
    }
    go(g, v, n, 0, 0, &mut word, &mut out, v);
    out
}

/// Parse a space-separated edge word (or a vertex name) into a path.
pub fn parse_path(g: &KGraph, text: &str) -> Result<Path, GraphError> {
    let items: Vec<&str> = text.split_whitespace().collect();
    if items.len() == 1 {
        if let Ok(v) = g.vertex_by_name(items[0]) {
            return Ok(Path::vertex(v));
        }
    }
    let mut path: Option<Path> = None;
    for item in items {
        let e = g.edge_by_name(item)?;
        let ep = Path::edge(g, e);
        path = Some(match path {
            None => ep,
            Some(p) => compose(g, &p, &ep)?,
        });
    }
    path.ok_or_else(|| GraphError::UnknownEdge(String::from(text)))
}
