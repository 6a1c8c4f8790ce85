//! Small standard graphs used throughout the test suites.
//!
//! These are the same presentations the CLI ships as corpus files; having
//! them as constructors keeps the core tests free of file IO.

use crate::graph::{RawEdge, RawGraph, RawSquare};
use alloc::string::String;
use alloc::vec::Vec;

fn edge(id: &str, color: usize, source: &str, range: &str) -> RawEdge {
    RawEdge {
        id: String::from(id),
        color,
        source: String::from(source),
        range: String::from(range),
    }
}

fn square(l0: &str, l1: &str, r0: &str, r1: &str) -> RawSquare {
    RawSquare {
        left: (String::from(l0), String::from(l1)),
        right: (String::from(r0), String::from(r1)),
    }
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| String::from(*s)).collect()
}

/// One vertex; f1, f2 of color 1 and e of color 2; squares f1 e = e f1,
/// f2 e = e f2.
pub fn lambda2() -> RawGraph {
    RawGraph {
        rank: 2,
        vertices: strings(&["v"]),
        edges: alloc::vec![
            edge("f1", 1, "v", "v"),
            edge("f2", 1, "v", "v"),
            edge("e", 2, "v", "v"),
        ],
        squares: alloc::vec![square("f1", "e", "e", "f1"), square("f2", "e", "e", "f2")],
    }
}

/// Same skeleton as [`lambda2`] with the twisted squares f1 e = e f2,
/// f2 e = e f1.
pub fn lambda3() -> RawGraph {
    RawGraph {
        rank: 2,
        vertices: strings(&["v"]),
        edges: alloc::vec![
            edge("f1", 1, "v", "v"),
            edge("f2", 1, "v", "v"),
            edge("e", 2, "v", "v"),
        ],
        squares: alloc::vec![square("f1", "e", "e", "f2"), square("f2", "e", "e", "f1")],
    }
}

/// Single vertex, two edges per color, squares f_i e_j = e_i f_j.
pub fn flip() -> RawGraph {
    let mut squares = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            squares.push(square(
                &alloc::format!("f{i}"),
                &alloc::format!("e{j}"),
                &alloc::format!("e{i}"),
                &alloc::format!("f{j}"),
            ));
        }
    }
    RawGraph {
        rank: 2,
        vertices: strings(&["v"]),
        edges: alloc::vec![
            edge("f1", 1, "v", "v"),
            edge("f2", 1, "v", "v"),
            edge("e1", 2, "v", "v"),
            edge("e2", 2, "v", "v"),
        ],
        squares,
    }
}

/// Two vertices u, v; loops f at u and h at v of color 2; color-1 edges
/// e, k: u → v and g: v → u; squares k f = h e, e f = h k, g h = f g.
pub fn uv_graph() -> RawGraph {
    RawGraph {
        rank: 2,
        vertices: strings(&["u", "v"]),
        edges: alloc::vec![
            edge("e", 1, "u", "v"),
            edge("k", 1, "u", "v"),
            edge("g", 1, "v", "u"),
            edge("f", 2, "u", "u"),
            edge("h", 2, "v", "v"),
        ],
        squares: alloc::vec![
            square("k", "f", "h", "e"),
            square("e", "f", "h", "k"),
            square("g", "h", "f", "g"),
        ],
    }
}

/// The multi-vertex 2-graph with color-1 edges e1..e5 and color-2 edges
/// g1..g6. The published picture labels two distinct dots `v5`; merged they
/// would violate the factorization property (the bicolored path counts
/// between v3 and v1 disagree), so the second dot is named v9 here.
pub fn eightvertex() -> RawGraph {
    RawGraph {
        rank: 2,
        vertices: strings(&["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"]),
        edges: alloc::vec![
            edge("e1", 1, "v2", "v1"),
            edge("e2", 1, "v8", "v1"),
            edge("e3", 1, "v3", "v5"),
            edge("e4", 1, "v4", "v6"),
            edge("e5", 1, "v7", "v9"),
            edge("g1", 2, "v5", "v1"),
            edge("g2", 2, "v6", "v1"),
            edge("g3", 2, "v9", "v1"),
            edge("g4", 2, "v3", "v2"),
            edge("g5", 2, "v4", "v2"),
            edge("g6", 2, "v7", "v8"),
        ],
        squares: alloc::vec![
            square("e1", "g4", "g1", "e3"),
            square("e1", "g5", "g2", "e4"),
            square("e2", "g6", "g3", "e5"),
        ],
    }
}

/// One vertex, one edge per color in three colors, all squares commuting
/// identically.
pub fn trivial3() -> RawGraph {
    RawGraph {
        rank: 3,
        vertices: strings(&["v"]),
        edges: alloc::vec![
            edge("a", 1, "v", "v"),
            edge("b", 2, "v", "v"),
            edge("c", 3, "v", "v"),
        ],
        squares: alloc::vec![
            square("a", "b", "b", "a"),
            square("a", "c", "c", "a"),
            square("b", "c", "c", "b"),
        ],
    }
}

/// Single vertex, two edges per color, the fully commuting rule
/// f_i e_j = e_j f_i (index-preserving). Aperiodic.
pub fn commuting22() -> RawGraph {
    let mut squares = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            squares.push(square(
                &alloc::format!("f{i}"),
                &alloc::format!("e{j}"),
                &alloc::format!("e{j}"),
                &alloc::format!("f{i}"),
            ));
        }
    }
    RawGraph {
        rank: 2,
        vertices: strings(&["v"]),
        edges: alloc::vec![
            edge("f1", 1, "v", "v"),
            edge("f2", 1, "v", "v"),
            edge("e1", 2, "v", "v"),
            edge("e2", 2, "v", "v"),
        ],
        squares,
    }
}

/// A graph with sources on which degree-bounded exhaustiveness scans are
/// unsound: the witness f1·f2 for E = {nu} has degree (2,0), strictly beyond
/// the (1,2) scan bound derived from d(nu) = (0,1).
pub fn deep_witness() -> RawGraph {
    RawGraph {
        rank: 2,
        vertices: strings(&["v", "u1", "u2", "z", "w1"]),
        edges: alloc::vec![
            edge("f1", 1, "u1", "v"),
            edge("f2", 1, "u2", "u1"),
            edge("g", 1, "w1", "z"),
            edge("nu", 2, "z", "v"),
            edge("h1", 2, "w1", "u1"),
        ],
        squares: alloc::vec![square("f1", "h1", "nu", "g")],
    }
}
