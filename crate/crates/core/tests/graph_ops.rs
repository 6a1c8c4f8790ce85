//! Path-category operations on the bundled presentations: composition,
//! factorization, enumeration, minimal extensions, exhaustiveness.

use kgraph_core::fixtures;
use kgraph_core::graph::{
    self, compose, enumerate_paths, factorize, is_exhaustive, lambda_min, parse_path,
    witness_scan_bounded, Degree, GraphError, KGraph, Path,
};

fn build(raw: kgraph_core::RawGraph) -> KGraph {
    raw.build().expect("fixture must be a valid k-graph")
}

fn deg(components: &[u32]) -> Degree {
    Degree(components.to_vec())
}

fn path(g: &KGraph, text: &str) -> Path {
    parse_path(g, text).unwrap()
}

#[test]
fn corpus_presentations_validate() {
    for raw in [
        fixtures::lambda2(),
        fixtures::lambda3(),
        fixtures::flip(),
        fixtures::uv_graph(),
        fixtures::eightvertex(),
        fixtures::trivial3(),
        fixtures::commuting22(),
        fixtures::deep_witness(),
    ] {
        let report = raw.validate();
        assert!(report.is_valid(), "expected valid graph, got:\n{report}");
    }
}

#[test]
fn merged_eightvertex_is_not_a_kgraph() {
    // Identifying v9 with v5, as the published picture's labels suggest,
    // breaks the factorization property.
    let mut raw = fixtures::eightvertex();
    raw.vertices.retain(|v| v != "v9");
    for e in &mut raw.edges {
        if e.source == "v9" {
            e.source = "v5".into();
        }
        if e.range == "v9" {
            e.range = "v5".into();
        }
    }
    assert!(!raw.validate().is_valid());
}

#[test]
fn deleted_square_reports_missing_pair() {
    let mut raw = fixtures::lambda2();
    raw.squares.retain(|s| s.left.0 != "f2");
    let report = raw.validate();
    assert!(!report.is_valid());
    let text = format!("{report}");
    assert!(text.contains("no square for composable pair (f2, e)"), "{text}");
}

#[test]
fn flip_square_mutations_break_bijectivity() {
    let base = fixtures::flip();
    for i in 0..base.squares.len() {
        for r0 in ["e1", "e2"] {
            for r1 in ["f1", "f2"] {
                let mut raw = base.clone();
                let right = (r0.to_string(), r1.to_string());
                if raw.squares[i].right == right {
                    continue;
                }
                raw.squares[i].right = right;
                assert!(
                    !raw.validate().is_valid(),
                    "mutated square {i} to ({r0},{r1}) and the table still validated"
                );
            }
        }
    }
}

#[test]
fn associativity_failure_is_detected_with_witness() {
    // Three colors, two edges each. Color pairs (1,2) and (2,3) use the
    // index-flip squares, (1,3) the index-preserving ones; the hexagon then
    // disagrees on mixed triples.
    use kgraph_core::graph::{RawEdge, RawGraph, RawSquare};
    let mut edges = Vec::new();
    for (c, name) in [(1, "a"), (2, "b"), (3, "c")] {
        for i in 1..=2 {
            edges.push(RawEdge {
                id: format!("{name}{i}"),
                color: c,
                source: "v".into(),
                range: "v".into(),
            });
        }
    }
    let mut squares = Vec::new();
    let mut add = |l0: String, l1: String, r0: String, r1: String| {
        squares.push(RawSquare { left: (l0, l1), right: (r0, r1) });
    };
    for i in 1..=2 {
        for j in 1..=2 {
            add(format!("a{i}"), format!("b{j}"), format!("b{i}"), format!("a{j}"));
            add(format!("b{i}"), format!("c{j}"), format!("c{i}"), format!("b{j}"));
            add(format!("a{i}"), format!("c{j}"), format!("c{j}"), format!("a{i}"));
        }
    }
    let raw = RawGraph { rank: 3, vertices: vec!["v".into()], edges, squares };
    let report = raw.validate();
    assert!(!report.is_valid());
    assert!(format!("{report}").contains("associativity fails"), "{report}");
}

#[test]
fn trivial3_mutations_are_rejected() {
    // With one edge per color the only single-square mutations are
    // deletions, which completeness catches.
    let base = fixtures::trivial3();
    for i in 0..base.squares.len() {
        let mut raw = base.clone();
        raw.squares.remove(i);
        let report = raw.validate();
        assert!(!report.is_valid());
        assert!(format!("{report}").contains("no square"));
    }
}

#[test]
fn compose_follows_squares() {
    let g = build(fixtures::lambda3());
    // f1 e = e f2: composing f1 with e normalizes to the word f1 e, whose
    // color-2-first factorization is (e, f2).
    let p = compose(&g, &path(&g, "f1"), &path(&g, "e")).unwrap();
    assert_eq!(p, path(&g, "f1 e"));
    let (front, back) = factorize(&g, &p, &deg(&[0, 1])).unwrap();
    assert_eq!(front, path(&g, "e"));
    assert_eq!(back, path(&g, "f2"));

    // Identity composition.
    let idv = Path::vertex(g.vertex_by_name("v").unwrap());
    assert_eq!(compose(&g, &idv, &path(&g, "f1")).unwrap(), path(&g, "f1"));

    // Flip rule: f1·e2 = e1·f2.
    let fg = build(fixtures::flip());
    let a = compose(&fg, &path(&fg, "f1"), &path(&fg, "e2")).unwrap();
    let b = compose(&fg, &path(&fg, "e1"), &path(&fg, "f2")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn factorize_endpoints() {
    let g = build(fixtures::lambda3());
    let p = path(&g, "f1 f2 e");
    let d = p.degree(&g);
    let (front, back) = factorize(&g, &p, &Degree::zero(2)).unwrap();
    assert!(front.is_vertex());
    assert_eq!(back, p);
    let (front, back) = factorize(&g, &p, &d).unwrap();
    assert_eq!(front, p);
    assert!(back.is_vertex());
    // Degree too large errors.
    assert!(matches!(
        factorize(&g, &p, &deg(&[3, 0])),
        Err(GraphError::DegreeTooLarge { .. })
    ));
}

#[test]
fn enumerate_matches_frozen_counts() {
    let g2 = build(fixtures::lambda2());
    let v = g2.vertex_by_name("v").unwrap();
    // Free color-1 words.
    let blue2 = enumerate_paths(&g2, v, &deg(&[2, 0]));
    let words: Vec<String> = blue2.iter().map(|p| p.display(&g2)).collect();
    assert_eq!(words, vec!["f1 f1", "f1 f2", "f2 f1", "f2 f2"]);
    // Degree zero: the identity alone.
    assert_eq!(enumerate_paths(&g2, v, &Degree::zero(2)), vec![Path::vertex(v)]);
    // Flip graph, degree (1,1): 4 normal forms (frozen from the word-class
    // oracle in the properties suite).
    let fg = build(fixtures::flip());
    let fv = fg.vertex_by_name("v").unwrap();
    assert_eq!(enumerate_paths(&fg, fv, &deg(&[1, 1])).len(), 4);
}

#[test]
fn lambda_min_frozen_cases() {
    let g3 = build(fixtures::lambda3());
    let pairs = lambda_min(&g3, &path(&g3, "f1"), &path(&g3, "e")).unwrap();
    assert_eq!(pairs, vec![(path(&g3, "e"), path(&g3, "f2"))]);

    // Λ^min(μ,μ) = {(s(μ), s(μ))}.
    let mu = path(&g3, "f1 e");
    let pairs = lambda_min(&g3, &mu, &mu).unwrap();
    assert_eq!(pairs.len(), 1);
    assert!(pairs[0].0.is_vertex() && pairs[0].1.is_vertex());

    // Flip: Λ^min(f1, e1) = {(e1,f1), (e2,f2)}.
    let fg = build(fixtures::flip());
    let pairs = lambda_min(&fg, &path(&fg, "f1"), &path(&fg, "e1")).unwrap();
    assert_eq!(
        pairs,
        vec![
            (path(&fg, "e1"), path(&fg, "f1")),
            (path(&fg, "e2"), path(&fg, "f2")),
        ]
    );
    // Distinct same-color edges never meet.
    assert!(lambda_min(&fg, &path(&fg, "f1"), &path(&fg, "f2")).unwrap().is_empty());
    // Range mismatch errors.
    let uv = build(fixtures::uv_graph());
    assert!(matches!(
        lambda_min(&uv, &path(&uv, "f"), &path(&uv, "h")),
        Err(GraphError::RangeMismatch)
    ));
}

#[test]
fn exhaustive_frozen_cases() {
    let g2 = build(fixtures::lambda2());
    let v = g2.vertex_by_name("v").unwrap();
    // {e} is exhaustive for Λ₂.
    let r = is_exhaustive(&g2, v, &[path(&g2, "e")]).unwrap();
    assert!(r.exhaustive);
    // {f1} is not: e never meets it... actually f2 is the witness shape;
    // assert the verdict and validate whatever witness is returned.
    let r = is_exhaustive(&g2, v, &[path(&g2, "f1")]).unwrap();
    assert!(!r.exhaustive);
    let w = r.witness.unwrap();
    assert!(graph::lambda_min(&g2, &w, &path(&g2, "f1")).unwrap().is_empty());
    // The empty set is never exhaustive.
    let r = is_exhaustive(&g2, v, &[]).unwrap();
    assert!(!r.exhaustive);

    // Eight-vertex graph: the published exhaustive sets at v1 and v2.
    let g8 = build(fixtures::eightvertex());
    let v1 = g8.vertex_by_name("v1").unwrap();
    let v2 = g8.vertex_by_name("v2").unwrap();
    for set in [
        vec![path(&g8, "e1"), path(&g8, "e2")],
        vec![path(&g8, "g1"), path(&g8, "g2"), path(&g8, "g3")],
        vec![path(&g8, "e1"), path(&g8, "g3")],
        vec![path(&g8, "e2"), path(&g8, "g1"), path(&g8, "g2")],
    ] {
        assert!(is_exhaustive(&g8, v1, &set).unwrap().exhaustive);
    }
    assert!(is_exhaustive(&g8, v2, &[path(&g8, "g4"), path(&g8, "g5")]).unwrap().exhaustive);
    // {e1} alone is not exhaustive at v1 (g3 never meets it).
    assert!(!is_exhaustive(&g8, v1, &[path(&g8, "e1")]).unwrap().exhaustive);
    // Membership precondition.
    assert!(is_exhaustive(&g8, v2, &[path(&g8, "e1")]).is_err());
}

#[test]
fn deep_witness_defeats_bounded_scan() {
    // On this graph the minimal witness for E = {nu} has degree (2,0),
    // which a scan bounded by d(nu) + (1,1) = (1,2) cannot see.
    let g = build(fixtures::deep_witness());
    let v = g.vertex_by_name("v").unwrap();
    let set = vec![path(&g, "nu")];
    let r = is_exhaustive(&g, v, &set).unwrap();
    assert!(!r.exhaustive);
    let w = r.witness.unwrap();
    assert_eq!(w, path(&g, "f1 f2"));
    // The witness genuinely meets nothing.
    assert!(lambda_min(&g, &w, &set[0]).unwrap().is_empty());
    // The degree-bounded scan misses it.
    assert_eq!(witness_scan_bounded(&g, v, &set, &deg(&[1, 2])), None);
    // A scan with a color-1 bound of 2 finds it.
    assert!(witness_scan_bounded(&g, v, &set, &deg(&[2, 2])).is_some());
}
