//! Minimal common extensions and exhaustiveness.
//!
//! `Λ^min(μ,ν)` is computed directly from the factorization calculus. The
//! exhaustiveness decision runs a breadth-first search over residue states:
//! walking a candidate witness `μ` edge by edge from its range, the state
//! tracks, for every `ν` in the tested set, which degree-`(d(ν)∸d(μ))`
//! continuations of `μ` still lead into the cone of `ν`. A state with every
//! residue empty exhibits a witness with `Λ^min(μ,ν) = ∅` for all `ν`; a
//! matched residue (some `ν` is a prefix of `μ`) closes the branch. States
//! live in a finite set, so the search terminates — and unlike a fixed
//! degree-bounded scan it stays sound for graphs with sources, where a
//! witness can sit arbitrarily far beyond the degree of the tested set.

use super::path::{compose, enumerate_paths, factorize};
use super::{Degree, EdgeId, GraphError, KGraph, Path, VertexId};
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

/// All pairs `(α, β)` with `μα = νβ` and `d(μα) = d(μ) ∨ d(ν)`.
pub fn lambda_min(g: &KGraph, mu: &Path, nu: &Path) -> Result<Vec<(Path, Path)>, GraphError> {
    if mu.range() != nu.range() {
        return Err(GraphError::RangeMismatch);
    }
    Ok(common_extensions(g, mu, nu))
}

/// Like [`lambda_min`] but yielding the empty set on a range mismatch;
/// this is the form the operator calculus consumes.
pub(crate) fn common_extensions(g: &KGraph, mu: &Path, nu: &Path) -> Vec<(Path, Path)> {
    if mu.range() != nu.range() {
        return Vec::new();
    }
    let dm = mu.degree(g);
    let dn = nu.degree(g);
    let top = dm.join(&dn);
    let need_alpha = top.checked_sub(&dm).expect("join dominates");
    let dn_clone = dn.clone();
    let mut out = Vec::new();
    for alpha in enumerate_paths(g, mu.source(g), &need_alpha) {
        let z = compose(g, mu, &alpha).expect("alpha extends mu");
        let (front, beta) = factorize(g, &z, &dn_clone).expect("degree fits");
        if front == *nu {
            out.push((alpha, beta));
        }
    }
    out
}

/// Outcome of an exhaustiveness / cover decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverOutcome {
    /// Every path with the tested range meets the set.
    Covers,
    /// A path whose minimal-extension set with every member is empty.
    Witness(Path),
}

/// Report from [`is_exhaustive`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveReport {
    pub exhaustive: bool,
    pub witness: Option<Path>,
}

/// Decide whether the finite set `E ⊆ vΛ` is exhaustive for `v`.
pub fn is_exhaustive(
    g: &KGraph,
    v: VertexId,
    set: &[Path],
) -> Result<ExhaustiveReport, GraphError> {
    for nu in set {
        if nu.range() != v {
            return Err(GraphError::NotInVertexCone {
                path: nu.display(g),
                vertex: String::from(g.vertex_name(v)),
            });
        }
    }
    match cover_search(g, v, set, DEFAULT_STATE_BUDGET)? {
        CoverOutcome::Covers => Ok(ExhaustiveReport { exhaustive: true, witness: None }),
        CoverOutcome::Witness(w) => Ok(ExhaustiveReport { exhaustive: false, witness: Some(w) }),
    }
}

const DEFAULT_STATE_BUDGET: usize = 1 << 20;

/// Residue of one target ν along the candidate witness μ: the set of
/// degree-`remaining` continuations α with `μα ⊒ ν`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Residue {
    remaining: Degree,
    alive: BTreeSet<Vec<EdgeId>>,
}

impl Residue {
    fn matched(&self) -> bool {
        self.remaining.is_zero() && self.alive.contains(&Vec::new())
    }
    fn dead(&self) -> bool {
        self.alive.is_empty()
    }
}

/// BFS over `(vertex, residues)` states. Equivalent formulations: `E` is
/// exhaustive for `v`; the cylinders of `E` cover the boundary-path cylinder
/// of `v`; no witness path exists.
pub(crate) fn cover_search(
    g: &KGraph,
    v: VertexId,
    set: &[Path],
    budget: usize,
) -> Result<CoverOutcome, GraphError> {
    if set.is_empty() {
        // vΛ always contains the identity, which meets nothing.
        return Ok(CoverOutcome::Witness(Path::vertex(v)));
    }

    let init: Vec<Residue> = set
        .iter()
        .map(|nu| Residue {
            remaining: nu.degree(g),
            alive: BTreeSet::from([nu.word().to_vec()]),
        })
        .collect();

    // Parent links for witness reconstruction.
    let mut states: Vec<(VertexId, Vec<Residue>)> = Vec::new();
    let mut parents: Vec<Option<(usize, EdgeId)>> = Vec::new();
    let mut seen: BTreeSet<(VertexId, Vec<Residue>)> = BTreeSet::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    let mut path_cache: BTreeMap<(VertexId, Degree), Vec<Path>> = BTreeMap::new();

    let key0 = (v, init);
    seen.insert(key0.clone());
    states.push(key0);
    parents.push(None);
    queue.push_back(0);

    while let Some(ix) = queue.pop_front() {
        if states.len() > budget {
            return Err(GraphError::SearchBudgetExhausted);
        }
        let (at, residues) = states[ix].clone();

        if residues.iter().all(Residue::dead) {
            // Reconstruct the witness path from the parent chain.
            let mut edges: Vec<EdgeId> = Vec::new();
            let mut cur = ix;
            while let Some((p, e)) = parents[cur] {
                edges.push(e);
                cur = p;
            }
            edges.reverse();
            let mut w = Path::vertex(v);
            for e in edges {
                w = compose(g, &w, &Path::edge(g, e))?;
            }
            return Ok(CoverOutcome::Witness(w));
        }
        if residues.iter().any(Residue::matched) {
            // Branch covered: some ν is a prefix of every extension.
            continue;
        }

        for color in 0..g.rank() {
            for &e in g.edges_into(at, color) {
                let next = step_residues(g, &residues, at, e, color, &mut path_cache);
                let key = (g.edge_source(e), next);
                if seen.insert(key.clone()) {
                    states.push(key);
                    parents.push(Some((ix, e)));
                    queue.push_back(states.len() - 1);
                }
            }
        }
    }
    Ok(CoverOutcome::Covers)
}

/// Advance every residue across the edge extension `μ ↦ μe`.
fn step_residues(
    g: &KGraph,
    residues: &[Residue],
    at: VertexId,
    e: EdgeId,
    color: usize,
    path_cache: &mut BTreeMap<(VertexId, Degree), Vec<Path>>,
) -> Vec<Residue> {
    let src = g.edge_source(e);
    residues
        .iter()
        .map(|r| {
            if r.remaining.0[color] > 0 {
                // ν is still taller in this color: e must agree with the
                // color-c front edge of a surviving continuation.
                let remaining = r.remaining.saturating_sub(&Degree::unit(g.rank(), color));
                let mut alive = BTreeSet::new();
                for word in &r.alive {
                    let p = Path { range: r_range(g, word, at), word: word.clone() };
                    let (front, rest) =
                        factorize(g, &p, &Degree::unit(g.rank(), color)).expect("degree positive");
                    if front.word()[0] == e {
                        alive.insert(rest.word().to_vec());
                    }
                }
                Residue { remaining, alive }
            } else {
                // ν is exhausted in this color: continuations are the
                // degree-`remaining` paths at the new vertex whose pushforward
                // through e lands in the surviving set.
                let remaining = r.remaining.clone();
                let mut alive = BTreeSet::new();
                let candidates = path_cache
                    .entry((src, remaining.clone()))
                    .or_insert_with(|| enumerate_paths(g, src, &remaining))
                    .clone();
                for alpha in candidates {
                    let z = compose(g, &Path::edge(g, e), &alpha).expect("composable");
                    let (front, _) = factorize(g, &z, &remaining).expect("degree fits");
                    if r.alive.contains(&front.word().to_vec()) {
                        alive.insert(alpha.word().to_vec());
                    }
                }
                Residue { remaining, alive }
            }
        })
        .collect()
}

fn r_range(g: &KGraph, word: &[EdgeId], fallback: VertexId) -> VertexId {
    match word.first() {
        Some(e) => g.edge_range(*e),
        None => fallback,
    }
}

/// Direct-definition scan: search for a witness among all `μ ∈ vΛ` with
/// `d(μ) ≤ bound`. Complete only when the bound is large enough; used as a
/// cross-check oracle against the state search.
pub fn witness_scan_bounded(
    g: &KGraph,
    v: VertexId,
    set: &[Path],
    bound: &Degree,
) -> Option<Path> {
    let mut degrees = alloc::vec![Degree::zero(g.rank())];
    for c in 0..g.rank() {
        let mut next = Vec::new();
        for d in &degrees {
            for k in 0..=bound.0[c] {
                let mut d2 = d.clone();
                d2.0[c] = k;
                next.push(d2);
            }
        }
        degrees = next;
    }
    for d in degrees {
        for mu in enumerate_paths(g, v, &d) {
            let meets = set
                .iter()
                .any(|nu| !common_extensions(g, &mu, nu).is_empty());
            if !meets {
                return Some(mu);
            }
        }
    }
    None
}
