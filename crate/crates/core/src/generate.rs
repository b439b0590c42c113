//! Exhaustive and random graph generators.
//!
//! Isomorphism classes are found by brute force over vertex permutations,
//! which is fine at the sizes these are meant for.

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted for undirected class enumeration.
pub const MAX_SIMPLE_UNDIRECTED: usize = 6;
/// Largest vertex count accepted for directed class enumeration.
pub const MAX_SIMPLE_DIRECTED: usize = 4;

fn pair_list(n: usize, directed: bool, loops: bool) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let keep = if u == v {
                loops
            } else {
                directed || u < v
            };
            if keep {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

fn relabel(arcs: &[(usize, usize)], perm: &[usize], directed: bool) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = arcs
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            if directed || a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    out.sort_unstable();
    out
}

fn is_canonical(arcs: &[(usize, usize)], perms: &[Vec<usize>], directed: bool) -> bool {
    perms.iter().all(|p| relabel(arcs, p, directed).as_slice() >= arcs)
}

fn build(prefix: &str, directed: bool, n: usize, arcs: &[(usize, usize)], serial: usize) -> Graph {
    Graph::from_index_edges(format!("{prefix}{n}#{serial}"), directed, n, arcs)
}

/// One representative of every isomorphism class of loopless graphs on `n`
/// vertices without parallel edges (antiparallel arcs allowed when directed),
/// ordered by edge count and then by edge list.
pub fn simple_graphs(n: usize, directed: bool) -> Result<Vec<Graph>> {
    let bound = if directed {
        MAX_SIMPLE_DIRECTED
    } else {
        MAX_SIMPLE_UNDIRECTED
    };
    if n > bound {
        return Err(Error::Budget(format!(
            "class enumeration is limited to {bound} vertices for {} graphs",
            if directed { "directed" } else { "undirected" }
        )));
    }
    let pairs = pair_list(n, directed, false);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut out = Vec::new();
    for m in 0..=pairs.len() {
        for arcs in pairs.iter().copied().combinations(m) {
            if is_canonical(&arcs, &perms, directed) {
                out.push(build(if directed { "digraph" } else { "graph" }, directed, n, &arcs, out.len()));
            }
        }
    }
    Ok(out)
}

/// Isomorphism classes of directed multigraphs on `n` vertices with at most
/// `max_edges` edges; loops allowed when `loops` is set.
pub fn multigraphs(n: usize, max_edges: usize, loops: bool) -> Result<Vec<Graph>> {
    if n > MAX_SIMPLE_DIRECTED + 1 {
        return Err(Error::Budget(format!("multigraph enumeration is limited to {} vertices", MAX_SIMPLE_DIRECTED + 1)));
    }
    let pairs = pair_list(n, true, loops);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut out = Vec::new();
    for m in 0..=max_edges {
        for arcs in pairs.iter().copied().combinations_with_replacement(m) {
            if is_canonical(&arcs, &perms, true) {
                out.push(build("multi", true, n, &arcs, out.len()));
            }
        }
    }
    Ok(out)
}

/// `G(n, p)` on vertices `0..n`.
pub fn random_graph(n: usize, p: f64, directed: bool, rng: &mut impl Rng, name: impl Into<String>) -> Graph {
    let mut arcs = Vec::new();
    for (u, v) in pair_list(n, directed, false) {
        if rng.gen_bool(p.clamp(0.0, 1.0)) {
            arcs.push((u, v));
        }
    }
    Graph::from_index_edges(name, directed, n, &arcs)
}

/// Brute-force isomorphism test on edge multisets (directedness must agree).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.is_directed() != b.is_directed()
        || a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
    {
        return false;
    }
    let directed = a.is_directed();
    let norm = |g: &Graph| -> Vec<(usize, usize)> {
        let arcs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
        relabel(&arcs, &(0..g.vertex_count()).collect::<Vec<_>>(), directed)
    };
    let target = norm(b);
    let arcs: Vec<(usize, usize)> = a.edges().iter().map(|e| (e.tail, e.head)).collect();
    let mut deg_a: Vec<usize> = degree_profile(a);
    let mut deg_b: Vec<usize> = degree_profile(b);
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let n = a.vertex_count();
    (0..n).permutations(n).any(|p| relabel(&arcs, &p, directed) == target)
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d = vec![0; g.vertex_count()];
    for e in g.edges() {
        d[e.tail] += 1;
        d[e.head] += 1;
    }
    d
}
