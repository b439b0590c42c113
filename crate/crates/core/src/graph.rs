//! Finite directed multigraphs with loops, plus the structural primitives
//! (components, spanning forests, fundamental circuits, cuts, circuit
//! enumeration) the rest of the crate is built on.
//!
//! An undirected graph keeps one stored orientation per edge and a
//! `directed = false` flag. Its symmetric orientation, where every edge is
//! replaced by a pair of opposite arcs, is produced on demand by
//! [`symmetric_orientation`]; the reversed copy of edge `e` is named `e~`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Suffix used for the id of the reversed copy of an undirected edge.
pub const REVERSED_SUFFIX: char = '~';

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint of this edge that is not `v` (or `v` itself for a loop).
    pub fn other(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    name: String,
    directed: bool,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.directed == other.directed
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from string ids. Edges are `(id, tail, head)`.
    pub fn new(
        name: impl Into<String>,
        directed: bool,
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
    ) -> Result<Graph> {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id `{v}`")));
            }
        }
        let mut resolved = Vec::with_capacity(edges.len());
        for (id, tail, head) in edges {
            let t = *vertex_index
                .get(&tail)
                .ok_or_else(|| Error::UnknownVertex(tail.clone()))?;
            let h = *vertex_index
                .get(&head)
                .ok_or_else(|| Error::UnknownVertex(head.clone()))?;
            resolved.push(Edge { id, tail: t, head: h });
        }
        Graph::from_parts(name, directed, vertices, resolved)
    }

    /// Builds a graph from already-resolved edges, validating all invariants.
    pub fn from_parts(
        name: impl Into<String>,
        directed: bool,
        vertices: Vec<String>,
        edges: Vec<Edge>,
    ) -> Result<Graph> {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id `{v}`")));
            }
        }
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if e.tail >= vertices.len() || e.head >= vertices.len() {
                return Err(Error::InvalidGraph(format!(
                    "edge `{}` references a missing vertex",
                    e.id
                )));
            }
            if !directed && e.id.ends_with(REVERSED_SUFFIX) {
                return Err(Error::InvalidGraph(format!(
                    "undirected edge id `{}` may not end with `{REVERSED_SUFFIX}`",
                    e.id
                )));
            }
            if edge_index.insert(e.id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge id `{}`", e.id)));
            }
        }
        Ok(Graph {
            name: name.into(),
            directed,
            vertices,
            edges,
            vertex_index,
            edge_index,
        })
    }

    /// Vertices `0..n` (ids are their decimal index), edges `e0, e1, ...`.
    pub fn from_index_edges(
        name: impl Into<String>,
        directed: bool,
        n: usize,
        edges: &[(usize, usize)],
    ) -> Graph {
        let vertices = (0..n).map(|i| i.to_string()).collect();
        let edges = edges
            .iter()
            .enumerate()
            .map(|(i, &(t, h))| {
                assert!(t < n && h < n, "edge endpoint out of range");
                Edge {
                    id: format!("e{i}"),
                    tail: t,
                    head: h,
                }
            })
            .collect();
        Graph::from_parts(name, directed, vertices, edges).expect("index-built graph is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub fn with_name(&self, name: impl Into<String>) -> Graph {
        let mut g = self.clone();
        g.name = name.into();
        g
    }

    /// Same vertices and edges, with the `directed` flag replaced.
    pub fn with_directed(&self, directed: bool) -> Result<Graph> {
        Graph::from_parts(
            self.name.clone(),
            directed,
            self.vertices.clone(),
            self.edges.clone(),
        )
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// No loops and no two edges joining the same pair of vertices. For
    /// directed graphs a pair of opposite arcs is allowed.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        for e in &self.edges {
            if e.is_loop() {
                return false;
            }
            let key = if self.directed {
                (e.tail, e.head)
            } else {
                (e.tail.min(e.head), e.tail.max(e.head))
            };
            if !seen.insert(key) {
                return false;
            }
        }
        true
    }

    /// Symmetric adjacency of the underlying simple graph (loops dropped).
    pub fn undirected_adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for e in &self.edges {
            if !e.is_loop() {
                adj[e.tail][e.head] = true;
                adj[e.head][e.tail] = true;
            }
        }
        adj
    }

    /// Sorted neighbour lists of the underlying simple graph.
    pub fn undirected_neighbors(&self) -> Vec<Vec<usize>> {
        self.undirected_adjacency()
            .into_iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(j, &b)| b.then_some(j))
                    .collect()
            })
            .collect()
    }

    /// Edge indices incident to each vertex (a loop is listed once).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.tail].push(i);
            if !e.is_loop() {
                inc[e.head].push(i);
            }
        }
        inc
    }
}

/// A cut `δ(X)`: the side `X` (sorted vertex indices) and the crossing edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub side: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A circuit with a fixed traversal. `vertices[i]` is where step `i` starts;
/// `forward[i]` says whether `edges[i]` is traversed from tail to head.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircuitSplit {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub forward: Vec<bool>,
}

impl CircuitSplit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The edges of `C+`.
    pub fn forward_edges(&self) -> Vec<usize> {
        self.steps().filter(|s| s.1).map(|s| s.0).collect()
    }

    /// The edges of `C-`.
    pub fn backward_edges(&self) -> Vec<usize> {
        self.steps().filter(|s| !s.1).map(|s| s.0).collect()
    }

    /// `|C+| - |C-|`.
    pub fn imbalance(&self) -> i64 {
        self.forward
            .iter()
            .map(|&f| if f { 1i64 } else { -1 })
            .sum()
    }

    pub fn steps(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.edges.iter().copied().zip(self.forward.iter().copied())
    }

    /// Checks that the split is a closed walk through distinct vertices in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.edges.len();
        if k == 0 || self.vertices.len() != k || self.forward.len() != k {
            return false;
        }
        let distinct: HashSet<_> = self.vertices.iter().collect();
        if distinct.len() != k {
            return false;
        }
        let edge_set: HashSet<_> = self.edges.iter().collect();
        if edge_set.len() != k {
            return false;
        }
        (0..k).all(|i| {
            let Some(e) = g.edges().get(self.edges[i]) else {
                return false;
            };
            let from = self.vertices[i];
            let to = self.vertices[(i + 1) % k];
            if self.forward[i] {
                e.tail == from && e.head == to
            } else {
                e.head == from && e.tail == to
            }
        })
    }

    /// Canonical key: the sorted edge set (a circuit is determined by it).
    pub fn edge_key(&self) -> Vec<usize> {
        let mut k = self.edges.clone();
        k.sort_unstable();
        k
    }
}

/// Weakly connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component label of each vertex, labels in order of first appearance.
    pub labels: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            parts[c].push(v);
        }
        parts
    }
}

pub fn components(g: &Graph) -> Components {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if labels[s] != usize::MAX {
            continue;
        }
        labels[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &ei in &inc[u] {
                let w = g.edge(ei).other(u);
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    Components { labels, count }
}

/// A spanning forest together with the fundamental circuit of every
/// non-tree edge. Each fundamental circuit starts with its non-tree edge,
/// traversed forward.
#[derive(Clone, Debug)]
pub struct SpanningForest {
    pub tree: Vec<usize>,
    pub non_tree: Vec<usize>,
    pub circuits: Vec<CircuitSplit>,
}

pub fn spanning_forest(g: &Graph) -> SpanningForest {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n]; // (parent vertex, edge)
    let mut depth = vec![usize::MAX; n];
    let mut in_tree = vec![false; g.edge_count()];
    let mut tree = Vec::new();
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &ei in &inc[u] {
                let w = g.edge(ei).other(u);
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some((u, ei));
                    in_tree[ei] = true;
                    tree.push(ei);
                    queue.push_back(w);
                }
            }
        }
    }
    tree.sort_unstable();

    let mut non_tree = Vec::new();
    let mut circuits = Vec::new();
    for (ei, e) in g.edges().iter().enumerate() {
        if in_tree[ei] {
            continue;
        }
        non_tree.push(ei);
        let (u, v) = (e.tail, e.head);
        let mut vertices = vec![u];
        let mut edges = vec![ei];
        let mut forward = vec![true];
        if u != v {
            // walk v -> lca -> u along tree edges
            let mut up_from_v = Vec::new(); // (vertex, edge to parent)
            let mut up_from_u = Vec::new();
            let (mut a, mut b) = (v, u);
            while depth[a] > depth[b] {
                let (p, pe) = parent[a].expect("non-root has parent");
                up_from_v.push((a, pe));
                a = p;
            }
            while depth[b] > depth[a] {
                let (p, pe) = parent[b].expect("non-root has parent");
                up_from_u.push((b, pe));
                b = p;
            }
            while a != b {
                let (pa, pea) = parent[a].expect("non-root has parent");
                up_from_v.push((a, pea));
                a = pa;
                let (pb, peb) = parent[b].expect("non-root has parent");
                up_from_u.push((b, peb));
                b = pb;
            }
            for &(x, pe) in &up_from_v {
                vertices.push(x);
                edges.push(pe);
                forward.push(g.edge(pe).tail == x);
            }
            for &(x, pe) in up_from_u.iter().rev() {
                let p = g.edge(pe).other(x);
                vertices.push(p);
                edges.push(pe);
                forward.push(g.edge(pe).tail == p);
            }
        }
        circuits.push(CircuitSplit {
            vertices,
            edges,
            forward,
        });
    }
    SpanningForest {
        tree,
        non_tree,
        circuits,
    }
}

/// Every circuit of length at most `max_len`, each once.
pub fn enumerate_circuits(g: &Graph, max_len: usize) -> Vec<CircuitSplit> {
    enumerate_circuits_bounded(g, max_len, usize::MAX).expect("unbounded enumeration")
}

/// Like [`enumerate_circuits`] but fails once more than `max_count`
/// circuits have been produced.
pub fn enumerate_circuits_bounded(
    g: &Graph,
    max_len: usize,
    max_count: usize,
) -> Result<Vec<CircuitSplit>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let push = |out: &mut Vec<CircuitSplit>, c: CircuitSplit| -> Result<()> {
        if out.len() >= max_count {
            return Err(Error::Budget(format!(
                "more than {max_count} circuits of length <= {max_len}"
            )));
        }
        out.push(c);
        Ok(())
    };
    if max_len == 0 {
        return Ok(out);
    }

    // edges between each unordered pair, in edge order
    let mut between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (ei, e) in g.edges().iter().enumerate() {
        if e.is_loop() {
            push(
                &mut out,
                CircuitSplit {
                    vertices: vec![e.tail],
                    edges: vec![ei],
                    forward: vec![true],
                },
            )?;
        } else {
            let key = (e.tail.min(e.head), e.tail.max(e.head));
            between.entry(key).or_default().push(ei);
        }
    }

    if max_len >= 2 {
        let mut pairs: Vec<_> = between.iter().collect();
        pairs.sort();
        for (&(u, v), list) in pairs {
            for i in 0..list.len() {
                for j in (i + 1)..list.len() {
                    let (a, b) = (list[i], list[j]);
                    push(
                        &mut out,
                        CircuitSplit {
                            vertices: vec![u, v],
                            edges: vec![a, b],
                            forward: vec![g.edge(a).tail == u, g.edge(b).tail == v],
                        },
                    )?;
                }
            }
        }
    }

    if max_len >= 3 {
        let nbrs = g.undirected_neighbors();
        let mut path = Vec::new();
        let mut on_path = vec![false; n];
        for s in 0..n {
            path.clear();
            path.push(s);
            on_path[s] = true;
            cycle_dfs(
                g,
                &nbrs,
                &between,
                s,
                max_len,
                &mut path,
                &mut on_path,
                &mut out,
                max_count,
            )?;
            on_path[s] = false;
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cycle_dfs(
    g: &Graph,
    nbrs: &[Vec<usize>],
    between: &HashMap<(usize, usize), Vec<usize>>,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<CircuitSplit>,
    max_count: usize,
) -> Result<()> {
    let last = *path.last().expect("path nonempty");
    for &w in &nbrs[last] {
        if w == start && path.len() >= 3 && path[1] < last {
            expand_vertex_cycle(g, between, path, out, max_count)?;
        } else if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            cycle_dfs(
                g, nbrs, between, start, max_len, path, on_path, out, max_count,
            )?;
            on_path[w] = false;
            path.pop();
        }
    }
    Ok(())
}

fn expand_vertex_cycle(
    g: &Graph,
    between: &HashMap<(usize, usize), Vec<usize>>,
    cycle: &[usize],
    out: &mut Vec<CircuitSplit>,
    max_count: usize,
) -> Result<()> {
    let k = cycle.len();
    let choices: Vec<&Vec<usize>> = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            &between[&(a.min(b), a.max(b))]
        })
        .collect();
    let mut idx = vec![0usize; k];
    loop {
        if out.len() >= max_count {
            return Err(Error::Budget(format!("more than {max_count} circuits")));
        }
        let edges: Vec<usize> = (0..k).map(|i| choices[i][idx[i]]).collect();
        let forward = (0..k).map(|i| g.edge(edges[i]).tail == cycle[i]).collect();
        out.push(CircuitSplit {
            vertices: cycle.to_vec(),
            edges,
            forward,
        });
        // odometer, last position fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// The cut `δ(X)` for `X` given as a membership vector.
pub fn cut_of(g: &Graph, in_side: &[bool]) -> Cut {
    let side = in_side
        .iter()
        .enumerate()
        .filter_map(|(v, &b)| b.then_some(v))
        .collect();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| in_side[e.tail] != in_side[e.head])
        .map(|(i, _)| i)
        .collect();
    Cut { side, edges }
}

pub const DEFAULT_CUT_VERTEX_BOUND: usize = 20;

/// All cuts `δ(X)`, `X` ranging over subsets in bitmask order (bit `i` is vertex `i`).
pub fn cuts(g: &Graph) -> Result<Cuts<'_>> {
    cuts_bounded(g, DEFAULT_CUT_VERTEX_BOUND)
}

pub fn cuts_bounded(g: &Graph, max_vertices: usize) -> Result<Cuts<'_>> {
    let n = g.vertex_count();
    if n > max_vertices || n >= 63 {
        return Err(Error::Budget(format!(
            "cut enumeration over {n} vertices exceeds bound {max_vertices}"
        )));
    }
    Ok(Cuts {
        graph: g,
        next: 0,
        end: 1u64 << n,
    })
}

pub struct Cuts<'a> {
    graph: &'a Graph,
    next: u64,
    end: u64,
}

impl Iterator for Cuts<'_> {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let members: Vec<bool> = (0..self.graph.vertex_count())
            .map(|v| mask >> v & 1 == 1)
            .collect();
        Some(cut_of(self.graph, &members))
    }
}

/// Number of distinct edge sets among all cuts.
pub fn distinct_cut_count(g: &Graph) -> Result<usize> {
    let set: HashSet<Vec<usize>> = cuts(g)?.map(|c| c.edges).collect();
    Ok(set.len())
}

pub fn underlying_undirected(g: &Graph) -> Graph {
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge {
            id: e.id.trim_end_matches(REVERSED_SUFFIX).to_string(),
            ..e.clone()
        })
        .collect::<Vec<_>>();
    Graph::from_parts(g.name(), false, g.vertices().to_vec(), edges.clone()).unwrap_or_else(|_| {
        // ids collided after stripping suffixes; fall back to positional ids
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| Edge {
                id: format!("e{i}"),
                ..e
            })
            .collect();
        Graph::from_parts(g.name(), false, g.vertices().to_vec(), edges)
            .expect("positional ids are unique")
    })
}

/// The symmetric orientation of the underlying undirected graph of `g`:
/// edge `2i` is edge `i` in its stored orientation, edge `2i + 1` its opposite.
#[derive(Clone, Debug)]
pub struct SymmetricOrientation {
    pub graph: Graph,
    pub opposite: Vec<usize>,
}

impl SymmetricOrientation {
    pub fn base_edge(&self, sym_edge: usize) -> usize {
        sym_edge / 2
    }

    pub fn is_reversed_copy(&self, sym_edge: usize) -> bool {
        sym_edge % 2 == 1
    }

    /// Index of the copy of base edge `e`, reversed or not.
    pub fn copy_of(e: usize, reversed: bool) -> usize {
        2 * e + usize::from(reversed)
    }
}

pub fn symmetric_orientation(g: &Graph) -> SymmetricOrientation {
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    let mut opposite = Vec::with_capacity(2 * g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        edges.push(e.clone());
        edges.push(Edge {
            id: format!("{}{REVERSED_SUFFIX}", e.id),
            tail: e.head,
            head: e.tail,
        });
        opposite.push(2 * i + 1);
        opposite.push(2 * i);
    }
    let graph = Graph::from_parts(g.name(), true, g.vertices().to_vec(), edges)
        .expect("symmetric orientation ids are unique");
    SymmetricOrientation { graph, opposite }
}

/// The subgraph induced on `subset` (vertex indices); vertex and edge order
/// follow the original graph.
pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Graph {
    let mut keep = vec![false; g.vertex_count()];
    for &v in subset {
        keep[v] = true;
    }
    let mut new_index = vec![usize::MAX; g.vertex_count()];
    let mut vertices = Vec::new();
    for v in 0..g.vertex_count() {
        if keep[v] {
            new_index[v] = vertices.len();
            vertices.push(g.vertex_id(v).to_string());
        }
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| keep[e.tail] && keep[e.head])
        .map(|e| Edge {
            id: e.id.clone(),
            tail: new_index[e.tail],
            head: new_index[e.head],
        })
        .collect();
    Graph::from_parts(g.name(), g.is_directed(), vertices, edges)
        .expect("induced subgraph of a valid graph is valid")
}

/// Complement of a simple undirected graph.
pub fn complement(g: &Graph) -> Result<Graph> {
    if g.is_directed() {
        return Err(Error::Unsupported(
            "complement is defined for undirected graphs".into(),
        ));
    }
    if !g.is_simple() {
        return Err(Error::Unsupported(
            "complement requires a loopless simple graph".into(),
        ));
    }
    let n = g.vertex_count();
    let adj = g.undirected_adjacency();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !adj[u][v] {
                edges.push(Edge {
                    id: format!("e{}", edges.len()),
                    tail: u,
                    head: v,
                });
            }
        }
    }
    Graph::from_parts(
        format!("complement({})", g.name()),
        false,
        g.vertices().to_vec(),
        edges,
    )
}

/// Vertex-disjoint union; ids of `b` are prefixed to stay unique.
pub fn disjoint_union(a: &Graph, b: &Graph, name: impl Into<String>) -> Result<Graph> {
    if a.is_directed() != b.is_directed() {
        return Err(Error::GraphMismatch(
            "cannot mix directed and undirected graphs".into(),
        ));
    }
    let mut vertices: Vec<String> = a.vertices().iter().map(|v| format!("a.{v}")).collect();
    vertices.extend(b.vertices().iter().map(|v| format!("b.{v}")));
    let off = a.vertex_count();
    let mut edges: Vec<Edge> = a
        .edges()
        .iter()
        .map(|e| Edge {
            id: format!("a.{}", e.id),
            ..e.clone()
        })
        .collect();
    edges.extend(b.edges().iter().map(|e| Edge {
        id: format!("b.{}", e.id),
        tail: e.tail + off,
        head: e.head + off,
    }));
    Graph::from_parts(name, a.is_directed(), vertices, edges)
}
