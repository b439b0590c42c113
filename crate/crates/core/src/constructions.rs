//! Named graphs, the standard witness mappings, and the gluing constructions:
//! join with `K5`, triangle-based replacement and the antichain family.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;

use crate::cayley::{delta, DEFAULT_SIZE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{complement, underlying_undirected, Edge, Graph};
use crate::ring::RingSpec;
use crate::search::{find_hom, find_tt, HomOptions, Outcome, TtMethod, TtOptions, VertexMapping};
use crate::verify::{verify_tt, EdgeImage, EdgeMapping, TTVerdict};

/// Role name -> vertex id, as carried by the `designated` field of graph JSON.
pub type Designated = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub params: &'static [&'static str],
    pub description: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { key: "complete", params: &["n"], description: "complete graph K_n" },
    CatalogEntry { key: "cycle", params: &["n"], description: "cycle C_n (n = 1 is a loop, n = 2 a digon)" },
    CatalogEntry { key: "path", params: &["n"], description: "path on n vertices" },
    CatalogEntry { key: "kneser", params: &["n", "k"], description: "Kneser graph K(n,k): k-subsets, disjoint pairs adjacent" },
    CatalogEntry { key: "petersen", params: &[], description: "Petersen graph, K(5,2)" },
    CatalogEntry { key: "prism5", params: &[], description: "pentagonal prism C5 x K2" },
    CatalogEntry { key: "complement_cycle", params: &["l"], description: "complement of C_l" },
    CatalogEntry { key: "loop_edge_T", params: &[], description: "two vertices, one edge between them and one loop" },
    CatalogEntry { key: "shih", params: &["k"], description: "k-connected pair with TT_Z but no homomorphism; supply as graph JSON" },
];

pub const WITNESS_MAPPINGS: &[&str] = &["k4_to_k3_coloring", "c5_doubling", "petersen_to_c5"];

fn param(key: &str, params: &[usize], i: usize) -> Result<usize> {
    params
        .get(i)
        .copied()
        .ok_or_else(|| Error::InvalidParameter(format!("`{key}` needs {} parameter(s)", i + 1)))
}

/// Resolves a key such as `complete:4`, `kneser:5:2` or `directed:cycle:5`.
/// The `directed:` prefix keeps every edge oriented as listed.
pub fn catalog_lookup(spec: &str) -> Result<Graph> {
    let (directed, rest) = match spec.strip_prefix("directed:") {
        Some(r) => (true, r),
        None => (false, spec),
    };
    let mut parts = rest.split(':');
    let key = parts.next().unwrap_or_default();
    let params = parts
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad catalog parameter `{p}` in `{spec}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    let g = catalog(key, &params)?.with_name(spec);
    if directed {
        g.with_directed(true)
    } else {
        Ok(g)
    }
}

pub fn catalog(key: &str, params: &[usize]) -> Result<Graph> {
    let entry = CATALOG
        .iter()
        .find(|e| e.key == key)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown catalog key `{key}`")))?;
    if params.len() > entry.params.len() {
        return Err(Error::InvalidParameter(format!("`{key}` takes {} parameter(s)", entry.params.len())));
    }
    match key {
        "complete" => Ok(complete_graph(param(key, params, 0)?, false)),
        "cycle" => {
            let n = param(key, params, 0)?;
            if n == 0 {
                return Err(Error::InvalidParameter("cycle needs n >= 1".into()));
            }
            Ok(cycle_graph(n))
        }
        "path" => {
            let n = param(key, params, 0)?;
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(Graph::from_index_edges(format!("P{n}"), false, n, &e))
        }
        "kneser" => kneser(param(key, params, 0)?, param(key, params, 1)?),
        "petersen" => Ok(kneser(5, 2)?.with_name("petersen")),
        "prism5" => Ok(prism5()),
        "complement_cycle" => {
            let l = param(key, params, 0)?;
            if l < 3 {
                return Err(Error::InvalidParameter("complement_cycle needs l >= 3".into()));
            }
            Ok(complement(&cycle_graph(l))?.with_name(format!("complement(C{l})")))
        }
        "loop_edge_T" => Graph::new(
            "loop_edge_T",
            false,
            vec!["0".into(), "1".into()],
            vec![("e".into(), "0".into(), "1".into()), ("l".into(), "1".into(), "1".into())],
        ),
        "shih" => Err(Error::InvalidParameter(
            "the Shih pair is only described by a figure; supply both graphs and the bijection as JSON".into(),
        )),
        _ => unreachable!("catalog entry without a builder"),
    }
}

/// `K_n` with edges in lexicographic order; the symmetric complete digraph
/// when `directed`.
pub fn complete_graph(n: usize, directed: bool) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && (directed || u < v) {
                e.push((u, v));
            }
        }
    }
    Graph::from_index_edges(format!("K{n}"), directed, n, &e)
}

/// Edges `e_i = (i, i+1 mod n)`.
pub fn cycle_graph(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_index_edges(format!("C{n}"), false, n, &e)
}

pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameter(format!("kneser needs 1 <= k and 2k <= n, got n={n}, k={k}")));
    }
    let sets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    if sets.len() > 5000 {
        return Err(Error::Budget(format!("K({n},{k}) has {} vertices", sets.len())));
    }
    let mut e = Vec::new();
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            if sets[i].iter().all(|x| !sets[j].contains(x)) {
                e.push((i, j));
            }
        }
    }
    let g = Graph::from_index_edges(format!("K({n},{k})"), false, sets.len(), &e);
    let ids = sets.iter().map(|s| s.iter().join(".")).collect();
    Graph::from_parts(g.name(), false, ids, g.edges().to_vec())
}

/// Outer cycle `o0..o4`, inner cycle `i0..i4`, spokes `oj ij`.
fn prism5() -> Graph {
    let mut vertices: Vec<String> = (0..5).map(|j| format!("o{j}")).collect();
    vertices.extend((0..5).map(|j| format!("i{j}")));
    let mut edges = Vec::new();
    for j in 0..5 {
        edges.push((format!("o{j}"), j, (j + 1) % 5));
    }
    for j in 0..5 {
        edges.push((format!("s{j}"), j, 5 + j));
    }
    for j in 0..5 {
        edges.push((format!("i{j}"), 5 + j, 5 + (j + 1) % 5));
    }
    let edges = edges.into_iter().map(|(id, tail, head)| Edge { id, tail, head }).collect();
    Graph::from_parts("prism5", false, vertices, edges).expect("prism is valid")
}

/// The outer pentagon `u_1..u_5` of the two antichain blocks, as vertex ids.
pub fn outer_pentagon(block: &Graph) -> Result<Vec<usize>> {
    let ids: Vec<&str> = if block.vertex_index("o0").is_some() {
        vec!["o0", "o1", "o2", "o3", "o4"]
    } else {
        // consecutive 2-subsets are disjoint, so these form a 5-cycle
        vec!["0.1", "2.3", "0.4", "1.2", "3.4"]
    };
    ids.iter()
        .map(|id| block.vertex_index(id).ok_or_else(|| Error::UnknownVertex(id.to_string())))
        .collect()
}

fn edge_between(g: &Graph, u: usize, v: usize) -> Option<usize> {
    g.edges()
        .iter()
        .position(|e| (e.tail == u && e.head == v) || (e.tail == v && e.head == u))
}

pub fn witness_mapping(key: &str) -> Result<EdgeMapping> {
    match key {
        "k4_to_k3_coloring" => {
            // edges of K4: 01 02 03 12 13 23; colour classes {01,23} {02,13} {03,12}
            let k4 = Arc::new(complete_graph(4, false));
            let k3 = Arc::new(complete_graph(3, false));
            EdgeMapping::from_indices(k4, k3, &[0, 1, 2, 2, 1, 0])
        }
        "c5_doubling" => {
            let c5 = Arc::new(catalog_lookup("directed:cycle:5")?);
            let images: Vec<usize> = (0..5).map(|i| (2 * i) % 5).collect();
            EdgeMapping::from_indices(c5.clone(), c5, &images)
        }
        "petersen_to_c5" => {
            let p = Arc::new(catalog("petersen", &[])?);
            let c5 = Arc::new(cycle_graph(5));
            let d = delta(&c5, &RingSpec::cyclic(2)?, DEFAULT_SIZE_BUDGET)?;
            match find_hom(p.clone(), d.graph_arc().clone(), &HomOptions::default()) {
                Outcome::Yes(h) => d.pull_hom_to_tt(p, &h.map),
                _ => Err(Error::Budget("no homomorphism into the free Cayley graph was found".into())),
            }
        }
        _ => Err(Error::InvalidParameter(format!(
            "unknown witness mapping `{key}` (known: {})",
            WITNESS_MAPPINGS.join(", ")
        ))),
    }
}

/// The simple undirected graph on the same vertices: loops dropped,
/// parallel and antiparallel edges merged (first id kept).
pub fn simplify(g: &Graph) -> Graph {
    let base = underlying_undirected(g);
    let mut seen = HashSet::new();
    let edges: Vec<Edge> = base
        .edges()
        .iter()
        .filter(|e| !e.is_loop() && seen.insert((e.tail.min(e.head), e.tail.max(e.head))))
        .cloned()
        .collect();
    Graph::from_parts(g.name(), false, g.vertices().to_vec(), edges).expect("subset of a valid edge list")
}

fn fresh_id(taken: &HashSet<String>, base: String) -> String {
    let mut id = base;
    while taken.contains(&id) {
        id.push('\'');
    }
    id
}

/// Complete join with five new vertices `k0..k4`. The result is undirected;
/// the input must be loopless without parallel edges.
pub fn join_with_k5(g: &Graph) -> Result<Graph> {
    if g.has_loops() || simplify(g).edge_count() != g.edge_count() {
        return Err(Error::Unsupported("join with K5 needs a loopless simple graph".into()));
    }
    let base = underlying_undirected(g);
    let mut vertex_ids: HashSet<String> = g.vertices().iter().cloned().collect();
    let mut edge_ids: HashSet<String> = base.edges().iter().map(|e| e.id.clone()).collect();
    let mut vertices = g.vertices().to_vec();
    let n = g.vertex_count();
    for i in 0..5 {
        let id = fresh_id(&vertex_ids, format!("k{i}"));
        vertex_ids.insert(id.clone());
        vertices.push(id);
    }
    let mut edges = base.edges().to_vec();
    let mut push = |edges: &mut Vec<Edge>, tail: usize, head: usize| {
        let id = fresh_id(&edge_ids, format!("j{}", edges.len()));
        edge_ids.insert(id.clone());
        edges.push(Edge { id, tail, head });
    };
    for i in 0..5 {
        for j in (i + 1)..5 {
            push(&mut edges, n + i, n + j);
        }
    }
    for v in 0..n {
        for i in 0..5 {
            push(&mut edges, v, n + i);
        }
    }
    Graph::from_parts(format!("join({},K5)", g.name()), false, vertices, edges)
}

fn designated_vertex(g: &Graph, designated: &Designated, role: &str) -> Result<usize> {
    let id = designated
        .get(role)
        .ok_or_else(|| Error::InvalidGraph(format!("`{}` has no designated `{role}`", g.name())))?;
    g.vertex_index(id)
        .ok_or_else(|| Error::InvalidGraph(format!("designated `{role}` = `{id}` is not a vertex of `{}`", g.name())))
}

/// Validates an indicator: `u0 u1 u2` and `v0 v1 v2` are two vertex-disjoint
/// triangles. Returns their vertex indices.
pub fn indicator_triangles(indicator: &Graph, designated: &Designated) -> Result<([usize; 3], [usize; 3])> {
    let mut tri = [[0usize; 3]; 2];
    for (s, side) in ["u", "v"].iter().enumerate() {
        for i in 0..3 {
            tri[s][i] = designated_vertex(indicator, designated, &format!("{side}{i}"))?;
        }
    }
    let all: HashSet<usize> = tri.iter().flatten().copied().collect();
    if all.len() != 6 {
        return Err(Error::InvalidGraph("designated triangles must use six distinct vertices".into()));
    }
    for t in &tri {
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            if edge_between(indicator, t[a], t[b]).is_none() {
                return Err(Error::InvalidGraph(format!(
                    "designated vertices `{}` and `{}` are not adjacent",
                    indicator.vertex_id(t[a]),
                    indicator.vertex_id(t[b])
                )));
            }
        }
    }
    Ok((tri[0], tri[1]))
}

/// `G * I`: every vertex `u` of `base` becomes the triangle `u.0 u.1 u.2`,
/// every edge `e = (u, v)` a copy of the indicator with `u_i` glued to `u.i`
/// and `v_i` to `v.i`. Other indicator vertices and edges of copy `e` get
/// ids `e.<id>`. Triangle edges shared by several copies are kept once, with
/// id `u.ij` and the orientation of the first copy.
pub fn triangle_replacement(base: &Graph, indicator: &Graph, designated: &Designated) -> Result<Graph> {
    if base.has_loops() {
        return Err(Error::Unsupported("triangle replacement needs a loopless base".into()));
    }
    let (tu, tv) = indicator_triangles(indicator, designated)?;
    let mut vertices: Vec<String> = Vec::new();
    for v in base.vertices() {
        for i in 0..3 {
            vertices.push(format!("{v}.{i}"));
        }
    }
    let mut glued: HashMap<usize, usize> = HashMap::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut triangle_edges: HashSet<(usize, usize)> = HashSet::new();
    for be in base.edges() {
        glued.clear();
        for i in 0..3 {
            glued.insert(tu[i], 3 * be.tail + i);
            glued.insert(tv[i], 3 * be.head + i);
        }
        let mut local = vec![0usize; indicator.vertex_count()];
        for w in 0..indicator.vertex_count() {
            local[w] = match glued.get(&w) {
                Some(&x) => x,
                None => {
                    vertices.push(format!("{}.{}", be.id, indicator.vertex_id(w)));
                    vertices.len() - 1
                }
            };
        }
        for ie in indicator.edges() {
            let (t, h) = (local[ie.tail], local[ie.head]);
            let within = |a: usize, b: usize| a < 3 * base.vertex_count() && b < 3 * base.vertex_count() && a / 3 == b / 3;
            if within(t, h) {
                if !triangle_edges.insert((t.min(h), t.max(h))) {
                    continue;
                }
                let (i, j) = ((t % 3).min(h % 3), (t % 3).max(h % 3));
                edges.push(Edge {
                    id: format!("{}.{i}{j}", base.vertex_id(t / 3)),
                    tail: t,
                    head: h,
                });
            } else {
                edges.push(Edge {
                    id: format!("{}.{}", be.id, ie.id),
                    tail: t,
                    head: h,
                });
            }
        }
    }
    Graph::from_parts(format!("{}*{}", base.name(), indicator.name()), indicator.is_directed(), vertices, edges)
}

/// The designated roles of an antichain connector.
pub const CONNECTOR_ROLES: [&str; 7] = ["a", "b", "x1", "x2", "x3", "x4", "x5"];

#[derive(Clone, Debug)]
pub struct ConnectorCheck {
    /// Smallest pairwise distance between the `x_j`.
    pub min_x_distance: Option<usize>,
    pub every_vertex_in_triangle: bool,
}

/// Validates the roles of a connector and reports the checkable properties.
pub fn check_connector(h: &Graph, designated: &Designated) -> Result<([usize; 2], [usize; 5], ConnectorCheck)> {
    if h.is_directed() || h.has_loops() {
        return Err(Error::InvalidGraph("the connector must be a loopless undirected graph".into()));
    }
    let roles: Vec<usize> = CONNECTOR_ROLES
        .iter()
        .map(|r| designated_vertex(h, designated, r))
        .collect::<Result<_>>()?;
    if roles.iter().collect::<HashSet<_>>().len() != roles.len() {
        return Err(Error::InvalidGraph("designated connector vertices must be pairwise distinct".into()));
    }
    let nbrs = h.undirected_neighbors();
    let bfs = |s: usize| {
        let mut dist = vec![usize::MAX; h.vertex_count()];
        dist[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in &nbrs[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    };
    let xs = [roles[2], roles[3], roles[4], roles[5], roles[6]];
    let mut min_x = None::<usize>;
    for i in 0..5 {
        let d = bfs(xs[i]);
        for &x in &xs[i + 1..] {
            if d[x] != usize::MAX {
                min_x = Some(min_x.map_or(d[x], |m| m.min(d[x])));
            }
        }
    }
    let adj = h.undirected_adjacency();
    let every_vertex_in_triangle = (0..h.vertex_count())
        .all(|v| nbrs[v].iter().any(|&a| nbrs[v].iter().any(|&b| a != b && adj[a][b])));
    Ok((
        [roles[0], roles[1]],
        xs,
        ConnectorCheck {
            min_x_distance: min_x,
            every_vertex_in_triangle,
        },
    ))
}

/// The chain of `n` connector copies, `b` of copy `i` glued to `a` of copy
/// `i + 1`. Vertex `v` of copy `i` is `h{i}.v`.
pub fn connector_chain(n: usize, h: &Graph, designated: &Designated) -> Result<Graph> {
    let ([a, b], _, _) = check_connector(h, designated)?;
    let (vertices, edges, _) = chain_parts(n, h, a, b);
    Graph::from_parts(format!("chain{n}({})", h.name()), false, vertices, edges)
}

fn chain_parts(n: usize, h: &Graph, a: usize, b: usize) -> (Vec<String>, Vec<Edge>, Vec<Vec<usize>>) {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut copies: Vec<Vec<usize>> = Vec::new();
    for i in 1..=n {
        let mut local = vec![0usize; h.vertex_count()];
        for v in 0..h.vertex_count() {
            local[v] = if i > 1 && v == a {
                copies[i - 2][b]
            } else {
                vertices.push(format!("h{i}.{}", h.vertex_id(v)));
                vertices.len() - 1
            };
        }
        for e in h.edges() {
            edges.push(Edge {
                id: format!("h{i}.{}", e.id),
                tail: local[e.tail],
                head: local[e.head],
            });
        }
        copies.push(local);
    }
    (vertices, edges, copies)
}

/// `G_t`: the connector chain, a Petersen graph (`t_i = 1`) or pentagonal
/// prism (`t_i = 0`) as block `i` with ids `f{i}.*`, and the edges
/// `c{i}.{j} = x_i^j u_i^j`.
pub fn antichain_family(t: &[bool], connector: &Graph, designated: &Designated) -> Result<Graph> {
    if t.is_empty() {
        return Err(Error::InvalidParameter("the antichain family needs n >= 1".into()));
    }
    let ([a, b], xs, _) = check_connector(connector, designated)?;
    let (mut vertices, mut edges, copies) = chain_parts(t.len(), connector, a, b);
    for (i, &ti) in t.iter().enumerate() {
        let block = antichain_block(ti)?;
        let off = vertices.len();
        vertices.extend(block.vertices().iter().map(|v| format!("f{}.{v}", i + 1)));
        edges.extend(block.edges().iter().map(|e| Edge {
            id: format!("f{}.{}", i + 1, e.id),
            tail: e.tail + off,
            head: e.head + off,
        }));
        let outer = outer_pentagon(&block)?;
        for j in 0..5 {
            edges.push(Edge {
                id: format!("c{}.{}", i + 1, j + 1),
                tail: copies[i][xs[j]],
                head: off + outer[j],
            });
        }
    }
    let bits: String = t.iter().map(|&x| if x { '1' } else { '0' }).collect();
    Graph::from_parts(format!("G_{bits}"), false, vertices, edges)
}

pub fn antichain_block(petersen: bool) -> Result<Graph> {
    if petersen {
        catalog("petersen", &[])
    } else {
        Ok(prism5())
    }
}

/// A `TT_2` map from one block onto the outer pentagon of the other,
/// identical on the outer pentagon; found by constrained search.
/// Returned images index the outer pentagon edges `u_j u_{j+1}`, `j = 0..5`.
pub fn block_map(from_petersen: bool) -> Result<Vec<usize>> {
    let block = Arc::new(antichain_block(from_petersen)?);
    let outer = outer_pentagon(&block)?;
    let pentagon = Arc::new(cycle_graph(5));
    let mut fixed = Vec::new();
    for j in 0..5 {
        let e = edge_between(&block, outer[j], outer[(j + 1) % 5]).expect("outer pentagon edge");
        fixed.push((e, EdgeImage::plain(j)));
    }
    let opts = TtOptions {
        method: TtMethod::Backtrack,
        fixed,
        ..TtOptions::default()
    };
    match find_tt(block, pentagon, &RingSpec::cyclic(2)?, &opts)? {
        Outcome::Yes(f) => Ok(f.images().iter().map(|im| im.edge).collect()),
        Outcome::No => Err(Error::InvalidMapping("no block map fixes the outer pentagon".into())),
        Outcome::Unknown => Err(Error::Budget("block map search".into())),
    }
}

/// The explicit `TT_2` mapping `G_t -> G_t'`: chain and connecting edges go
/// to themselves, block `i` onto the outer pentagon of block `i` of `G_t'`.
pub fn antichain_mapping(t: &[bool], t2: &[bool], connector: &Graph, designated: &Designated) -> Result<EdgeMapping> {
    if t.len() != t2.len() {
        return Err(Error::InvalidParameter("both bit vectors need the same length".into()));
    }
    let src = Arc::new(antichain_family(t, connector, designated)?);
    let dst = Arc::new(antichain_family(t2, connector, designated)?);
    let maps = [block_map(false)?, block_map(true)?];
    let mut images = Vec::with_capacity(src.edge_count());
    for e in src.edges() {
        let target = match e.id.strip_prefix('f').and_then(|r| r.split_once('.')) {
            Some((i, local)) => {
                let i: usize = i.parse().map_err(|_| Error::InvalidGraph(format!("bad block edge `{}`", e.id)))?;
                let block = antichain_block(t[i - 1])?;
                let target_block = antichain_block(t2[i - 1])?;
                let le = block.edge_index(local).expect("block edge");
                let j = maps[t[i - 1] as usize][le];
                let outer = outer_pentagon(&target_block)?;
                let te = edge_between(&target_block, outer[j], outer[(j + 1) % 5]).expect("outer pentagon edge");
                format!("f{i}.{}", target_block.edge(te).id)
            }
            None => e.id.clone(),
        };
        let idx = dst
            .edge_index(&target)
            .ok_or_else(|| Error::UnknownEdge(target.clone()))?;
        images.push(EdgeImage::plain(idx));
    }
    EdgeMapping::new(src, dst, images)
}

/// Vertex connectivity of the underlying simple graph (`n - 1` for complete
/// graphs), by unit-capacity max-flow on the split graph.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let s = simplify(g);
    let n = s.vertex_count();
    let adj = s.undirected_adjacency();
    let mut best = n.saturating_sub(1);
    for u in 0..n {
        for v in (u + 1)..n {
            if !adj[u][v] {
                best = best.min(disjoint_paths(&adj, u, v));
            }
        }
    }
    best
}

fn disjoint_paths(adj: &[Vec<bool>], s: usize, t: usize) -> usize {
    // node x splits into in = 2x, out = 2x + 1
    let n = adj.len();
    let m = 2 * n;
    let mut cap = vec![vec![0i32; m]; m];
    for x in 0..n {
        cap[2 * x][2 * x + 1] = if x == s || x == t { n as i32 } else { 1 };
        for y in 0..n {
            if adj[x][y] {
                cap[2 * x + 1][2 * y] = n as i32;
            }
        }
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; m];
        prev[src] = src;
        let mut q = std::collections::VecDeque::from([src]);
        while let Some(x) = q.pop_front() {
            for y in 0..m {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

#[derive(Clone, Debug)]
pub struct ShihReport {
    pub tt_integers: TTVerdict,
    pub hom: Outcome<VertexMapping>,
    pub source_connectivity: usize,
    pub target_connectivity: usize,
}

/// Checks a user-supplied pair: the given mapping should be `TT_Z` while
/// no homomorphism exists, with both graphs `k`-connected.
pub fn shih_harness(f: &EdgeMapping, opts: &HomOptions) -> Result<ShihReport> {
    Ok(ShihReport {
        tt_integers: verify_tt(f, &RingSpec::integers())?,
        hom: find_hom(f.source_arc().clone(), f.target_arc().clone(), opts),
        source_connectivity: vertex_connectivity(f.source()),
        target_connectivity: vertex_connectivity(f.target()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::detect_induced;

    #[test]
    fn catalog_shapes() {
        let p = catalog_lookup("petersen").unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        let c = catalog_lookup("complement_cycle:7").unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (7, 14));
        let t = catalog_lookup("loop_edge_T").unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (2, 2));
        assert!(t.has_loops());
        let d = catalog_lookup("directed:cycle:4").unwrap();
        assert!(d.is_directed());
        assert_eq!(catalog_lookup("kneser:6:2").unwrap().vertex_count(), 15);
        assert!(catalog_lookup("shih:4").is_err());
        assert!(catalog_lookup("nosuch").is_err());
        assert!(catalog_lookup("complete").is_err());
    }

    #[test]
    fn outer_pentagons_are_cycles() {
        for petersen in [false, true] {
            let b = antichain_block(petersen).unwrap();
            let o = outer_pentagon(&b).unwrap();
            for j in 0..5 {
                assert!(edge_between(&b, o[j], o[(j + 1) % 5]).is_some());
            }
        }
    }

    #[test]
    fn witnesses_verify() {
        let z = RingSpec::integers();
        let z2 = RingSpec::cyclic(2).unwrap();
        let f = witness_mapping("k4_to_k3_coloring").unwrap();
        assert!(verify_tt(&f, &z2).unwrap().is_tt);
        assert!(!verify_tt(&f, &z).unwrap().is_tt);
        let f = witness_mapping("c5_doubling").unwrap();
        assert!(verify_tt(&f, &z).unwrap().is_tt);
        assert!(!detect_induced(&f).unwrap().is_induced());
        let f = witness_mapping("petersen_to_c5").unwrap();
        assert!(verify_tt(&f, &z2).unwrap().is_tt);
    }

    #[test]
    fn join_counts() {
        let j = join_with_k5(&cycle_graph(5)).unwrap();
        assert_eq!((j.vertex_count(), j.edge_count()), (10, 40));
        let single = Graph::from_index_edges("v", false, 1, &[]);
        assert_eq!(join_with_k5(&single).unwrap().edge_count(), 15);
        assert!(join_with_k5(&catalog_lookup("loop_edge_T").unwrap()).is_err());
    }

    fn toy_indicator() -> (Graph, Designated) {
        // two triangles joined by a perfect matching through one hub
        let e = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 6), (6, 3), (1, 4), (2, 5)];
        let g = Graph::from_index_edges("I", false, 7, &e);
        let d: Designated = ["u0", "u1", "u2", "v0", "v1", "v2"]
            .iter()
            .enumerate()
            .map(|(i, r)| (r.to_string(), i.to_string()))
            .collect();
        (g, d)
    }

    #[test]
    fn replacement_counts() {
        let (ind, d) = toy_indicator();
        let k2 = complete_graph(2, false);
        let f = triangle_replacement(&k2, &ind, &d).unwrap();
        assert_eq!((f.vertex_count(), f.edge_count()), (7, 10));
        let p3 = catalog_lookup("path:3").unwrap();
        let f = triangle_replacement(&p3, &ind, &d).unwrap();
        assert_eq!(f.vertex_count(), 3 * 3 + 2);
        // the middle triangle is shared: 2 * 10 - 3 edges
        assert_eq!(f.edge_count(), 17);
        let mut bad = d.clone();
        bad.insert("v0".into(), "6".into());
        assert!(triangle_replacement(&k2, &ind, &bad).is_err());
    }

    #[test]
    fn connectivity() {
        assert_eq!(vertex_connectivity(&complete_graph(5, false)), 4);
        assert_eq!(vertex_connectivity(&cycle_graph(6)), 2);
        assert_eq!(vertex_connectivity(&catalog_lookup("petersen").unwrap()), 3);
        assert_eq!(vertex_connectivity(&catalog_lookup("path:4").unwrap()), 1);
    }

    #[test]
    fn block_maps_exist() {
        let z2 = RingSpec::cyclic(2).unwrap();
        for petersen in [false, true] {
            let images = block_map(petersen).unwrap();
            let b = Arc::new(antichain_block(petersen).unwrap());
            let f = EdgeMapping::from_indices(b, Arc::new(cycle_graph(5)), &images).unwrap();
            assert!(verify_tt(&f, &z2).unwrap().is_tt);
        }
    }
}
