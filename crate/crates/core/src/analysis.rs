//! Graph invariants and predicates around tension-continuous mappings:
//! shortest unbalanced circuits, (weakly) nice graphs, homotens checks,
//! chromatic connectivity, the TT number and TT-perfectness.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cayley::{delta, DEFAULT_SIZE_BUDGET};
use crate::constructions::complete_graph;
use crate::error::{Error, Result};
use crate::generate::{random_graph, simple_graphs};
use crate::graph::{components, enumerate_circuits_bounded, induced_subgraph, underlying_undirected, Graph};
use crate::ring::RingSpec;
use crate::search::{
    detect_induced, find_hom, find_tt, hom_exists, visit_tt, HomOptions, Induced, Obstruction, Outcome,
    TtMethod, TtOptions, VertexMapping, DEFAULT_NODE_BUDGET,
};
use crate::verify::EdgeMapping;

/// Cap on circuits scanned for a directed `g_M`.
pub const CIRCUIT_BUDGET: usize = 2_000_000;
/// Largest vertex count for the subset scans.
pub const SUBSET_VERTEX_BOUND: usize = 20;

/// Length of a shortest `M`-unbalanced circuit (`None` for infinity).
///
/// Only the characteristic `p` matters. An undirected graph is read through
/// its symmetric orientation: loops have length 1, and for `p != 2` every
/// edge with its opposite forms an unbalanced 2-circuit; for `p = 2` the
/// answer is the odd girth.
pub fn g_m(g: &Graph, spec: &RingSpec) -> Result<Option<usize>> {
    let p = spec.characteristic();
    if !g.is_directed() {
        if g.has_loops() {
            return Ok(Some(1));
        }
        if p != 2 {
            return Ok((g.edge_count() > 0).then_some(2));
        }
        return odd_girth(g);
    }
    let circuits = enumerate_circuits_bounded(g, g.vertex_count().max(1), CIRCUIT_BUDGET)?;
    Ok(circuits
        .iter()
        .filter(|c| !spec.int_is_zero(c.imbalance()))
        .map(|c| c.len())
        .min())
}

/// Shortest odd circuit of the underlying undirected graph, by BFS layers.
fn odd_girth(g: &Graph) -> Result<Option<usize>> {
    if g.has_loops() {
        return Ok(Some(1));
    }
    let nbrs = g.undirected_neighbors();
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &nbrs[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                } else if dist[w] == dist[u] {
                    // an edge inside one layer closes an odd closed walk
                    // through s; the shortest such walk is a circuit
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    Ok(best)
}

fn simple_adjacency(g: &Graph) -> Result<Vec<FixedBitSet>> {
    if g.has_loops() {
        return Err(Error::Unsupported(format!("`{}` has loops", g.name())));
    }
    let n = g.vertex_count();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for e in g.edges() {
        adj[e.tail].insert(e.head);
        adj[e.head].insert(e.tail);
    }
    Ok(adj)
}

/// All cliques of the given size, as sorted vertex lists in lexicographic order.
fn cliques_of_size(adj: &[FixedBitSet], size: usize) -> Vec<Vec<usize>> {
    fn extend(adj: &[FixedBitSet], size: usize, cur: &mut Vec<usize>, cand: &FixedBitSet, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(&adj[v]);
            // keep the list increasing
            next.set_range(..v + 1, false);
            cur.push(v);
            extend(adj, size, cur, &next, out);
            cur.pop();
        }
    }
    let n = adj.len();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut out = Vec::new();
    extend(adj, size, &mut Vec::new(), &all, &mut out);
    out
}

/// Size of a largest clique of the underlying simple graph.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let adj = simple_adjacency(g)?;
    fn grow(adj: &[FixedBitSet], size: usize, cand: FixedBitSet, best: &mut usize) {
        if cand.is_clear() {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones(..) <= *best {
            return;
        }
        let mut rest = cand;
        while let Some(v) = rest.minimum() {
            if size + rest.count_ones(..) <= *best {
                return;
            }
            let mut next = rest.clone();
            next.intersect_with(&adj[v]);
            grow(adj, size + 1, next, best);
            rest.set(v, false);
        }
    }
    let mut all = FixedBitSet::with_capacity(adj.len());
    all.insert_range(..);
    let mut best = 0;
    grow(&adj, 0, all, &mut best);
    Ok(best)
}

/// Exact chromatic number of the underlying simple graph.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    simple_adjacency(g)?;
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let simple = underlying_undirected(g);
    let mut k = clique_number(g)?.max(2);
    loop {
        match hom_exists(&simple, &complete_graph(k, false), &HomOptions::default()) {
            Outcome::Yes(_) => return Ok(k),
            Outcome::No => k += 1,
            Outcome::Unknown => {
                return Err(Error::Budget(format!("colouring `{}` with {k} colours", g.name())))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceWitness {
    /// Condition 1: an edge in no triangle.
    Edge([usize; 2]),
    /// Condition 2: a triangle in no `K4`.
    Triangle([usize; 3]),
    /// Condition 3: a `K4` in no `K5`.
    K4([usize; 4]),
    /// Condition 4: two `K4`s not linked by a chain sharing triangles.
    Unlinked([usize; 4], [usize; 4]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceFailure {
    pub condition: u8,
    pub witness: NiceWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceReport {
    pub weakly_nice: bool,
    pub nice: bool,
    /// The first failure of each failing condition.
    pub failures: Vec<NiceFailure>,
}

/// Checks the four clique-saturation conditions on the underlying graph.
///
/// Condition 4 asks for a vertex sequence whose every window of four
/// consecutive vertices is a clique, starting on one `K4` and ending on the
/// other. Consecutive windows are `K4`s sharing a triangle, and a window can
/// be rotated in place by repeating its first vertex after its last, so any
/// triangle of the current `K4` can be carried forward. The condition is
/// therefore connectivity of the graph on `K4`s in which two are adjacent
/// when they share a triangle.
pub fn nice_check(g: &Graph) -> Result<NiceReport> {
    let adj = simple_adjacency(g)?;
    let mut failures = Vec::new();

    let mut edges: Vec<[usize; 2]> = Vec::new();
    for u in 0..adj.len() {
        for v in adj[u].ones().filter(|&v| v > u) {
            edges.push([u, v]);
        }
    }
    if let Some(&[u, v]) = edges.iter().find(|&&[u, v]| adj[u].intersection(&adj[v]).next().is_none()) {
        failures.push(NiceFailure {
            condition: 1,
            witness: NiceWitness::Edge([u, v]),
        });
    }

    let triangles = cliques_of_size(&adj, 3);
    let common = |vs: &[usize]| -> FixedBitSet {
        let mut s = adj[vs[0]].clone();
        for &v in &vs[1..] {
            s.intersect_with(&adj[v]);
        }
        s
    };
    if let Some(t) = triangles.iter().find(|t| common(t).is_clear()) {
        failures.push(NiceFailure {
            condition: 2,
            witness: NiceWitness::Triangle([t[0], t[1], t[2]]),
        });
    }

    let k4s = cliques_of_size(&adj, 4);
    if let Some(k) = k4s.iter().find(|k| common(k).is_clear()) {
        failures.push(NiceFailure {
            condition: 3,
            witness: NiceWitness::K4([k[0], k[1], k[2], k[3]]),
        });
    }

    let labels = k4_components(&k4s);
    if let Some(j) = (1..k4s.len()).find(|&j| labels[j] != labels[0]) {
        let a = &k4s[0];
        let b = &k4s[j];
        failures.push(NiceFailure {
            condition: 4,
            witness: NiceWitness::Unlinked([a[0], a[1], a[2], a[3]], [b[0], b[1], b[2], b[3]]),
        });
    }

    let failed = |c: u8| failures.iter().any(|f| f.condition == c);
    let weakly_nice = !failed(1) && !failed(2) && !failed(4);
    let nice = weakly_nice && !failed(3);
    Ok(NiceReport {
        weakly_nice,
        nice,
        failures,
    })
}

/// Component label of every `K4` in the triangle-sharing graph.
fn k4_components(k4s: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..k4s.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut by_triangle: HashMap<[usize; 3], usize> = HashMap::new();
    for (i, k) in k4s.iter().enumerate() {
        for skip in 0..4 {
            let t: Vec<usize> = (0..4).filter(|&j| j != skip).map(|j| k[j]).collect();
            let key = [t[0], t[1], t[2]];
            match by_triangle.get(&key) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
                None => {
                    by_triangle.insert(key, i);
                }
            }
        }
    }
    (0..k4s.len()).map(|i| find(&mut parent, i)).collect()
}

/// Re-checks that a reported failure violates its condition.
pub fn nice_failure_holds(g: &Graph, f: &NiceFailure) -> Result<bool> {
    let adj = simple_adjacency(g)?;
    let is_clique = |vs: &[usize]| {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && adj[a].contains(b)))
    };
    let extendable = |vs: &[usize]| (0..adj.len()).any(|x| !vs.contains(&x) && vs.iter().all(|&v| adj[v].contains(x)));
    Ok(match &f.witness {
        NiceWitness::Edge(e) => f.condition == 1 && is_clique(e) && !extendable(e),
        NiceWitness::Triangle(t) => f.condition == 2 && is_clique(t) && !extendable(t),
        NiceWitness::K4(k) => f.condition == 3 && is_clique(k) && !extendable(k),
        NiceWitness::Unlinked(a, b) => {
            if f.condition != 4 || !is_clique(a) || !is_clique(b) {
                return Ok(false);
            }
            let k4s = cliques_of_size(&adj, 4);
            let mut sa = a.to_vec();
            let mut sb = b.to_vec();
            sa.sort_unstable();
            sb.sort_unstable();
            let labels = k4_components(&k4s);
            let ia = k4s.iter().position(|k| *k == sa);
            let ib = k4s.iter().position(|k| *k == sb);
            matches!((ia, ib), (Some(i), Some(j)) if labels[i] != labels[j])
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomotensVerdict {
    Holds,
    /// No counterexample among the targets tried; never a proof.
    HoldsBounded,
    Fails,
    Unknown,
}

impl HomotensVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            HomotensVerdict::Holds => "holds",
            HomotensVerdict::HoldsBounded => "holds-bounded",
            HomotensVerdict::Fails => "fails",
            HomotensVerdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LeftHomotensReport {
    pub spec: RingSpec,
    pub verdict: HomotensVerdict,
    pub targets_checked: usize,
    pub mappings_checked: u64,
    /// A non-induced tension-continuous mapping, on failure.
    pub witness: Option<EdgeMapping>,
    pub obstructions: Vec<Obstruction>,
}

/// Looks for a tension-continuous mapping from `g` that is not induced, over
/// the supplied targets and then every simple graph with at most
/// `target_bound` vertices (directed ones when `g` is directed).
pub fn left_homotens_check(
    g: Arc<Graph>,
    spec: &RingSpec,
    target_bound: usize,
    supplied: &[Arc<Graph>],
    opts: &TtOptions,
) -> Result<LeftHomotensReport> {
    let mut targets: Vec<Arc<Graph>> = supplied.to_vec();
    for n in 1..=target_bound {
        targets.extend(simple_graphs(n, g.is_directed())?.into_iter().map(Arc::new));
    }
    let opts = TtOptions {
        method: TtMethod::Backtrack,
        ..opts.clone()
    };
    let mut report = LeftHomotensReport {
        spec: spec.clone(),
        verdict: HomotensVerdict::HoldsBounded,
        targets_checked: 0,
        mappings_checked: 0,
        witness: None,
        obstructions: Vec::new(),
    };
    for h in targets {
        if h.has_loops() || (h.edge_count() == 0 && g.edge_count() > 0) {
            continue;
        }
        report.targets_checked += 1;
        let mut failure: Option<(EdgeMapping, Vec<Obstruction>)> = None;
        let mut err = None;
        let mut count = 0u64;
        let complete = visit_tt(g.clone(), h.clone(), spec, &opts, &mut |f| {
            count += 1;
            match detect_induced(&f) {
                Ok(Induced::By(_)) => ControlFlow::Continue(()),
                Ok(Induced::NotInduced(obs)) => {
                    failure = Some((f, obs));
                    ControlFlow::Break(())
                }
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        })?;
        report.mappings_checked += count;
        if let Some(e) = err {
            return Err(e);
        }
        if let Some((f, obs)) = failure {
            report.verdict = HomotensVerdict::Fails;
            report.witness = Some(f);
            report.obstructions = obs;
            return Ok(report);
        }
        if !complete {
            report.verdict = HomotensVerdict::Unknown;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct RightHomotensReport {
    pub spec: RingSpec,
    pub verdict: HomotensVerdict,
    pub delta_vertices: usize,
    pub delta_edges: usize,
    /// A homomorphism `Δ_M(H) -> H`, when one exists.
    pub hom: Option<VertexMapping>,
}

/// `H` is right `M`-homotens exactly when `Δ_M(H)` maps homomorphically to `H`.
pub fn right_homotens_check(h: Arc<Graph>, spec: &RingSpec, size_budget: usize, node_budget: u64) -> Result<RightHomotensReport> {
    let d = delta(&h, spec, size_budget)?;
    let opts = HomOptions {
        node_budget,
        ..HomOptions::default()
    };
    let outcome = find_hom(d.graph_arc().clone(), h, &opts);
    let verdict = match &outcome {
        Outcome::Yes(_) => HomotensVerdict::Holds,
        Outcome::No => HomotensVerdict::Fails,
        Outcome::Unknown => HomotensVerdict::Unknown,
    };
    Ok(RightHomotensReport {
        spec: spec.clone(),
        verdict,
        delta_vertices: d.graph().vertex_count(),
        delta_edges: d.graph().edge_count(),
        hom: outcome.witness().cloned(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromConnReport {
    pub k: usize,
    pub holds: bool,
    /// A separating set inducing fewer than `k` colours (smallest first).
    pub witness: Option<Vec<usize>>,
    pub witness_chromatic_number: Option<usize>,
}

/// Whether every vertex set whose removal disconnects `g` induces a subgraph
/// of chromatic number at least `k`.
pub fn chromatic_connectivity(g: &Graph, k: usize) -> Result<ChromConnReport> {
    let n = g.vertex_count();
    if n > SUBSET_VERTEX_BOUND {
        return Err(Error::Budget(format!("{n} vertices exceed the subset bound {SUBSET_VERTEX_BOUND}")));
    }
    simple_adjacency(g)?;
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let inside: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        if components(&induced_subgraph(g, &outside)).count < 2 {
            continue;
        }
        let chi = chromatic_number(&induced_subgraph(g, &inside))?;
        if chi < k {
            return Ok(ChromConnReport {
                k,
                holds: false,
                witness: Some(inside),
                witness_chromatic_number: Some(chi),
            });
        }
    }
    Ok(ChromConnReport {
        k,
        holds: true,
        witness: None,
        witness_chromatic_number: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiTt {
    Exact(usize),
    /// No loopless target with at most this many vertices works.
    Above(usize),
    /// The search for this many vertices ran out of budget; smaller counts
    /// were ruled out.
    Unknown(usize),
}

impl ChiTt {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            ChiTt::Exact(n) => Some(n),
            _ => None,
        }
    }
}

/// The least `n` such that `g` maps tension-continuously to a loopless graph
/// on `n` vertices. Tensions agree on parallel edges and mappings compose
/// with subgraph inclusions, so the complete graph on `n` vertices
/// (symmetric complete digraph for directed `g`) decides each `n`.
pub fn chi_tt(g: Arc<Graph>, spec: &RingSpec, n_max: usize, opts: &TtOptions) -> Result<ChiTt> {
    if g.edge_count() == 0 {
        return Ok(if n_max >= 1 { ChiTt::Exact(1) } else { ChiTt::Above(n_max) });
    }
    if g.has_loops() {
        // a loop can only go to a loop
        return Ok(ChiTt::Above(n_max));
    }
    for n in 2..=n_max {
        let h = Arc::new(complete_graph(n, g.is_directed()));
        match find_tt(g.clone(), h, spec, opts)? {
            Outcome::Yes(_) => return Ok(ChiTt::Exact(n)),
            Outcome::No => {}
            Outcome::Unknown => return Ok(ChiTt::Unknown(n)),
        }
    }
    Ok(ChiTt::Above(n_max))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiRatioReport {
    pub chi: usize,
    pub chi_tt: ChiTt,
    pub characteristic: u64,
    /// `χ < p · χ_TT`, when both sides are known.
    pub holds: Option<bool>,
    pub chi_tt_integers: Option<ChiTt>,
    /// `χ < 2 · χ_TT` over `Z`, when that search completed.
    pub holds_integers: Option<bool>,
}

/// Compares the chromatic number with the TT number over a finite ring, and
/// over `Z` with the backtracking search under `z_node_budget` (skipped when 0).
pub fn chi_ratio_check(g: Arc<Graph>, spec: &RingSpec, n_max: usize, z_node_budget: u64) -> Result<ChiRatioReport> {
    if !spec.is_finite() {
        return Err(Error::InfiniteRing(spec.to_string()));
    }
    let chi = chromatic_number(&g)?;
    let chi_tt_value = chi_tt(g.clone(), spec, n_max, &TtOptions::default())?;
    let p = spec.characteristic() as usize;
    let holds = chi_tt_value.exact().map(|t| chi < p * t);
    let (chi_tt_integers, holds_integers) = if z_node_budget > 0 {
        let opts = TtOptions {
            method: TtMethod::Backtrack,
            node_budget: z_node_budget,
            ..TtOptions::default()
        };
        let z = chi_tt(g, &RingSpec::integers(), n_max, &opts)?;
        (Some(z), z.exact().map(|t| chi < 2 * t))
    } else {
        (None, None)
    };
    Ok(ChiRatioReport {
        chi,
        chi_tt: chi_tt_value,
        characteristic: p as u64,
        holds,
        chi_tt_integers,
        holds_integers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TtPerfectReport {
    pub perfect: bool,
    /// A smallest induced subgraph with `χ_TT2 > ω`; it is critical.
    pub witness: Option<Vec<usize>>,
    pub subsets_checked: usize,
    /// Some subset could not be settled within the node budget.
    pub unknown: bool,
}

/// `χ_TT2(H) <= ω(H)` decided as `H -> Δ_Z2(K_ω)`.
fn tt_clique_bound(h: &Graph, cache: &HashMap<usize, Graph>, node_budget: u64) -> Result<Outcome<()>> {
    if h.edge_count() == 0 {
        return Ok(Outcome::Yes(()));
    }
    let omega = clique_number(h)?;
    let target = cache.get(&omega).expect("every clique size is cached");
    let opts = HomOptions {
        node_budget,
        ..HomOptions::default()
    };
    Ok(hom_exists(h, target, &opts).map(|_| ()))
}

fn undirected_simple(g: &Graph) -> Result<Graph> {
    simple_adjacency(g)?;
    Ok(if g.is_directed() { underlying_undirected(g) } else { g.clone() })
}

/// Checks every induced subgraph, smallest first.
pub fn tt_perfect(g: &Graph, node_budget: u64) -> Result<TtPerfectReport> {
    let g = undirected_simple(g)?;
    let n = g.vertex_count();
    if n > SUBSET_VERTEX_BOUND {
        return Err(Error::Budget(format!("{n} vertices exceed the subset bound {SUBSET_VERTEX_BOUND}")));
    }
    let z2 = RingSpec::cyclic(2)?;
    let omega = clique_number(&g)?;
    let mut cache = HashMap::new();
    for w in 1..=omega.max(1) {
        cache.insert(w, delta(&complete_graph(w, false), &z2, DEFAULT_SIZE_BUDGET)?.graph().clone());
    }
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let results: Vec<Result<Outcome<()>>> = masks
        .par_iter()
        .map(|&mask| {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            tt_clique_bound(&induced_subgraph(&g, &subset), &cache, node_budget)
        })
        .collect();
    let mut unknown = false;
    for (&mask, r) in masks.iter().zip(results) {
        match r? {
            Outcome::Yes(()) => {}
            Outcome::No => {
                return Ok(TtPerfectReport {
                    perfect: false,
                    witness: Some((0..n).filter(|&v| mask >> v & 1 == 1).collect()),
                    subsets_checked: masks.len(),
                    unknown,
                })
            }
            Outcome::Unknown => unknown = true,
        }
    }
    Ok(TtPerfectReport {
        perfect: !unknown,
        witness: None,
        subsets_checked: masks.len(),
        unknown,
    })
}

/// Not TT-perfect, while every proper induced subgraph is.
pub fn is_critical(g: &Graph, node_budget: u64) -> Result<bool> {
    let report = tt_perfect(g, node_budget)?;
    if report.unknown {
        return Err(Error::Budget("some induced subgraph was not settled".into()));
    }
    Ok(matches!(report.witness, Some(w) if w.len() == g.vertex_count()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct NiceRate {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub weakly_nice: usize,
    pub nice: usize,
}

impl NiceRate {
    pub fn weakly_nice_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.weakly_nice as f64 / self.trials as f64
        }
    }

    pub fn nice_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.nice as f64 / self.trials as f64
        }
    }
}

/// Empirical fractions of (weakly) nice graphs among seeded `G(n, p)`
/// samples. Trial `i` draws from stream `i` of the seeded generator, so the
/// result does not depend on scheduling.
pub fn sample_nice_rate(n: usize, p: f64, trials: usize, seed: u64) -> Result<NiceRate> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} is not in [0, 1]")));
    }
    let reports: Vec<NiceReport> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            nice_check(&random_graph(n, p, false, &mut rng, format!("G({n},{p})#{i}")))
        })
        .collect::<Result<_>>()?;
    Ok(NiceRate {
        n,
        p,
        trials,
        seed,
        weakly_nice: reports.iter().filter(|r| r.weakly_nice).count(),
        nice: reports.iter().filter(|r| r.nice).count(),
    })
}

pub const DEFAULT_ANALYSIS_BUDGET: u64 = DEFAULT_NODE_BUDGET;
