//! Exact searches: homomorphisms and antihomomorphisms, tension-continuous
//! mappings (by backtracking or through the free Cayley graph), and
//! recognising mappings induced by vertex maps.
//!
//! Every search runs under a node budget. Running out is reported as
//! [`Outcome::Unknown`], never as [`Outcome::No`].

use std::ops::ControlFlow;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::cayley::{delta_arc, DEFAULT_SIZE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{components, spanning_forest, CircuitSplit, Graph};
use crate::ring::RingSpec;
use crate::verify::{verify_tt, EdgeImage, EdgeMapping};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Yes(T),
    No,
    /// The budget ran out before the question was settled.
    Unknown,
}

impl<T> Outcome<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Outcome::No)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Outcome::Unknown)
    }

    pub fn witness(&self) -> Option<&T> {
        match self {
            Outcome::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Yes(w) => Outcome::Yes(f(w)),
            Outcome::No => Outcome::No,
            Outcome::Unknown => Outcome::Unknown,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Outcome::Yes(_) => "yes",
            Outcome::No => "no",
            Outcome::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    /// False when the budget or the item limit cut the enumeration short.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Exact(u128),
    AtLeast(u128),
}

impl Count {
    pub fn exact(&self) -> Option<u128> {
        match *self {
            Count::Exact(n) => Some(n),
            Count::AtLeast(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomKind {
    Hom,
    Anti,
}

impl HomKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            HomKind::Hom => "homomorphism",
            HomKind::Anti => "antihomomorphism",
        }
    }
}

/// A vertex map together with the kind of edge preservation it claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMapping {
    pub source: Arc<Graph>,
    pub target: Arc<Graph>,
    pub map: Vec<usize>,
    pub kind: HomKind,
}

impl VertexMapping {
    pub fn is_valid(&self) -> bool {
        if self.map.len() != self.source.vertex_count()
            || self.map.iter().any(|&x| x >= self.target.vertex_count())
        {
            return false;
        }
        let arcs = Arcs::of(&self.target);
        let anti = self.kind == HomKind::Anti;
        self.source.edges().iter().all(|e| {
            let (x, y) = (self.map[e.tail], self.map[e.head]);
            if !self.source.is_directed() {
                arcs.both[x].contains(y)
            } else if anti {
                arcs.inn[x].contains(y)
            } else {
                arcs.out[x].contains(y)
            }
        })
    }

    /// The edge mapping `h♯` (or `h♭`).
    pub fn induced_mapping(&self) -> Result<EdgeMapping> {
        EdgeMapping::induced_by(
            self.source.clone(),
            self.target.clone(),
            &self.map,
            self.kind == HomKind::Anti,
        )
    }
}

/// Out-, in- and two-way neighbourhoods of a target. Undirected targets are
/// read through their symmetric orientation, so all three coincide.
struct Arcs {
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
    both: Vec<FixedBitSet>,
}

impl Arcs {
    fn of(h: &Graph) -> Arcs {
        let n = h.vertex_count();
        let mut out = vec![FixedBitSet::with_capacity(n); n];
        let mut inn = vec![FixedBitSet::with_capacity(n); n];
        for e in h.edges() {
            out[e.tail].insert(e.head);
            inn[e.head].insert(e.tail);
            if !h.is_directed() {
                out[e.head].insert(e.tail);
                inn[e.tail].insert(e.head);
            }
        }
        let both = out
            .iter()
            .zip(&inn)
            .map(|(o, i)| {
                let mut b = o.clone();
                b.intersect_with(i);
                b
            })
            .collect();
        Arcs { out, inn, both }
    }

    fn set(&self, req: Req, x: usize) -> &FixedBitSet {
        match req {
            Req::Out => &self.out[x],
            Req::In => &self.inn[x],
            Req::Both => &self.both[x],
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Req {
    Out,
    In,
    Both,
}

#[derive(Clone, Debug)]
pub struct HomOptions {
    pub anti: bool,
    pub node_budget: u64,
    /// Pre-assigned `(source vertex, target vertex)` pairs.
    pub fixed: Vec<(usize, usize)>,
}

impl Default for HomOptions {
    fn default() -> Self {
        HomOptions {
            anti: false,
            node_budget: DEFAULT_NODE_BUDGET,
            fixed: Vec::new(),
        }
    }
}

impl HomOptions {
    pub fn anti() -> HomOptions {
        HomOptions {
            anti: true,
            ..HomOptions::default()
        }
    }
}

enum Flow {
    Exhausted,
    Stopped,
    OutOfBudget,
}

/// Smallest-last order; its reverse puts the densest core first.
fn degeneracy_rank(g: &Graph) -> Vec<usize> {
    let nbrs = g.undirected_neighbors();
    let n = g.vertex_count();
    let mut deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for &w in &nbrs[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut rank = vec![0; n];
    for (pos, &v) in order.iter().rev().enumerate() {
        rank[v] = pos;
    }
    rank
}

struct HomSearch<'a> {
    arcs: &'a Arcs,
    cons: Vec<Vec<(usize, Req)>>,
    rank: Vec<usize>,
    domains: Vec<FixedBitSet>,
    assigned: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
}

fn search_homs(g: &Graph, h: &Graph, opts: &HomOptions, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> Flow {
    let n = g.vertex_count();
    let t = h.vertex_count();
    let arcs = Arcs::of(h);
    let mut cons = vec![Vec::new(); n];
    let mut domains = vec![
        {
            let mut all = FixedBitSet::with_capacity(t);
            all.insert_range(..);
            all
        };
        n
    ];
    for e in g.edges() {
        if e.is_loop() {
            let looped: Vec<usize> = (0..t).filter(|&x| arcs.both[x].contains(x)).collect();
            let mut allowed = FixedBitSet::with_capacity(t);
            allowed.extend(looped);
            domains[e.tail].intersect_with(&allowed);
            continue;
        }
        let (fwd, back) = if !g.is_directed() {
            (Req::Both, Req::Both)
        } else if opts.anti {
            (Req::In, Req::Out)
        } else {
            (Req::Out, Req::In)
        };
        cons[e.tail].push((e.head, fwd));
        cons[e.head].push((e.tail, back));
    }
    for &(v, x) in &opts.fixed {
        if v < n {
            let keep = x < t && domains[v].contains(x);
            domains[v].clear();
            if keep {
                domains[v].insert(x);
            }
        }
    }
    if domains.iter().any(|d| d.is_clear()) {
        return Flow::Exhausted;
    }
    let mut s = HomSearch {
        arcs: &arcs,
        cons,
        rank: degeneracy_rank(g),
        domains,
        assigned: vec![None; n],
        nodes: 0,
        budget: opts.node_budget,
    };
    s.rec(0, visit)
}

impl HomSearch<'_> {
    fn rec(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> Flow {
        let n = self.assigned.len();
        if depth == n {
            let map: Vec<usize> = self.assigned.iter().map(|x| x.expect("complete")).collect();
            return match visit(&map) {
                ControlFlow::Continue(()) => Flow::Exhausted,
                ControlFlow::Break(()) => Flow::Stopped,
            };
        }
        let u = (0..n)
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| (self.domains[v].count_ones(..), self.rank[v]))
            .expect("an unassigned vertex remains");
        let values: Vec<usize> = self.domains[u].ones().collect();
        for x in values {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Flow::OutOfBudget;
            }
            self.assigned[u] = Some(x);
            let mut trail: Vec<(usize, FixedBitSet)> = Vec::new();
            let mut ok = true;
            for i in 0..self.cons[u].len() {
                let (w, req) = self.cons[u][i];
                if self.assigned[w].is_some() {
                    continue;
                }
                trail.push((w, self.domains[w].clone()));
                self.domains[w].intersect_with(self.arcs.set(req, x));
                if self.domains[w].is_clear() {
                    ok = false;
                    break;
                }
            }
            let flow = if ok { self.rec(depth + 1, visit) } else { Flow::Exhausted };
            for (w, d) in trail.into_iter().rev() {
                self.domains[w] = d;
            }
            self.assigned[u] = None;
            match flow {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        Flow::Exhausted
    }
}

fn kind_of(opts: &HomOptions) -> HomKind {
    if opts.anti {
        HomKind::Anti
    } else {
        HomKind::Hom
    }
}

/// First homomorphism (or antihomomorphism) `g -> h` found.
pub fn find_hom(g: Arc<Graph>, h: Arc<Graph>, opts: &HomOptions) -> Outcome<VertexMapping> {
    let mut found = None;
    let flow = search_homs(&g, &h, opts, &mut |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    match (flow, found) {
        (_, Some(map)) => Outcome::Yes(VertexMapping {
            source: g,
            target: h,
            map,
            kind: kind_of(opts),
        }),
        (Flow::OutOfBudget, None) => Outcome::Unknown,
        _ => Outcome::No,
    }
}

/// Existence only, without wrapping the witness.
pub fn hom_exists(g: &Graph, h: &Graph, opts: &HomOptions) -> Outcome<Vec<usize>> {
    let mut found = None;
    let flow = search_homs(g, h, opts, &mut |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    match (flow, found) {
        (_, Some(map)) => Outcome::Yes(map),
        (Flow::OutOfBudget, None) => Outcome::Unknown,
        _ => Outcome::No,
    }
}

pub fn enumerate_homs(g: Arc<Graph>, h: Arc<Graph>, opts: &HomOptions, limit: usize) -> Enumeration<VertexMapping> {
    let mut maps = Vec::new();
    let flow = search_homs(&g, &h, opts, &mut |m| {
        maps.push(m.to_vec());
        if maps.len() >= limit {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    let kind = kind_of(opts);
    Enumeration {
        items: maps
            .into_iter()
            .map(|map| VertexMapping {
                source: g.clone(),
                target: h.clone(),
                map,
                kind,
            })
            .collect(),
        complete: matches!(flow, Flow::Exhausted),
    }
}

pub fn count_homs(g: &Graph, h: &Graph, opts: &HomOptions) -> Count {
    let mut n: u128 = 0;
    let flow = search_homs(g, h, opts, &mut |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    match flow {
        Flow::Exhausted => Count::Exact(n),
        _ => Count::AtLeast(n),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TtMethod {
    /// Homomorphism search into `Δ_M(H)`.
    Delta,
    /// Edge-by-edge backtracking with circuit pruning.
    Backtrack,
    /// `Delta` when the ring is finite and `Δ` fits the size budget and no
    /// edges are fixed, otherwise `Backtrack`.
    Auto,
}

impl TtMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            TtMethod::Delta => "delta",
            TtMethod::Backtrack => "backtrack",
            TtMethod::Auto => "auto",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TtOptions {
    pub method: TtMethod,
    pub node_budget: u64,
    pub size_budget: usize,
    /// Pre-assigned `(source edge, image)` pairs (backtracking only).
    pub fixed: Vec<(usize, EdgeImage)>,
}

impl Default for TtOptions {
    fn default() -> Self {
        TtOptions {
            method: TtMethod::Auto,
            node_budget: DEFAULT_NODE_BUDGET,
            size_budget: DEFAULT_SIZE_BUDGET,
            fixed: Vec::new(),
        }
    }
}

impl TtOptions {
    pub fn with_method(method: TtMethod) -> TtOptions {
        TtOptions {
            method,
            ..TtOptions::default()
        }
    }
}

fn check_pair(g: &Graph, h: &Graph) -> Result<()> {
    if g.is_directed() != h.is_directed() {
        return Err(Error::GraphMismatch(format!(
            "`{}` and `{}` must both be directed or both undirected",
            g.name(),
            h.name()
        )));
    }
    Ok(())
}

fn resolve_method(h: &Graph, spec: &RingSpec, opts: &TtOptions) -> TtMethod {
    match opts.method {
        TtMethod::Auto => {
            let fits = spec
                .cardinality()
                .and_then(|c| c.checked_pow(h.vertex_count() as u32))
                .is_some_and(|size| size <= opts.size_budget as u128);
            if fits && opts.fixed.is_empty() {
                TtMethod::Delta
            } else {
                TtMethod::Backtrack
            }
        }
        m => m,
    }
}

/// The candidate images of one edge: every target edge, and for undirected
/// graphs over rings of characteristic other than 2 also every reversed edge.
pub fn image_choices(h: &Graph, spec: &RingSpec) -> Vec<EdgeImage> {
    let signed = !h.is_directed() && !spec.is_power_of_z2();
    let mut out = Vec::new();
    for e in 0..h.edge_count() {
        out.push(EdgeImage::plain(e));
        if signed {
            out.push(EdgeImage::flipped(e));
        }
    }
    out
}

struct TtSearch<'a> {
    h: &'a Graph,
    spec: &'a RingSpec,
    choices: Vec<Vec<EdgeImage>>,
    circuits: Vec<CircuitSplit>,
    closing: Vec<Vec<usize>>,
    current: Vec<EdgeImage>,
    net: Vec<i64>,
    nodes: u64,
    budget: u64,
}

impl TtSearch<'_> {
    fn new<'a>(g: &Graph, h: &'a Graph, spec: &'a RingSpec, opts: &TtOptions) -> Result<TtSearch<'a>> {
        let m = g.edge_count();
        let all = image_choices(h, spec);
        let mut choices = vec![all; m];
        for &(e, img) in &opts.fixed {
            if e >= m || img.edge >= h.edge_count() || (img.reversed && h.is_directed()) {
                return Err(Error::InvalidMapping(format!("fixed image for edge {e} is out of range")));
            }
            choices[e] = vec![img];
        }
        let circuits = spanning_forest(g).circuits;
        let mut closing = vec![Vec::new(); m];
        for (i, c) in circuits.iter().enumerate() {
            let last = c.edges.iter().copied().max().expect("circuits are nonempty");
            closing[last].push(i);
        }
        Ok(TtSearch {
            h,
            spec,
            choices,
            circuits,
            closing,
            current: vec![EdgeImage::plain(0); m],
            net: vec![0; h.vertex_count()],
            nodes: 0,
            budget: opts.node_budget,
        })
    }

    /// The image of the circuit's `±1` flow is conserved.
    fn circuit_ok(&mut self, c: usize) -> bool {
        let mut touched = Vec::new();
        for (e, fwd) in self.circuits[c].steps() {
            let img = self.current[e];
            let t = self.h.edge(img.edge);
            if t.is_loop() {
                continue;
            }
            let (x, y) = if img.reversed { (t.head, t.tail) } else { (t.tail, t.head) };
            let s = if fwd { 1 } else { -1 };
            self.net[y] += s;
            self.net[x] -= s;
            touched.push(x);
            touched.push(y);
        }
        let mut ok = true;
        for &v in &touched {
            if self.net[v] != 0 {
                ok &= self.spec.int_is_zero(self.net[v]);
                self.net[v] = 0;
            }
        }
        ok
    }

    fn rec(&mut self, i: usize, visit: &mut dyn FnMut(&[EdgeImage]) -> ControlFlow<()>) -> Flow {
        if i == self.current.len() {
            return match visit(&self.current) {
                ControlFlow::Continue(()) => Flow::Exhausted,
                ControlFlow::Break(()) => Flow::Stopped,
            };
        }
        for k in 0..self.choices[i].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Flow::OutOfBudget;
            }
            self.current[i] = self.choices[i][k];
            let mut ok = true;
            for j in 0..self.closing[i].len() {
                let c = self.closing[i][j];
                if !self.circuit_ok(c) {
                    ok = false;
                    break;
                }
            }
            if ok {
                match self.rec(i + 1, visit) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
        }
        Flow::Exhausted
    }
}

fn search_tt_backtrack(
    g: &Graph,
    h: &Graph,
    spec: &RingSpec,
    opts: &TtOptions,
    visit: &mut dyn FnMut(&[EdgeImage]) -> ControlFlow<()>,
) -> Result<Flow> {
    let mut s = TtSearch::new(g, h, spec, opts)?;
    if g.edge_count() > 0 && s.choices.iter().any(Vec::is_empty) {
        return Ok(Flow::Exhausted);
    }
    Ok(s.rec(0, visit))
}

/// Homomorphisms into `Δ_M(h)` with every component's first vertex pinned
/// to zero. Translations are automorphisms that leave the pulled-back
/// mapping unchanged, so nothing is lost.
fn search_tt_delta(
    g: &Arc<Graph>,
    h: &Arc<Graph>,
    spec: &RingSpec,
    opts: &TtOptions,
    visit: &mut dyn FnMut(EdgeMapping) -> ControlFlow<()>,
) -> Result<Flow> {
    if !opts.fixed.is_empty() {
        return Err(Error::Unsupported("fixed edges require the backtracking method".into()));
    }
    let d = delta_arc(h.clone(), spec, opts.size_budget)?;
    let comps = components(g);
    let fixed: Vec<(usize, usize)> = comps.parts().iter().map(|p| (p[0], 0)).collect();
    let hom_opts = HomOptions {
        anti: false,
        node_budget: opts.node_budget,
        fixed,
    };
    let mut err = None;
    let flow = search_homs(g, d.graph(), &hom_opts, &mut |m| match d.pull_hom_to_tt(g.clone(), m) {
        Ok(f) => visit(f),
        Err(e) => {
            err = Some(e);
            ControlFlow::Break(())
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(flow),
    }
}

/// A tension-continuous mapping `g -> h` over `spec`, if one exists.
pub fn find_tt(g: Arc<Graph>, h: Arc<Graph>, spec: &RingSpec, opts: &TtOptions) -> Result<Outcome<EdgeMapping>> {
    let found = enumerate_tt(g, h, spec, opts, 1)?;
    let exhausted = found.complete;
    Ok(match found.items.into_iter().next() {
        Some(f) => Outcome::Yes(f),
        None if exhausted => Outcome::No,
        None => Outcome::Unknown,
    })
}

/// All tension-continuous mappings, in canonical order, stopping after
/// `limit` (the result is then marked incomplete). Through `Δ` only
/// one mapping per class of parallel target edges is produced.
pub fn enumerate_tt(
    g: Arc<Graph>,
    h: Arc<Graph>,
    spec: &RingSpec,
    opts: &TtOptions,
    limit: usize,
) -> Result<Enumeration<EdgeMapping>> {
    check_pair(&g, &h)?;
    let mut items = Vec::new();
    let mut truncated = false;
    let flow = match resolve_method(&h, spec, opts) {
        TtMethod::Delta => search_tt_delta(&g, &h, spec, opts, &mut |f| {
            items.push(f);
            if items.len() >= limit {
                truncated = true;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?,
        _ => {
            let mut raw = Vec::new();
            let flow = search_tt_backtrack(&g, &h, spec, opts, &mut |imgs| {
                raw.push(imgs.to_vec());
                if raw.len() >= limit {
                    truncated = true;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            })?;
            for imgs in raw {
                items.push(EdgeMapping::new(g.clone(), h.clone(), imgs)?);
            }
            flow
        }
    };
    Ok(Enumeration {
        items,
        complete: matches!(flow, Flow::Exhausted) && !truncated,
    })
}

/// Streams tension-continuous mappings found by backtracking to `visit`,
/// in canonical order. Returns whether the search space was exhausted.
pub fn visit_tt(
    g: Arc<Graph>,
    h: Arc<Graph>,
    spec: &RingSpec,
    opts: &TtOptions,
    visit: &mut dyn FnMut(EdgeMapping) -> ControlFlow<()>,
) -> Result<bool> {
    check_pair(&g, &h)?;
    let flow = search_tt_backtrack(&g, &h, spec, opts, &mut |imgs| {
        let f = EdgeMapping::new(g.clone(), h.clone(), imgs.to_vec()).expect("search yields valid images");
        visit(f)
    })?;
    Ok(matches!(flow, Flow::Exhausted))
}

/// Number of tension-continuous mappings found by backtracking.
pub fn count_tt(g: &Graph, h: &Graph, spec: &RingSpec, opts: &TtOptions) -> Result<Count> {
    check_pair(g, h)?;
    let mut n: u128 = 0;
    let flow = search_tt_backtrack(g, h, spec, opts, &mut |_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(match flow {
        Flow::Exhausted => Count::Exact(n),
        _ => Count::AtLeast(n),
    })
}

/// Largest number of candidate mappings [`enumerate_tt_count`] will try.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 20_000_000;

/// Exact count by trying every edge mapping and running [`verify_tt`] on it.
pub fn enumerate_tt_count(g: Arc<Graph>, h: Arc<Graph>, spec: &RingSpec, budget: u128) -> Result<u128> {
    check_pair(&g, &h)?;
    let choices = image_choices(&h, spec);
    let m = g.edge_count() as u32;
    let k = choices.len() as u128;
    let total = k
        .checked_pow(m)
        .filter(|&t| t <= budget)
        .ok_or_else(|| Error::Budget(format!("{k}^{m} candidate mappings exceed {budget}")))?;
    let total = total as u64;
    (0..total)
        .into_par_iter()
        .map(|idx| {
            let mut rest = idx as u128;
            let mut images = vec![EdgeImage::plain(0); m as usize];
            for img in images.iter_mut().rev() {
                *img = choices[(rest % k) as usize];
                rest /= k;
            }
            let f = EdgeMapping::new(g.clone(), h.clone(), images)?;
            Ok(u128::from(verify_tt(&f, spec)?.is_tt))
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// Two edges whose images force different values on one vertex (the same
/// edge twice for a loop sent to a non-loop).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: HomKind,
    pub first_edge: usize,
    pub second_edge: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Induced {
    By(VertexMapping),
    NotInduced(Vec<Obstruction>),
}

impl Induced {
    pub fn is_induced(&self) -> bool {
        matches!(self, Induced::By(_))
    }
}

/// Decides whether `f = g♯` or `f = g♭` for some vertex map `g`, up to the
/// choice among parallel target edges. Undirected mappings are compared as
/// maps of unordered edges.
pub fn detect_induced(f: &EdgeMapping) -> Result<Induced> {
    let g = f.source();
    let h = f.target();
    if h.vertex_count() == 0 && g.vertex_count() > 0 {
        return Err(Error::InvalidParameter("target has no vertices".into()));
    }
    if g.is_directed() {
        let mut obstructions = Vec::new();
        for kind in [HomKind::Hom, HomKind::Anti] {
            match propagate_directed(f, kind) {
                Ok(map) => {
                    return Ok(Induced::By(VertexMapping {
                        source: f.source_arc().clone(),
                        target: f.target_arc().clone(),
                        map,
                        kind,
                    }))
                }
                Err(o) => obstructions.push(o),
            }
        }
        Ok(Induced::NotInduced(obstructions))
    } else {
        propagate_undirected(f).map(|r| match r {
            Ok(map) => Induced::By(VertexMapping {
                source: f.source_arc().clone(),
                target: f.target_arc().clone(),
                map,
                kind: HomKind::Hom,
            }),
            Err(obs) => Induced::NotInduced(obs),
        })
    }
}

fn propagate_directed(f: &EdgeMapping, kind: HomKind) -> std::result::Result<Vec<usize>, Obstruction> {
    let g = f.source();
    let mut value: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    for (i, e) in g.edges().iter().enumerate() {
        let t = f.target().edge(f.image(i).edge);
        let (x, y) = match kind {
            HomKind::Hom => (t.tail, t.head),
            HomKind::Anti => (t.head, t.tail),
        };
        if e.is_loop() && x != y {
            return Err(Obstruction {
                kind,
                first_edge: i,
                second_edge: i,
                vertex: e.tail,
            });
        }
        for (v, want) in [(e.tail, x), (e.head, y)] {
            match value[v] {
                None => value[v] = Some((want, i)),
                Some((have, by)) if have != want => {
                    return Err(Obstruction {
                        kind,
                        first_edge: by,
                        second_edge: i,
                        vertex: v,
                    })
                }
                _ => {}
            }
        }
    }
    Ok(value.into_iter().map(|v| v.map_or(0, |(x, _)| x)).collect())
}

fn propagate_undirected(f: &EdgeMapping) -> Result<std::result::Result<Vec<usize>, Vec<Obstruction>>> {
    let g = f.source();
    let incidence = g.incidence();
    let mut map = vec![0usize; g.vertex_count()];
    let mut obstructions = Vec::new();
    for part in components(g).parts() {
        let Some(&first) = part.iter().flat_map(|&v| incidence[v].iter()).min() else {
            continue; // isolated vertex
        };
        let root = g.edge(first).tail;
        let t = f.target().edge(f.image(first).edge);
        let mut candidates = vec![t.tail];
        if t.head != t.tail {
            candidates.push(t.head);
        }
        let mut solved = None;
        let mut local = Vec::new();
        for c in candidates {
            match propagate_component(f, &incidence, root, c) {
                Ok(values) => {
                    solved = Some(values);
                    break;
                }
                Err(o) => local.push(o),
            }
        }
        match solved {
            Some(values) => {
                for (v, x) in values {
                    map[v] = x;
                }
            }
            None => obstructions.extend(local),
        }
    }
    Ok(if obstructions.is_empty() { Ok(map) } else { Err(obstructions) })
}

fn propagate_component(
    f: &EdgeMapping,
    incidence: &[Vec<usize>],
    root: usize,
    start: usize,
) -> std::result::Result<Vec<(usize, usize)>, Obstruction> {
    let g = f.source();
    let mut value: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    let first = incidence[root].iter().copied().min().expect("root has an edge");
    value.insert(root, (start, first));
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(a) = queue.pop_front() {
        let (ga, _) = value[&a];
        for &e in &incidence[a] {
            let edge = g.edge(e);
            let t = f.target().edge(f.image(e).edge);
            let b = edge.other(a);
            let want = if ga == t.tail {
                t.head
            } else if ga == t.head {
                t.tail
            } else {
                return Err(Obstruction {
                    kind: HomKind::Hom,
                    first_edge: value[&a].1,
                    second_edge: e,
                    vertex: a,
                });
            };
            if edge.is_loop() {
                if t.tail != t.head {
                    return Err(Obstruction {
                        kind: HomKind::Hom,
                        first_edge: e,
                        second_edge: e,
                        vertex: a,
                    });
                }
                continue;
            }
            match value.get(&b) {
                None => {
                    value.insert(b, (want, e));
                    queue.push_back(b);
                }
                Some(&(have, by)) if have != want => {
                    return Err(Obstruction {
                        kind: HomKind::Hom,
                        first_edge: by,
                        second_edge: e,
                        vertex: b,
                    })
                }
                _ => {}
            }
        }
    }
    Ok(value.into_iter().map(|(v, (x, _))| (v, x)).collect())
}
