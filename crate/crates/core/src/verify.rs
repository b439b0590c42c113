//! Deciding whether an edge mapping is tension-continuous.
//!
//! [`verify_tt`] pushes the `±1` flow of every fundamental circuit of the
//! source through the mapping and checks conservation in the target.
//! [`verify_tt_oracle`] works from the other side: it pulls back the
//! elementary tension of every cut of the target and checks the circuit
//! condition on every circuit of the source. The two share no code path
//! beyond ring arithmetic and are cross-checked in the test suites.
//!
//! Undirected graphs are verified through their symmetric orientations. An
//! undirected mapping sends each edge to an edge of the target together with
//! an orientation flag; the stored copy of the source edge goes to the
//! flagged copy of its image and the opposite copy to the opposite one.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{
    enumerate_circuits_bounded, spanning_forest, symmetric_orientation, CircuitSplit, Edge, Graph,
    SymmetricOrientation,
};
use crate::ring::RingSpec;
use crate::tension::{
    algebraic_image, circuit_sum, elementary_tension_of_side, flow_balance, pullback, EdgeFunction,
};

/// Image of one source edge: a target edge, traversed against its stored
/// orientation when `reversed` is set (undirected targets only).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeImage {
    pub edge: usize,
    pub reversed: bool,
}

impl EdgeImage {
    pub fn plain(edge: usize) -> EdgeImage {
        EdgeImage {
            edge,
            reversed: false,
        }
    }

    pub fn flipped(edge: usize) -> EdgeImage {
        EdgeImage {
            edge,
            reversed: true,
        }
    }
}

/// A total function `E(G) -> E(H)`.
#[derive(Clone, Debug)]
pub struct EdgeMapping {
    source: Arc<Graph>,
    target: Arc<Graph>,
    images: Vec<EdgeImage>,
}

impl PartialEq for EdgeMapping {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && self.source == other.source && self.target == other.target
    }
}

impl Eq for EdgeMapping {}

impl EdgeMapping {
    pub fn new(source: Arc<Graph>, target: Arc<Graph>, images: Vec<EdgeImage>) -> Result<EdgeMapping> {
        if source.is_directed() != target.is_directed() {
            return Err(Error::GraphMismatch(format!(
                "`{}` and `{}` must both be directed or both undirected",
                source.name(),
                target.name()
            )));
        }
        if images.len() != source.edge_count() {
            return Err(Error::InvalidMapping(format!(
                "{} images given for {} source edges",
                images.len(),
                source.edge_count()
            )));
        }
        for img in &images {
            if img.edge >= target.edge_count() {
                return Err(Error::InvalidMapping(format!(
                    "image edge index {} out of range",
                    img.edge
                )));
            }
            if img.reversed && target.is_directed() {
                return Err(Error::InvalidMapping(
                    "reversed images are only meaningful for undirected graphs".into(),
                ));
            }
        }
        Ok(EdgeMapping {
            source,
            target,
            images,
        })
    }

    pub fn from_indices(source: Arc<Graph>, target: Arc<Graph>, images: &[usize]) -> Result<EdgeMapping> {
        EdgeMapping::new(source, target, images.iter().map(|&e| EdgeImage::plain(e)).collect())
    }

    pub fn identity(g: Arc<Graph>) -> EdgeMapping {
        let images = (0..g.edge_count()).map(EdgeImage::plain).collect();
        EdgeMapping {
            source: g.clone(),
            target: g,
            images,
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn images(&self) -> &[EdgeImage] {
        &self.images
    }

    pub fn image(&self, e: usize) -> EdgeImage {
        self.images[e]
    }

    /// Target edge indices, ignoring orientation flags.
    pub fn edge_indices(&self) -> Vec<usize> {
        self.images.iter().map(|i| i.edge).collect()
    }

    /// Endpoints `(x, y)` of the image of `e`, in the direction it is traversed.
    pub fn oriented_endpoints(&self, e: usize) -> (usize, usize) {
        let img = self.images[e];
        let t = self.target.edge(img.edge);
        if img.reversed {
            (t.head, t.tail)
        } else {
            (t.tail, t.head)
        }
    }

    /// Same images with every orientation flag cleared.
    pub fn without_orientation(&self) -> EdgeMapping {
        EdgeMapping {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|i| EdgeImage::plain(i.edge)).collect(),
        }
    }

    /// The mapping induced by a vertex map: every edge `(u, v)` goes to the
    /// first target edge joining `h(u)` to `h(v)` (or `h(v)` to `h(u)` when
    /// `anti` is set). Undirected targets accept either stored orientation.
    pub fn induced_by(source: Arc<Graph>, target: Arc<Graph>, h: &[usize], anti: bool) -> Result<EdgeMapping> {
        if h.len() != source.vertex_count() {
            return Err(Error::InvalidMapping("vertex map is not total".into()));
        }
        let mut images = Vec::with_capacity(source.edge_count());
        for e in source.edges() {
            let (x, y) = if anti {
                (h[e.head], h[e.tail])
            } else {
                (h[e.tail], h[e.head])
            };
            let found = target
                .edges()
                .iter()
                .position(|t| t.tail == x && t.head == y)
                .map(EdgeImage::plain)
                .or_else(|| {
                    if target.is_directed() {
                        None
                    } else {
                        target
                            .edges()
                            .iter()
                            .position(|t| t.tail == y && t.head == x)
                            .map(EdgeImage::flipped)
                    }
                })
                .ok_or_else(|| {
                    Error::InvalidMapping(format!(
                        "edge `{}` has no image: `{}` -> `{}` is not an edge",
                        e.id,
                        target.vertex_id(x),
                        target.vertex_id(y)
                    ))
                })?;
            images.push(found);
        }
        EdgeMapping::new(source, target, images)
    }

    /// The target restricted to image edges (all vertices kept).
    pub fn restrict_to_image(&self) -> EdgeMapping {
        let mut used = vec![false; self.target.edge_count()];
        for img in &self.images {
            used[img.edge] = true;
        }
        let mut new_index = vec![usize::MAX; used.len()];
        let mut edges = Vec::new();
        for (i, e) in self.target.edges().iter().enumerate() {
            if used[i] {
                new_index[i] = edges.len();
                edges.push(e.clone());
            }
        }
        let sub = Graph::from_parts(
            format!("{}|image", self.target.name()),
            self.target.is_directed(),
            self.target.vertices().to_vec(),
            edges,
        )
        .expect("subgraph of a valid graph is valid");
        EdgeMapping {
            source: self.source.clone(),
            target: Arc::new(sub),
            images: self
                .images
                .iter()
                .map(|i| EdgeImage {
                    edge: new_index[i.edge],
                    reversed: i.reversed,
                })
                .collect(),
        }
    }

    /// Replaces every target edge by as many parallel copies as it has
    /// preimages (dropping unused edges) and makes the mapping bijective.
    pub fn parallel_split(&self) -> EdgeMapping {
        let mut count = vec![0usize; self.target.edge_count()];
        for img in &self.images {
            count[img.edge] += 1;
        }
        let mut first_copy = vec![0usize; count.len()];
        let mut edges = Vec::new();
        for (i, e) in self.target.edges().iter().enumerate() {
            first_copy[i] = edges.len();
            for k in 0..count[i] {
                edges.push(Edge {
                    id: format!("{}#{k}", e.id),
                    tail: e.tail,
                    head: e.head,
                });
            }
        }
        let split = Graph::from_parts(
            format!("{}|split", self.target.name()),
            self.target.is_directed(),
            self.target.vertices().to_vec(),
            edges,
        )
        .expect("split graph ids are unique");
        let mut next = first_copy;
        let images = self
            .images
            .iter()
            .map(|img| {
                let e = next[img.edge];
                next[img.edge] += 1;
                EdgeImage {
                    edge: e,
                    reversed: img.reversed,
                }
            })
            .collect();
        EdgeMapping {
            source: self.source.clone(),
            target: Arc::new(split),
            images,
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.target.edge_count()];
        for img in &self.images {
            if std::mem::replace(&mut hit[img.edge], true) {
                return false;
            }
        }
        hit.iter().all(|&b| b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    FlowImage,
    TensionPullback,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::FlowImage => "flow-image",
            Method::TensionPullback => "tension-pullback",
        }
    }
}

/// A re-checkable reason why a mapping is not tension-continuous. Indices
/// refer to the graphs the check ran on: the symmetric orientations when the
/// verdict says `lifted`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The image of the `±1` flow around `circuit` is not conserved at `vertex`.
    FlowImage { circuit: CircuitSplit, vertex: usize },
    /// Pulling back the elementary tension of `δ(side)` breaks the circuit
    /// condition on `circuit`.
    TensionPullback { side: Vec<usize>, circuit: CircuitSplit },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TTVerdict {
    pub is_tt: bool,
    pub method: Method,
    pub lifted: bool,
    pub certificate: Option<Certificate>,
}

/// Tension-continuity check via flow images of fundamental circuits.
pub fn verify_tt(f: &EdgeMapping, spec: &RingSpec) -> Result<TTVerdict> {
    if f.source().is_directed() {
        flow_check(f, spec, false)
    } else {
        verify_undirected(f, spec)
    }
}

/// Undirected graphs: delegate to the symmetric orientations. For powers of
/// `Z2` orientation is immaterial and the stored orientations are used.
pub fn verify_undirected(f: &EdgeMapping, spec: &RingSpec) -> Result<TTVerdict> {
    if f.source().is_directed() || f.target().is_directed() {
        return Err(Error::GraphMismatch(
            "verify_undirected expects undirected graphs".into(),
        ));
    }
    if spec.is_power_of_z2() {
        flow_check(f, spec, false)
    } else {
        flow_check(&lift(f), spec, true)
    }
}

fn flow_check(f: &EdgeMapping, spec: &RingSpec, lifted: bool) -> Result<TTVerdict> {
    let source = f.source();
    for circuit in spanning_forest(source).circuits {
        let phi = EdgeFunction::circuit_flow(source, spec, &circuit);
        let image = algebraic_image(&phi, f)?;
        let balance = flow_balance(f.target(), &image)?;
        if let Some(vertex) = balance.iter().position(|b| !b.is_zero()) {
            return Ok(TTVerdict {
                is_tt: false,
                method: Method::FlowImage,
                lifted,
                certificate: Some(Certificate::FlowImage { circuit, vertex }),
            });
        }
    }
    Ok(TTVerdict {
        is_tt: true,
        method: Method::FlowImage,
        lifted,
        certificate: None,
    })
}

/// Largest target vertex count the oracle accepts by default.
pub const ORACLE_TARGET_BOUND: usize = 12;
/// Cap on the number of source circuits the oracle will scan.
pub const ORACLE_CIRCUIT_BUDGET: usize = 500_000;

/// Tension-pullback oracle: every elementary tension of the target, pulled
/// back, must satisfy the circuit condition on every circuit of the source.
pub fn verify_tt_oracle(f: &EdgeMapping, spec: &RingSpec) -> Result<TTVerdict> {
    verify_tt_oracle_bounded(f, spec, ORACLE_TARGET_BOUND)
}

pub fn verify_tt_oracle_bounded(f: &EdgeMapping, spec: &RingSpec, max_target_vertices: usize) -> Result<TTVerdict> {
    if f.source().is_directed() {
        tension_check(f, spec, max_target_vertices, false)
    } else {
        tension_check(&lift(f), spec, max_target_vertices, true)
    }
}

fn tension_check(f: &EdgeMapping, spec: &RingSpec, max_target_vertices: usize, lifted: bool) -> Result<TTVerdict> {
    let target = f.target();
    let n = target.vertex_count();
    if n > max_target_vertices || n >= 63 {
        return Err(Error::Budget(format!(
            "oracle over {n} target vertices exceeds bound {max_target_vertices}"
        )));
    }
    let source = f.source();
    let circuits = enumerate_circuits_bounded(source, source.vertex_count().max(1), ORACLE_CIRCUIT_BUDGET)?;
    for mask in 0u64..(1u64 << n) {
        let in_side: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let tau = elementary_tension_of_side(target, &in_side, spec);
        let pulled = pullback(&tau, f)?;
        for circuit in &circuits {
            if !circuit_sum(spec, &pulled, circuit)?.is_zero() {
                return Ok(TTVerdict {
                    is_tt: false,
                    method: Method::TensionPullback,
                    lifted,
                    certificate: Some(Certificate::TensionPullback {
                        side: (0..n).filter(|&v| in_side[v]).collect(),
                        circuit: circuit.clone(),
                    }),
                });
            }
        }
    }
    Ok(TTVerdict {
        is_tt: true,
        method: Method::TensionPullback,
        lifted,
        certificate: None,
    })
}

/// The mapping between symmetric orientations that an undirected mapping
/// stands for.
pub fn lift(f: &EdgeMapping) -> EdgeMapping {
    let src = symmetric_orientation(f.source());
    let dst = symmetric_orientation(f.target());
    let mut images = vec![EdgeImage::plain(0); src.graph.edge_count()];
    for (e, img) in f.images().iter().enumerate() {
        let copy = SymmetricOrientation::copy_of(img.edge, img.reversed);
        images[SymmetricOrientation::copy_of(e, false)] = EdgeImage::plain(copy);
        images[SymmetricOrientation::copy_of(e, true)] = EdgeImage::plain(dst.opposite[copy]);
    }
    EdgeMapping {
        source: Arc::new(src.graph),
        target: Arc::new(dst.graph),
        images,
    }
}

/// The mapping a verdict's certificate indices refer to.
pub fn working_mapping(f: &EdgeMapping, verdict: &TTVerdict) -> EdgeMapping {
    if verdict.lifted {
        lift(f)
    } else {
        f.clone()
    }
}

/// Re-checks that a failure certificate really witnesses a violation.
pub fn certificate_holds(f: &EdgeMapping, spec: &RingSpec, verdict: &TTVerdict) -> Result<bool> {
    let Some(cert) = &verdict.certificate else {
        return Ok(false);
    };
    let w = working_mapping(f, verdict);
    match cert {
        Certificate::FlowImage { circuit, vertex } => {
            if !circuit.is_valid_in(w.source()) || *vertex >= w.target().vertex_count() {
                return Ok(false);
            }
            let phi = EdgeFunction::circuit_flow(w.source(), spec, circuit);
            let balance = flow_balance(w.target(), &algebraic_image(&phi, &w)?)?;
            Ok(!balance[*vertex].is_zero())
        }
        Certificate::TensionPullback { side, circuit } => {
            let n = w.target().vertex_count();
            if !circuit.is_valid_in(w.source()) || side.iter().any(|&v| v >= n) {
                return Ok(false);
            }
            let mut in_side = vec![false; n];
            for &v in side {
                in_side[v] = true;
            }
            let tau = elementary_tension_of_side(w.target(), &in_side, spec);
            let pulled = pullback(&tau, &w)?;
            Ok(!circuit_sum(spec, &pulled, circuit)?.is_zero())
        }
    }
}

/// `g ∘ f`.
pub fn compose(f: &EdgeMapping, g: &EdgeMapping) -> Result<EdgeMapping> {
    if !(Arc::ptr_eq(f.target_arc(), g.source_arc()) || f.target() == g.source()) {
        return Err(Error::GraphMismatch(format!(
            "cannot compose: target `{}` is not source `{}`",
            f.target().name(),
            g.source().name()
        )));
    }
    let images = f
        .images()
        .iter()
        .map(|a| {
            let b = g.image(a.edge);
            EdgeImage {
                edge: b.edge,
                reversed: a.reversed ^ b.reversed,
            }
        })
        .collect();
    EdgeMapping::new(f.source_arc().clone(), g.target_arc().clone(), images)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfluenceRule {
    /// Tension-continuity over `Z` implies it over every ring.
    IntegersToAll,
    /// Over a ring implies over a subring (modulus divisibility).
    Subring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Implication {
    pub premise: RingSpec,
    pub conclusion: RingSpec,
    pub rule: InfluenceRule,
    pub premise_holds: bool,
    pub conclusion_holds: bool,
}

impl Implication {
    pub fn violated(&self) -> bool {
        self.premise_holds && !self.conclusion_holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfluenceReport {
    pub verdicts: Vec<(RingSpec, bool)>,
    pub implications: Vec<Implication>,
    /// Pairs with no modelled embedding in either direction.
    pub unsupported: Vec<(RingSpec, RingSpec)>,
}

impl InfluenceReport {
    pub fn violations(&self) -> Vec<&Implication> {
        self.implications.iter().filter(|i| i.violated()).collect()
    }
}

/// Verifies `f` over each ring and evaluates every applicable implication
/// between them.
pub fn ring_influence(f: &EdgeMapping, specs: &[RingSpec]) -> Result<InfluenceReport> {
    let verdicts = specs
        .iter()
        .map(|s| Ok((s.clone(), verify_tt(f, s)?.is_tt)))
        .collect::<Result<Vec<_>>>()?;
    let mut implications = Vec::new();
    let mut unsupported = Vec::new();
    for (i, (a, ta)) in verdicts.iter().enumerate() {
        for (j, (b, tb)) in verdicts.iter().enumerate() {
            if i == j || a == b {
                continue;
            }
            let rule = if *a == RingSpec::integers() {
                Some(InfluenceRule::IntegersToAll)
            } else if a.has_divisibility_subring(b) {
                Some(InfluenceRule::Subring)
            } else {
                None
            };
            match rule {
                Some(rule) => implications.push(Implication {
                    premise: a.clone(),
                    conclusion: b.clone(),
                    rule,
                    premise_holds: *ta,
                    conclusion_holds: *tb,
                }),
                None if i < j
                    && !b.has_divisibility_subring(a)
                    && *b != RingSpec::integers() =>
                {
                    unsupported.push((a.clone(), b.clone()))
                }
                None => {}
            }
        }
    }
    Ok(InfluenceReport {
        verdicts,
        implications,
        unsupported,
    })
}
