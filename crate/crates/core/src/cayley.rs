//! The free Cayley graph `Δ_M(H)`: vertices are functions `V(H) -> M`, and
//! `f -> g` is an edge whenever `g - f = e_v - e_u` for an edge `(u, v)` of
//! `H`. Homomorphisms into it correspond to tension-continuous mappings into
//! `H`.
//!
//! A vertex is stored as its flattened coordinates (one block of ring
//! coordinates per vertex of `H`) and numbered in mixed radix, first
//! coordinate most significant, which matches [`RingSpec::elements`].

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::ring::{RingElement, RingSpec};
use crate::verify::{EdgeImage, EdgeMapping};

pub const DEFAULT_SIZE_BUDGET: usize = 4096;

#[derive(Clone, Debug)]
pub struct FreeCayleyGraph {
    base: Arc<Graph>,
    spec: RingSpec,
    graph: Arc<Graph>,
    radix: Vec<u64>,
    /// Base edge each edge of the result was generated by.
    origin: Vec<usize>,
    connectors: Vec<Vec<u64>>,
    by_connector: HashMap<Vec<u64>, usize>,
}

/// Builds `Δ_M(h)`. Undirected `h` gives the undirected graph whose symmetric
/// orientation is `Δ_M` of the symmetric orientation of `h`.
pub fn delta(h: &Graph, spec: &RingSpec, size_budget: usize) -> Result<FreeCayleyGraph> {
    delta_arc(Arc::new(h.clone()), spec, size_budget)
}

pub fn delta_arc(h: Arc<Graph>, spec: &RingSpec, size_budget: usize) -> Result<FreeCayleyGraph> {
    if !spec.is_finite() {
        return Err(Error::InfiniteRing(spec.to_string()));
    }
    let width = spec.factor_count();
    let radix: Vec<u64> = (0..h.vertex_count())
        .flat_map(|_| spec.moduli().iter().copied())
        .collect();
    let mut size: usize = 1;
    for &r in &radix {
        size = size
            .checked_mul(r as usize)
            .filter(|&s| s <= size_budget)
            .ok_or_else(|| {
                Error::Budget(format!(
                    "Δ over {spec} of a {}-vertex graph exceeds {size_budget} vertices",
                    h.vertex_count()
                ))
            })?;
    }

    let connectors: Vec<Vec<u64>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut c = vec![0u64; radix.len()];
            if !e.is_loop() {
                for k in 0..width {
                    c[e.head * width + k] = 1 % radix[k];
                    c[e.tail * width + k] = radix[k] - 1;
                }
            }
            c
        })
        .collect();
    let mut by_connector = HashMap::new();
    for (i, c) in connectors.iter().enumerate() {
        by_connector.entry(c.clone()).or_insert(i);
    }

    // one representative base edge per distinct generator (up to sign when
    // undirected)
    let mut reps: Vec<usize> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, c) in connectors.iter().enumerate() {
        let key = if h.is_directed() {
            c.clone()
        } else {
            let n = negate(c, &radix);
            std::cmp::min(c.clone(), n)
        };
        if seen.insert(key) {
            reps.push(i);
        }
    }

    let labels = Labeller::new(spec);
    let vertices: Vec<String> = (0..size).map(|v| labels.id(&digits_of(v, &radix))).collect();
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    for v in 0..size {
        let d = digits_of(v, &radix);
        for &rep in &reps {
            let c = &connectors[rep];
            let w = index_of(&add(&d, c, &radix), &radix);
            if !h.is_directed() && negate(c, &radix) == *c && w < v {
                continue; // the pair was emitted from the other end
            }
            edges.push(Edge {
                id: format!("d{}", edges.len()),
                tail: v,
                head: w,
            });
            origin.push(rep);
        }
    }
    let graph = Graph::from_parts(format!("delta({},{spec})", h.name()), h.is_directed(), vertices, edges)?;
    Ok(FreeCayleyGraph {
        base: h,
        spec: spec.clone(),
        graph: Arc::new(graph),
        radix,
        origin,
        connectors,
        by_connector,
    })
}

fn digits_of(mut v: usize, radix: &[u64]) -> Vec<u64> {
    let mut d = vec![0u64; radix.len()];
    for k in (0..radix.len()).rev() {
        d[k] = (v % radix[k] as usize) as u64;
        v /= radix[k] as usize;
    }
    d
}

fn index_of(d: &[u64], radix: &[u64]) -> usize {
    d.iter().zip(radix).fold(0usize, |acc, (&x, &r)| acc * r as usize + x as usize)
}

fn add(a: &[u64], b: &[u64], radix: &[u64]) -> Vec<u64> {
    a.iter().zip(b).zip(radix).map(|((&x, &y), &r)| (x + y) % r).collect()
}

fn sub(a: &[u64], b: &[u64], radix: &[u64]) -> Vec<u64> {
    a.iter().zip(b).zip(radix).map(|((&x, &y), &r)| (x + r - y) % r).collect()
}

fn negate(a: &[u64], radix: &[u64]) -> Vec<u64> {
    a.iter().zip(radix).map(|(&x, &r)| (r - x) % r).collect()
}

struct Labeller {
    compact: bool,
}

impl Labeller {
    fn new(spec: &RingSpec) -> Labeller {
        Labeller {
            compact: spec.factor_count() == 1 && spec.moduli()[0] <= 10,
        }
    }

    fn id(&self, d: &[u64]) -> String {
        if self.compact {
            d.iter().map(|x| x.to_string()).collect()
        } else {
            d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".")
        }
    }
}

impl FreeCayleyGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Base edge that generated each edge of the result.
    pub fn origin(&self, edge: usize) -> usize {
        self.origin[edge]
    }

    /// The function `V(H) -> M` a vertex stands for.
    pub fn label(&self, v: usize) -> Vec<RingElement> {
        let width = self.spec.factor_count();
        digits_of(v, &self.radix)
            .chunks(width)
            .map(|c| {
                let ints: Vec<i64> = c.iter().map(|&x| x as i64).collect();
                self.spec.element(&ints).expect("width matches the ring")
            })
            .collect()
    }

    /// Raw flattened coordinates of a vertex.
    pub fn digits(&self, v: usize) -> Vec<u64> {
        digits_of(v, &self.radix)
    }

    pub fn vertex_of(&self, digits: &[u64]) -> Result<usize> {
        if digits.len() != self.radix.len() || digits.iter().zip(&self.radix).any(|(&d, &r)| d >= r) {
            return Err(Error::InvalidParameter("coordinates do not name a vertex".into()));
        }
        Ok(index_of(digits, &self.radix))
    }

    /// Translation by `s`, an automorphism.
    pub fn translate(&self, v: usize, s: usize) -> usize {
        index_of(&add(&digits_of(v, &self.radix), &digits_of(s, &self.radix), &self.radix), &self.radix)
    }

    /// `v ↦ e_v`.
    pub fn indicator_embedding(&self) -> Vec<usize> {
        let width = self.spec.factor_count();
        (0..self.base.vertex_count())
            .map(|v| {
                let mut d = vec![0u64; self.radix.len()];
                for k in 0..width {
                    d[v * width + k] = 1 % self.radix[k];
                }
                index_of(&d, &self.radix)
            })
            .collect()
    }

    /// The edge mapping `G -> H` read off a homomorphism `G -> Δ_M(H)`: each
    /// edge goes to the base edge whose generator is the difference of the
    /// images of its ends.
    pub fn pull_hom_to_tt(&self, g: Arc<Graph>, hom: &[usize]) -> Result<EdgeMapping> {
        if g.is_directed() != self.base.is_directed() {
            return Err(Error::GraphMismatch("source and base differ in directedness".into()));
        }
        if hom.len() != g.vertex_count() || hom.iter().any(|&x| x >= self.graph.vertex_count()) {
            return Err(Error::InvalidMapping("vertex map does not fit".into()));
        }
        let mut images = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let diff = sub(&self.digits(hom[e.head]), &self.digits(hom[e.tail]), &self.radix);
            let img = match self.by_connector.get(&diff) {
                Some(&b) => EdgeImage::plain(b),
                None if !g.is_directed() => match self.by_connector.get(&negate(&diff, &self.radix)) {
                    Some(&b) => EdgeImage::flipped(b),
                    None => return Err(not_hom(&g, e)),
                },
                None => return Err(not_hom(&g, e)),
            };
            images.push(img);
        }
        EdgeMapping::new(g, self.base.clone(), images)
    }

    /// The homomorphism `G -> Δ_M(H)` of a tension-continuous mapping: every
    /// component's first vertex goes to zero and the generators of the images
    /// are summed along a spanning tree. Fails exactly when `f` is not
    /// tension-continuous over this ring.
    pub fn push_tt_to_hom(&self, f: &EdgeMapping) -> Result<Vec<usize>> {
        if f.target() != &*self.base {
            return Err(Error::GraphMismatch("mapping target is not the base graph".into()));
        }
        let g = f.source();
        let step = |e: usize| -> Vec<u64> {
            let img = f.image(e);
            let c = &self.connectors[img.edge];
            if img.reversed {
                negate(c, &self.radix)
            } else {
                c.clone()
            }
        };
        let mut label: Vec<Option<Vec<u64>>> = vec![None; g.vertex_count()];
        let incidence = g.incidence();
        for root in 0..g.vertex_count() {
            if label[root].is_some() {
                continue;
            }
            label[root] = Some(vec![0; self.radix.len()]);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let lx = label[x].clone().expect("queued vertices are labelled");
                for &e in &incidence[x] {
                    let edge = g.edge(e);
                    let (y, ly) = if edge.tail == x {
                        (edge.head, add(&lx, &step(e), &self.radix))
                    } else {
                        (edge.tail, sub(&lx, &step(e), &self.radix))
                    };
                    if label[y].is_none() {
                        label[y] = Some(ly);
                        queue.push_back(y);
                    }
                }
            }
        }
        let label: Vec<Vec<u64>> = label.into_iter().map(|l| l.expect("all vertices reached")).collect();
        for (e, edge) in g.edges().iter().enumerate() {
            if sub(&label[edge.head], &label[edge.tail], &self.radix) != step(e) {
                return Err(Error::InvalidMapping(format!(
                    "mapping is not tension-continuous over {}: edge `{}` breaks the potential",
                    self.spec, edge.id
                )));
            }
        }
        Ok(label.iter().map(|d| index_of(d, &self.radix)).collect())
    }
}

fn not_hom(g: &Graph, e: &Edge) -> Error {
    Error::InvalidMapping(format!(
        "vertex map is not a homomorphism into Δ: edge `{}` of `{}` has no image",
        e.id,
        g.name()
    ))
}
