//! Edge functions into a ring: the flow and tension predicates, elementary
//! tensions of cuts, potential differences, and algebraic images.

use crate::error::{Error, Result};
use crate::graph::{spanning_forest, CircuitSplit, Cut, Graph};
use crate::ring::{RingElement, RingSpec};
use crate::verify::EdgeMapping;

/// A total assignment `E(G) -> M`, indexed by edge position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeFunction {
    pub graph: String,
    pub spec: RingSpec,
    pub values: Vec<RingElement>,
}

/// A total assignment `V(G) -> M`, indexed by vertex position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    pub graph: String,
    pub spec: RingSpec,
    pub values: Vec<RingElement>,
}

impl EdgeFunction {
    pub fn new(g: &Graph, spec: &RingSpec, values: Vec<RingElement>) -> Result<EdgeFunction> {
        if values.len() != g.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "edge function has {} values, graph `{}` has {} edges",
                values.len(),
                g.name(),
                g.edge_count()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !spec.contains(v)) {
            return Err(Error::RingMismatch(format!("value {bad} is not an element of {spec}")));
        }
        Ok(EdgeFunction {
            graph: g.name().to_string(),
            spec: spec.clone(),
            values,
        })
    }

    pub fn zero(g: &Graph, spec: &RingSpec) -> EdgeFunction {
        EdgeFunction {
            graph: g.name().to_string(),
            spec: spec.clone(),
            values: vec![spec.zero(); g.edge_count()],
        }
    }

    /// `value` on every edge.
    pub fn constant(g: &Graph, spec: &RingSpec, value: &RingElement) -> EdgeFunction {
        EdgeFunction {
            graph: g.name().to_string(),
            spec: spec.clone(),
            values: vec![value.clone(); g.edge_count()],
        }
    }

    /// Integer coefficients times `1`.
    pub fn from_ints(g: &Graph, spec: &RingSpec, ints: &[i64]) -> Result<EdgeFunction> {
        EdgeFunction::new(g, spec, ints.iter().map(|&d| spec.int_embed(d)).collect())
    }

    /// The `±1` flow around a circuit.
    pub fn circuit_flow(g: &Graph, spec: &RingSpec, circuit: &CircuitSplit) -> EdgeFunction {
        let mut ints = vec![0i64; g.edge_count()];
        for (e, fwd) in circuit.steps() {
            ints[e] += if fwd { 1 } else { -1 };
        }
        EdgeFunction::from_ints(g, spec, &ints).expect("circuit edges belong to the graph")
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.values.len() != g.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "edge function on `{}` does not fit graph `{}`",
                self.graph,
                g.name()
            )));
        }
        Ok(())
    }
}

impl Potential {
    pub fn new(g: &Graph, spec: &RingSpec, values: Vec<RingElement>) -> Result<Potential> {
        if values.len() != g.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "potential has {} values, graph `{}` has {} vertices",
                values.len(),
                g.name(),
                g.vertex_count()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !spec.contains(v)) {
            return Err(Error::RingMismatch(format!("value {bad} is not an element of {spec}")));
        }
        Ok(Potential {
            graph: g.name().to_string(),
            spec: spec.clone(),
            values,
        })
    }
}

/// Inflow minus outflow at every vertex.
pub fn flow_balance(g: &Graph, phi: &EdgeFunction) -> Result<Vec<RingElement>> {
    phi.check_graph(g)?;
    let spec = &phi.spec;
    let mut balance = vec![spec.zero(); g.vertex_count()];
    for (e, value) in g.edges().iter().zip(&phi.values) {
        if e.is_loop() {
            continue;
        }
        balance[e.head] = spec.add(&balance[e.head], value)?;
        balance[e.tail] = spec.sub(&balance[e.tail], value)?;
    }
    Ok(balance)
}

/// The first vertex where conservation fails, if any.
pub fn flow_violation(g: &Graph, phi: &EdgeFunction) -> Result<Option<usize>> {
    Ok(flow_balance(g, phi)?.iter().position(|b| !b.is_zero()))
}

pub fn is_flow(g: &Graph, phi: &EdgeFunction) -> Result<bool> {
    Ok(flow_violation(g, phi)?.is_none())
}

/// `Σ_{C+} τ - Σ_{C-} τ` over one circuit.
pub fn circuit_sum(spec: &RingSpec, tau: &EdgeFunction, circuit: &CircuitSplit) -> Result<RingElement> {
    let mut acc = spec.zero();
    for (e, fwd) in circuit.steps() {
        acc = if fwd {
            spec.add(&acc, &tau.values[e])?
        } else {
            spec.sub(&acc, &tau.values[e])?
        };
    }
    Ok(acc)
}

/// The first fundamental circuit on which the circuit condition fails.
pub fn tension_violation(g: &Graph, tau: &EdgeFunction) -> Result<Option<CircuitSplit>> {
    tau.check_graph(g)?;
    for c in spanning_forest(g).circuits {
        if !circuit_sum(&tau.spec, tau, &c)?.is_zero() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

pub fn is_tension(g: &Graph, tau: &EdgeFunction) -> Result<bool> {
    Ok(tension_violation(g, tau)?.is_none())
}

/// `1` on edges leaving the side, `-1` on edges entering it, `0` elsewhere.
pub fn elementary_tension(g: &Graph, cut: &Cut, spec: &RingSpec) -> EdgeFunction {
    let mut in_side = vec![false; g.vertex_count()];
    for &v in &cut.side {
        in_side[v] = true;
    }
    elementary_tension_of_side(g, &in_side, spec)
}

pub fn elementary_tension_of_side(g: &Graph, in_side: &[bool], spec: &RingSpec) -> EdgeFunction {
    let ints: Vec<i64> = g
        .edges()
        .iter()
        .map(|e| match (in_side[e.tail], in_side[e.head]) {
            (true, false) => 1,
            (false, true) => -1,
            _ => 0,
        })
        .collect();
    EdgeFunction::from_ints(g, spec, &ints).expect("one value per edge")
}

/// `(δp)(uv) = p(v) - p(u)`.
pub fn tension_from_potential(g: &Graph, p: &Potential) -> Result<EdgeFunction> {
    if p.values.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("potential does not fit graph".into()));
    }
    let values = g
        .edges()
        .iter()
        .map(|e| p.spec.sub(&p.values[e.head], &p.values[e.tail]))
        .collect::<Result<Vec<_>>>()?;
    EdgeFunction::new(g, &p.spec, values)
}

/// `φ_f(e') = Σ_{f(e) = e'} φ(e)`, where an edge mapped onto the reversed
/// copy of its image contributes with the opposite sign.
pub fn algebraic_image(phi: &EdgeFunction, f: &EdgeMapping) -> Result<EdgeFunction> {
    phi.check_graph(f.source())?;
    let spec = &phi.spec;
    let target = f.target();
    let mut values = vec![spec.zero(); target.edge_count()];
    for (value, img) in phi.values.iter().zip(f.images()) {
        values[img.edge] = if img.reversed {
            spec.sub(&values[img.edge], value)?
        } else {
            spec.add(&values[img.edge], value)?
        };
    }
    EdgeFunction::new(target, spec, values)
}

/// `τ ∘ f`, with the sign flipped on edges mapped to reversed copies.
pub fn pullback(tau: &EdgeFunction, f: &EdgeMapping) -> Result<EdgeFunction> {
    tau.check_graph(f.target())?;
    let spec = &tau.spec;
    let values = f
        .images()
        .iter()
        .map(|img| {
            let v = &tau.values[img.edge];
            if img.reversed {
                spec.neg(v)
            } else {
                Ok(v.clone())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeFunction::new(f.source(), spec, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cut_of, Graph};
    use crate::verify::{EdgeImage, EdgeMapping};
    use std::sync::Arc;

    fn r(s: &str) -> RingSpec {
        RingSpec::parse(s).unwrap()
    }

    fn dcycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges(format!("C{n}"), true, n, &e)
    }

    fn k3() -> Graph {
        Graph::from_index_edges("K3", true, 3, &[(0, 1), (0, 2), (1, 2)])
    }

    #[test]
    fn flow_examples() {
        let z = r("Z");
        let g = k3();
        assert!(is_flow(&g, &EdgeFunction::zero(&g, &z)).unwrap());
        let c3 = dcycle(3);
        assert!(is_flow(&c3, &EdgeFunction::constant(&c3, &z, &z.one())).unwrap());
        let single = EdgeFunction::from_ints(&g, &z, &[1, 0, 0]).unwrap();
        assert_eq!(flow_violation(&g, &single).unwrap(), Some(0));
    }

    #[test]
    fn loops_are_neutral_for_flows_and_zero_for_tensions() {
        let z3 = r("Z3");
        let g = Graph::from_index_edges("loop", true, 2, &[(0, 0), (0, 1)]);
        let phi = EdgeFunction::from_ints(&g, &z3, &[2, 0]).unwrap();
        assert!(is_flow(&g, &phi).unwrap());
        assert!(!is_tension(&g, &phi).unwrap());
        let tau = EdgeFunction::from_ints(&g, &z3, &[0, 2]).unwrap();
        assert!(is_tension(&g, &tau).unwrap());
    }

    #[test]
    fn tension_examples() {
        let c3 = dcycle(3);
        let one2 = EdgeFunction::constant(&c3, &r("Z2"), &r("Z2").one());
        assert!(!is_tension(&c3, &one2).unwrap());
        let one3 = EdgeFunction::constant(&c3, &r("Z3"), &r("Z3").one());
        assert!(is_tension(&c3, &one3).unwrap());

        let z = r("Z");
        let p = Potential::new(&c3, &z, vec![z.element(&[5]).unwrap(), z.element(&[-2]).unwrap(), z.zero()]).unwrap();
        assert!(is_tension(&c3, &tension_from_potential(&c3, &p).unwrap()).unwrap());
    }

    #[test]
    fn elementary_tension_examples() {
        let z = r("Z");
        let c4 = dcycle(4);
        let empty = elementary_tension_of_side(&c4, &[false; 4], &z);
        assert_eq!(empty, EdgeFunction::zero(&c4, &z));

        let k2 = Graph::from_index_edges("K2", true, 2, &[(0, 1)]);
        let t = elementary_tension(&k2, &cut_of(&k2, &[true, false]), &z);
        assert_eq!(t.values, vec![z.one()]);

        // X = {0, 1}: edge 1->2 leaves X, edge 3->0 enters it
        let t = elementary_tension(&c4, &cut_of(&c4, &[true, true, false, false]), &z);
        let ints: Vec<_> = t.values.iter().map(|v| v.to_i64s().unwrap()[0]).collect();
        assert_eq!(ints, vec![0, 1, 0, -1]);
        assert!(is_tension(&c4, &t).unwrap());
    }

    #[test]
    fn potential_examples() {
        let z2 = r("Z2");
        let k2 = Graph::from_index_edges("K2", true, 2, &[(0, 1)]);
        let p = Potential::new(&k2, &z2, vec![z2.zero(), z2.one()]).unwrap();
        assert_eq!(tension_from_potential(&k2, &p).unwrap().values, vec![z2.one()]);
        let constant = Potential::new(&k2, &z2, vec![z2.one(), z2.one()]).unwrap();
        assert_eq!(
            tension_from_potential(&k2, &constant).unwrap(),
            EdgeFunction::zero(&k2, &z2)
        );

        let z = r("Z");
        let path = Graph::from_index_edges("P3", true, 3, &[(0, 1), (1, 2)]);
        let p = Potential::new(&path, &z, (0..3).map(|i| z.element(&[i]).unwrap()).collect()).unwrap();
        assert_eq!(tension_from_potential(&path, &p).unwrap().values, vec![z.one(), z.one()]);
    }

    fn mapping(src: &Graph, dst: &Graph, images: &[usize]) -> EdgeMapping {
        EdgeMapping::new(
            Arc::new(src.clone()),
            Arc::new(dst.clone()),
            images.iter().map(|&e| EdgeImage::plain(e)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn algebraic_image_examples() {
        let z = r("Z");
        let g = k3();
        let id = mapping(&g, &g, &[0, 1, 2]);
        let phi = EdgeFunction::from_ints(&g, &z, &[1, -1, 1]).unwrap();
        assert_eq!(algebraic_image(&phi, &id).unwrap(), phi);

        let z2 = r("Z2");
        let k2 = Graph::from_index_edges("K2", true, 2, &[(0, 1)]);
        let two = Graph::from_index_edges("P", true, 3, &[(0, 1), (1, 2)]);
        let f = mapping(&two, &k2, &[0, 0]);
        let img = algebraic_image(&EdgeFunction::from_ints(&two, &z2, &[1, 1]).unwrap(), &f).unwrap();
        assert!(img.values[0].is_zero());

        // ±1 cycle flow on K3 (0->1, 0->2, 1->2 traversed 0,1,2,0): values 1, -1, 1
        let to_one = mapping(&g, &k2, &[0, 0, 0]);
        let img = algebraic_image(&phi, &to_one).unwrap();
        assert_eq!(img.values, vec![z.one()]);
    }
}
