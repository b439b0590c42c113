//! JSON interchange: graphs, edge functions, mappings, verdicts and the
//! free Cayley graph sidecar.
//!
//! Undirected graphs are written with their stored edges only; the
//! reversed copies are implied. In mapping files an image `e~` names the
//! stored edge `e` traversed backwards.

use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::cayley::FreeCayleyGraph;
use crate::constructions::Designated;
use crate::error::{Error, Result};
use crate::graph::{CircuitSplit, Graph, REVERSED_SUFFIX};
use crate::ring::{RingElement, RingSpec};
use crate::search::VertexMapping;
use crate::tension::EdgeFunction;
use crate::verify::{working_mapping, Certificate, EdgeImage, EdgeMapping, Method, TTVerdict};

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    id: String,
    tail: String,
    head: String,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    name: String,
    directed: bool,
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    designated: Option<Designated>,
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialise");
    s.push('\n');
    s
}

pub fn graph_to_json(g: &Graph, designated: Option<&Designated>) -> Value {
    let doc = GraphDoc {
        name: g.name().to_string(),
        directed: g.is_directed(),
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                tail: g.vertex_id(e.tail).to_string(),
                head: g.vertex_id(e.head).to_string(),
            })
            .collect(),
        designated: designated.cloned(),
    };
    serde_json::to_value(doc).expect("graph documents always serialise")
}

/// A graph and its optional designated vertices.
pub fn graph_from_json(v: &Value) -> Result<(Graph, Option<Designated>)> {
    let doc: GraphDoc = serde_json::from_value(v.clone()).map_err(|e| Error::Format(format!("graph: {e}")))?;
    let g = Graph::new(
        doc.name,
        doc.directed,
        doc.vertices,
        doc.edges.into_iter().map(|e| (e.id, e.tail, e.head)).collect(),
    )?;
    if let Some(d) = &doc.designated {
        for (role, id) in d {
            if g.vertex_index(id).is_none() {
                return Err(Error::InvalidGraph(format!("designated `{role}` = `{id}` is not a vertex")));
            }
        }
    }
    Ok((g, doc.designated))
}

pub fn load_graph(path: &Path) -> Result<(Graph, Option<Designated>)> {
    graph_from_json(&read_json(path)?)
}

fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => json!(x.to_string()),
    }
}

fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Format(format!("`{n}` is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| Error::Format(format!("`{s}` is not an integer"))),
        _ => Err(Error::Format(format!("expected an integer, found `{v}`"))),
    }
}

pub fn element_to_json(x: &RingElement) -> Value {
    Value::Array(x.coords().iter().map(big_to_json).collect())
}

pub fn element_from_json(spec: &RingSpec, v: &Value) -> Result<RingElement> {
    let coords = v
        .as_array()
        .ok_or_else(|| Error::Format(format!("ring element must be an array, found `{v}`")))?
        .iter()
        .map(big_from_json)
        .collect::<Result<Vec<_>>>()?;
    spec.element_big(coords)
}

pub fn edge_function_to_json(g: &Graph, phi: &EdgeFunction) -> Value {
    let values: Map<String, Value> = g
        .edges()
        .iter()
        .zip(&phi.values)
        .map(|(e, x)| (e.id.clone(), element_to_json(x)))
        .collect();
    json!({ "graph": phi.graph, "ring": phi.spec.to_string(), "values": values })
}

/// Edges missing from `values` are zero.
pub fn edge_function_from_json(g: &Graph, v: &Value) -> Result<EdgeFunction> {
    let spec = RingSpec::parse(
        v.get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Format("edge function needs a `ring` string".into()))?,
    )?;
    let mut values = vec![spec.zero(); g.edge_count()];
    if let Some(map) = v.get("values") {
        let map = map
            .as_object()
            .ok_or_else(|| Error::Format("`values` must be an object".into()))?;
        for (id, x) in map {
            let e = g.edge_index(id).ok_or_else(|| Error::UnknownEdge(id.clone()))?;
            values[e] = element_from_json(&spec, x)?;
        }
    }
    EdgeFunction::new(g, &spec, values)
}

fn image_id(target: &Graph, im: EdgeImage) -> String {
    let id = &target.edge(im.edge).id;
    if im.reversed {
        format!("{id}{REVERSED_SUFFIX}")
    } else {
        id.clone()
    }
}

/// `source` and `target` are the references written into the file (a
/// catalog key, a path, or an embedded graph object).
pub fn mapping_to_json(f: &EdgeMapping, source: Value, target: Value) -> Value {
    let map: Map<String, Value> = f
        .source()
        .edges()
        .iter()
        .zip(f.images())
        .map(|(e, &im)| (e.id.clone(), Value::String(image_id(f.target(), im))))
        .collect();
    json!({ "source": source, "target": target, "map": map })
}

/// Parses a mapping; `resolve` turns the `source`/`target` references into
/// graphs.
pub fn mapping_from_json(v: &Value, resolve: &mut dyn FnMut(&Value) -> Result<Arc<Graph>>) -> Result<EdgeMapping> {
    let field = |k: &str| v.get(k).ok_or_else(|| Error::Format(format!("mapping needs `{k}`")));
    let source = resolve(field("source")?)?;
    let target = resolve(field("target")?)?;
    let map = field("map")?
        .as_object()
        .ok_or_else(|| Error::Format("`map` must be an object".into()))?;
    let mut images: Vec<Option<EdgeImage>> = vec![None; source.edge_count()];
    for (id, to) in map {
        let e = source.edge_index(id).ok_or_else(|| Error::UnknownEdge(id.clone()))?;
        let to = to
            .as_str()
            .ok_or_else(|| Error::Format(format!("image of `{id}` must be an edge id")))?;
        images[e] = Some(parse_image(&target, to)?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(e, im)| im.ok_or_else(|| Error::InvalidMapping(format!("edge `{}` has no image", source.edge(e).id))))
        .collect::<Result<Vec<_>>>()?;
    EdgeMapping::new(source, target, images)
}

fn parse_image(target: &Graph, to: &str) -> Result<EdgeImage> {
    if let Some(i) = target.edge_index(to) {
        return Ok(EdgeImage::plain(i));
    }
    match to.strip_suffix(REVERSED_SUFFIX).and_then(|base| target.edge_index(base)) {
        Some(i) if !target.is_directed() => Ok(EdgeImage::flipped(i)),
        _ => Err(Error::UnknownEdge(to.to_string())),
    }
}

pub fn circuit_to_json(g: &Graph, c: &CircuitSplit) -> Value {
    json!({
        "vertices": c.vertices.iter().map(|&v| g.vertex_id(v)).collect::<Vec<_>>(),
        "edges": c.edges.iter().map(|&e| g.edge(e).id.as_str()).collect::<Vec<_>>(),
        "forward": c.forward,
    })
}

pub fn circuit_from_json(g: &Graph, v: &Value) -> Result<CircuitSplit> {
    let strings = |k: &str| -> Result<Vec<String>> {
        v.get(k)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format(format!("circuit needs `{k}`")))?
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Format(format!("`{k}` entries must be strings")))
            })
            .collect()
    };
    let vertices = strings("vertices")?
        .iter()
        .map(|id| g.vertex_index(id).ok_or_else(|| Error::UnknownVertex(id.clone())))
        .collect::<Result<Vec<_>>>()?;
    let edges = strings("edges")?
        .iter()
        .map(|id| g.edge_index(id).ok_or_else(|| Error::UnknownEdge(id.clone())))
        .collect::<Result<Vec<_>>>()?;
    let forward = v
        .get("forward")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("circuit needs `forward`".into()))?
        .iter()
        .map(|b| b.as_bool().ok_or_else(|| Error::Format("`forward` entries must be booleans".into())))
        .collect::<Result<Vec<_>>>()?;
    let c = CircuitSplit {
        vertices,
        edges,
        forward,
    };
    if !c.is_valid_in(g) {
        return Err(Error::Format("certificate circuit is not a circuit of the source".into()));
    }
    Ok(c)
}

/// Ids in the certificate refer to the graphs the check ran on (the
/// symmetric orientations when `lifted`).
pub fn verdict_to_json(f: &EdgeMapping, spec: &RingSpec, verdict: &TTVerdict, with_certificate: bool) -> Value {
    let mut out = json!({
        "is_tt": verdict.is_tt,
        "ring": spec.to_string(),
        "method": verdict.method.as_str(),
        "lifted": verdict.lifted,
    });
    if let (true, Some(cert)) = (with_certificate, &verdict.certificate) {
        let w = working_mapping(f, verdict);
        let c = match cert {
            Certificate::FlowImage { circuit, vertex } => json!({
                "kind": "flow-image",
                "circuit": circuit_to_json(w.source(), circuit),
                "vertex": w.target().vertex_id(*vertex),
            }),
            Certificate::TensionPullback { side, circuit } => json!({
                "kind": "tension-pullback",
                "side": side.iter().map(|&v| w.target().vertex_id(v)).collect::<Vec<_>>(),
                "circuit": circuit_to_json(w.source(), circuit),
            }),
        };
        out["certificate"] = c;
    }
    out
}

/// Reads back a verdict written by [`verdict_to_json`] for mapping `f`.
pub fn verdict_from_json(f: &EdgeMapping, v: &Value) -> Result<(RingSpec, TTVerdict)> {
    let spec = RingSpec::parse(v.get("ring").and_then(Value::as_str).unwrap_or("Z"))?;
    let is_tt = v
        .get("is_tt")
        .and_then(Value::as_bool)
        .ok_or_else(|| Error::Format("verdict needs `is_tt`".into()))?;
    let method = match v.get("method").and_then(Value::as_str) {
        Some("tension-pullback") => Method::TensionPullback,
        Some("flow-image") | None => Method::FlowImage,
        Some(m) => return Err(Error::Format(format!("unknown method `{m}`"))),
    };
    let lifted = v.get("lifted").and_then(Value::as_bool).unwrap_or(false);
    let mut verdict = TTVerdict {
        is_tt,
        method,
        lifted,
        certificate: None,
    };
    if let Some(c) = v.get("certificate") {
        let w = working_mapping(f, &verdict);
        let circuit = circuit_from_json(w.source(), c.get("circuit").unwrap_or(&Value::Null))?;
        let target_vertex = |id: &Value| -> Result<usize> {
            let id = id.as_str().ok_or_else(|| Error::Format("vertex ids must be strings".into()))?;
            w.target().vertex_index(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
        };
        verdict.certificate = Some(match c.get("kind").and_then(Value::as_str) {
            Some("flow-image") => Certificate::FlowImage {
                circuit,
                vertex: target_vertex(c.get("vertex").unwrap_or(&Value::Null))?,
            },
            Some("tension-pullback") => Certificate::TensionPullback {
                side: c
                    .get("side")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Format("certificate needs `side`".into()))?
                    .iter()
                    .map(target_vertex)
                    .collect::<Result<_>>()?,
                circuit,
            },
            _ => return Err(Error::Format("unknown certificate kind".into())),
        });
    }
    Ok((spec, verdict))
}

pub fn vertex_mapping_to_json(m: &VertexMapping) -> Value {
    let map: Map<String, Value> = m
        .map
        .iter()
        .enumerate()
        .map(|(v, &w)| (m.source.vertex_id(v).to_string(), Value::String(m.target.vertex_id(w).to_string())))
        .collect();
    json!({ "kind": m.kind.as_str(), "map": map })
}

pub fn delta_sidecar(d: &FreeCayleyGraph) -> Value {
    let g = d.graph();
    let labels: Map<String, Value> = (0..g.vertex_count())
        .map(|v| {
            let label: Vec<Value> = d.label(v).iter().map(element_to_json).collect();
            (g.vertex_id(v).to_string(), Value::Array(label))
        })
        .collect();
    let origin: Map<String, Value> = (0..g.edge_count())
        .map(|e| (g.edge(e).id.clone(), Value::String(d.base().edge(d.origin(e)).id.clone())))
        .collect();
    json!({ "vertex_labels": labels, "edge_origin": origin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog_lookup, witness_mapping};
    use crate::verify::{certificate_holds, verify_tt, verify_tt_oracle};

    #[test]
    fn graph_round_trip() {
        for key in ["petersen", "loop_edge_T", "directed:cycle:5", "complement_cycle:7"] {
            let g = catalog_lookup(key).unwrap();
            let text = to_pretty(&graph_to_json(&g, None));
            let (back, d) = graph_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, g);
            assert!(d.is_none());
            assert_eq!(to_pretty(&graph_to_json(&back, None)), text);
        }
    }

    #[test]
    fn mapping_and_certificate_round_trip() {
        let f = witness_mapping("k4_to_k3_coloring").unwrap();
        let mut resolve = |v: &Value| -> Result<Arc<Graph>> {
            Ok(if v == "K4" { f.source_arc().clone() } else { f.target_arc().clone() })
        };
        let doc = mapping_to_json(&f, json!("K4"), json!("K3"));
        let back = mapping_from_json(&doc, &mut resolve).unwrap();
        assert_eq!(back.images(), f.images());
        let z = RingSpec::integers();
        for verdict in [verify_tt(&f, &z).unwrap(), verify_tt_oracle(&f, &z).unwrap()] {
            assert!(!verdict.is_tt);
            let text = verdict_to_json(&f, &z, &verdict, true);
            let (spec, parsed) = verdict_from_json(&f, &text).unwrap();
            assert_eq!(parsed, verdict);
            assert!(certificate_holds(&f, &spec, &parsed).unwrap());
        }
    }

    #[test]
    fn reversed_images_parse() {
        let c3 = Arc::new(catalog_lookup("cycle:3").unwrap());
        let doc = json!({ "source": "c", "target": "c", "map": { "e0": "e1~", "e1": "e0", "e2": "e2" } });
        let f = mapping_from_json(&doc, &mut |_| Ok(c3.clone())).unwrap();
        assert_eq!(f.image(0), EdgeImage::flipped(1));
        assert_eq!(mapping_to_json(&f, json!("c"), json!("c")), doc);
        let missing = json!({ "source": "c", "target": "c", "map": { "e0": "e1" } });
        assert!(mapping_from_json(&missing, &mut |_| Ok(c3.clone())).is_err());
    }

    #[test]
    fn edge_function_round_trip() {
        let g = catalog_lookup("cycle:4").unwrap();
        let spec = RingSpec::parse("Z3xZ").unwrap();
        let phi = EdgeFunction::new(
            &g,
            &spec,
            (0..4).map(|i| spec.element(&[i, -7 * i]).unwrap()).collect(),
        )
        .unwrap();
        let doc = edge_function_to_json(&g, &phi);
        assert_eq!(edge_function_from_json(&g, &doc).unwrap(), phi);
    }
}
