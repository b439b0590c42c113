//! Python bindings. Graphs and mappings cross the boundary as JSON strings
//! in the same format the command line reads and writes; a graph argument
//! may also be a catalog key such as `"kneser:5:2"`.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::Value;

use tenslab_core::analysis::{chi_tt as chi_tt_core, g_m as g_m_core, nice_check, ChiTt};
use tenslab_core::constructions::catalog_lookup;
use tenslab_core::io::{graph_from_json, graph_to_json, mapping_from_json, mapping_to_json, to_pretty, verdict_to_json};
use tenslab_core::search::{find_tt, Outcome, TtOptions};
use tenslab_core::verify::verify_tt;
use tenslab_core::{Error, Graph, RingSpec};

fn err(e: Error) -> PyErr {
    match e {
        Error::Budget(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn graph(reference: &str) -> PyResult<Arc<Graph>> {
    let g = if reference.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(reference).map_err(|e| PyValueError::new_err(e.to_string()))?;
        graph_from_json(&v).map_err(err)?.0
    } else {
        catalog_lookup(reference).map_err(err)?
    };
    Ok(Arc::new(g))
}

fn ring(s: &str) -> PyResult<RingSpec> {
    RingSpec::parse(s).map_err(err)
}

/// Runs the command line with `args` and returns `(exit_code, stdout)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String) {
    tenslab_core::cli::run(args)
}

/// The catalog graph `key` as JSON.
#[pyfunction]
fn catalog(key: &str) -> PyResult<String> {
    Ok(to_pretty(&graph_to_json(&*graph(key)?, None)))
}

/// Verifies a mapping document (with embedded or catalog graphs) and returns
/// the verdict document.
#[pyfunction]
fn verify(mapping: &str, ring_spec: &str) -> PyResult<String> {
    let v: Value = serde_json::from_str(mapping).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let f = mapping_from_json(&v, &mut |r| match r {
        Value::String(s) => catalog_lookup(s).map(Arc::new),
        other => graph_from_json(other).map(|(g, _)| Arc::new(g)),
    })
    .map_err(err)?;
    let spec = ring(ring_spec)?;
    let verdict = verify_tt(&f, &spec).map_err(err)?;
    Ok(to_pretty(&verdict_to_json(&f, &spec, &verdict, true)))
}

/// A tension-continuous mapping as JSON, or `None` when there is none.
/// Raises `RuntimeError` when the search budget runs out.
#[pyfunction]
fn search_tt(source: &str, target: &str, ring_spec: &str) -> PyResult<Option<String>> {
    let (g, h) = (graph(source)?, graph(target)?);
    match find_tt(g.clone(), h.clone(), &ring(ring_spec)?, &TtOptions::default()).map_err(err)? {
        Outcome::Yes(f) => Ok(Some(to_pretty(&mapping_to_json(
            &f,
            graph_to_json(&g, None),
            graph_to_json(&h, None),
        )))),
        Outcome::No => Ok(None),
        Outcome::Unknown => Err(PyRuntimeError::new_err("search budget exhausted")),
    }
}

/// Length of a shortest unbalanced circuit; `None` when every circuit is
/// balanced.
#[pyfunction]
fn g_m(graph_ref: &str, ring_spec: &str) -> PyResult<Option<usize>> {
    g_m_core(&*graph(graph_ref)?, &ring(ring_spec)?).map_err(err)
}

/// `(weakly_nice, nice)`.
#[pyfunction]
fn nice(graph_ref: &str) -> PyResult<(bool, bool)> {
    let r = nice_check(&*graph(graph_ref)?).map_err(err)?;
    Ok((r.weakly_nice, r.nice))
}

/// The tension-continuous chromatic number, or `None` when it exceeds
/// `n_max`.
#[pyfunction]
#[pyo3(signature = (graph_ref, ring_spec, n_max = 8))]
fn chi_tt(graph_ref: &str, ring_spec: &str, n_max: usize) -> PyResult<Option<usize>> {
    match chi_tt_core(graph(graph_ref)?, &ring(ring_spec)?, n_max, &TtOptions::default()).map_err(err)? {
        ChiTt::Exact(n) => Ok(Some(n)),
        ChiTt::Above(_) => Ok(None),
        ChiTt::Unknown(n) => Err(PyRuntimeError::new_err(format!("search budget exhausted at {n} vertices"))),
    }
}

#[pymodule]
fn tenslab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(search_tt, m)?)?;
    m.add_function(wrap_pyfunction!(g_m, m)?)?;
    m.add_function(wrap_pyfunction!(nice, m)?)?;
    m.add_function(wrap_pyfunction!(chi_tt, m)?)?;
    Ok(())
}
