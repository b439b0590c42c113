//! The `tenslab` command line. Every verb prints one JSON document; the exit
//! code is 0 for an affirmative answer, 1 for a negative one, 2 when a
//! budget ran out, and 3 for usage or input errors.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{
    chi_tt, chromatic_connectivity, g_m, is_critical, left_homotens_check, nice_check, right_homotens_check,
    sample_nice_rate, tt_perfect, ChiTt, HomotensVerdict, NiceWitness,
};
use crate::cayley::delta;
use crate::constructions::{
    antichain_family, antichain_mapping, catalog_lookup, join_with_k5, triangle_replacement, witness_mapping, CATALOG,
    WITNESS_MAPPINGS,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{
    delta_sidecar, graph_to_json, load_graph, mapping_from_json, mapping_to_json, read_json, to_pretty,
    verdict_from_json, verdict_to_json, vertex_mapping_to_json,
};
use crate::ring::RingSpec;
use crate::search::{
    count_homs, count_tt, detect_induced, enumerate_homs, enumerate_tt, enumerate_tt_count, find_hom, Count,
    HomOptions, Induced, Outcome, TtMethod, TtOptions, DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_NODE_BUDGET,
};
use crate::verify::{certificate_holds, verify_tt, verify_tt_oracle, EdgeMapping};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tenslab", version, about = "Tension-continuous mappings between graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Search-node budget; exhausting it yields "unknown".
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Largest free Cayley graph to build.
    #[arg(long, default_value_t = crate::cayley::DEFAULT_SIZE_BUDGET)]
    size_budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Omit certificates and witnesses.
    #[arg(long)]
    quiet: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also write the main artefact (graph or mapping) to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MethodArg {
    Delta,
    Backtrack,
    Auto,
}

impl From<MethodArg> for TtMethod {
    fn from(m: MethodArg) -> TtMethod {
        match m {
            MethodArg::Delta => TtMethod::Delta,
            MethodArg::Backtrack => TtMethod::Backtrack,
            MethodArg::Auto => TtMethod::Auto,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide tension-continuity through flow images.
    Verify {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        ring: String,
        /// Re-check a certificate from an earlier verdict instead.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide tension-continuity by pulling back every elementary tension.
    VerifyOracle {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: Common,
    },
    SearchTt {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// List up to this many mappings instead of the first one.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    SearchHom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Search for antihomomorphisms.
        #[arg(long)]
        anti: bool,
        /// Count all homomorphisms.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Is the mapping induced by a homomorphism or antihomomorphism?
    Induced {
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build the free Cayley graph.
    Delta {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: Common,
    },
    /// Length of a shortest unbalanced circuit.
    Gm {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: Common,
    },
    Nice {
        #[arg(long)]
        graph: String,
        /// Exit code reports weak niceness.
        #[arg(long)]
        weak: bool,
        #[command(flatten)]
        common: Common,
    },
    LeftHomotens {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        ring: String,
        /// Largest generated target, in vertices.
        #[arg(long, default_value_t = 4)]
        bound: usize,
        /// Extra targets tried first.
        #[arg(long = "target")]
        targets: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    RightHomotens {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: Common,
    },
    ChiTt {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    ChromConnect {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    TtPerfect {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        common: Common,
    },
    Critical {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        common: Common,
    },
    /// `catalog list`, or `catalog get <key>` with keys like `kneser:5:2`.
    Catalog {
        action: String,
        key: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// `join-k5`, `triangle-replacement`, `antichain` or `witness`.
    Construct {
        kind: String,
        /// Base graph (join-k5, triangle-replacement) or witness key.
        #[arg(long)]
        graph: Option<String>,
        /// Indicator graph with designated u0 u1 u2 v0 v1 v2.
        #[arg(long)]
        indicator: Option<String>,
        /// Connector graph with designated a b x1..x5.
        #[arg(long)]
        connector: Option<String>,
        /// Bit vector t, e.g. `1011`.
        #[arg(long)]
        bits: Option<String>,
        /// Emit the explicit TT_2 mapping G_t -> G_{t'} instead.
        #[arg(long)]
        mapping_to: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Count tension-continuous mappings.
    CountTt {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        ring: String,
        /// Brute force over all edge maps instead of search.
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Fraction of (weakly) nice graphs among G(n, p) samples.
    SampleNice {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
}

struct Reply {
    code: i32,
    body: Value,
}

fn reply(code: i32, body: Value) -> Result<Reply> {
    Ok(Reply { code, body })
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => EXIT_UNKNOWN,
        _ => EXIT_USAGE,
    }
}

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code and the text for stdout.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = std::iter::once("tenslab".to_string())
        .chain(args.into_iter().map(Into::into))
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (EXIT_YES, e.to_string());
            }
            return (EXIT_USAGE, to_pretty(&json!({ "error": e.to_string().trim_end() })));
        }
    };
    match dispatch(cli.command) {
        Ok(r) => (r.code, to_pretty(&r.body)),
        Err(e) => (error_code(&e), to_pretty(&json!({ "error": e.to_string() }))),
    }
}

/// A catalog key, or a path to graph JSON.
fn resolve_graph(reference: &str, base: Option<&Path>) -> Result<(Graph, Option<crate::constructions::Designated>)> {
    let path = match base {
        Some(dir) => dir.join(reference),
        None => PathBuf::from(reference),
    };
    if path.is_file() {
        return load_graph(&path);
    }
    if reference.ends_with(".json") {
        return Err(Error::Format(format!("cannot read `{}`", path.display())));
    }
    Ok((catalog_lookup(reference)?, None))
}

fn graph_arg(reference: &str) -> Result<Arc<Graph>> {
    Ok(Arc::new(resolve_graph(reference, None)?.0))
}

/// Mapping files name their graphs by catalog key, by path relative to the
/// file, or embed them.
fn load_mapping(path: &Path) -> Result<EdgeMapping> {
    let doc = read_json(path)?;
    let dir = path.parent().map(Path::to_path_buf);
    let mut resolve = |v: &Value| -> Result<Arc<Graph>> {
        match v {
            Value::String(s) => Ok(Arc::new(resolve_graph(s, dir.as_deref())?.0)),
            Value::Object(_) => Ok(Arc::new(crate::io::graph_from_json(v)?.0)),
            _ => Err(Error::Format("mapping source/target must be a name, a path or a graph".into())),
        }
    };
    mapping_from_json(&doc, &mut resolve)
}

fn write_out(common: &Common, v: &Value) -> Result<()> {
    if let Some(path) = &common.out {
        std::fs::write(path, to_pretty(v)).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn yes_no(b: bool) -> i32 {
    if b {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn outcome_code<T>(o: &Outcome<T>) -> i32 {
    match o {
        Outcome::Yes(_) => EXIT_YES,
        Outcome::No => EXIT_NO,
        Outcome::Unknown => EXIT_UNKNOWN,
    }
}

fn hom_opts(common: &Common, anti: bool) -> HomOptions {
    HomOptions {
        anti,
        node_budget: common.node_budget,
        fixed: Vec::new(),
    }
}

fn tt_opts(common: &Common, method: TtMethod) -> TtOptions {
    TtOptions {
        method,
        node_budget: common.node_budget,
        size_budget: common.size_budget,
        fixed: Vec::new(),
    }
}

fn count_json(c: &Count) -> Value {
    match c {
        Count::Exact(n) => json!({ "count": n.to_string(), "exact": true }),
        Count::AtLeast(n) => json!({ "count": n.to_string(), "exact": false }),
    }
}

fn dispatch(command: Command) -> Result<Reply> {
    match command {
        Command::Verify {
            map,
            ring,
            certificate,
            common,
        } => {
            let f = load_mapping(&map)?;
            let spec = RingSpec::parse(&ring)?;
            if let Some(cert) = certificate {
                let (cert_spec, verdict) = verdict_from_json(&f, &read_json(&cert)?)?;
                if cert_spec != spec {
                    return Err(Error::RingMismatch(format!("certificate is over {cert_spec}, not {spec}")));
                }
                let holds = !verdict.is_tt && certificate_holds(&f, &spec, &verdict)?;
                return reply(yes_no(holds), json!({ "certificate_holds": holds, "ring": spec.to_string() }));
            }
            let verdict = verify_tt(&f, &spec)?;
            reply(yes_no(verdict.is_tt), verdict_to_json(&f, &spec, &verdict, !common.quiet))
        }
        Command::VerifyOracle { map, ring, common } => {
            let f = load_mapping(&map)?;
            let spec = RingSpec::parse(&ring)?;
            let verdict = verify_tt_oracle(&f, &spec)?;
            reply(yes_no(verdict.is_tt), verdict_to_json(&f, &spec, &verdict, !common.quiet))
        }
        Command::SearchTt {
            source,
            target,
            ring,
            method,
            limit,
            common,
        } => {
            let g = graph_arg(&source)?;
            let h = graph_arg(&target)?;
            let spec = RingSpec::parse(&ring)?;
            let opts = tt_opts(&common, method.into());
            let refs = |f: &EdgeMapping| mapping_to_json(f, json!(source), json!(target));
            if let Some(limit) = limit {
                let found = enumerate_tt(g, h, &spec, &opts, limit)?;
                let code = if !found.items.is_empty() {
                    EXIT_YES
                } else if found.complete {
                    EXIT_NO
                } else {
                    EXIT_UNKNOWN
                };
                let mut body = json!({
                    "ring": spec.to_string(),
                    "method": method_name(method),
                    "found": found.items.len(),
                    "complete": found.complete,
                });
                if !common.quiet {
                    body["mappings"] = Value::Array(found.items.iter().map(refs).collect());
                }
                return reply(code, body);
            }
            let outcome = crate::search::find_tt(g, h, &spec, &opts)?;
            let mut body = json!({ "verdict": outcome.verdict(), "ring": spec.to_string(), "method": method_name(method) });
            if let Outcome::Yes(f) = &outcome {
                let doc = refs(f);
                write_out(&common, &doc)?;
                if !common.quiet {
                    body["mapping"] = doc;
                }
            }
            reply(outcome_code(&outcome), body)
        }
        Command::SearchHom {
            source,
            target,
            anti,
            count,
            limit,
            common,
        } => {
            let g = graph_arg(&source)?;
            let h = graph_arg(&target)?;
            let opts = hom_opts(&common, anti);
            if count {
                let c = count_homs(&g, &h, &opts);
                let code = match c {
                    Count::Exact(0) => EXIT_NO,
                    Count::Exact(_) => EXIT_YES,
                    Count::AtLeast(_) => EXIT_UNKNOWN,
                };
                return reply(code, count_json(&c));
            }
            if let Some(limit) = limit {
                let found = enumerate_homs(g, h, &opts, limit);
                let code = if !found.items.is_empty() {
                    EXIT_YES
                } else if found.complete {
                    EXIT_NO
                } else {
                    EXIT_UNKNOWN
                };
                let mut body = json!({ "found": found.items.len(), "complete": found.complete });
                if !common.quiet {
                    body["homomorphisms"] = Value::Array(found.items.iter().map(vertex_mapping_to_json).collect());
                }
                return reply(code, body);
            }
            let outcome = find_hom(g, h, &opts);
            let mut body = json!({ "verdict": outcome.verdict() });
            if let (Outcome::Yes(m), false) = (&outcome, common.quiet) {
                body["homomorphism"] = vertex_mapping_to_json(m);
            }
            reply(outcome_code(&outcome), body)
        }
        Command::Induced { map, common } => {
            let f = load_mapping(&map)?;
            match detect_induced(&f)? {
                Induced::By(m) => {
                    let mut body = json!({ "induced": true });
                    if !common.quiet {
                        body["by"] = vertex_mapping_to_json(&m);
                    }
                    reply(EXIT_YES, body)
                }
                Induced::NotInduced(obs) => {
                    let mut body = json!({ "induced": false });
                    if !common.quiet {
                        body["obstructions"] = Value::Array(
                            obs.iter()
                                .map(|o| {
                                    json!({
                                        "kind": o.kind.as_str(),
                                        "edges": [f.source().edge(o.first_edge).id, f.source().edge(o.second_edge).id],
                                        "vertex": f.source().vertex_id(o.vertex),
                                    })
                                })
                                .collect(),
                        );
                    }
                    reply(EXIT_NO, body)
                }
            }
        }
        Command::Delta { graph, ring, common } => {
            let h = graph_arg(&graph)?;
            let spec = RingSpec::parse(&ring)?;
            let d = delta(&h, &spec, common.size_budget)?;
            let g = graph_to_json(d.graph(), None);
            let sidecar = delta_sidecar(&d);
            if let Some(path) = &common.out {
                write_out(&common, &g)?;
                let side = path.with_extension("sidecar.json");
                std::fs::write(&side, to_pretty(&sidecar)).map_err(|e| Error::Format(format!("{}: {e}", side.display())))?;
            }
            let mut body = json!({
                "vertices": d.graph().vertex_count(),
                "edges": d.graph().edge_count(),
            });
            if !common.quiet {
                body["graph"] = g;
                body["sidecar"] = sidecar;
            }
            reply(EXIT_YES, body)
        }
        Command::Gm { graph, ring, .. } => {
            let g = graph_arg(&graph)?;
            let spec = RingSpec::parse(&ring)?;
            let v = g_m(&g, &spec)?;
            reply(EXIT_YES, json!({ "g_m": v, "infinite": v.is_none(), "ring": spec.to_string() }))
        }
        Command::Nice { graph, weak, common } => {
            let g = graph_arg(&graph)?;
            let r = nice_check(&g)?;
            let mut body = json!({ "weakly_nice": r.weakly_nice, "nice": r.nice });
            if !common.quiet {
                body["failures"] = Value::Array(
                    r.failures
                        .iter()
                        .map(|f| {
                            let ids = |vs: &[usize]| vs.iter().map(|&v| g.vertex_id(v).to_string()).collect::<Vec<_>>();
                            let witness = match &f.witness {
                                NiceWitness::Edge(e) => json!({ "edge": ids(e) }),
                                NiceWitness::Triangle(t) => json!({ "triangle": ids(t) }),
                                NiceWitness::K4(k) => json!({ "k4": ids(k) }),
                                NiceWitness::Unlinked(a, b) => json!({ "k4_pair": [ids(a), ids(b)] }),
                            };
                            json!({ "condition": f.condition, "witness": witness })
                        })
                        .collect(),
                );
            }
            reply(yes_no(if weak { r.weakly_nice } else { r.nice }), body)
        }
        Command::LeftHomotens {
            graph,
            ring,
            bound,
            targets,
            common,
        } => {
            let g = graph_arg(&graph)?;
            let spec = RingSpec::parse(&ring)?;
            let supplied = targets.iter().map(|t| graph_arg(t)).collect::<Result<Vec<_>>>()?;
            let r = left_homotens_check(g, &spec, bound, &supplied, &tt_opts(&common, TtMethod::Backtrack))?;
            let mut body = json!({
                "verdict": r.verdict.as_str(),
                "ring": spec.to_string(),
                "target_bound": bound,
                "targets_checked": r.targets_checked,
                "mappings_checked": r.mappings_checked,
            });
            if let (Some(f), false) = (&r.witness, common.quiet) {
                body["witness"] = mapping_to_json(f, json!(graph), graph_to_json(f.target(), None));
            }
            let code = match r.verdict {
                HomotensVerdict::Holds | HomotensVerdict::HoldsBounded => EXIT_YES,
                HomotensVerdict::Fails => EXIT_NO,
                HomotensVerdict::Unknown => EXIT_UNKNOWN,
            };
            reply(code, body)
        }
        Command::RightHomotens { graph, ring, common } => {
            let h = graph_arg(&graph)?;
            let spec = RingSpec::parse(&ring)?;
            let r = right_homotens_check(h, &spec, common.size_budget, common.node_budget)?;
            let mut body = json!({
                "verdict": r.verdict.as_str(),
                "ring": spec.to_string(),
                "delta_vertices": r.delta_vertices,
                "delta_edges": r.delta_edges,
            });
            if let (Some(m), false) = (&r.hom, common.quiet) {
                body["homomorphism"] = vertex_mapping_to_json(m);
            }
            let code = match r.verdict {
                HomotensVerdict::Holds | HomotensVerdict::HoldsBounded => EXIT_YES,
                HomotensVerdict::Fails => EXIT_NO,
                HomotensVerdict::Unknown => EXIT_UNKNOWN,
            };
            reply(code, body)
        }
        Command::ChiTt {
            graph,
            ring,
            n_max,
            common,
        } => {
            let g = graph_arg(&graph)?;
            let spec = RingSpec::parse(&ring)?;
            let v = chi_tt(g, &spec, n_max, &tt_opts(&common, TtMethod::Auto))?;
            let (code, body) = match v {
                ChiTt::Exact(n) => (EXIT_YES, json!({ "chi_tt": n })),
                ChiTt::Above(n) => (EXIT_NO, json!({ "chi_tt": null, "above": n })),
                ChiTt::Unknown(n) => (EXIT_UNKNOWN, json!({ "chi_tt": null, "unknown_at": n, "lower_bound": n })),
            };
            let mut body = body;
            body["ring"] = json!(spec.to_string());
            reply(code, body)
        }
        Command::ChromConnect { graph, k, common } => {
            let g = graph_arg(&graph)?;
            let r = chromatic_connectivity(&g, k)?;
            let mut body = json!({ "k": k, "holds": r.holds });
            if let (Some(w), false) = (&r.witness, common.quiet) {
                body["separator"] = json!(w.iter().map(|&v| g.vertex_id(v)).collect::<Vec<_>>());
                body["separator_chromatic_number"] = json!(r.witness_chromatic_number);
            }
            reply(yes_no(r.holds), body)
        }
        Command::TtPerfect { graph, common } => {
            let g = graph_arg(&graph)?;
            let r = tt_perfect(&g, common.node_budget)?;
            let mut body = json!({ "tt_perfect": r.perfect, "subsets_checked": r.subsets_checked, "unknown": r.unknown });
            if let (Some(w), false) = (&r.witness, common.quiet) {
                body["critical_subgraph"] = json!(w.iter().map(|&v| g.vertex_id(v)).collect::<Vec<_>>());
            }
            let code = if r.witness.is_some() {
                EXIT_NO
            } else if r.unknown {
                EXIT_UNKNOWN
            } else {
                EXIT_YES
            };
            reply(code, body)
        }
        Command::Critical { graph, common } => {
            let g = graph_arg(&graph)?;
            let c = is_critical(&g, common.node_budget)?;
            reply(yes_no(c), json!({ "critical": c }))
        }
        Command::Catalog { action, key, common } => match (action.as_str(), key) {
            ("list", None) => reply(
                EXIT_YES,
                json!({
                    "graphs": CATALOG.iter().map(|e| json!({
                        "key": e.key, "params": e.params, "description": e.description,
                    })).collect::<Vec<_>>(),
                    "witness_mappings": WITNESS_MAPPINGS,
                }),
            ),
            ("get", Some(key)) => {
                let g = graph_to_json(&catalog_lookup(&key)?, None);
                write_out(&common, &g)?;
                reply(EXIT_YES, g)
            }
            _ => Err(Error::InvalidParameter("use `catalog list` or `catalog get <key>`".into())),
        },
        Command::Construct {
            kind,
            graph,
            indicator,
            connector,
            bits,
            mapping_to,
            common,
        } => {
            let need = |v: &Option<String>, flag: &str| {
                v.clone()
                    .ok_or_else(|| Error::InvalidParameter(format!("`construct {kind}` needs --{flag}")))
            };
            let out = match kind.as_str() {
                "join-k5" => graph_to_json(&join_with_k5(&*graph_arg(&need(&graph, "graph")?)?)?, None),
                "triangle-replacement" => {
                    let base = graph_arg(&need(&graph, "graph")?)?;
                    let (ind, d) = resolve_graph(&need(&indicator, "indicator")?, None)?;
                    let d = d.ok_or_else(|| Error::InvalidGraph("the indicator needs a `designated` field".into()))?;
                    graph_to_json(&triangle_replacement(&base, &ind, &d)?, None)
                }
                "antichain" => {
                    let (h, d) = resolve_graph(&need(&connector, "connector")?, None)?;
                    let d = d.ok_or_else(|| Error::InvalidGraph("the connector needs a `designated` field".into()))?;
                    let t = parse_bits(&need(&bits, "bits")?)?;
                    match &mapping_to {
                        Some(t2) => {
                            let f = antichain_mapping(&t, &parse_bits(t2)?, &h, &d)?;
                            mapping_to_json(&f, graph_to_json(f.source(), None), graph_to_json(f.target(), None))
                        }
                        None => graph_to_json(&antichain_family(&t, &h, &d)?, None),
                    }
                }
                "witness" => {
                    let f = witness_mapping(&need(&graph, "graph")?)?;
                    mapping_to_json(&f, graph_to_json(f.source(), None), graph_to_json(f.target(), None))
                }
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown construction `{kind}` (join-k5, triangle-replacement, antichain, witness)"
                    )))
                }
            };
            write_out(&common, &out)?;
            reply(EXIT_YES, out)
        }
        Command::CountTt {
            source,
            target,
            ring,
            exhaustive,
            common,
        } => {
            let g = graph_arg(&source)?;
            let h = graph_arg(&target)?;
            let spec = RingSpec::parse(&ring)?;
            let c = if exhaustive {
                Count::Exact(enumerate_tt_count(g, h, &spec, DEFAULT_EXHAUSTIVE_BUDGET)?)
            } else {
                count_tt(&g, &h, &spec, &tt_opts(&common, TtMethod::Backtrack))?
            };
            let mut body = count_json(&c);
            body["ring"] = json!(spec.to_string());
            reply(if c.exact().is_some() { EXIT_YES } else { EXIT_UNKNOWN }, body)
        }
        Command::SampleNice { n, p, trials, common } => {
            let r = sample_nice_rate(n, p, trials, common.seed)?;
            reply(
                EXIT_YES,
                json!({
                    "n": n, "p": p, "trials": trials, "seed": common.seed,
                    "weakly_nice": r.weakly_nice, "nice": r.nice,
                    "weakly_nice_rate": r.weakly_nice_rate(), "nice_rate": r.nice_rate(),
                }),
            )
        }
    }
}

fn method_name(m: MethodArg) -> &'static str {
    TtMethod::from(m).as_str()
}

fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidParameter(format!("`{s}` is not a bit vector"))),
        })
        .collect()
}
