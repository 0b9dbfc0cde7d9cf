use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use recon_core::deck::{edge_deck, end_vertex_deck, infer_attachment_profile, is_g_edge_hypomorphic, vertex_deck};
use recon_core::graph6::{parse_graph6, parse_graph6_list};
use recon_core::group_spec::parse_group_spec;
use recon_core::iso::{canonical_form, is_g_isomorphic};
use recon_core::nash_williams::{
    is_g_edge_reconstructible, sufficient_conditions, verify_lemma, Context, DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_SUBSETS,
};
use recon_core::perm::DEFAULT_MAX_ORDER;
use recon_core::search::{
    end_vertex_experiment, enumerate_graphs, enumerate_trees, find_hypomorphic_pairs,
    find_irreplaceable_edge_set_with_budget, find_replacing_sets, survey_trees,
};
use recon_core::structure::{blocks_and_cutpoints, block_cut_tree, classify, pruned_center_full, reduce_separable};
use recon_core::{EdgeSet, Error, ErrorClass, Graph, PermGroup};

#[derive(Parser)]
#[command(name = "recon", version, about = "Edge-reconstruction experiments on small graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Global {
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Suppress progress on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Include wall-clock time in the JSON report.
    #[arg(long, global = true)]
    timing: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_group_order: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CANDIDATES)]
    max_candidates: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SUBSETS)]
    max_subsets: u64,
}

#[derive(Args)]
struct GraphInput {
    /// Inline graph6, optionally followed by ` colors=...`.
    #[arg(long, conflicts_with = "input")]
    g6: Option<String>,
    /// File of graph6 lines; the first graph is used.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct PairInput {
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    y: Option<String>,
    /// File whose first two graphs are X and Y.
    #[arg(long, conflicts_with_all = ["x", "y"])]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Edge,
    Vertex,
    EndVertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContextArg {
    Generic,
    Bipartite,
    CenterKnown,
}

#[derive(Subcommand)]
enum Verb {
    /// Edge, vertex or end-vertex deck of a graph.
    Deck {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "edge")]
        kind: Kind,
        #[arg(long, default_value = "S")]
        group: String,
        /// For end-vertex decks, also recover the attachment profile.
        #[arg(long)]
        infer: bool,
    },
    /// Whether X and Y are G-edge hypomorphic.
    Hypomorphic {
        #[command(flatten)]
        pair: PairInput,
        #[arg(long, default_value = "S")]
        group: String,
    },
    /// Verify the overlap identity for a hypomorphic, non-isomorphic pair.
    Lemma {
        #[command(flatten)]
        pair: PairInput,
        #[arg(long, default_value = "S")]
        group: String,
    },
    /// Decide G-edge reconstructibility by exhausting candidates.
    Check {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "S")]
        group: String,
    },
    /// All G-edge hypomorphic, non-G-isomorphic pairs with n vertices and m edges.
    Pairs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "S")]
        group: String,
    },
    /// Blocks, block-cutpoint tree, pruned center and class membership.
    Structure {
        #[command(flatten)]
        graph: GraphInput,
        /// Also run the separable reduction.
        #[arg(long)]
        reduce: bool,
    },
    /// Counting conditions that imply reconstructibility.
    Bounds {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "S")]
        group: String,
        #[arg(long, value_enum, default_value = "generic")]
        context: ContextArg,
    },
    /// Replacing edge sets of E, or the first irreplaceable edge set.
    Replace {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "S")]
        group: String,
        /// Edge set such as `01,12`; omit to search for an irreplaceable set.
        #[arg(long)]
        edges: Option<String>,
        /// Largest edge-set size for the irreplaceable search (default m).
        #[arg(long)]
        max_k: Option<usize>,
        /// Stop after this many candidate replacements.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// End-vertex reconstruction experiment on base graph Z.
    Endvertex {
        #[command(flatten)]
        graph: GraphInput,
        /// Class sizes r_1,...,r_k.
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<usize>,
    },
    /// Irreplaceable edge sets across all small trees.
    SurveyTrees {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "S")]
        group: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Isomorphism classes of graphs or trees.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        trees: bool,
        #[arg(long)]
        connected: bool,
    },
}

type Outcome = Result<(&'static str, Value, Value), Error>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn read_text(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))
}

fn load_graph(input: &GraphInput) -> Result<Graph, Error> {
    match (&input.g6, &input.input) {
        (Some(s), _) => parse_graph6(s),
        (None, Some(path)) => parse_graph6_list(&read_text(path)?)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Precondition(format!("{}: no graphs", path.display()))),
        (None, None) => Err(Error::Precondition("give --g6 or --input".into())),
    }
}

fn load_pair(input: &PairInput) -> Result<(Graph, Graph), Error> {
    if let Some(path) = &input.input {
        let graphs = parse_graph6_list(&read_text(path)?)?;
        return match &graphs[..] {
            [x, y, ..] => Ok((x.clone(), y.clone())),
            _ => Err(Error::Precondition(format!("{}: need two graphs", path.display()))),
        };
    }
    match (&input.x, &input.y) {
        (Some(x), Some(y)) => Ok((parse_graph6(x)?, parse_graph6(y)?)),
        _ => Err(Error::Precondition("give --x and --y, or --input".into())),
    }
}

fn parse_edges(text: &str, n: usize) -> Result<EdgeSet, Error> {
    let bad = || Error::Precondition(format!("bad edge list {text:?}"));
    let mut edges = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (u, v) = if let Some((a, b)) = item.split_once('-') {
            (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
        } else {
            let digits: Vec<usize> = item.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
            match digits[..] {
                [u, v] => (u, v),
                _ => return Err(bad()),
            }
        };
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Loop(u, v));
        }
        edges.push((u.min(v), u.max(v)));
    }
    Ok(EdgeSet::new(edges))
}

fn group_for(spec: &str, x: &Graph, g: &Global) -> Result<PermGroup, Error> {
    parse_group_spec(spec, x.n(), Some(x), g.max_group_order)
}

fn run(verb: &Verb, g: &Global) -> Outcome {
    match verb {
        Verb::Deck {
            graph,
            kind,
            group,
            infer,
        } => {
            let x = load_graph(graph)?;
            let params = json!({"graph": x, "kind": kind_name(*kind), "group": group});
            let deck = match kind {
                Kind::Edge => edge_deck(&x, &group_for(group, &x, g)?)?,
                Kind::Vertex => vertex_deck(&x)?,
                Kind::EndVertex => end_vertex_deck(&x)?,
            };
            let mut result = json!({"deck": deck});
            if *infer {
                result["fit"] = to_value(&infer_attachment_profile(&deck)?);
            }
            Ok(("deck", params, json!([result])))
        }
        Verb::Hypomorphic { pair, group } => {
            let (x, y) = load_pair(pair)?;
            let grp = group_for(group, &x, g)?;
            let params = json!({"x": x, "y": y, "group": grp.tag()});
            let hypomorphic = is_g_edge_hypomorphic(&x, &y, &grp)?;
            let isomorphic = is_g_isomorphic(&x, &y, &grp)?;
            Ok((
                "hypomorphic",
                params,
                json!([{"hypomorphic": hypomorphic, "isomorphic": isomorphic}]),
            ))
        }
        Verb::Lemma { pair, group } => {
            let (x, y) = load_pair(pair)?;
            let grp = group_for(group, &x, g)?;
            let params = json!({"x": x, "y": y, "group": grp.tag()});
            let report = verify_lemma(&x, &y, &grp, g.max_subsets)?;
            Ok(("lemma", params, json!([report])))
        }
        Verb::Check { graph, group } => {
            let x = load_graph(graph)?;
            let grp = group_for(group, &x, g)?;
            let params = json!({"graph": x, "group": grp.tag()});
            let report = is_g_edge_reconstructible(&x, &grp, g.max_candidates)?;
            let lemma = match &report.witness {
                Some(y) => Some(verify_lemma(&x, y, &grp, g.max_subsets)?),
                None => None,
            };
            let result = json!({
                "reconstructible": report.is_reconstructible(),
                "candidates": report.candidates,
                "witness": report.witness,
                "witness_code_sn": report.witness.as_ref().map(canonical_form),
                "lemma": lemma,
            });
            Ok(("check", params, json!([result])))
        }
        Verb::Pairs { n, m, group } => {
            let empty = Graph::empty(*n)?;
            let grp = group_for(group, &empty, g)?;
            let params = json!({"n": n, "m": m, "group": grp.tag()});
            let pairs = find_hypomorphic_pairs(*n, *m, &grp, g.max_candidates, g.max_subsets)?;
            Ok(("pairs", params, to_value(&pairs)))
        }
        Verb::Structure { graph, reduce } => {
            let x = load_graph(graph)?;
            let params = json!({"graph": x});
            let mut result = json!({"classification": classify(&x)});
            if x.is_connected() && x.n() >= 2 {
                let blocks = blocks_and_cutpoints(&x)?;
                result["blocks"] = to_value(&blocks.blocks);
                result["cutpoints"] = to_value(&blocks.cutpoints);
                result["block_cut_tree"] = to_value(&block_cut_tree(&x)?);
                match pruned_center_full(&x) {
                    Ok(pc) => {
                        result["pruned_vertices"] = to_value(&pc.pruned.vertices);
                        result["pruned_center"] = to_value(&pc.center);
                    }
                    Err(e) => result["pruned_center"] = error_value(&e),
                }
            }
            if *reduce {
                let r = reduce_separable(&x)?;
                result["reduction"] = json!({
                    "center": r.center,
                    "center_vertices": r.center_vertices,
                    "group_order": r.group.order(),
                    "recognized": r.recognized.iter().map(|(e, _)| format!("{}{}", e.0, e.1)).collect::<Vec<_>>(),
                });
            }
            Ok(("structure", params, json!([result])))
        }
        Verb::Bounds { graph, group, context } => {
            let x = load_graph(graph)?;
            let grp = group_for(group, &x, g)?;
            let ctx = match context {
                ContextArg::Generic => Context::Generic,
                ContextArg::Bipartite => Context::Bipartite,
                ContextArg::CenterKnown => Context::CenterKnown,
            };
            let params = json!({"graph": x, "group": grp.tag(), "context": ctx});
            let flags = sufficient_conditions(&x, &grp, ctx)?;
            Ok(("bounds", params, json!([flags])))
        }
        Verb::Replace {
            graph,
            group,
            edges,
            max_k,
            budget,
        } => {
            let x = load_graph(graph)?;
            let grp = group_for(group, &x, g)?;
            match edges {
                Some(text) => {
                    let e = parse_edges(text, x.n())?;
                    let params = json!({"graph": x, "group": grp.tag(), "edges": e.to_string()});
                    let sets: Vec<String> = find_replacing_sets(&x, &e, &grp)?.iter().map(|f| f.to_string()).collect();
                    Ok(("replace", params, json!([{"replacing_sets": sets}])))
                }
                None => {
                    let k = max_k.unwrap_or(x.m());
                    let params = json!({"graph": x, "group": grp.tag(), "max_k": k, "budget": budget});
                    let found = find_irreplaceable_edge_set_with_budget(&x, &grp, k, *budget)?;
                    Ok(("irreplaceable", params, json!([found])))
                }
            }
        }
        Verb::Endvertex { graph, r } => {
            let z = load_graph(graph)?;
            let params = json!({"z": z, "r": r});
            let report = end_vertex_experiment(&z, r)?;
            Ok(("endvertex", params, json!([report])))
        }
        Verb::SurveyTrees { max_n, group, budget } => {
            let params = json!({"max_n": max_n, "group": group, "budget": budget});
            let survey = survey_trees(*max_n, group, g.max_group_order, *budget)?;
            Ok(("survey-trees", params, json!([survey])))
        }
        Verb::Enumerate { n, m, trees, connected } => {
            let params = json!({"n": n, "m": m, "trees": trees, "connected": connected});
            let graphs = if *trees {
                enumerate_trees(*n)?
            } else if *connected {
                enumerate_graphs(*n, *m, Some(&|x: &Graph| x.is_connected()))?
            } else {
                enumerate_graphs(*n, *m, None)?
            };
            Ok(("enumerate", params, to_value(&graphs)))
        }
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Edge => "edge",
        Kind::Vertex => "vertex",
        Kind::EndVertex => "end-vertex",
    }
}

fn error_value(e: &Error) -> Value {
    json!({"error": e.name(), "detail": e.to_string()})
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(g.threads.max(1)).build_global() {
        eprintln!("recon: thread pool: {e}");
    }
    let start = Instant::now();
    let outcome = run(&cli.verb, g);
    let elapsed = start.elapsed();
    if !g.quiet {
        eprintln!("recon: finished in {:.3} s", elapsed.as_secs_f64());
    }
    match outcome {
        Ok((experiment, parameters, results)) => {
            let timing = if g.timing {
                json!({"elapsed_ms": elapsed.as_millis() as u64, "threads": g.threads})
            } else {
                Value::Null
            };
            let doc = json!({
                "experiment": experiment,
                "parameters": parameters,
                "results": results,
                "timing": timing,
            });
            emit(&doc);
            ExitCode::SUCCESS
        }
        Err(e) => {
            emit(&error_value(&e));
            if !g.quiet {
                eprintln!("recon: {e}");
            }
            match e.class() {
                ErrorClass::Capacity => ExitCode::from(3),
                ErrorClass::Input => ExitCode::from(4),
            }
        }
    }
}

// a closed pipe (`recon ... | head`) is not an error worth a panic
fn emit(v: &Value) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"));
}
