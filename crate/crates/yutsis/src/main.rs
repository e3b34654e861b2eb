//! Command-line front end: generate seed instances, verify documents, lift
//! them over trees, run the exhaustive solver, build censuses, and export
//! DOT drawings.
//!
//! Exit codes: 0 success/decided, 1 verification failure, 2 budget abort,
//! 3 parse error (malformed or unreadable input), 64 usage error.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::time::Duration;
use yutsis::coloring::SeedInstance;
use yutsis::generators::{
    complete, counterexample_graph, grid, hypercube, path, seed_cube_ladder, seed_grid, GridSpec,
};
use yutsis::graph::Graph;
use yutsis::io::{
    coloring_to_json, document_from_json, document_to_json, emit_json, export_dot,
    graph_to_json, parse_graph_auto, parse_json, quartet_to_json, verify_document,
    InstanceDocument, IoError, ProductShape, ProvenanceStep, SCHEMA_VERSION,
};
use yutsis::lift::{default_leaves, lift};
use yutsis::solver::{
    census, find_quartet_coloring, is_dual_hamiltonian, Budget, SolveOptions, SolveStatus,
    SolveWitness, SolverError, DEFAULT_VERTEX_CAP,
};

const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_PARSE: i32 = 3;
const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the solver's default vertex cap.
const SOLVER_CAP_VAR: &str = "YUTSIS_SOLVER_CAP";

#[derive(Parser)]
#[command(
    name = "yutsis",
    version,
    about = "Construct, lift, verify, and search for hamiltonian colorings of graphs",
    after_help = "Exit codes: 0 success/decided, 1 verification failure, 2 budget abort, \
                  3 parse error, 64 usage error.\n\
                  YUTSIS_SOLVER_CAP overrides the solver's default vertex cap (28)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum SeedOrder {
    /// Root at the smallest-id leaf, far leaf at the largest.
    #[default]
    MinMax,
    /// Root at the largest-id leaf, far leaf at the smallest.
    MaxMin,
}

#[derive(clap::Args)]
struct SolverArgs {
    /// Wall-clock budget in milliseconds.
    #[arg(long, value_name = "MS")]
    budget_ms: Option<u64>,
    /// Search-node budget.
    #[arg(long, value_name = "N")]
    budget_nodes: Option<u64>,
    /// Vertex cap for budget-less searches (default 28, or YUTSIS_SOLVER_CAP).
    #[arg(long, value_name = "N")]
    cap: Option<usize>,
    /// Worker threads for enumeration.
    #[arg(long, value_name = "N", default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph or pre-verified seed instance (families: hypercube N,
    /// grid D1 D2 [D3...], seed-ladder N, seed-grid M N, counterexample,
    /// path-tree N, complete N).
    Gen {
        /// Family name.
        family: String,
        /// Integer parameters for the family.
        params: Vec<usize>,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every claim an instance document makes, printing one line per
    /// condition; exit 0 iff all hold (schema version: 1).
    Verify {
        /// Instance document (JSON).
        instance: PathBuf,
    },
    /// Lift an instance over a tree, producing a verified instance on the
    /// cartesian product (schema version: 1).
    Lift {
        /// Instance document (JSON).
        instance: PathBuf,
        /// Tree graph (JSON or edge-list text).
        tree: PathBuf,
        /// Root leaf id (defaults per --seed-order).
        root: Option<usize>,
        /// Far leaf id (defaults per --seed-order).
        far_leaf: Option<usize>,
        /// Which leaves to use when root/far-leaf are omitted.
        #[arg(long, value_enum, default_value_t)]
        seed_order: SeedOrder,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide dual-hamiltonicity (or quartet existence with --quartet) by
    /// exhaustive search; exit 0 decided, 2 budget abort.
    Solve {
        /// Graph file (JSON or edge-list text).
        graph: PathBuf,
        /// Search for a hamiltonian coloring admitting a quartet.
        #[arg(long)]
        quartet: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Run the solver over a list of graphs and emit one witnessed row each
    /// (spec: JSON array of {"id", "family", "params"} or {"id", "graph"}).
    Census {
        /// Census specification file (JSON).
        spec: PathBuf,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Render an instance document as deterministic Graphviz DOT.
    ExportDot {
        /// Instance document (JSON).
        instance: PathBuf,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn fail(code: i32, message: impl std::fmt::Display) -> ! {
    eprintln!("error: {message}");
    std::process::exit(code);
}

fn read_input(path: &PathBuf) -> String {
    match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())),
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) {
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                fail(EXIT_PARSE, format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
}

fn load_document(path: &PathBuf) -> InstanceDocument {
    let text = read_input(path);
    let value = match parse_json(&text) {
        Ok(v) => v,
        Err(e) => fail(EXIT_PARSE, e),
    };
    match document_from_json(&value) {
        Ok(doc) => doc,
        Err(e) => fail(EXIT_PARSE, e),
    }
}

fn load_graph(path: &PathBuf) -> Graph {
    match parse_graph_auto(&read_input(path)) {
        Ok(g) => g,
        Err(e @ IoError::Parse(_)) => fail(EXIT_PARSE, e),
        Err(e) => fail(EXIT_VERIFY_FAIL, e),
    }
}

fn solve_options(args: &SolverArgs) -> SolveOptions {
    let env_cap = std::env::var(SOLVER_CAP_VAR)
        .ok()
        .map(|raw| match raw.parse::<usize>() {
            Ok(cap) => cap,
            Err(_) => fail(
                EXIT_USAGE,
                format!("{SOLVER_CAP_VAR} must be a non-negative integer, got \"{raw}\""),
            ),
        });
    let budget = if args.budget_ms.is_some() || args.budget_nodes.is_some() {
        Some(Budget {
            max_nodes: args.budget_nodes,
            max_duration: args.budget_ms.map(Duration::from_millis),
        })
    } else {
        None
    };
    SolveOptions {
        vertex_cap: args.cap.or(env_cap).unwrap_or(DEFAULT_VERTEX_CAP),
        budget,
        threads: args.threads.max(1),
    }
}

fn exit_for_solver_error(e: SolverError) -> ! {
    match e {
        SolverError::Coloring(_) => fail(EXIT_VERIFY_FAIL, e),
        _ => fail(EXIT_USAGE, e),
    }
}

/// What a generator family produces: a bare graph, or a verified seed with
/// its product decomposition.
enum Generated {
    Plain(Graph),
    Seed(SeedInstance, ProductShape),
}

fn generate(family: &str, params: &[usize]) -> Generated {
    let arity = |expected: usize| {
        if params.len() != expected {
            fail(
                EXIT_USAGE,
                format!(
                    "family \"{family}\" takes {expected} parameter{}, got {}",
                    if expected == 1 { "" } else { "s" },
                    params.len()
                ),
            );
        }
    };
    fn usage_err<T, E: std::fmt::Display>(e: E) -> T {
        fail(EXIT_USAGE, e)
    }
    match family {
        "hypercube" => {
            arity(1);
            Generated::Plain(hypercube(params[0]).unwrap_or_else(usage_err))
        }
        "grid" => {
            if params.is_empty() {
                fail(EXIT_USAGE, "family \"grid\" needs at least one dimension");
            }
            let spec = GridSpec::new(params.to_vec()).unwrap_or_else(usage_err);
            Generated::Plain(grid(&spec))
        }
        "complete" => {
            arity(1);
            Generated::Plain(complete(params[0]))
        }
        "path-tree" => {
            arity(1);
            Generated::Plain(path(params[0]).graph().clone())
        }
        "counterexample" => {
            arity(0);
            Generated::Plain(counterexample_graph())
        }
        "seed-ladder" => {
            arity(1);
            let n = params[0];
            let seed = seed_cube_ladder(n).unwrap_or_else(usage_err);
            Generated::Seed(seed, ProductShape { base_size: 4, fiber_count: n + 1 })
        }
        "seed-grid" => {
            arity(2);
            let (m, n) = (params[0], params[1]);
            let seed = seed_grid(m, n).unwrap_or_else(usage_err);
            Generated::Seed(seed, ProductShape { base_size: m + 1, fiber_count: n + 1 })
        }
        other => fail(EXIT_USAGE, format!("unknown family \"{other}\"")),
    }
}

fn cmd_gen(family: &str, params: &[usize], out: &Option<PathBuf>) {
    let text = match generate(family, params) {
        Generated::Plain(g) => emit_json(&graph_to_json(&g)),
        Generated::Seed(seed, shape) => {
            let provenance =
                vec![ProvenanceStep::Generator { name: family.to_string(), params: params.to_vec() }];
            let doc = InstanceDocument::from_instance(&seed, provenance, Some(shape));
            emit_json(&document_to_json(&doc))
        }
    };
    write_output(out, &text);
}

fn cmd_verify(path: &PathBuf) {
    let doc = load_document(path);
    let report = verify_document(&doc);
    let line = |name: &str, ok: bool| println!("{name}: {}", if ok { "ok" } else { "FAIL" });
    line("coloring-total", report.coloring_total);
    line("hamiltonian", report.hamiltonian);
    match report.bond_size {
        Some((got, want)) => println!(
            "bond-size: {got}/{want} {}",
            if got == want { "ok" } else { "FAIL" }
        ),
        None => println!("bond-size: n/a"),
    }
    line("quartet-wellformed", report.quartet_wellformed);
    line("q1", report.q1);
    line("q2", report.q2);
    line("q3", report.q3);
    if report.pass() {
        println!("verdict: pass");
    } else {
        println!(
            "verdict: fail ({})",
            report.first_failure().expect("a failing report names a condition")
        );
        std::process::exit(EXIT_VERIFY_FAIL);
    }
}

fn cmd_lift(
    instance: &PathBuf,
    tree_path: &PathBuf,
    root: Option<usize>,
    far_leaf: Option<usize>,
    seed_order: SeedOrder,
    out: &Option<PathBuf>,
) {
    let doc = load_document(instance);
    let base_size = doc.graph.vertex_count();
    let mut provenance = doc.provenance.clone();
    let seed = match doc.into_instance() {
        Ok(seed) => seed,
        Err(e) => fail(EXIT_VERIFY_FAIL, format!("input instance does not verify: {e}")),
    };
    let tree_graph = load_graph(tree_path);

    // Pick the leaf pair: explicit arguments win, --seed-order fills gaps.
    let defaults = match yutsis::graph::bfs_tree(&tree_graph, 0) {
        Ok(t) => {
            let (lo, hi) = default_leaves(&t);
            match seed_order {
                SeedOrder::MinMax => (lo, hi),
                SeedOrder::MaxMin => (hi, lo),
            }
        }
        Err(e) => fail(EXIT_VERIFY_FAIL, format!("tree input: {e}")),
    };
    let r = root.unwrap_or(defaults.0);
    let l = far_leaf.unwrap_or(defaults.1);
    if r == l {
        fail(EXIT_USAGE, format!("root and far leaf must differ (both are {r})"));
    }

    let tree = match yutsis::graph::bfs_tree(&tree_graph, r) {
        Ok(t) => t,
        Err(e) => fail(EXIT_VERIFY_FAIL, format!("tree input: {e}")),
    };
    let lifted = match lift(&seed, &tree, r, l) {
        Ok(out) => out,
        Err(e) => fail(EXIT_VERIFY_FAIL, e),
    };
    provenance.push(ProvenanceStep::Lift { tree: tree_graph, root: r, far_leaf: l });
    let shape = ProductShape { base_size, fiber_count: lifted.index().h_size() };
    let doc = InstanceDocument::from_instance(lifted.instance(), provenance, Some(shape));
    write_output(out, &emit_json(&document_to_json(&doc)));
}

fn cmd_solve(graph_path: &PathBuf, quartet: bool, args: &SolverArgs) {
    let g = load_graph(graph_path);
    let opts = solve_options(args);
    let result = if quartet {
        find_quartet_coloring(&g, &opts)
    } else {
        is_dual_hamiltonian(&g, &opts)
    };
    let result = result.unwrap_or_else(|e| exit_for_solver_error(e));
    let mut value = serde_json::json!({
        "colorings_enumerated": result.colorings_enumerated,
        "nodes_visited": result.nodes_visited,
        "status": result.status.as_str(),
    });
    match &result.witness {
        Some(SolveWitness::Coloring(c)) => value["witness"] = coloring_to_json(c),
        Some(SolveWitness::Instance(inst)) => {
            value["witness"] = serde_json::json!({
                "coloring": coloring_to_json(inst.coloring()),
                "quartet": quartet_to_json(inst.quartet()),
            });
        }
        None => {}
    }
    print!("{}", emit_json(&value));
    if result.status == SolveStatus::AbortedBudget {
        std::process::exit(EXIT_BUDGET);
    }
}

fn cmd_census(spec_path: &PathBuf, out: &Option<PathBuf>, args: &SolverArgs) {
    let value = match parse_json(&read_input(spec_path)) {
        Ok(v) => v,
        Err(e) => fail(EXIT_PARSE, e),
    };
    let entries = match value.as_array() {
        Some(a) => a,
        None => fail(EXIT_PARSE, "census spec must be a JSON array"),
    };
    let mut items: Vec<(String, Graph)> = Vec::with_capacity(entries.len());
    for entry in entries {
        let id = match entry.get("id").and_then(|v| v.as_str()) {
            Some(id) => id.to_string(),
            None => fail(EXIT_PARSE, "census entry is missing a string \"id\""),
        };
        let g = if let Some(graph_value) = entry.get("graph") {
            match yutsis::io::graph_from_json(graph_value) {
                Ok(g) => g,
                Err(e) => fail(EXIT_PARSE, format!("census entry \"{id}\": {e}")),
            }
        } else {
            let family = match entry.get("family").and_then(|v| v.as_str()) {
                Some(f) => f,
                None => fail(
                    EXIT_PARSE,
                    format!("census entry \"{id}\" needs either \"graph\" or \"family\""),
                ),
            };
            let params: Vec<usize> = match entry.get("params") {
                None => Vec::new(),
                Some(p) => match p.as_array() {
                    Some(raw) => raw
                        .iter()
                        .map(|v| match v.as_u64() {
                            Some(n) => n as usize,
                            None => fail(
                                EXIT_PARSE,
                                format!("census entry \"{id}\": params must be integers"),
                            ),
                        })
                        .collect(),
                    None => {
                        fail(EXIT_PARSE, format!("census entry \"{id}\": params must be an array"))
                    }
                },
            };
            match generate(family, &params) {
                Generated::Plain(g) => g,
                Generated::Seed(seed, _) => seed.graph().clone(),
            }
        };
        items.push((id, g));
    }

    let opts = solve_options(args);
    let rows = census(&items, &opts).unwrap_or_else(|e| exit_for_solver_error(e));
    let mut any_abort = false;
    let row_values: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            any_abort |= row.dual_status == SolveStatus::AbortedBudget
                || row.quartet_status == SolveStatus::AbortedBudget;
            let mut v = serde_json::json!({
                "dual_hamiltonian": row.dual_status.as_str(),
                "edge_count": row.edge_count,
                "id": row.id,
                "quartet_coloring": row.quartet_status.as_str(),
                "vertex_count": row.vertex_count,
            });
            if let Some(c) = &row.dual_witness {
                v["dual_witness"] = coloring_to_json(c);
            }
            if let Some(inst) = &row.quartet_witness {
                v["quartet_witness"] = serde_json::json!({
                    "coloring": coloring_to_json(inst.coloring()),
                    "quartet": quartet_to_json(inst.quartet()),
                });
            }
            v
        })
        .collect();
    let doc = serde_json::json!({ "rows": row_values, "schema": SCHEMA_VERSION });
    write_output(out, &emit_json(&doc));
    if any_abort {
        std::process::exit(EXIT_BUDGET);
    }
}

fn cmd_export_dot(instance: &PathBuf, out: &Option<PathBuf>) {
    let doc = load_document(instance);
    match export_dot(&doc) {
        Ok(dot) => write_output(out, &dot),
        Err(e) => fail(EXIT_PARSE, e),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successful outcomes, not usage errors.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match &cli.command {
        Command::Gen { family, params, out } => cmd_gen(family, params, out),
        Command::Verify { instance } => cmd_verify(instance),
        Command::Lift { instance, tree, root, far_leaf, seed_order, out } => {
            cmd_lift(instance, tree, *root, *far_leaf, *seed_order, out)
        }
        Command::Solve { graph, quartet, solver } => cmd_solve(graph, *quartet, solver),
        Command::Census { spec, out, solver } => cmd_census(spec, out, solver),
        Command::ExportDot { instance, out } => cmd_export_dot(instance, out),
    }
}
