//! Serialization and export: canonical JSON documents, edge-list input, and
//! figure-grade DOT output.
//!
//! The persistence format is canonical JSON — keys sorted, integers only —
//! so emitting a parsed document reproduces it byte for byte, and artifacts
//! diff cleanly. Graphs are also accepted as plain edge-list text for
//! interop ("n m" header, one "u v" pair per line). Instance documents carry
//! a provenance chain recording the generator and every lift step that
//! produced them, so a big lifted instance can be re-derived from scratch.

use crate::coloring::{
    bichromatic_edges, is_hamiltonian_coloring, is_quartet, Color, ColoringError, Quartet,
    SeedInstance, TwoColoring,
};
use crate::graph::{Graph, GraphError};
use serde_json::{json, Value};
use std::fmt;

/// Schema version stamped into every instance document.
pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug)]
pub enum IoError {
    /// Malformed input text; the detail names the offending part.
    Parse(String),
    Graph(GraphError),
    Coloring(ColoringError),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Parse(detail) => write!(f, "parse error: {detail}"),
            IoError::Graph(e) => write!(f, "{e}"),
            IoError::Coloring(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<GraphError> for IoError {
    fn from(e: GraphError) -> Self {
        IoError::Graph(e)
    }
}

impl From<ColoringError> for IoError {
    fn from(e: ColoringError) -> Self {
        IoError::Coloring(e)
    }
}

/// One step in the derivation of an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProvenanceStep {
    /// Produced by a named generator with integer parameters.
    Generator { name: String, params: Vec<usize> },
    /// Lifted over `tree` rooted at `root` with far leaf `far_leaf`.
    Lift { tree: Graph, root: usize, far_leaf: usize },
}

/// Product structure of a lifted instance: fiber `x` is the contiguous
/// vertex range `x * base_size .. (x + 1) * base_size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductShape {
    pub base_size: usize,
    pub fiber_count: usize,
}

/// A parsed (not yet verified) instance: graph, coloring, quartet, and the
/// derivation that produced them. [`verify_document`] checks the claims;
/// [`InstanceDocument::into_instance`] converts to a verified
/// [`SeedInstance`].
#[derive(Debug, Clone)]
pub struct InstanceDocument {
    pub graph: Graph,
    pub coloring: TwoColoring,
    pub quartet: Quartet,
    pub provenance: Vec<ProvenanceStep>,
    pub product: Option<ProductShape>,
}

impl InstanceDocument {
    /// Wraps a verified instance for serialization.
    pub fn from_instance(
        instance: &SeedInstance,
        provenance: Vec<ProvenanceStep>,
        product: Option<ProductShape>,
    ) -> Self {
        InstanceDocument {
            graph: instance.graph().clone(),
            coloring: instance.coloring().clone(),
            quartet: *instance.quartet(),
            provenance,
            product,
        }
    }

    /// Re-verifies the document's claims, producing a checked instance.
    pub fn into_instance(self) -> Result<SeedInstance, ColoringError> {
        SeedInstance::new(self.graph, self.coloring, self.quartet)
    }
}

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g.edges().iter().map(|&(u, v)| json!([u, v])).collect();
    json!({ "edges": edges, "n": g.vertex_count() })
}

fn field<'v>(value: &'v Value, key: &str) -> Result<&'v Value, IoError> {
    value
        .get(key)
        .ok_or_else(|| IoError::Parse(format!("missing field \"{key}\"")))
}

fn usize_field(value: &Value, key: &str) -> Result<usize, IoError> {
    field(value, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| IoError::Parse(format!("field \"{key}\" must be a non-negative integer")))
}

pub fn graph_from_json(value: &Value) -> Result<Graph, IoError> {
    let n = usize_field(value, "n")?;
    let raw_edges = field(value, "edges")?
        .as_array()
        .ok_or_else(|| IoError::Parse("field \"edges\" must be an array".into()))?;
    let mut edges = Vec::with_capacity(raw_edges.len());
    for e in raw_edges {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .and_then(|p| Some((p[0].as_u64()?, p[1].as_u64()?)))
            .ok_or_else(|| IoError::Parse(format!("edge {e} must be a pair of integers")))?;
        edges.push((pair.0 as usize, pair.1 as usize));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn coloring_to_json(c: &TwoColoring) -> Value {
    json!({ "colors": c.to_string() })
}

pub fn coloring_from_json(value: &Value) -> Result<TwoColoring, IoError> {
    let text = field(value, "colors")?
        .as_str()
        .ok_or_else(|| IoError::Parse("field \"colors\" must be a string".into()))?;
    Ok(TwoColoring::parse(text)?)
}

pub fn quartet_to_json(q: &Quartet) -> Value {
    json!({ "i_blue": q.i_blue, "i_red": q.i_red, "j_blue": q.j_blue, "j_red": q.j_red })
}

/// Reads a quartet's positions without validating distinctness, so a broken
/// document can still be loaded and *reported* broken by [`verify_document`].
pub fn quartet_from_json(value: &Value) -> Result<Quartet, IoError> {
    Ok(Quartet {
        i_red: usize_field(value, "i_red")?,
        i_blue: usize_field(value, "i_blue")?,
        j_red: usize_field(value, "j_red")?,
        j_blue: usize_field(value, "j_blue")?,
    })
}

fn provenance_step_to_json(step: &ProvenanceStep) -> Value {
    match step {
        ProvenanceStep::Generator { name, params } => {
            json!({ "kind": "generator", "name": name, "params": params })
        }
        ProvenanceStep::Lift { tree, root, far_leaf } => {
            json!({ "far_leaf": far_leaf, "kind": "lift", "root": root, "tree": graph_to_json(tree) })
        }
    }
}

fn provenance_step_from_json(value: &Value) -> Result<ProvenanceStep, IoError> {
    let kind = field(value, "kind")?
        .as_str()
        .ok_or_else(|| IoError::Parse("field \"kind\" must be a string".into()))?;
    match kind {
        "generator" => {
            let name = field(value, "name")?
                .as_str()
                .ok_or_else(|| IoError::Parse("field \"name\" must be a string".into()))?
                .to_string();
            let raw = field(value, "params")?
                .as_array()
                .ok_or_else(|| IoError::Parse("field \"params\" must be an array".into()))?;
            let mut params = Vec::with_capacity(raw.len());
            for p in raw {
                params.push(p.as_u64().ok_or_else(|| {
                    IoError::Parse("generator params must be integers".into())
                })? as usize);
            }
            Ok(ProvenanceStep::Generator { name, params })
        }
        "lift" => Ok(ProvenanceStep::Lift {
            tree: graph_from_json(field(value, "tree")?)?,
            root: usize_field(value, "root")?,
            far_leaf: usize_field(value, "far_leaf")?,
        }),
        other => Err(IoError::Parse(format!("unknown provenance kind \"{other}\""))),
    }
}

pub fn document_to_json(doc: &InstanceDocument) -> Value {
    let provenance: Vec<Value> = doc.provenance.iter().map(provenance_step_to_json).collect();
    let mut value = json!({
        "coloring": coloring_to_json(&doc.coloring),
        "graph": graph_to_json(&doc.graph),
        "provenance": provenance,
        "quartet": quartet_to_json(&doc.quartet),
        "schema": SCHEMA_VERSION,
    });
    if let Some(shape) = doc.product {
        value["product"] =
            json!({ "base_size": shape.base_size, "fiber_count": shape.fiber_count });
    }
    value
}

pub fn document_from_json(value: &Value) -> Result<InstanceDocument, IoError> {
    let schema = usize_field(value, "schema")?;
    if schema as u64 != SCHEMA_VERSION {
        return Err(IoError::Parse(format!(
            "unsupported schema version {schema} (this build reads {SCHEMA_VERSION})"
        )));
    }
    let product = match value.get("product") {
        None => None,
        Some(shape) => Some(ProductShape {
            base_size: usize_field(shape, "base_size")?,
            fiber_count: usize_field(shape, "fiber_count")?,
        }),
    };
    let mut provenance = Vec::new();
    for step in field(value, "provenance")?
        .as_array()
        .ok_or_else(|| IoError::Parse("field \"provenance\" must be an array".into()))?
    {
        provenance.push(provenance_step_from_json(step)?);
    }
    Ok(InstanceDocument {
        graph: graph_from_json(field(value, "graph")?)?,
        coloring: coloring_from_json(field(value, "coloring")?)?,
        quartet: quartet_from_json(field(value, "quartet")?)?,
        provenance,
        product,
    })
}

/// Renders a JSON value in the canonical text form: pretty-printed with
/// sorted keys (the map type sorts them) and a trailing newline.
pub fn emit_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values hold no non-serializable data");
    text.push('\n');
    text
}

pub fn parse_json(text: &str) -> Result<Value, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))
}

/// Parses edge-list text: an "n m" header line, then m lines "u v". Blank
/// lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| IoError::Parse("empty edge list; expected an \"n m\" header".into()))?;
    let mut parts = header.split_whitespace();
    let parse_num = |token: Option<&str>, what: &str| -> Result<usize, IoError> {
        token
            .ok_or_else(|| IoError::Parse(format!("header is missing {what}")))?
            .parse::<usize>()
            .map_err(|_| IoError::Parse(format!("{what} must be a non-negative integer")))
    };
    let n = parse_num(parts.next(), "the vertex count")?;
    let m = parse_num(parts.next(), "the edge count")?;
    if parts.next().is_some() {
        return Err(IoError::Parse("header must be exactly \"n m\"".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut ends = line.split_whitespace();
        let u = parse_num(ends.next(), "an edge endpoint")?;
        let v = parse_num(ends.next(), "an edge endpoint")?;
        if ends.next().is_some() {
            return Err(IoError::Parse(format!("edge line \"{line}\" has extra tokens")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(IoError::Parse(format!(
            "header promises {m} edges but {} were given",
            edges.len()
        )));
    }
    Ok(Graph::new(n, &edges)?)
}

/// Accepts a graph as either a JSON object (first non-space byte `{`) or
/// edge-list text. A full instance document is also accepted; its embedded
/// graph is used.
pub fn parse_graph_auto(text: &str) -> Result<Graph, IoError> {
    if text.trim_start().starts_with('{') {
        let value = parse_json(text)?;
        match value.get("graph") {
            Some(inner) => graph_from_json(inner),
            None => graph_from_json(&value),
        }
    } else {
        parse_edge_list(text)
    }
}

/// Per-condition verification results for an instance document, in the
/// order the conditions depend on each other.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Coloring length matches the vertex count.
    pub coloring_total: bool,
    /// Each color class induces a tree.
    pub hamiltonian: bool,
    /// Bichromatic edge count, with the hamiltonian-bond target size.
    pub bond_size: Option<(usize, usize)>,
    /// The four quartet positions are distinct and in range.
    pub quartet_wellformed: bool,
    pub q1: bool,
    pub q2: bool,
    pub q3: bool,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.coloring_total
            && self.hamiltonian
            && self.quartet_wellformed
            && self.q1
            && self.q2
            && self.q3
    }

    /// The first failing condition's name, for error messages.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.coloring_total {
            Some("coloring-total")
        } else if !self.hamiltonian {
            Some("hamiltonian")
        } else if !self.quartet_wellformed {
            Some("quartet-wellformed")
        } else if !self.q1 {
            Some("q1")
        } else if !self.q2 {
            Some("q2")
        } else if !self.q3 {
            Some("q3")
        } else {
            None
        }
    }
}

/// Checks every claim an instance document makes, reporting each condition
/// separately rather than stopping at the first failure.
pub fn verify_document(doc: &InstanceDocument) -> VerifyReport {
    let g = &doc.graph;
    let c = &doc.coloring;
    let q = &doc.quartet;
    let coloring_total = c.len() == g.vertex_count();
    let hamiltonian =
        coloring_total && is_hamiltonian_coloring(g, c).unwrap_or(false);
    let bond_size = if coloring_total {
        let target = (g.edge_count() + 2).saturating_sub(g.vertex_count());
        bichromatic_edges(g, c).ok().map(|b| (b.len(), target))
    } else {
        None
    };
    let quartet_wellformed =
        q.is_distinct() && q.vertices().iter().all(|&v| v < g.vertex_count());
    let (q1, q2, q3) = if hamiltonian && quartet_wellformed {
        match is_quartet(g, c, q) {
            Ok(report) => (report.q1_holds, report.q2_holds, report.q3_holds),
            Err(_) => (false, false, false),
        }
    } else {
        (false, false, false)
    };
    VerifyReport { coloring_total, hamiltonian, bond_size, quartet_wellformed, q1, q2, q3 }
}

/// Node fill for each class: red is drawn gray, blue is drawn black (with
/// white numerals for contrast).
fn node_style(color: Color) -> (&'static str, &'static str) {
    match color {
        Color::Red => ("gray", "black"),
        Color::Blue => ("black", "white"),
    }
}

fn node_name(v: usize, product: Option<ProductShape>) -> String {
    match product {
        Some(shape) => format!("{}@{}", v % shape.base_size, v / shape.base_size),
        None => v.to_string(),
    }
}

/// Renders an instance as deterministic Graphviz DOT: red-class nodes
/// filled gray and blue-class nodes black, monochromatic edges thick in
/// their class color, bichromatic (bond) edges dotted, quartet nodes
/// labeled with their roles, and — for product instances — fibers grouped
/// into clusters.
pub fn export_dot(doc: &InstanceDocument) -> Result<String, IoError> {
    let g = &doc.graph;
    let c = &doc.coloring;
    if c.len() != g.vertex_count() {
        return Err(IoError::Coloring(ColoringError::LengthMismatch {
            coloring: c.len(),
            graph: g.vertex_count(),
        }));
    }
    let q = &doc.quartet;
    let role = |v: usize| -> Option<&'static str> {
        if v == q.i_red {
            Some("i_red")
        } else if v == q.i_blue {
            Some("i_blue")
        } else if v == q.j_red {
            Some("j_red")
        } else if v == q.j_blue {
            Some("j_blue")
        } else {
            None
        }
    };

    let mut out = String::from("graph instance {\n");
    out.push_str("  node [shape=circle, style=filled];\n");

    let node_line = |v: usize| -> String {
        let (fill, font) = node_style(c.color(v));
        let name = node_name(v, doc.product);
        let label = match role(v) {
            Some(r) => format!("{name}\\n{r}"),
            None => name.clone(),
        };
        format!("\"{name}\" [label=\"{label}\", fillcolor={fill}, fontcolor={font}];\n")
    };

    match doc.product {
        Some(shape) => {
            for x in 0..shape.fiber_count {
                out.push_str(&format!("  subgraph cluster_{x} {{\n"));
                out.push_str(&format!("    label=\"fiber {x}\";\n"));
                for v in x * shape.base_size..(x + 1) * shape.base_size {
                    out.push_str("    ");
                    out.push_str(&node_line(v));
                }
                out.push_str("  }\n");
            }
        }
        None => {
            for v in 0..g.vertex_count() {
                out.push_str("  ");
                out.push_str(&node_line(v));
            }
        }
    }

    for &(u, v) in g.edges() {
        let (nu, nv) = (node_name(u, doc.product), node_name(v, doc.product));
        let attrs = if c.color(u) == c.color(v) {
            let (fill, _) = node_style(c.color(u));
            format!("color={fill}, penwidth=2")
        } else {
            "style=dotted".to_string()
        };
        out.push_str(&format!("  \"{nu}\" -- \"{nv}\" [{attrs}];\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{hypercube, seed_cube_ladder};
    use crate::lift::{lift, LiftOutput};
    use crate::product::ProductIndex;

    fn ladder_document() -> InstanceDocument {
        let seed = seed_cube_ladder(1).unwrap();
        InstanceDocument::from_instance(
            &seed,
            vec![ProvenanceStep::Generator { name: "seed-ladder".into(), params: vec![1] }],
            None,
        )
    }

    fn lifted_document() -> InstanceDocument {
        let seed = seed_cube_ladder(1).unwrap();
        let tree = crate::generators::path(1);
        let out: LiftOutput = lift(&seed, &tree, 0, 1).unwrap();
        let index: ProductIndex = *out.index();
        InstanceDocument::from_instance(
            out.instance(),
            vec![
                ProvenanceStep::Generator { name: "seed-ladder".into(), params: vec![1] },
                ProvenanceStep::Lift { tree: tree.graph().clone(), root: 0, far_leaf: 1 },
            ],
            Some(ProductShape { base_size: index.g_size(), fiber_count: index.h_size() }),
        )
    }

    #[test]
    fn document_round_trip_is_byte_identical() {
        for doc in [ladder_document(), lifted_document()] {
            let text = emit_json(&document_to_json(&doc));
            let parsed = document_from_json(&parse_json(&text).unwrap()).unwrap();
            let again = emit_json(&document_to_json(&parsed));
            assert_eq!(text, again);
            assert!(parsed.clone().into_instance().is_ok());
            assert_eq!(parsed.provenance, doc.provenance);
            assert_eq!(parsed.product, doc.product);
        }
    }

    #[test]
    fn graph_round_trip_is_byte_identical() {
        let g = hypercube(3).unwrap();
        let text = emit_json(&graph_to_json(&g));
        let parsed = graph_from_json(&parse_json(&text).unwrap()).unwrap();
        assert_eq!(emit_json(&graph_to_json(&parsed)), text);
        assert_eq!(parsed.edges(), g.edges());
    }

    #[test]
    fn canonical_json_sorts_keys() {
        let doc = ladder_document();
        let text = emit_json(&document_to_json(&doc));
        let coloring_at = text.find("\"coloring\"").unwrap();
        let graph_at = text.find("\"graph\"").unwrap();
        let schema_at = text.find("\"schema\"").unwrap();
        assert!(coloring_at < graph_at && graph_at < schema_at);
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# square\n4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);

        assert!(matches!(parse_edge_list(""), Err(IoError::Parse(_))));
        assert!(matches!(parse_edge_list("4 2\n0 1\n"), Err(IoError::Parse(_))));
        assert!(matches!(parse_edge_list("4 1\n0 x\n"), Err(IoError::Parse(_))));
        // Structural errors surface as graph errors, not parse errors.
        assert!(matches!(parse_edge_list("2 1\n0 5\n"), Err(IoError::Graph(_))));
    }

    #[test]
    fn graph_input_is_sniffed_by_leading_byte() {
        let as_json = "  {\"edges\": [[0, 1]], \"n\": 2}";
        let as_text = "2 1\n0 1\n";
        assert_eq!(
            parse_graph_auto(as_json).unwrap().edges(),
            parse_graph_auto(as_text).unwrap().edges()
        );
    }

    #[test]
    fn verify_report_passes_and_names_failures() {
        let doc = ladder_document();
        let report = verify_document(&doc);
        assert!(report.pass(), "seed document must verify: {report:?}");
        assert_eq!(report.bond_size, Some((6, 6)));

        // Flip one vertex's color arbitrarily: hamiltonicity breaks.
        let mut broken = doc.clone();
        let flipped: crate::graph::VertexSet = [0].into_iter().collect();
        broken.coloring = broken.coloring.flip(&flipped).unwrap();
        let report = verify_document(&broken);
        assert!(!report.pass());
        assert_eq!(report.first_failure(), Some("hamiltonian"));

        // Overlapping I and J: the quartet is not well-formed.
        let mut overlapping = doc.clone();
        overlapping.quartet.j_red = overlapping.quartet.i_red;
        let report = verify_document(&overlapping);
        assert!(!report.pass());
        assert_eq!(report.first_failure(), Some("quartet-wellformed"));
    }

    #[test]
    fn dot_export_styles_the_bond_dotted() {
        let doc = ladder_document();
        let dot = export_dot(&doc).unwrap();
        let dotted = dot.matches("style=dotted").count();
        // Bond size for the 8-vertex ladder seed: 12 − 8 + 2.
        assert_eq!(dotted, 6);
        let thick = dot.matches("penwidth=2").count();
        assert_eq!(dotted + thick, doc.graph.edge_count());
        for label in ["i_red", "i_blue", "j_red", "j_blue"] {
            assert!(dot.contains(label), "missing quartet label {label}");
        }
        // Determinism: a second render is byte-identical.
        assert_eq!(export_dot(&doc).unwrap(), dot);
    }

    #[test]
    fn dot_export_clusters_product_fibers() {
        let doc = lifted_document();
        let dot = export_dot(&doc).unwrap();
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
        assert!(dot.contains("\"0@0\""));
        assert!(dot.contains("\"7@1\""));
    }

    #[test]
    fn schema_version_is_checked() {
        let doc = ladder_document();
        let mut value = document_to_json(&doc);
        value["schema"] = serde_json::json!(99);
        assert!(matches!(document_from_json(&value), Err(IoError::Parse(_))));
    }
}
