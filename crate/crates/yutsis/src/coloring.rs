//! Two-colorings, hamiltonian colorings and bonds, and quartets.
//!
//! A 2-coloring of a connected graph is *hamiltonian* when both color classes
//! are nonempty and each induces a tree. Its bichromatic edges then form a
//! *hamiltonian bond*: a bond of size `m - n + 2`. The converse holds too —
//! the two sides of a bond of that size induce trees — so the module exposes
//! both verifiers ([`is_hamiltonian_coloring`], [`is_hamiltonian_bond`]) plus
//! the component-level form ([`jaeger_check`]), and the test suite checks the
//! three agree on every coloring of every small corpus graph.
//!
//! A *quartet* for a hamiltonian coloring `c` is a pair of disjoint 2-sets
//! `I = {i_red, i_blue}`, `J = {j_red, j_blue}` such that:
//!
//! * **Q1** — each of `I` and `J` has one vertex of each color;
//! * **Q2** — flipping the colors on `I` yields another hamiltonian coloring;
//! * **Q3** — after flipping the colors on `J`, each color class induces a
//!   forest with exactly two components, one meeting `I` (and not `J`), the
//!   other meeting `J` (and not `I`).
//!
//! Quartets are the data that lets a hamiltonian coloring survive a cartesian
//! product with a tree; see the `lift` module.

use crate::graph::{EdgeSet, Graph, GraphError, VertexSet};
use std::fmt;

/// One of the two vertex colors. Serialized as `'r'` / `'b'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Blue => 'b',
        }
    }

    pub fn from_char(ch: char) -> Option<Color> {
        match ch {
            'r' => Some(Color::Red),
            'b' => Some(Color::Blue),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    LengthMismatch { coloring: usize, graph: usize },
    BadColorChar { position: usize, found: char },
    VertexOutOfRange { vertex: usize, len: usize },
    QuartetNotDistinct,
    NotHamiltonian,
    NotAQuartet { q1: bool, q2: bool, q3: bool },
    Graph(GraphError),
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::LengthMismatch { coloring, graph } => {
                write!(f, "coloring covers {coloring} vertices but the graph has {graph}")
            }
            ColoringError::BadColorChar { position, found } => {
                write!(f, "invalid color character {found:?} at position {position} (expected 'r' or 'b')")
            }
            ColoringError::VertexOutOfRange { vertex, len } => {
                write!(f, "vertex {vertex} out of range for coloring of length {len}")
            }
            ColoringError::QuartetNotDistinct => {
                write!(f, "quartet vertices are not pairwise distinct")
            }
            ColoringError::NotHamiltonian => {
                write!(f, "coloring is not hamiltonian")
            }
            ColoringError::NotAQuartet { q1, q2, q3 } => {
                write!(f, "quartet conditions fail: q1={q1} q2={q2} q3={q3}")
            }
            ColoringError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ColoringError {}

impl From<GraphError> for ColoringError {
    fn from(e: GraphError) -> Self {
        ColoringError::Graph(e)
    }
}

/// A total assignment of [`Color`]s to vertices `0..len`.
///
/// ```
/// use yutsis::coloring::{Color, TwoColoring};
///
/// let c = TwoColoring::parse("rrbb").unwrap();
/// assert_eq!(c.color(0), Color::Red);
/// assert_eq!(c.class(Color::Blue), vec![2, 3]);
/// assert_eq!(c.to_string(), "rrbb");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    colors: Vec<Color>,
}

impl TwoColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        TwoColoring { colors }
    }

    /// Parses a string of `'r'` / `'b'` characters, one per vertex id.
    pub fn parse(s: &str) -> Result<Self, ColoringError> {
        let mut colors = Vec::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            let color = Color::from_char(ch)
                .ok_or(ColoringError::BadColorChar { position, found: ch })?;
            colors.push(color);
        }
        Ok(TwoColoring { colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// The vertices of color `k`, ascending.
    pub fn class(&self, k: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == k).collect()
    }

    /// The coloring with colors swapped exactly on `x` (set semantics).
    pub fn flip(&self, x: &VertexSet) -> Result<TwoColoring, ColoringError> {
        let mut colors = self.colors.clone();
        for &v in x {
            if v >= colors.len() {
                return Err(ColoringError::VertexOutOfRange { vertex: v, len: colors.len() });
            }
            colors[v] = colors[v].flipped();
        }
        Ok(TwoColoring { colors })
    }

    fn check_total(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.vertex_count() {
            Err(ColoringError::LengthMismatch {
                coloring: self.colors.len(),
                graph: g.vertex_count(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for TwoColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for color in &self.colors {
            write!(f, "{}", color.as_char())?;
        }
        Ok(())
    }
}

/// The edges of `g` whose endpoints receive different colors under `c`.
pub fn bichromatic_edges(g: &Graph, c: &TwoColoring) -> Result<EdgeSet, ColoringError> {
    c.check_total(g)?;
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| c.color(u) != c.color(v))
        .collect())
}

/// True iff both color classes are nonempty and each induces a tree in `g`.
/// Errors if `g` is disconnected or `c` is not total over `g`.
///
/// ```
/// use yutsis::coloring::{is_hamiltonian_coloring, TwoColoring};
/// use yutsis::graph::Graph;
///
/// let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
/// let adjacent = TwoColoring::parse("rrbb").unwrap();
/// let alternating = TwoColoring::parse("rbrb").unwrap();
/// assert!(is_hamiltonian_coloring(&c4, &adjacent).unwrap());
/// assert!(!is_hamiltonian_coloring(&c4, &alternating).unwrap());
/// ```
pub fn is_hamiltonian_coloring(g: &Graph, c: &TwoColoring) -> Result<bool, ColoringError> {
    c.check_total(g)?;
    if !g.is_connected() {
        return Err(ColoringError::Graph(GraphError::Disconnected));
    }
    for k in [Color::Red, Color::Blue] {
        let class = c.class(k);
        if class.is_empty() {
            return Ok(false);
        }
        let (sub, _) = g.induced_subgraph(&class)?;
        if !sub.is_tree() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `b` is a bond of `g` of size `m - n + 2` (a *hamiltonian bond*).
/// Errors if `g` is disconnected or `b` contains a non-edge.
pub fn is_hamiltonian_bond(g: &Graph, b: &EdgeSet) -> Result<bool, GraphError> {
    Ok(g.is_bond(b)? && b.len() + g.vertex_count() == g.edge_count() + 2)
}

/// Component-level form of the hamiltonian-bond test: deleting `b` must leave
/// exactly two components, each of which induces a tree *in `g`* (not merely
/// in `g` minus `b` — an edge of `b` buried inside one side disqualifies it).
pub fn jaeger_check(g: &Graph, b: &EdgeSet) -> Result<bool, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let comps = g.delete_edges(b)?.components();
    if comps.len() != 2 {
        return Ok(false);
    }
    for comp in &comps {
        let (sub, _) = g.induced_subgraph(comp)?;
        if !sub.is_tree() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A candidate quartet: `I = {i_red, i_blue}` and `J = {j_red, j_blue}`,
/// named by the color each vertex is expected to have under the associated
/// coloring (condition Q1). Fields are public; every consumer re-validates
/// distinctness and range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quartet {
    pub i_red: usize,
    pub i_blue: usize,
    pub j_red: usize,
    pub j_blue: usize,
}

impl Quartet {
    pub fn new(i_red: usize, i_blue: usize, j_red: usize, j_blue: usize) -> Result<Self, ColoringError> {
        let q = Quartet { i_red, i_blue, j_red, j_blue };
        if q.is_distinct() {
            Ok(q)
        } else {
            Err(ColoringError::QuartetNotDistinct)
        }
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.i_red, self.i_blue, self.j_red, self.j_blue]
    }

    pub fn is_distinct(&self) -> bool {
        let [a, b, c, d] = self.vertices();
        a != b && a != c && a != d && b != c && b != d && c != d
    }

    /// The set `I`.
    pub fn i_set(&self) -> VertexSet {
        [self.i_red, self.i_blue].into_iter().collect()
    }

    /// The set `J`.
    pub fn j_set(&self) -> VertexSet {
        [self.j_red, self.j_blue].into_iter().collect()
    }

    /// The quartet with the roles of `I` and `J` exchanged.
    pub fn swapped(&self) -> Quartet {
        Quartet {
            i_red: self.j_red,
            i_blue: self.j_blue,
            j_red: self.i_red,
            j_blue: self.i_blue,
        }
    }
}

/// One component of a color class in the Q3 analysis, with its intersection
/// pattern against `I` and `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentWitness {
    pub vertices: Vec<usize>,
    pub meets_i: bool,
    pub meets_j: bool,
}

/// The Q3 diagnostics for one color class of the `J`-flipped coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassComponents {
    pub color: Color,
    pub is_forest: bool,
    pub components: Vec<ComponentWitness>,
}

/// The outcome of [`is_quartet`]: one flag per condition plus the component
/// decomposition behind Q3, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuartetReport {
    pub q1_holds: bool,
    pub q2_holds: bool,
    pub q3_holds: bool,
    pub q3_witness: Vec<ClassComponents>,
}

impl QuartetReport {
    pub fn all_hold(&self) -> bool {
        self.q1_holds && self.q2_holds && self.q3_holds
    }
}

/// Checks conditions Q1–Q3 for `q` against the hamiltonian coloring `c`.
/// Errors if the quartet vertices are not distinct or out of range, or if
/// `c` is not a hamiltonian coloring of `g`.
pub fn is_quartet(g: &Graph, c: &TwoColoring, q: &Quartet) -> Result<QuartetReport, ColoringError> {
    c.check_total(g)?;
    if !q.is_distinct() {
        return Err(ColoringError::QuartetNotDistinct);
    }
    for v in q.vertices() {
        if v >= g.vertex_count() {
            return Err(ColoringError::VertexOutOfRange { vertex: v, len: g.vertex_count() });
        }
    }
    if !is_hamiltonian_coloring(g, c)? {
        return Err(ColoringError::NotHamiltonian);
    }

    let q1_holds = c.color(q.i_red) == Color::Red
        && c.color(q.i_blue) == Color::Blue
        && c.color(q.j_red) == Color::Red
        && c.color(q.j_blue) == Color::Blue;

    let q2_holds = is_hamiltonian_coloring(g, &c.flip(&q.i_set())?)?;

    let j_flipped = c.flip(&q.j_set())?;
    let i_set = q.i_set();
    let j_set = q.j_set();
    let mut q3_witness = Vec::with_capacity(2);
    let mut q3_holds = true;
    for k in [Color::Red, Color::Blue] {
        let class = j_flipped.class(k);
        let (sub, map) = g.induced_subgraph(&class)?;
        let is_forest = sub.is_forest();
        let components: Vec<ComponentWitness> = sub
            .components()
            .into_iter()
            .map(|comp| {
                let vertices: Vec<usize> = comp.into_iter().map(|v| map[v]).collect();
                let i_hits = vertices.iter().filter(|v| i_set.contains(v)).count();
                let j_hits = vertices.iter().filter(|v| j_set.contains(v)).count();
                // Under Q1 each class of the J-flipped coloring holds exactly
                // one vertex of I and one of J (the pairs are bichromatic),
                // so per component "meets" pins down a unique vertex. Without
                // Q1 two same-colored vertices can share a component.
                assert!(
                    !q1_holds || (i_hits <= 1 && j_hits <= 1),
                    "a component holds several vertices of one marked pair"
                );
                ComponentWitness { vertices, meets_i: i_hits > 0, meets_j: j_hits > 0 }
            })
            .collect();
        let class_ok = is_forest
            && components.len() == 2
            && components
                .iter()
                .any(|w| w.meets_i && !w.meets_j)
            && components
                .iter()
                .any(|w| w.meets_j && !w.meets_i);
        q3_holds &= class_ok;
        q3_witness.push(ClassComponents { color: k, is_forest, components });
    }

    Ok(QuartetReport { q1_holds, q2_holds, q3_holds, q3_witness })
}

/// A graph together with a hamiltonian coloring and a quartet for it, checked
/// at construction: [`SeedInstance::new`] runs the full verification and
/// refuses anything that fails, so holding a value is proof the instance is
/// valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedInstance {
    graph: Graph,
    coloring: TwoColoring,
    quartet: Quartet,
}

impl SeedInstance {
    pub fn new(graph: Graph, coloring: TwoColoring, quartet: Quartet) -> Result<Self, ColoringError> {
        let report = is_quartet(&graph, &coloring, &quartet)?;
        if !report.all_hold() {
            return Err(ColoringError::NotAQuartet {
                q1: report.q1_holds,
                q2: report.q2_holds,
                q3: report.q3_holds,
            });
        }
        Ok(SeedInstance { graph, coloring, quartet })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &TwoColoring {
        &self.coloring
    }

    pub fn quartet(&self) -> &Quartet {
        &self.quartet
    }

    pub fn into_parts(self) -> (Graph, TwoColoring, Quartet) {
        (self.graph, self.coloring, self.quartet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// The 3-cube drawn as two squares `0-1-3-2` and `4-5-7-6` joined by the
    /// four parallel edges, with its standard seed coloring and quartet.
    fn cube_seed() -> (Graph, TwoColoring, Quartet) {
        let g = Graph::new(
            8,
            &[
                (0, 1), (1, 3), (3, 2), (2, 0),
                (4, 5), (5, 7), (7, 6), (6, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        )
        .unwrap();
        let c = TwoColoring::parse("rrbrbbbr").unwrap();
        let q = Quartet { i_red: 7, i_blue: 5, j_red: 3, j_blue: 2 };
        (g, c, q)
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let c = TwoColoring::parse("rbrb").unwrap();
        assert_eq!(c.to_string(), "rbrb");
        assert_eq!(
            TwoColoring::parse("rxb"),
            Err(ColoringError::BadColorChar { position: 1, found: 'x' })
        );
    }

    #[test]
    fn class_examples() {
        let c = TwoColoring::parse("rrbb").unwrap();
        assert_eq!(c.class(Color::Red), vec![0, 1]);
        let all_red = TwoColoring::parse("rrrr").unwrap();
        assert_eq!(all_red.class(Color::Blue), Vec::<usize>::new());
        assert_eq!(all_red.class(Color::Red), vec![0, 1, 2, 3]);
    }

    #[test]
    fn flip_examples() {
        let c = TwoColoring::parse("rrbb").unwrap();
        assert_eq!(c.flip(&VertexSet::new()).unwrap(), c);
        let flipped = c.flip(&[0, 3].into_iter().collect()).unwrap();
        assert_eq!(flipped.to_string(), "brbr");
        assert_eq!(flipped.flip(&[0, 3].into_iter().collect()).unwrap(), c);
        assert_eq!(
            c.flip(&[9].into_iter().collect()),
            Err(ColoringError::VertexOutOfRange { vertex: 9, len: 4 })
        );
    }

    #[test]
    fn bichromatic_examples() {
        let g = c4();
        let c = TwoColoring::parse("rrbb").unwrap();
        assert_eq!(
            bichromatic_edges(&g, &c).unwrap(),
            [(1, 2), (0, 3)].into_iter().collect::<EdgeSet>()
        );
        let mono = TwoColoring::parse("rrrr").unwrap();
        assert!(bichromatic_edges(&g, &mono).unwrap().is_empty());
        assert_eq!(
            bichromatic_edges(&k4(), &c).unwrap(),
            [(0, 2), (0, 3), (1, 2), (1, 3)].into_iter().collect::<EdgeSet>()
        );
    }

    #[test]
    fn hamiltonian_coloring_examples() {
        let g = c4();
        assert!(is_hamiltonian_coloring(&g, &TwoColoring::parse("rrbb").unwrap()).unwrap());
        assert!(!is_hamiltonian_coloring(&g, &TwoColoring::parse("rbrb").unwrap()).unwrap());
        assert!(!is_hamiltonian_coloring(&g, &TwoColoring::parse("rrrr").unwrap()).unwrap());
        let (cube, c, _) = cube_seed();
        assert!(is_hamiltonian_coloring(&cube, &c).unwrap());

        let disconnected = Graph::new(2, &[]).unwrap();
        assert!(matches!(
            is_hamiltonian_coloring(&disconnected, &TwoColoring::parse("rb").unwrap()),
            Err(ColoringError::Graph(GraphError::Disconnected))
        ));
    }

    #[test]
    fn hamiltonian_bond_examples() {
        let g = c4();
        assert!(is_hamiltonian_bond(&g, &[(1, 2), (0, 3)].into_iter().collect()).unwrap());
        assert!(!is_hamiltonian_bond(&g, &[(0, 1)].into_iter().collect()).unwrap());
        let (cube, c, _) = cube_seed();
        let bond = bichromatic_edges(&cube, &c).unwrap();
        assert_eq!(bond.len(), 6); // 12 - 8 + 2
        assert!(is_hamiltonian_bond(&cube, &bond).unwrap());
        assert!(jaeger_check(&cube, &bond).unwrap());
    }

    #[test]
    fn jaeger_examples() {
        let g = c4();
        assert!(jaeger_check(&g, &[(1, 2), (0, 3)].into_iter().collect()).unwrap());
        assert!(!jaeger_check(&g, &g.edge_set()).unwrap());
    }

    #[test]
    fn jaeger_requires_induced_trees() {
        // Deleting {02, 23} from the triangle-with-pendant leaves components
        // {0,1,2} and {3}, and {0,1,2} is a path in the deleted graph — but it
        // induces a triangle in g, so the check must reject it.
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let b: EdgeSet = [(0, 2), (2, 3)].into_iter().collect();
        assert_eq!(g.delete_edges(&b).unwrap().components().len(), 2);
        assert!(!jaeger_check(&g, &b).unwrap());
        assert!(!g.is_bond(&b).unwrap());
    }

    #[test]
    fn cube_quartet_verifies() {
        let (g, c, q) = cube_seed();
        let report = is_quartet(&g, &c, &q).unwrap();
        assert!(report.q1_holds);
        assert!(report.q2_holds);
        assert!(report.q3_holds);
        // Q3 witness: each class splits into one component meeting I and one
        // meeting J.
        for class in &report.q3_witness {
            assert!(class.is_forest);
            assert_eq!(class.components.len(), 2);
        }
        assert!(SeedInstance::new(g, c, q).is_ok());
    }

    #[test]
    fn swapped_quartet_fails_q2() {
        // Whenever Q3 holds for (I, J), flipping J disconnects both classes,
        // so the swapped quartet cannot satisfy Q2.
        let (g, c, q) = cube_seed();
        let report = is_quartet(&g, &c, &q.swapped()).unwrap();
        assert!(report.q1_holds);
        assert!(!report.q2_holds);
        assert!(!is_hamiltonian_coloring(&g, &c.flip(&q.j_set()).unwrap()).unwrap());
    }

    #[test]
    fn quartet_validation_errors() {
        let (g, c, _) = cube_seed();
        let dup = Quartet { i_red: 3, i_blue: 5, j_red: 3, j_blue: 2 };
        assert_eq!(is_quartet(&g, &c, &dup), Err(ColoringError::QuartetNotDistinct));
        assert!(Quartet::new(3, 5, 3, 2).is_err());

        let alternating = TwoColoring::parse("rbrbrbrb").unwrap();
        let q = Quartet { i_red: 7, i_blue: 5, j_red: 3, j_blue: 2 };
        assert_eq!(is_quartet(&g, &alternating, &q), Err(ColoringError::NotHamiltonian));

        let out_of_range = Quartet { i_red: 99, i_blue: 5, j_red: 3, j_blue: 2 };
        assert!(matches!(
            is_quartet(&g, &c, &out_of_range),
            Err(ColoringError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn seed_instance_rejects_bad_quartets() {
        let (g, c, _) = cube_seed();
        // Q1 fails: i_red is blue under c.
        let q = Quartet { i_red: 2, i_blue: 5, j_red: 3, j_blue: 4 };
        assert!(matches!(
            SeedInstance::new(g, c, q),
            Err(ColoringError::NotAQuartet { .. })
        ));
    }

    /// Exhaustive agreement of the three verifiers over all colorings of a
    /// few small connected graphs.
    #[test]
    fn verifier_equivalence_exhaustive() {
        let graphs = vec![
            c4(),
            k4(),
            Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
            cube_seed().0,
        ];
        for g in graphs {
            let n = g.vertex_count();
            for mask in 0u32..1 << n {
                let colors: Vec<Color> = (0..n)
                    .map(|v| if mask >> v & 1 == 1 { Color::Blue } else { Color::Red })
                    .collect();
                let c = TwoColoring::new(colors);
                let b = bichromatic_edges(&g, &c).unwrap();
                let by_coloring = is_hamiltonian_coloring(&g, &c).unwrap();
                let by_bond = is_hamiltonian_bond(&g, &b).unwrap();
                let by_components = jaeger_check(&g, &b).unwrap();
                assert_eq!(by_coloring, by_bond, "coloring {c} on {:?}", g.edges());
                assert_eq!(by_coloring, by_components, "coloring {c} on {:?}", g.edges());
                if by_coloring {
                    assert_eq!(b.len() + n, g.edge_count() + 2);
                }
            }
        }
    }

    fn arb_coloring(n: usize) -> impl Strategy<Value = TwoColoring> {
        proptest::collection::vec(prop_oneof![Just(Color::Red), Just(Color::Blue)], n)
            .prop_map(TwoColoring::new)
    }

    proptest! {
        #[test]
        fn flip_is_involution(c in arb_coloring(8), mask in 0u8..) {
            let x: VertexSet = (0..8).filter(|v| mask >> v & 1 == 1).collect();
            prop_assert_eq!(c.flip(&x).unwrap().flip(&x).unwrap(), c);
        }

        #[test]
        fn global_flip_preserves_hamiltonicity(c in arb_coloring(8)) {
            let (g, _, _) = cube_seed();
            let everything: VertexSet = (0..8).collect();
            let flipped = c.flip(&everything).unwrap();
            prop_assert_eq!(
                is_hamiltonian_coloring(&g, &c).unwrap(),
                is_hamiltonian_coloring(&g, &flipped).unwrap()
            );
            prop_assert_eq!(c.class(Color::Red), flipped.class(Color::Blue));
        }
    }
}
