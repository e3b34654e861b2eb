//! Finite simple undirected graphs with `usize` vertex ids `0..n`.
//!
//! The conventions used throughout the crate live here:
//!
//! * edges are stored canonically as `(min, max)` pairs, sorted and deduplicated;
//! * the empty graph is neither connected nor a tree, but it is a forest;
//! * `K1` is connected and is a tree;
//! * a *bond* is a minimal edge set whose deletion disconnects the graph —
//!   equivalently ([`Graph::is_bond`]) an edge set whose deletion leaves exactly
//!   two components such that every deleted edge has one endpoint in each.

use std::collections::BTreeSet;
use std::fmt;

/// A set of canonical `(min, max)` edges, ordered for deterministic iteration.
pub type EdgeSet = BTreeSet<(usize, usize)>;

/// A set of vertex ids, ordered for deterministic iteration.
pub type VertexSet = BTreeSet<usize>;

/// Returns the canonical form of an edge, i.e. `(min, max)`.
pub fn canonical_edge(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    SelfLoop { vertex: usize },
    DuplicateVertex { vertex: usize },
    MissingEdge { u: usize, v: usize },
    Disconnected,
    NotATree,
    NotALeaf { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for graph on {vertex_count} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateVertex { vertex } => {
                write!(f, "vertex {vertex} listed more than once")
            }
            GraphError::MissingEdge { u, v } => write!(f, "edge ({u}, {v}) is not in the graph"),
            GraphError::Disconnected => write!(f, "graph is not connected"),
            GraphError::NotATree => write!(f, "graph is not a tree"),
            GraphError::NotALeaf { vertex } => write!(f, "vertex {vertex} is not a leaf"),
        }
    }
}

impl std::error::Error for GraphError {}

/// An immutable simple graph: canonical sorted edge list plus adjacency lists.
///
/// ```
/// use yutsis::graph::Graph;
///
/// let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
/// assert_eq!(c4.vertex_count(), 4);
/// assert_eq!(c4.edge_count(), 4);
/// assert!(c4.is_connected());
/// assert!(!c4.is_tree());
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices. Edges are canonicalized and
    /// deduplicated; self-loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut canon = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            canon.insert(canonical_edge(u, v));
        }
        let edges: Vec<(usize, usize)> = canon.into_iter().collect();
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { vertex_count, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` edges in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The edge set as a [`EdgeSet`].
    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.vertex_count {
            Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        } else {
            Ok(())
        }
    }

    /// True iff the graph is nonempty and every vertex is reachable from
    /// vertex 0. The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        self.components().len() == 1
    }

    /// Connected components as ascending vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `vertices`, relabeled to `0..k`, together with
    /// the map from new ids back to the original ids (ascending).
    ///
    /// ```
    /// use yutsis::graph::Graph;
    ///
    /// let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    /// let (sub, map) = c4.induced_subgraph(&[0, 1, 3]).unwrap();
    /// assert_eq!(map, vec![0, 1, 3]);
    /// assert_eq!(sub.edges(), &[(0, 1), (0, 2)]);
    /// ```
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map: Vec<usize> = Vec::with_capacity(vertices.len());
        for &v in vertices {
            self.check_vertex(v)?;
            map.push(v);
        }
        map.sort_unstable();
        for pair in map.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateVertex { vertex: pair[0] });
            }
        }
        let mut new_id = vec![usize::MAX; self.vertex_count];
        for (i, &v) in map.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
            }
        }
        let sub = Graph::new(map.len(), &edges)?;
        Ok((sub, map))
    }

    /// True iff the graph is connected with exactly `n - 1` edges. `K1` is a
    /// tree; the empty graph is not.
    pub fn is_tree(&self) -> bool {
        self.vertex_count > 0
            && self.edges.len() == self.vertex_count - 1
            && self.is_connected()
    }

    /// True iff the graph has no cycles. The empty graph is a forest.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.vertex_count
    }

    /// A copy of the graph with the edges of `b` removed. Errors if `b`
    /// contains a pair that is not an edge.
    pub fn delete_edges(&self, b: &EdgeSet) -> Result<Graph, GraphError> {
        for &(u, v) in b {
            if !self.has_edge(u, v) || canonical_edge(u, v) != (u, v) {
                return Err(GraphError::MissingEdge { u, v });
            }
        }
        let remaining: Vec<(usize, usize)> =
            self.edges.iter().copied().filter(|e| !b.contains(e)).collect();
        Graph::new(self.vertex_count, &remaining)
    }

    /// Bond test for a connected graph: deleting `b` must leave exactly two
    /// components, and every edge of `b` must join the two. This is
    /// equivalent to `b` being a minimal disconnecting edge set.
    ///
    /// ```
    /// use yutsis::graph::Graph;
    ///
    /// let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    /// assert!(c4.is_bond(&[(0, 1), (2, 3)].into_iter().collect()).unwrap());
    /// assert!(!c4.is_bond(&[(0, 1)].into_iter().collect()).unwrap());
    /// ```
    pub fn is_bond(&self, b: &EdgeSet) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let deleted = self.delete_edges(b)?;
        let comps = deleted.components();
        if comps.len() != 2 {
            return Ok(false);
        }
        let mut side = vec![false; self.vertex_count];
        for &v in &comps[1] {
            side[v] = true;
        }
        Ok(b.iter().all(|&(u, v)| side[u] != side[v]))
    }

    /// All bridges (cut edges), via one DFS with low-links. In a simple graph
    /// the tree edge back to the parent is the only parent edge, so skipping
    /// the parent vertex once per visit is sound.
    pub fn bridges(&self) -> EdgeSet {
        struct Dfs<'a> {
            g: &'a Graph,
            order: Vec<usize>,
            low: Vec<usize>,
            clock: usize,
            out: EdgeSet,
        }
        impl Dfs<'_> {
            fn visit(&mut self, v: usize, parent: usize) {
                self.order[v] = self.clock;
                self.low[v] = self.clock;
                self.clock += 1;
                for &w in self.g.neighbors(v) {
                    if self.order[w] == usize::MAX {
                        self.visit(w, v);
                        self.low[v] = self.low[v].min(self.low[w]);
                        if self.low[w] > self.order[v] {
                            self.out.insert(canonical_edge(v, w));
                        }
                    } else if w != parent {
                        self.low[v] = self.low[v].min(self.order[w]);
                    }
                }
            }
        }
        let n = self.vertex_count;
        let mut dfs = Dfs {
            g: self,
            order: vec![usize::MAX; n],
            low: vec![0; n],
            clock: 0,
            out: EdgeSet::new(),
        };
        for start in 0..n {
            if dfs.order[start] == usize::MAX {
                dfs.visit(start, usize::MAX);
            }
        }
        dfs.out
    }
}

/// A tree rooted by BFS: the underlying graph, the root, and each vertex's
/// depth (BFS distance from the root).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    root: usize,
    depth: Vec<usize>,
}

impl Tree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn depths(&self) -> &[usize] {
        &self.depth
    }

    /// Degree-1 vertices in ascending order; for `K1` the root itself.
    pub fn leaves(&self) -> Vec<usize> {
        if self.graph.vertex_count() == 1 {
            return vec![self.root];
        }
        (0..self.graph.vertex_count()).filter(|&v| self.graph.degree(v) == 1).collect()
    }
}

/// Roots `g` at `root` and records BFS depths. Errors if `g` is not a tree
/// or `root` is out of range.
///
/// ```
/// use yutsis::graph::{bfs_tree, Graph};
///
/// let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
/// let t = bfs_tree(&path, 0).unwrap();
/// assert_eq!(t.depths(), &[0, 1, 2]);
/// assert_eq!(t.leaves(), vec![0, 2]);
/// ```
pub fn bfs_tree(g: &Graph, root: usize) -> Result<Tree, GraphError> {
    if root >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange { vertex: root, vertex_count: g.vertex_count() });
    }
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let mut depth = vec![usize::MAX; g.vertex_count()];
    depth[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(Tree { graph: g.clone(), root, depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Definition-level bond oracle: deleting `b` disconnects the graph and
    /// no proper subset of `b` does.
    fn brute_is_bond(g: &Graph, b: &EdgeSet) -> bool {
        let edges: Vec<(usize, usize)> = b.iter().copied().collect();
        let disconnects = |subset: &EdgeSet| !g.delete_edges(subset).unwrap().is_connected();
        if !disconnects(b) {
            return false;
        }
        for mask in 0..(1u32 << edges.len()) - 1 {
            let subset: EdgeSet =
                edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            if disconnects(&subset) {
                return false;
            }
        }
        true
    }

    /// Bridge oracle: an edge is a bridge iff deleting it adds a component.
    fn brute_bridges(g: &Graph) -> EdgeSet {
        let base = g.components().len();
        g.edges()
            .iter()
            .copied()
            .filter(|&e| {
                let deleted = g.delete_edges(&[e].into_iter().collect()).unwrap();
                deleted.components().len() > base
            })
            .collect()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn construction_canonicalizes() {
        let g = Graph::new(3, &[(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, vertex_count: 2 })
        );
    }

    #[test]
    fn empty_graph_conventions() {
        let empty = Graph::new(0, &[]).unwrap();
        assert!(!empty.is_connected());
        assert!(!empty.is_tree());
        assert!(empty.is_forest());
        assert!(empty.components().is_empty());

        let k1 = Graph::new(1, &[]).unwrap();
        assert!(k1.is_connected());
        assert!(k1.is_tree());
    }

    #[test]
    fn components_are_sorted() {
        let g = Graph::new(5, &[(3, 1), (0, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn induced_subgraph_roundtrip_identity() {
        let g = c4();
        let all: Vec<usize> = (0..4).collect();
        let (sub, map) = g.induced_subgraph(&all).unwrap();
        assert_eq!(sub, g);
        assert_eq!(map, all);
        assert_eq!(
            g.induced_subgraph(&[1, 1]),
            Err(GraphError::DuplicateVertex { vertex: 1 })
        );
        let (empty, map) = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn tree_and_forest_predicates() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(path.is_tree());
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!c3.is_tree());
        assert!(!c3.is_forest());
        let two_paths = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_paths.is_tree());
        assert!(two_paths.is_forest());
    }

    #[test]
    fn delete_edges_requires_membership() {
        let g = c4();
        let gone = g.delete_edges(&[(0, 1)].into_iter().collect()).unwrap();
        assert_eq!(gone.edge_count(), 3);
        assert!(g
            .delete_edges(&[(0, 2)].into_iter().collect())
            .is_err());
    }

    #[test]
    fn bond_examples() {
        let g = c4();
        assert!(g.is_bond(&[(0, 1), (2, 3)].into_iter().collect()).unwrap());
        assert!(!g.is_bond(&[(0, 1)].into_iter().collect()).unwrap());
        // Three edges leave components {0,3}, {1}, {2}: not a bond.
        assert!(!g.is_bond(&[(0, 1), (1, 2), (2, 3)].into_iter().collect()).unwrap());
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            disconnected.is_bond(&EdgeSet::new()),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn bond_agrees_with_minimality_oracle_exhaustively() {
        // Every edge subset of a few small connected graphs.
        let graphs = vec![
            c4(),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap(),
            Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap(),
        ];
        for g in graphs {
            let edges = g.edges().to_vec();
            for mask in 0u32..1 << edges.len() {
                let b: EdgeSet = edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                assert_eq!(
                    g.is_bond(&b).unwrap(),
                    brute_is_bond(&g, &b),
                    "disagreement on {:?} / {:?}",
                    g.edges(),
                    b
                );
            }
        }
    }

    #[test]
    fn bridges_examples() {
        // Two triangles joined by a single edge: only the joining edge.
        let g = Graph::new(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(g.bridges(), [(2, 3)].into_iter().collect::<EdgeSet>());

        let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.bridges(), path.edge_set());

        assert!(c4().bridges().is_empty());
    }

    #[test]
    fn bfs_tree_examples() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_tree(&path, 0).unwrap().depths(), &[0, 1, 2]);

        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = bfs_tree(&star, 1).unwrap();
        assert_eq!(t.depth(1), 0);
        assert_eq!(t.depth(0), 1);
        assert_eq!(t.depth(2), 2);
        assert_eq!(t.depth(3), 2);
        assert_eq!(t.leaves(), vec![1, 2, 3]);

        let c3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(bfs_tree(&c3, 0), Err(GraphError::NotATree));
    }

    #[test]
    fn k1_tree_has_its_root_as_leaf() {
        let k1 = Graph::new(1, &[]).unwrap();
        let t = bfs_tree(&k1, 0).unwrap();
        assert_eq!(t.leaves(), vec![0]);
    }

    /// Arbitrary small graph: `n` in 1..=7, edges chosen by bitmask.
    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let count = pairs.len() as u32;
            (Just(pairs), 0u32..(1u32 << count).max(1)).prop_map(move |(pairs, mask)| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn tree_iff_connected_forest(g in arb_graph()) {
            prop_assert_eq!(g.is_tree(), g.is_connected() && g.is_forest());
        }

        #[test]
        fn bridges_match_oracle(g in arb_graph()) {
            prop_assert_eq!(g.bridges(), brute_bridges(&g));
        }

        #[test]
        fn bonds_leave_two_sides(g in arb_graph(), mask in 0u32..1 << 12) {
            prop_assume!(g.is_connected());
            let edges = g.edges().to_vec();
            let b: EdgeSet = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let is_bond = g.is_bond(&b).unwrap();
            prop_assert_eq!(is_bond, brute_is_bond(&g, &b));
            if is_bond {
                prop_assert_eq!(g.delete_edges(&b).unwrap().components().len(), 2);
            }
        }
    }
}
