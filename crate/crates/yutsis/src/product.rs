//! Cartesian products of graphs, with flat-id bookkeeping.
//!
//! The cartesian product of `G` and `H` has vertex set `V(G) × V(H)`; two
//! pairs are adjacent when they agree in one coordinate and are adjacent in
//! the other. Pair `(v, x)` is stored at flat id `x · |G| + v`, so each
//! *fiber* `G_x = V(G) × {x}` occupies the contiguous range
//! `x·|G| .. (x+1)·|G|` — which keeps coloring lifts and DOT clustering
//! cheap. Edge counts obey `‖G × H‖ = |G|·‖H‖ + |H|·‖G‖`.

use crate::graph::Graph;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductError {
    EmptyFactor,
    FiberOutOfRange { fiber: usize, h_size: usize },
}

impl fmt::Display for ProductError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductError::EmptyFactor => write!(f, "cartesian product of an empty graph"),
            ProductError::FiberOutOfRange { fiber, h_size } => {
                write!(f, "fiber {fiber} out of range: second factor has {h_size} vertices")
            }
        }
    }
}

impl std::error::Error for ProductError {}

/// The bijection between pairs `(v, x)` and flat ids `x · g_size + v`.
///
/// ```
/// use yutsis::product::ProductIndex;
///
/// let idx = ProductIndex::new(3, 2);
/// assert_eq!(idx.flat(1, 1), 4);
/// assert_eq!(idx.pair(4), (1, 1));
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndex {
    g_size: usize,
    h_size: usize,
}

impl ProductIndex {
    pub fn new(g_size: usize, h_size: usize) -> Self {
        ProductIndex { g_size, h_size }
    }

    pub fn g_size(&self) -> usize {
        self.g_size
    }

    pub fn h_size(&self) -> usize {
        self.h_size
    }

    pub fn len(&self) -> usize {
        self.g_size * self.h_size
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Flat id of the pair `(v, x)`.
    pub fn flat(&self, v: usize, x: usize) -> usize {
        debug_assert!(v < self.g_size && x < self.h_size);
        x * self.g_size + v
    }

    /// The pair `(v, x)` stored at `id`.
    pub fn pair(&self, id: usize) -> (usize, usize) {
        debug_assert!(id < self.len());
        (id % self.g_size, id / self.g_size)
    }
}

/// A cartesian product together with its [`ProductIndex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    graph: Graph,
    index: ProductIndex,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn index(&self) -> &ProductIndex {
        &self.index
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Flat ids of the fiber `G_x` (ascending, contiguous).
    pub fn fiber_vertices(&self, x: usize) -> Result<Vec<usize>, ProductError> {
        if x >= self.index.h_size() {
            return Err(ProductError::FiberOutOfRange { fiber: x, h_size: self.index.h_size() });
        }
        let g = self.index.g_size();
        Ok((x * g..(x + 1) * g).collect())
    }
}

/// Builds the cartesian product of two nonempty graphs.
///
/// ```
/// use yutsis::graph::Graph;
/// use yutsis::product::cartesian_product;
///
/// let p1 = Graph::new(2, &[(0, 1)]).unwrap();
/// let square = cartesian_product(&p1, &p1).unwrap();
/// assert_eq!(square.graph().vertex_count(), 4);
/// assert_eq!(square.graph().edge_count(), 4); // the 4-cycle 0-1-3-2-0
/// ```
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph, ProductError> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(ProductError::EmptyFactor);
    }
    let index = ProductIndex::new(g.vertex_count(), h.vertex_count());
    let mut edges = Vec::with_capacity(
        g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count(),
    );
    for x in 0..h.vertex_count() {
        for &(u, v) in g.edges() {
            edges.push((index.flat(u, x), index.flat(v, x)));
        }
    }
    for &(x, y) in h.edges() {
        for u in 0..g.vertex_count() {
            edges.push((index.flat(u, x), index.flat(u, y)));
        }
    }
    let graph = Graph::new(index.len(), &edges).expect("product edges are in range by construction");
    Ok(ProductGraph { graph, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p1() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn square_is_a_four_cycle() {
        let p = cartesian_product(&p1(), &p1()).unwrap();
        assert_eq!(p.graph().vertex_count(), 4);
        assert_eq!(p.graph().edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(p.graph().is_connected());
    }

    #[test]
    fn k1_is_a_left_identity() {
        let k1 = Graph::new(1, &[]).unwrap();
        let h = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = cartesian_product(&k1, &h).unwrap();
        assert_eq!(p.graph(), &h);
    }

    #[test]
    fn square_times_edge_is_the_cube() {
        let square = cartesian_product(&p1(), &p1()).unwrap().into_graph();
        let cube = cartesian_product(&square, &p1()).unwrap();
        assert_eq!(cube.graph().vertex_count(), 8);
        assert_eq!(cube.graph().edge_count(), 12); // 4·1 + 2·4
    }

    #[test]
    fn empty_factor_is_rejected() {
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(cartesian_product(&empty, &p1()), Err(ProductError::EmptyFactor));
        assert_eq!(cartesian_product(&p1(), &empty), Err(ProductError::EmptyFactor));
    }

    #[test]
    fn fiber_vertices_examples() {
        let p = cartesian_product(&p1(), &p1()).unwrap();
        assert_eq!(p.fiber_vertices(0).unwrap(), vec![0, 1]);
        assert_eq!(p.fiber_vertices(1).unwrap(), vec![2, 3]);
        assert!(p.fiber_vertices(2).is_err());

        let k1 = Graph::new(1, &[]).unwrap();
        let p2 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let thin = cartesian_product(&k1, &p2).unwrap();
        assert_eq!(thin.fiber_vertices(2).unwrap(), vec![2]);
    }

    #[test]
    fn index_is_a_bijection() {
        let idx = ProductIndex::new(5, 7);
        for id in 0..idx.len() {
            let (v, x) = idx.pair(id);
            assert_eq!(idx.flat(v, x), id);
        }
    }

    #[test]
    fn iterated_edge_products_are_hypercubes() {
        let mut q = p1();
        for n in 2..=6 {
            q = cartesian_product(&q, &p1()).unwrap().into_graph();
            assert_eq!(q.vertex_count(), 1 << n);
            assert_eq!(q.edge_count(), n << (n - 1));
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
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
        fn count_formulas_hold(g in arb_graph(5), h in arb_graph(5)) {
            let p = cartesian_product(&g, &h).unwrap();
            prop_assert_eq!(p.graph().vertex_count(), g.vertex_count() * h.vertex_count());
            prop_assert_eq!(
                p.graph().edge_count(),
                g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count()
            );
        }

        #[test]
        fn fibers_induce_the_factors(g in arb_graph(5), h in arb_graph(5)) {
            let p = cartesian_product(&g, &h).unwrap();
            // Each fiber G_x relabels to exactly g (contiguous ascending ids).
            for x in 0..h.vertex_count() {
                let fiber = p.fiber_vertices(x).unwrap();
                let (sub, _) = p.graph().induced_subgraph(&fiber).unwrap();
                prop_assert_eq!(&sub, &g);
            }
            // Each co-fiber {u} × V(H) relabels to exactly h.
            for u in 0..g.vertex_count() {
                let co_fiber: Vec<usize> =
                    (0..h.vertex_count()).map(|x| p.index().flat(u, x)).collect();
                let (sub, _) = p.graph().induced_subgraph(&co_fiber).unwrap();
                prop_assert_eq!(&sub, &h);
            }
        }
    }
}
