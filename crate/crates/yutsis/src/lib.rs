//! Construction and verification of dual-hamiltonian (Yutsis) graphs.
//!
//! A connected graph is *dual-hamiltonian* when it has a hamiltonian bond: a
//! bond of size `m - n + 2` (for `n` vertices and `m` edges), or equivalently
//! a 2-coloring of the vertices in which both color classes are nonempty and
//! each induces a tree. This crate provides:
//!
//! * core graph types and predicates ([`graph`]),
//! * hamiltonian colorings, the bond criterion, and quartets ([`coloring`]),
//! * cartesian products with fiber bookkeeping ([`product`]),
//! * the coloring lift that transports a hamiltonian coloring with a quartet
//!   across a product with a tree ([`lift`]),
//! * generators for standard families and seed instances ([`generators`]),
//! * exhaustive search: coloring enumeration, quartet search, decision
//!   procedures with budgets ([`solver`]),
//! * canonical JSON / edge-list / DOT serialization ([`io`]).

pub mod coloring;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lift;
pub mod product;
pub mod solver;

pub use coloring::{
    bichromatic_edges, is_hamiltonian_bond, is_hamiltonian_coloring, is_quartet, jaeger_check,
    Color, ColoringError, Quartet, QuartetReport, SeedInstance, TwoColoring,
};
pub use generators::{
    all_trees, complete, counterexample_graph, cycle, grid, hypercube, path, seed_cube_ladder,
    seed_grid, GeneratorError, GridSpec,
};
pub use graph::{bfs_tree, canonical_edge, EdgeSet, Graph, GraphError, Tree, VertexSet};
pub use lift::{
    check_cross_fiber_uniqueness, check_fiber_restrictions, check_kept_edge_bridges,
    default_leaves, lift, lift_chain, LiftError, LiftOutput,
};
pub use product::{cartesian_product, ProductError, ProductGraph, ProductIndex};
pub use solver::{
    census, density_check, dual_hamiltonian_by_bond_sweep, enumerate_hamiltonian_colorings,
    find_quartet, find_quartet_coloring, is_dual_hamiltonian, Budget, CensusRow, Enumeration,
    SolveOptions, SolveResult, SolveStatus, SolveWitness, SolverError,
};

/// Compiles and runs every code snippet in the guide under `book/` as a
/// doc-test, so the book cannot drift from the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(GraphsAndBonds, "../../../book/src/graphs-and-bonds.md");
    chapter!(HamiltonianColorings, "../../../book/src/hamiltonian-colorings.md");
    chapter!(Quartets, "../../../book/src/quartets.md");
    chapter!(ProductsAndLifting, "../../../book/src/products-and-lifting.md");
    chapter!(SeedFamilies, "../../../book/src/seed-families.md");
    chapter!(ExhaustiveSearch, "../../../book/src/exhaustive-search.md");
    chapter!(CommandLine, "../../../book/src/cli.md");
}
