//! Exhaustive search: the independent oracle side of the crate.
//!
//! Everything here decides properties by enumeration rather than by
//! construction, so results from the `lift` and `generators` modules can be
//! cross-checked against ground truth on small graphs:
//!
//! * [`enumerate_hamiltonian_colorings`] — backtracking over vertices in
//!   descending-degree order, pruning a partial coloring as soon as a color
//!   class acquires a cycle (rollback union-find) or a class component is
//!   frozen away from every uncolored vertex while its class is still
//!   disconnected. Symmetry is broken by fixing the first vertex's color;
//!   results are normalized so vertex 0 is red (total count = 2 × returned).
//! * [`is_dual_hamiltonian`] — same search, stopping at the first witness.
//! * [`find_quartet`] / [`find_quartet_coloring`] — lexicographic-first
//!   quartet search with memoized Q3 component splits.
//! * [`density_check`] — the edge-density necessary condition
//!   `4‖H‖ ≤ |H|² + 4|H| − 8` over induced subgraphs (`|H| ≥ 2`); a
//!   violation certifies a graph is *not* dual-hamiltonian.
//! * [`census`] — one deterministic row per graph with inline witnesses.
//!
//! Searches accept wall-clock and node-count budgets and report honest
//! [`SolveStatus::AbortedBudget`] outcomes instead of hanging.

use crate::coloring::{
    is_hamiltonian_bond, is_quartet, Color, ColoringError, Quartet, SeedInstance, TwoColoring,
};
use crate::graph::{Graph, VertexSet};
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

/// Hard representational limit of the search (vertex bitmasks are two words).
pub const MAX_SOLVER_VERTICES: usize = 128;
/// Default vertex cap for budget-less searches.
pub const DEFAULT_VERTEX_CAP: usize = 28;
/// Default cap on `|g|` under which [`density_check`] sweeps all subsets.
pub const DEFAULT_SUBSET_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    CapExceeded { vertices: usize, cap: usize },
    TooLarge { vertices: usize, max: usize },
    Disconnected,
    Coloring(ColoringError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::CapExceeded { vertices, cap } => write!(
                f,
                "graph has {vertices} vertices, over the cap of {cap}; pass a budget to search anyway"
            ),
            SolverError::TooLarge { vertices, max } => {
                write!(f, "graph has {vertices} vertices, over the solver's hard limit of {max}")
            }
            SolverError::Disconnected => write!(f, "graph is not connected"),
            SolverError::Coloring(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SolverError {}

impl From<ColoringError> for SolverError {
    fn from(e: ColoringError) -> Self {
        SolverError::Coloring(e)
    }
}

/// Limits for a search; exceeding either aborts with
/// [`SolveStatus::AbortedBudget`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_duration: Option<Duration>,
}

/// Search configuration.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Refuse budget-less searches on graphs larger than this.
    pub vertex_cap: usize,
    /// Optional node/time limits; also unlocks graphs above the cap.
    pub budget: Option<Budget>,
    /// Worker threads for enumeration (prefix-split). 1 = single-threaded.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { vertex_cap: DEFAULT_VERTEX_CAP, budget: None, threads: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// A verified witness was found.
    Found,
    /// The full space was covered and holds no witness.
    NoneExhaustive,
    /// The budget ran out first; nothing is claimed about uncovered space.
    AbortedBudget,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Found => "found",
            SolveStatus::NoneExhaustive => "none-exhaustive",
            SolveStatus::AbortedBudget => "aborted-budget",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveWitness {
    Coloring(TwoColoring),
    Instance(SeedInstance),
}

/// Outcome of a decision search.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub witness: Option<SolveWitness>,
    pub colorings_enumerated: u64,
    pub nodes_visited: u64,
    pub elapsed: Duration,
}

/// Outcome of a full enumeration.
#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Hamiltonian colorings with vertex 0 red, sorted by color string.
    pub colorings: Vec<TwoColoring>,
    /// True when the whole space was covered (no budget abort).
    pub complete: bool,
    pub nodes_visited: u64,
    pub elapsed: Duration,
}

/// Union-find with union by rank, no path compression, and an undo log, so
/// the backtracking search can retract the unions of one assignment in O(1)
/// per union.
struct RollbackUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    log: Vec<(usize, usize, bool)>,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        RollbackUnionFind { parent: (0..n).collect(), rank: vec![0; n], log: Vec::new() }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Unions the sets of `a` and `b`; false (and no-op) if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (child, parent) = if self.rank[ra] <= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        let bumped = self.rank[child] == self.rank[parent];
        self.parent[child] = parent;
        if bumped {
            self.rank[parent] += 1;
        }
        self.log.push((child, parent, bumped));
        true
    }

    fn mark(&self) -> usize {
        self.log.len()
    }

    fn rollback_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (child, parent, bumped) = self.log.pop().expect("log length checked");
            self.parent[child] = child;
            if bumped {
                self.rank[parent] -= 1;
            }
        }
    }
}

/// Shared, thread-safe budget bookkeeping.
struct BudgetGuard {
    nodes: AtomicU64,
    aborted: AtomicBool,
    started: Instant,
    max_nodes: u64,
    max_duration: Option<Duration>,
}

impl BudgetGuard {
    fn new(budget: Option<Budget>) -> Self {
        let b = budget.unwrap_or_default();
        BudgetGuard {
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
            started: Instant::now(),
            max_nodes: b.max_nodes.unwrap_or(u64::MAX),
            max_duration: b.max_duration,
        }
    }

    /// Counts one search node; true when the search must stop.
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes {
            self.aborted.store(true, Ordering::Relaxed);
        } else if let Some(limit) = self.max_duration {
            // The clock read is the expensive part; sample it sparsely.
            if n % 1024 == 0 && self.started.elapsed() > limit {
                self.aborted.store(true, Ordering::Relaxed);
            }
        }
        self.aborted.load(Ordering::Relaxed)
    }

    fn is_aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }
}

/// One worker's view of the backtracking state.
struct SearchState<'a> {
    g: &'a Graph,
    order: &'a [usize],
    adj_mask: &'a [u128],
    guard: &'a BudgetGuard,
    stop_after_first: bool,
    found_any: &'a AtomicBool,
    color_of: Vec<Option<Color>>,
    uncolored: u128,
    uf: [RollbackUnionFind; 2],
    members: [Vec<usize>; 2],
    component_count: [usize; 2],
    solutions: Vec<TwoColoring>,
}

fn class_index(k: Color) -> usize {
    match k {
        Color::Red => 0,
        Color::Blue => 1,
    }
}

impl<'a> SearchState<'a> {
    fn new(
        g: &'a Graph,
        order: &'a [usize],
        adj_mask: &'a [u128],
        guard: &'a BudgetGuard,
        stop_after_first: bool,
        found_any: &'a AtomicBool,
    ) -> Self {
        let n = g.vertex_count();
        SearchState {
            g,
            order,
            adj_mask,
            guard,
            stop_after_first,
            found_any,
            color_of: vec![None; n],
            uncolored: if n == 128 { u128::MAX } else { (1u128 << n) - 1 },
            uf: [RollbackUnionFind::new(n), RollbackUnionFind::new(n)],
            members: [Vec::new(), Vec::new()],
            component_count: [0, 0],
            solutions: Vec::new(),
        }
    }

    /// Replays a fixed assignment prefix; false if some step is infeasible.
    fn apply_prefix(&mut self, prefix: &[Color]) -> bool {
        for (idx, &k) in prefix.iter().enumerate() {
            if !self.assign(self.order[idx], k) {
                // Partially applied prefixes are abandoned with the state;
                // each worker gets a fresh SearchState per prefix.
                return false;
            }
        }
        true
    }

    /// Colors `v` with `k` if no class cycle arises; updates all bookkeeping.
    /// Returns false (fully rolled back) on a cycle.
    fn assign(&mut self, v: usize, k: Color) -> bool {
        let ci = class_index(k);
        let mark = self.uf[ci].mark();
        let mut unions = 0usize;
        for &w in self.g.neighbors(v) {
            if self.color_of[w] == Some(k) {
                if !self.uf[ci].union(v, w) {
                    self.uf[ci].rollback_to(mark);
                    return false;
                }
                unions += 1;
            }
        }
        self.color_of[v] = Some(k);
        self.uncolored &= !(1u128 << v);
        self.members[ci].push(v);
        self.component_count[ci] += 1 - unions.min(1);
        // A union folds v into an existing component; additional unions merge
        // previously separate components.
        self.component_count[ci] -= unions.saturating_sub(1);
        true
    }

    fn unassign(&mut self, v: usize, k: Color, mark: usize, components_before: usize) {
        let ci = class_index(k);
        self.uf[ci].rollback_to(mark);
        self.color_of[v] = None;
        self.uncolored |= 1 << v;
        self.members[ci].pop();
        self.component_count[ci] = components_before;
    }

    /// True when class `k` already cannot become one tree: it has at least
    /// two components and one of them touches no uncolored vertex.
    fn class_is_stuck(&self, k: Color) -> bool {
        let ci = class_index(k);
        if self.component_count[ci] < 2 {
            return false;
        }
        // Accumulate per-root reachability into the uncolored region.
        let mut open_roots = HashMap::new();
        for &u in &self.members[ci] {
            let root = self.uf[ci].find(u);
            let entry = open_roots.entry(root).or_insert(false);
            *entry |= self.adj_mask[u] & self.uncolored != 0;
        }
        open_roots.values().any(|reachable| !reachable)
    }

    fn dfs(&mut self, idx: usize) -> bool {
        if self.guard.tick() {
            return false;
        }
        if self.stop_after_first && self.found_any.load(Ordering::Relaxed) {
            return false;
        }
        if idx == self.order.len() {
            if self.component_count[0] == 1 && self.component_count[1] == 1 {
                self.record_solution();
                if self.stop_after_first {
                    self.found_any.store(true, Ordering::Relaxed);
                    return false;
                }
            }
            return true;
        }
        let v = self.order[idx];
        // The first vertex in the order is pinned to red: every coloring or
        // its global flip is reached, and the flip is applied when recording.
        let choices: &[Color] =
            if idx == 0 { &[Color::Red] } else { &[Color::Red, Color::Blue] };
        for &k in choices {
            let ci = class_index(k);
            let mark = self.uf[ci].mark();
            let components_before = self.component_count[ci];
            if self.assign(v, k) {
                let viable = !self.class_is_stuck(Color::Red) && !self.class_is_stuck(Color::Blue);
                let keep_going = !viable || self.dfs(idx + 1);
                self.unassign(v, k, mark, components_before);
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }

    fn record_solution(&mut self) {
        let colors: Vec<Color> =
            self.color_of.iter().map(|c| c.expect("complete assignment")).collect();
        let mut coloring = TwoColoring::new(colors);
        if coloring.color(0) == Color::Blue {
            let everything: VertexSet = (0..self.color_of.len()).collect();
            coloring = coloring.flip(&everything).expect("all vertices are in range");
        }
        self.solutions.push(coloring);
    }
}

fn check_size(g: &Graph, opts: &SolveOptions) -> Result<(), SolverError> {
    let n = g.vertex_count();
    if n > MAX_SOLVER_VERTICES {
        return Err(SolverError::TooLarge { vertices: n, max: MAX_SOLVER_VERTICES });
    }
    if opts.budget.is_none() && n > opts.vertex_cap {
        return Err(SolverError::CapExceeded { vertices: n, cap: opts.vertex_cap });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    Ok(())
}

fn search_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn run_search(
    g: &Graph,
    opts: &SolveOptions,
    stop_after_first: bool,
) -> Result<Enumeration, SolverError> {
    check_size(g, opts)?;
    let started = Instant::now();
    let order = search_order(g);
    let n = g.vertex_count();
    let mut adj_mask = vec![0u128; n];
    for &(u, v) in g.edges() {
        adj_mask[u] |= 1 << v;
        adj_mask[v] |= 1 << u;
    }
    let guard = BudgetGuard::new(opts.budget);
    let found_any = AtomicBool::new(false);

    let mut solutions: Vec<TwoColoring>;
    if opts.threads <= 1 || n < 2 {
        let mut state =
            SearchState::new(g, &order, &adj_mask, &guard, stop_after_first, &found_any);
        state.dfs(0);
        solutions = state.solutions;
    } else {
        // Prefix-split parallelism: fix the colors of the first few vertices
        // in the order and hand each prefix to a worker round-robin. Every
        // prefix starts with red (the symmetry break pins order[0]).
        let split_depth = (opts.threads.next_power_of_two().trailing_zeros() as usize + 1)
            .min(n.saturating_sub(1))
            .clamp(1, 20);
        let mut prefixes: Vec<Vec<Color>> = Vec::new();
        for mask in 0u32..1 << (split_depth - 1) {
            let mut prefix = vec![Color::Red];
            for bit in 0..split_depth - 1 {
                prefix.push(if mask >> bit & 1 == 1 { Color::Blue } else { Color::Red });
            }
            prefixes.push(prefix);
        }
        let workers = opts.threads.min(prefixes.len());
        let chunks: Vec<Vec<Vec<Color>>> = (0..workers)
            .map(|w| prefixes.iter().skip(w).step_by(workers).cloned().collect())
            .collect();
        let handles: Vec<Vec<TwoColoring>> = std::thread::scope(|scope| {
            let joins: Vec<_> = chunks
                .iter()
                .map(|chunk| {
                    let (order, adj_mask, guard, found_any) =
                        (&order, &adj_mask, &guard, &found_any);
                    scope.spawn(move || {
                        let mut collected = Vec::new();
                        for prefix in chunk {
                            let mut state = SearchState::new(
                                g, order, adj_mask, guard, stop_after_first, found_any,
                            );
                            if state.apply_prefix(prefix) {
                                state.dfs(prefix.len());
                            }
                            collected.extend(state.solutions);
                        }
                        collected
                    })
                })
                .collect();
            joins.into_iter().map(|j| j.join().expect("worker panicked")).collect()
        });
        solutions = handles.into_iter().flatten().collect();
    }

    solutions.sort_by_key(|c| c.to_string());
    solutions.dedup();
    Ok(Enumeration {
        colorings: solutions,
        complete: !guard.is_aborted(),
        nodes_visited: guard.nodes.load(Ordering::Relaxed),
        elapsed: started.elapsed(),
    })
}

/// All hamiltonian colorings of `g` with vertex 0 red, sorted by color
/// string. Total ordered colorings = twice the returned count. Requires a
/// budget for graphs above the cap; `complete` reports whether the space was
/// fully covered.
pub fn enumerate_hamiltonian_colorings(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<Enumeration, SolverError> {
    run_search(g, opts, false)
}

/// Decides whether `g` has a hamiltonian bond, by searching for a
/// hamiltonian coloring. The witness, when found, is re-verified. Decision
/// searches run single-threaded regardless of `opts.threads` so the witness
/// is the same on every run; full enumerations parallelize safely because
/// they cover the whole space either way.
pub fn is_dual_hamiltonian(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolverError> {
    let opts = SolveOptions { threads: 1, ..*opts };
    let enumeration = run_search(g, &opts, true)?;
    let (status, witness) = match enumeration.colorings.first() {
        Some(c) => {
            debug_assert!(crate::coloring::is_hamiltonian_coloring(g, c).unwrap_or(false));
            (SolveStatus::Found, Some(SolveWitness::Coloring(c.clone())))
        }
        None if enumeration.complete => (SolveStatus::NoneExhaustive, None),
        None => (SolveStatus::AbortedBudget, None),
    };
    Ok(SolveResult {
        status,
        witness,
        colorings_enumerated: enumeration.colorings.len() as u64,
        nodes_visited: enumeration.nodes_visited,
        elapsed: enumeration.elapsed,
    })
}

/// Per-class component data for one `J` flip, shared across `I` candidates.
struct JSplit {
    feasible: [bool; 2],
    component_of: [Vec<usize>; 2],
}

/// The lexicographically first `(i_red, i_blue, j_red, j_blue)` quartet for
/// the hamiltonian coloring `c`, or `None` after exhausting all candidates.
/// Candidates are filtered Q1-first (by picking members from the right color
/// classes), then by Q2 once per `I`, then by Q3 with the component split
/// memoized per `J`. The returned quartet is re-verified through
/// [`is_quartet`] before being handed back.
pub fn find_quartet(g: &Graph, c: &TwoColoring) -> Result<Option<Quartet>, ColoringError> {
    if !crate::coloring::is_hamiltonian_coloring(g, c)? {
        return Err(ColoringError::NotHamiltonian);
    }
    let reds = c.class(Color::Red);
    let blues = c.class(Color::Blue);
    let mut j_cache: HashMap<(usize, usize), JSplit> = HashMap::new();

    for &i_red in &reds {
        for &i_blue in &blues {
            let i_set: VertexSet = [i_red, i_blue].into_iter().collect();
            if !crate::coloring::is_hamiltonian_coloring(g, &c.flip(&i_set)?)? {
                continue;
            }
            for &j_red in &reds {
                if j_red == i_red {
                    continue;
                }
                for &j_blue in &blues {
                    if j_blue == i_blue {
                        continue;
                    }
                    let split = j_split(g, c, j_red, j_blue, &mut j_cache)?;
                    // Red class of the J-flip holds i_red and j_blue; blue
                    // class holds i_blue and j_red. Q3 reduces to "feasible
                    // split and the pair lands in different components".
                    let q3 = split.feasible[0]
                        && split.feasible[1]
                        && split.component_of[0][i_red] != split.component_of[0][j_blue]
                        && split.component_of[1][i_blue] != split.component_of[1][j_red];
                    if !q3 {
                        continue;
                    }
                    let q = Quartet { i_red, i_blue, j_red, j_blue };
                    let report = is_quartet(g, c, &q)?;
                    debug_assert!(report.all_hold(), "fast path disagrees with the verifier");
                    if report.all_hold() {
                        return Ok(Some(q));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn j_split<'a>(
    g: &Graph,
    c: &TwoColoring,
    j_red: usize,
    j_blue: usize,
    cache: &'a mut HashMap<(usize, usize), JSplit>,
) -> Result<&'a JSplit, ColoringError> {
    if !cache.contains_key(&(j_red, j_blue)) {
        let j_set: VertexSet = [j_red, j_blue].into_iter().collect();
        let flipped = c.flip(&j_set)?;
        let n = g.vertex_count();
        let mut feasible = [false; 2];
        let mut component_of = [vec![usize::MAX; n], vec![usize::MAX; n]];
        for k in [Color::Red, Color::Blue] {
            let ci = class_index(k);
            let class = flipped.class(k);
            let (sub, map) = g.induced_subgraph(&class)?;
            let comps = sub.components();
            feasible[ci] = sub.is_forest() && comps.len() == 2;
            for (comp_id, comp) in comps.iter().enumerate() {
                for &v in comp {
                    component_of[ci][map[v]] = comp_id;
                }
            }
        }
        cache.insert((j_red, j_blue), JSplit { feasible, component_of });
    }
    Ok(&cache[&(j_red, j_blue)])
}

/// Searches for a hamiltonian coloring admitting a quartet: enumerates
/// colorings (within the budget) in deterministic order and runs
/// [`find_quartet`] on each. A found witness is a fully verified
/// [`SeedInstance`]. `NoneExhaustive` means *no* coloring of `g` has a
/// quartet; an incomplete enumeration without a hit reports a budget abort.
pub fn find_quartet_coloring(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolverError> {
    let started = Instant::now();
    let enumeration = enumerate_hamiltonian_colorings(g, opts)?;
    for c in &enumeration.colorings {
        if let Some(q) = find_quartet(g, c)? {
            let instance = SeedInstance::new(g.clone(), c.clone(), q)?;
            return Ok(SolveResult {
                status: SolveStatus::Found,
                witness: Some(SolveWitness::Instance(instance)),
                colorings_enumerated: enumeration.colorings.len() as u64,
                nodes_visited: enumeration.nodes_visited,
                elapsed: started.elapsed(),
            });
        }
    }
    Ok(SolveResult {
        status: if enumeration.complete {
            SolveStatus::NoneExhaustive
        } else {
            SolveStatus::AbortedBudget
        },
        witness: None,
        colorings_enumerated: enumeration.colorings.len() as u64,
        nodes_visited: enumeration.nodes_visited,
        elapsed: started.elapsed(),
    })
}

/// Necessary edge-density condition: every induced subgraph `H` with
/// `|H| ≥ 2` of a dual-hamiltonian graph satisfies `4‖H‖ ≤ |H|² + 4|H| − 8`.
/// The whole graph is always checked; when `|g| ≤ subset_cap` every induced
/// subgraph is checked too, smallest first, and the first (hence a smallest)
/// violating vertex set is returned. A violation certifies the graph is not
/// dual-hamiltonian; `None` certifies nothing.
pub fn density_check(g: &Graph, subset_cap: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let violates = |vertices: &[usize]| {
        let k = vertices.len();
        let mut membership = vec![false; n];
        for &v in vertices {
            membership[v] = true;
        }
        let edges =
            g.edges().iter().filter(|&&(u, v)| membership[u] && membership[v]).count();
        4 * edges > k * k + 4 * k - 8
    };

    if n >= 2 {
        let everything: Vec<usize> = (0..n).collect();
        if n > subset_cap {
            return if violates(&everything) { Some(everything) } else { None };
        }
        for k in 2..=n {
            let mut picked: Vec<usize> = (0..k).collect();
            loop {
                if violates(&picked) {
                    return Some(picked);
                }
                if !next_combination(&mut picked, n) {
                    break;
                }
            }
        }
    }
    None
}

/// Advances `picked` to the next k-combination of `0..n` in lexicographic
/// order; false once the last combination has been passed.
fn next_combination(picked: &mut [usize], n: usize) -> bool {
    let k = picked.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if picked[i] < n - (k - i) {
            picked[i] += 1;
            for j in i + 1..k {
                picked[j] = picked[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// One census row: decision statuses plus inline verified witnesses.
#[derive(Debug, Clone)]
pub struct CensusRow {
    pub id: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub dual_status: SolveStatus,
    pub dual_witness: Option<TwoColoring>,
    pub quartet_status: SolveStatus,
    pub quartet_witness: Option<SeedInstance>,
}

/// Runs the dual-hamiltonicity and quartet-coloring decisions on each graph.
/// Rows keep input order; all per-row results are deterministic, and budget
/// aborts are recorded in the row rather than skipped.
pub fn census(items: &[(String, Graph)], opts: &SolveOptions) -> Result<Vec<CensusRow>, SolverError> {
    let mut rows = Vec::with_capacity(items.len());
    for (id, g) in items {
        let enumeration = enumerate_hamiltonian_colorings(g, opts)?;
        let (dual_status, dual_witness) = match enumeration.colorings.first() {
            Some(c) => (SolveStatus::Found, Some(c.clone())),
            None if enumeration.complete => (SolveStatus::NoneExhaustive, None),
            None => (SolveStatus::AbortedBudget, None),
        };
        let mut quartet_status =
            if enumeration.complete { SolveStatus::NoneExhaustive } else { SolveStatus::AbortedBudget };
        let mut quartet_witness = None;
        for c in &enumeration.colorings {
            if let Some(q) = find_quartet(g, c)? {
                quartet_status = SolveStatus::Found;
                quartet_witness = Some(SeedInstance::new(g.clone(), c.clone(), q)?);
                break;
            }
        }
        rows.push(CensusRow {
            id: id.clone(),
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            dual_status,
            dual_witness,
            quartet_status,
            quartet_witness,
        });
    }
    Ok(rows)
}

/// Definition-level oracle: sweeps every edge subset of size `‖g‖ − |g| + 2`
/// and tests it with [`is_hamiltonian_bond`] (subsets of any other size
/// cannot be hamiltonian bonds by definition). Exponential; cross-check use
/// on small graphs only.
pub fn dual_hamiltonian_by_bond_sweep(g: &Graph) -> bool {
    let m = g.edge_count();
    let n = g.vertex_count();
    if m + 2 < n {
        return false;
    }
    let k = m + 2 - n;
    if k == 0 || k > m {
        return false;
    }
    let edges = g.edges();
    let mut picked: Vec<usize> = (0..k).collect();
    loop {
        let b = picked.iter().map(|&i| edges[i]).collect();
        if is_hamiltonian_bond(g, &b).unwrap_or(false) {
            return true;
        }
        if !next_combination(&mut picked, m) {
            return false;
        }
    }
}
