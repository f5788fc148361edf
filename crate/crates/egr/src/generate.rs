//! Exhaustive generation of edge-girth-regular graphs by recursive edge
//! addition.
//!
//! A search starts from the Moore-tree seed padded with isolated vertices
//! and adds one edge per recursion level. Only *valid pairs* are ever
//! added: non-adjacent vertices of degree below k whose joining edge keeps
//! the girth at least g and every per-edge girth-cycle count at most
//! lambda. Those four clauses are monotone under edge addition, so the
//! per-vertex eligible-pair lists only shrink along a branch.
//!
//! Duplicate work is cut three ways: a canonical-form store prunes any
//! state isomorphic to an earlier one, an explored candidate is marked
//! ineligible for its later siblings, and edges to all-but-one isolated
//! vertex are interchangeable so only the lowest-id one is tried.
//!
//! While the leaf-set cross-edge counts are below lambda ("phase one"),
//! branching is restricted to leaf-leaf edges of one unfinished leaf set:
//! every completion must still add a cross edge there, so the restriction
//! loses nothing and fails fast.

use crate::canon::{canonical_key, StoreCapacity, VisitedStore, DEFAULT_STORE_BYTES};
use crate::check::{verify_egr, ParamError, ParamTuple};
use crate::girth::ngc;
use crate::graph::{BitIter, Edge, Graph, MAX_ORDER};
use crate::seed::{build_seed_tree, SeedError, SeedTree};
use thiserror::Error;

/// Knobs for one generation run.
#[derive(Debug, Clone)]
pub struct GenerationConfig {
    /// Allow every edge type from the start instead of finishing the
    /// leaf-leaf phase first.
    pub skip_phase_one: bool,
    /// Treat lambda as unbounded inside the pair-validity test; invalid
    /// edges are then pruned later, which avoids cycle counting on every
    /// validity check.
    pub lambda_unbounded_validity: bool,
    /// Generate all connected k-regular graphs of girth at least g
    /// instead; lambda is ignored.
    pub regular_mode: bool,
    /// Stop after this many emitted graphs.
    pub max_outputs: Option<usize>,
    /// Byte budget for canonical keys in the visited store.
    pub store_bytes: usize,
    /// Cross-check every incremental pair-validity verdict against a
    /// from-scratch recomputation. Slow; for verification runs.
    pub oracle_verify: bool,
    /// Progress notes on stderr.
    pub progress: bool,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig {
            skip_phase_one: false,
            lambda_unbounded_validity: false,
            regular_mode: false,
            max_outputs: None,
            store_bytes: DEFAULT_STORE_BYTES,
            oracle_verify: false,
            progress: false,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    /// Recursion nodes entered (including ones pruned as already visited).
    pub nodes: u64,
    /// Graphs passed to the sink.
    pub emitted: usize,
    /// Nodes pruned because an isomorphic graph was seen before.
    pub dedup_hits: u64,
    pub store_keys: usize,
    pub store_bytes: usize,
    /// False when the run stopped at `max_outputs`.
    pub completed: bool,
}

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("infeasible parameters: {0}")]
    Params(#[from] ParamError),
    #[error("order {0} above the {MAX_ORDER}-vertex build limit")]
    OrderTooLarge(usize),
    #[error("visited store overflow: {capacity} (after {} nodes)", stats.nodes)]
    Capacity {
        capacity: StoreCapacity,
        stats: SearchStats,
    },
}

enum Stop {
    OutputCap,
    Capacity(StoreCapacity),
}

/// From-scratch valid-pair test: `a` and `b` non-adjacent with degrees
/// below k, joining them keeps girth >= g, and (unless `lambda_free`) no
/// edge of the extended graph lies on more than lambda length-g cycles.
///
/// The generator maintains the same predicate incrementally; this
/// recomputation is the fallback used for cross-checking.
pub fn is_valid_pair(
    graph: &Graph,
    a: usize,
    b: usize,
    p: &ParamTuple,
    lambda_free: bool,
) -> bool {
    if a == b || graph.has_edge(a, b) || graph.degree(a) >= p.k || graph.degree(b) >= p.k {
        return false;
    }
    // A cycle shorter than g would close iff the endpoints are already
    // within distance g-2.
    if crate::girth::distance_and_nsp(graph, a, b, p.g - 2).is_some() {
        return false;
    }
    if lambda_free {
        return true;
    }
    let mut extended = graph.clone();
    extended
        .add_edge(Edge::new(a, b))
        .expect("pair is non-adjacent");
    extended
        .edges()
        .into_iter()
        .all(|e| ngc(&extended, p.g, e) <= p.lambda)
}

/// Whether every leaf set of the seed already carries exactly `lambda`
/// edges into the union of the other leaf sets. This is the condition
/// ending the leaf-leaf phase: the finished graph must meet it, and the
/// counts only grow as edges are added.
pub fn cross_edges_complete(graph: &Graph, seed: &SeedTree, lambda: u64) -> bool {
    seed.leaf_sets.iter().all(|&set| {
        let others = seed.leaves & !set;
        let count: u64 = BitIter(set)
            .map(|leaf| (graph.neighbors_mask(leaf) & others).count_ones() as u64)
            .sum();
        count == lambda
    })
}

/// Among candidate edges at `branch`, keep at most one whose other
/// endpoint is isolated: all isolated partners produce isomorphic graphs,
/// so only the lowest-id one is worth trying.
pub fn restrict_pendant_edges(branch: usize, candidates: &[Edge], graph: &Graph) -> Vec<Edge> {
    let partner = |e: &Edge| if e.u() == branch { e.w() } else { e.u() };
    let lowest_isolated = candidates
        .iter()
        .map(partner)
        .filter(|&w| graph.degree(w) == 0)
        .min();
    candidates
        .iter()
        .filter(|e| {
            let w = partner(e);
            graph.degree(w) != 0 || Some(w) == lowest_isolated
        })
        .copied()
        .collect()
}

const UNREACHED: u64 = u64::MAX / 4;

struct BfsScratch {
    dist: [u64; MAX_ORDER],
    nsp: [u64; MAX_ORDER],
    epoch: u64,
}

impl BfsScratch {
    fn new() -> Self {
        BfsScratch {
            dist: [UNREACHED; MAX_ORDER],
            nsp: [0; MAX_ORDER],
            epoch: 0,
        }
    }
}

fn bfs_fill(graph: &Graph, source: usize, cutoff: u64, out: &mut BfsScratch) {
    out.dist = [UNREACHED; MAX_ORDER];
    out.nsp = [0; MAX_ORDER];
    out.dist[source] = 0;
    out.nsp[source] = 1;
    let mut queue = [0usize; MAX_ORDER];
    let (mut head, mut tail) = (0, 1);
    queue[0] = source;
    while head < tail {
        let current = queue[head];
        head += 1;
        if out.dist[current] == cutoff {
            continue;
        }
        for next in BitIter(graph.neighbors_mask(current)) {
            if out.dist[next] == UNREACHED {
                out.dist[next] = out.dist[current] + 1;
                queue[tail] = next;
                tail += 1;
            }
            if out.dist[next] == out.dist[current] + 1 {
                out.nsp[next] = out.nsp[next]
                    .checked_add(out.nsp[current])
                    .expect("shortest-path count overflow");
            }
        }
    }
}

#[derive(Clone, Copy)]
struct Pair {
    a: usize,
    b: usize,
    alive: bool,
    /// Leaf-set indices when this is a cross pair (leaf-leaf, different
    /// sets); such an edge counts toward both sets' cross totals.
    cross: Option<(usize, usize)>,
}

struct Engine<'s, F> {
    v: usize,
    k: usize,
    g: u64,
    lambda: u64,
    target_edges: usize,
    params: ParamTuple,
    skip_phase_one: bool,
    lambda_free: bool,
    regular_mode: bool,
    oracle_verify: bool,
    progress: bool,
    max_outputs: Option<usize>,

    graph: Graph,
    edges_stack: Vec<Edge>,
    /// Girth-cycle count per present edge, indexed u*MAX_ORDER+w (u<w).
    /// Only maintained when the lambda clause is active.
    cnt: Vec<u64>,
    leaf_set_of: [usize; MAX_ORDER],
    leaf_sets: Vec<u64>,
    leaves: u64,
    cross: Vec<u64>,

    pairs: Vec<Pair>,
    pairs_at: Vec<Vec<u32>>,
    alive_at: Vec<u32>,
    dead_stack: Vec<u32>,
    cnt_deltas: Vec<(usize, u64)>,

    bfs: Vec<BfsScratch>,
    epoch: u64,

    visited: VisitedStore,
    stats: SearchStats,
    sink: &'s mut F,
}

impl<'s, F: FnMut(&Graph)> Engine<'s, F> {
    fn cnt_idx(a: usize, b: usize) -> usize {
        debug_assert!(a < b);
        a * MAX_ORDER + b
    }

    fn ensure_bfs(&mut self, source: usize) {
        if self.bfs[source].epoch != self.epoch {
            bfs_fill(&self.graph, source, self.g - 1, &mut self.bfs[source]);
            self.bfs[source].epoch = self.epoch;
        }
    }

    /// Incremental valid-pair test against the current graph. Pairs are
    /// only ever re-tested while alive, so each clause may assume the pair
    /// was valid before the last edge addition.
    fn pair_valid(&mut self, a: usize, b: usize) -> bool {
        let verdict = self.pair_valid_inner(a, b);
        if self.oracle_verify {
            let fresh = is_valid_pair(&self.graph, a, b, &self.params, self.lambda_free);
            assert_eq!(
                verdict, fresh,
                "incremental validity diverged from recomputation for {a}-{b}"
            );
        }
        verdict
    }

    fn pair_valid_inner(&mut self, a: usize, b: usize) -> bool {
        if self.graph.degree(a) >= self.k || self.graph.degree(b) >= self.k {
            return false;
        }
        if self.graph.has_edge(a, b) {
            return false;
        }
        self.ensure_bfs(a);
        let d = self.bfs[a].dist[b];
        if d < self.g - 1 {
            return false;
        }
        if self.lambda_free || d > self.g - 1 {
            return true;
        }
        // d == g-1: adding ab closes nsp(a,b) girth cycles. The new edge
        // itself must stay within lambda, and so must every edge on one of
        // the new cycles: the number of shortest a-b paths through edge
        // (x, y) is nsp_a(x) * nsp_b(y) for the orientation consistent
        // with the distances.
        let t = self.bfs[a].nsp[b];
        if t > self.lambda {
            return false;
        }
        self.ensure_bfs(b);
        let goal = self.g - 1;
        for i in 0..self.edges_stack.len() {
            let e = self.edges_stack[i];
            let (x, y) = (e.u(), e.w());
            let da = &self.bfs[a];
            let db = &self.bfs[b];
            let mut through = 0u64;
            if da.dist[x] + 1 + db.dist[y] == goal {
                through += da.nsp[x] * db.nsp[y];
            }
            if da.dist[y] + 1 + db.dist[x] == goal {
                through += da.nsp[y] * db.nsp[x];
            }
            if through > 0 && self.cnt[Self::cnt_idx(x, y)] + through > self.lambda {
                return false;
            }
        }
        true
    }

    fn kill_pair(&mut self, idx: u32) {
        let pair = &mut self.pairs[idx as usize];
        debug_assert!(pair.alive);
        pair.alive = false;
        let (a, b) = (pair.a, pair.b);
        self.alive_at[a] -= 1;
        self.alive_at[b] -= 1;
        self.dead_stack.push(idx);
    }

    fn revive_to(&mut self, watermark: usize) {
        while self.dead_stack.len() > watermark {
            let idx = self.dead_stack.pop().expect("watermark below stack length");
            let pair = &mut self.pairs[idx as usize];
            debug_assert!(!pair.alive);
            pair.alive = true;
            let (a, b) = (pair.a, pair.b);
            self.alive_at[a] += 1;
            self.alive_at[b] += 1;
        }
    }

    /// Drop every alive pair no longer valid after an edge addition.
    /// Validity is monotone, so checking previously-valid pairs suffices.
    fn revalidate(&mut self) -> usize {
        let watermark = self.dead_stack.len();
        for idx in 0..self.pairs.len() as u32 {
            let Pair { a, b, alive, .. } = self.pairs[idx as usize];
            if alive && !self.pair_valid(a, b) {
                self.kill_pair(idx);
            }
        }
        watermark
    }

    /// Record the new girth cycles closed by edge (a, b) into the per-edge
    /// counters. Must run before the edge is inserted into the graph.
    fn apply_cnt_deltas(&mut self, a: usize, b: usize) -> usize {
        let watermark = self.cnt_deltas.len();
        if self.lambda_free {
            return watermark;
        }
        self.ensure_bfs(a);
        let d = self.bfs[a].dist[b];
        debug_assert!(d >= self.g - 1, "short cycle slipped past validity");
        if d > self.g - 1 {
            return watermark;
        }
        self.ensure_bfs(b);
        let goal = self.g - 1;
        let t = self.bfs[a].nsp[b];
        for i in 0..self.edges_stack.len() {
            let e = self.edges_stack[i];
            let (x, y) = (e.u(), e.w());
            let da = &self.bfs[a];
            let db = &self.bfs[b];
            let mut through = 0u64;
            if da.dist[x] + 1 + db.dist[y] == goal {
                through += da.nsp[x] * db.nsp[y];
            }
            if da.dist[y] + 1 + db.dist[x] == goal {
                through += da.nsp[y] * db.nsp[x];
            }
            if through > 0 {
                let ci = Self::cnt_idx(x, y);
                self.cnt[ci] += through;
                debug_assert!(self.cnt[ci] <= self.lambda);
                self.cnt_deltas.push((ci, through));
            }
        }
        let ci = Self::cnt_idx(a.min(b), a.max(b));
        debug_assert_eq!(self.cnt[ci], 0);
        debug_assert!(t <= self.lambda);
        self.cnt[ci] = t;
        self.cnt_deltas.push((ci, t));
        watermark
    }

    fn add_edge(&mut self, idx: u32) -> (usize, usize) {
        let Pair { a, b, cross, .. } = self.pairs[idx as usize];
        let cnt_mark = self.apply_cnt_deltas(a, b);
        self.graph.add_edge(Edge::new(a, b)).expect("valid pair is addable");
        self.edges_stack.push(Edge::new(a, b));
        self.epoch += 1;
        if let Some((sa, sb)) = cross {
            self.cross[sa] += 1;
            self.cross[sb] += 1;
        }
        (cnt_mark, idx as usize)
    }

    fn remove_edge(&mut self, undo: (usize, usize)) {
        let (cnt_mark, idx) = undo;
        let Pair { a, b, cross, .. } = self.pairs[idx];
        if let Some((sa, sb)) = cross {
            self.cross[sa] -= 1;
            self.cross[sb] -= 1;
        }
        self.edges_stack.pop();
        self.graph.remove_edge(Edge::new(a, b)).expect("edge was added");
        self.epoch += 1;
        while self.cnt_deltas.len() > cnt_mark {
            let (ci, inc) = self.cnt_deltas.pop().expect("watermark below stack length");
            self.cnt[ci] -= inc;
        }
    }

    fn phase_one_done(&self) -> bool {
        debug_assert!(
            self.cross
                .iter()
                .enumerate()
                .all(|(s, &c)| c == self.recount_cross(s)),
            "incremental cross counters diverged"
        );
        self.cross.iter().all(|&c| c == self.lambda)
    }

    /// From-scratch cross-edge count of one leaf set, for debug checks.
    fn recount_cross(&self, set: usize) -> u64 {
        let mask = self.leaf_sets[set];
        let others = self.leaves & !mask;
        BitIter(mask)
            .map(|leaf| (self.graph.neighbors_mask(leaf) & others).count_ones() as u64)
            .sum()
    }

    fn degree_feasible(&self) -> bool {
        (0..self.v).all(|u| self.graph.degree(u) + self.alive_at[u] as usize >= self.k)
    }

    /// While phase one is unfinished every under-filled leaf set must
    /// retain at least one usable cross candidate.
    fn phase_one_feasible(&self) -> bool {
        if self.skip_phase_one || self.phase_one_done() {
            return true;
        }
        let mut reachable = vec![false; self.cross.len()];
        for pair in &self.pairs {
            if let (true, Some((sa, sb))) = (pair.alive, pair.cross) {
                if self.cross[sa] < self.lambda && self.cross[sb] < self.lambda {
                    reachable[sa] = true;
                    reachable[sb] = true;
                }
            }
        }
        (0..self.cross.len()).all(|s| self.cross[s] >= self.lambda || reachable[s])
    }

    /// Candidate pair indices for this node, or `None` for a dead end.
    fn select_candidates(&self) -> Option<Vec<u32>> {
        let phase_one = !self.skip_phase_one && !self.phase_one_done();
        if phase_one {
            // Cross candidates per unfinished leaf set; a candidate into a
            // set already holding lambda cross edges could never lead to an
            // edge-girth-regular graph.
            let mut per_set: Vec<Vec<u32>> = vec![Vec::new(); self.cross.len()];
            for (idx, pair) in self.pairs.iter().enumerate() {
                if let (true, Some((sa, sb))) = (pair.alive, pair.cross) {
                    if self.cross[sa] < self.lambda && self.cross[sb] < self.lambda {
                        per_set[sa].push(idx as u32);
                        per_set[sb].push(idx as u32);
                    }
                }
            }
            let under: Vec<usize> = (0..self.cross.len())
                .filter(|&s| self.cross[s] < self.lambda)
                .collect();
            // With the lambda clause active the counts can never overshoot
            // (the edge from the seed root into a leaf set lies on one
            // girth cycle per cross edge of that set).
            debug_assert!(
                self.lambda_free || self.cross.iter().all(|&c| c <= self.lambda)
            );
            // A set stuck above lambda can never recover; a set below
            // lambda with no usable candidate can never finish.
            if under.is_empty() || under.iter().any(|&s| per_set[s].is_empty()) {
                return None;
            }
            let branch_set = *under
                .iter()
                .min_by_key(|&&s| (per_set[s].len(), s))
                .expect("under is non-empty");
            Some(std::mem::take(&mut per_set[branch_set]))
        } else {
            // Branch on the unsaturated vertex with the fewest eligible
            // pairs, lowest id on ties.
            let u1 = (0..self.v)
                .filter(|&u| self.graph.degree(u) < self.k)
                .min_by_key(|&u| (self.alive_at[u], u))?;
            let mut candidates: Vec<u32> = self.pairs_at[u1]
                .iter()
                .copied()
                .filter(|&i| self.pairs[i as usize].alive)
                .collect();
            // Isolated partners are interchangeable: keep the lowest.
            let partner = |i: u32| {
                let p = &self.pairs[i as usize];
                if p.a == u1 {
                    p.b
                } else {
                    p.a
                }
            };
            let lowest_isolated = candidates
                .iter()
                .map(|&i| partner(i))
                .filter(|&w| self.graph.degree(w) == 0)
                .min();
            candidates.retain(|&i| {
                let w = partner(i);
                self.graph.degree(w) != 0 || Some(w) == lowest_isolated
            });
            Some(candidates)
        }
    }

    fn emit(&mut self) -> Result<(), Stop> {
        let accept = if self.regular_mode {
            self.graph.regular_degree() == Some(self.k) && self.graph.is_connected()
        } else {
            verify_egr(&self.graph, &self.params).is_ok()
        };
        if accept {
            debug_assert!(crate::girth::girth(&self.graph).is_none_or(|g| g as u64 >= self.g));
            (self.sink)(&self.graph);
            self.stats.emitted += 1;
            if Some(self.stats.emitted) == self.max_outputs {
                return Err(Stop::OutputCap);
            }
        }
        Ok(())
    }

    fn recurse(&mut self) -> Result<(), Stop> {
        self.stats.nodes += 1;
        if self.progress && self.stats.nodes.is_multiple_of(1 << 21) {
            eprintln!(
                "    ... {} nodes, {} stored classes, depth {}",
                self.stats.nodes,
                self.visited.len(),
                self.edges_stack.len()
            );
        }
        match self.visited.insert_if_new(canonical_key(&self.graph)) {
            Ok(true) => {}
            Ok(false) => {
                self.stats.dedup_hits += 1;
                return Ok(());
            }
            Err(cap) => return Err(Stop::Capacity(cap)),
        }
        if self.edges_stack.len() == self.target_edges {
            return self.emit();
        }
        let Some(candidates) = self.select_candidates() else {
            return Ok(());
        };
        let ban_mark = self.dead_stack.len();
        for &ci in &candidates {
            debug_assert!(self.pairs[ci as usize].alive);
            let undo = self.add_edge(ci);
            let reval_mark = self.revalidate();
            if self.degree_feasible() && self.phase_one_feasible() {
                self.recurse()?;
            }
            self.revive_to(reval_mark);
            self.remove_edge(undo);
            // Explored: ineligible for the remaining siblings.
            self.kill_pair(ci);
        }
        self.revive_to(ban_mark);
        Ok(())
    }
}

/// Run the exhaustive search for `p = (v, k, g, lambda)` (or, in regular
/// mode, for all connected k-regular graphs of girth at least g on v
/// vertices). The sink receives each result exactly once per isomorphism
/// class, in discovery order of the deterministic search.
pub fn generate_all<F: FnMut(&Graph)>(
    p: &ParamTuple,
    cfg: &GenerationConfig,
    sink: &mut F,
) -> Result<SearchStats, GenerateError> {
    let v = p.v.expect("generation needs an order");
    if v > MAX_ORDER {
        return Err(GenerateError::OrderTooLarge(v));
    }
    if cfg.regular_mode {
        if p.k < 3 {
            return Err(GenerateError::Params(ParamError::DegreeTooSmall(p.k)));
        }
        if p.g < 3 {
            return Err(GenerateError::Params(ParamError::GirthTooSmall(p.g)));
        }
    } else {
        // Order-independent invariants are usage errors; failing the
        // order-dependent divisibility rules instead *proves* there is
        // nothing to generate at this order.
        ParamTuple { v: None, ..*p }.validate()?;
    }

    let zero = SearchStats {
        completed: true,
        ..SearchStats::default()
    };
    if !(v * p.k).is_multiple_of(2) {
        return Ok(zero);
    }
    if !cfg.regular_mode && !(v as u64 * p.k as u64 * p.lambda).is_multiple_of(2 * p.g as u64) {
        return Ok(zero);
    }
    let seed = match build_seed_tree(p.k, p.g) {
        Ok(seed) => seed,
        // The seed alone outgrows the build limit, so v is below it.
        Err(SeedError::Capacity { .. }) => return Ok(zero),
        Err(SeedError::BadParams { k, g }) => {
            return Err(GenerateError::Params(if k < 3 {
                ParamError::DegreeTooSmall(k)
            } else {
                ParamError::GirthTooSmall(g)
            }))
        }
    };
    if v < seed.tree_order {
        return Ok(zero);
    }

    let mut engine = init_engine(v, p, cfg, &seed, sink);
    let outcome = engine.recurse();
    engine.stats.store_keys = engine.visited.len();
    engine.stats.store_bytes = engine.visited.key_bytes();
    engine.stats.completed = outcome.is_ok();
    match outcome {
        Ok(()) | Err(Stop::OutputCap) => Ok(engine.stats),
        Err(Stop::Capacity(capacity)) => Err(GenerateError::Capacity {
            capacity,
            stats: engine.stats,
        }),
    }
}

fn init_engine<'s, F: FnMut(&Graph)>(
    v: usize,
    p: &ParamTuple,
    cfg: &GenerationConfig,
    seed: &SeedTree,
    sink: &'s mut F,
) -> Engine<'s, F> {
    let graph = seed.padded_graph(v).expect("v within range");
    let mut leaf_set_of = [usize::MAX; MAX_ORDER];
    for (s, &mask) in seed.leaf_sets.iter().enumerate() {
        for leaf in BitIter(mask) {
            leaf_set_of[leaf] = s;
        }
    }
    let mut engine = Engine {
        v,
        k: p.k,
        g: p.g as u64,
        lambda: p.lambda,
        target_edges: v * p.k / 2,
        params: p.with_order(v),
        skip_phase_one: cfg.skip_phase_one || cfg.regular_mode,
        lambda_free: cfg.lambda_unbounded_validity || cfg.regular_mode,
        regular_mode: cfg.regular_mode,
        oracle_verify: cfg.oracle_verify,
        progress: cfg.progress,
        max_outputs: cfg.max_outputs,
        graph,
        edges_stack: seed.edges().to_vec(),
        cnt: vec![0; MAX_ORDER * MAX_ORDER],
        leaf_set_of,
        leaf_sets: seed.leaf_sets.clone(),
        leaves: seed.leaves,
        cross: vec![0; seed.leaf_sets.len()],
        pairs: Vec::new(),
        pairs_at: vec![Vec::new(); v],
        alive_at: vec![0; v],
        dead_stack: Vec::new(),
        cnt_deltas: Vec::new(),
        bfs: (0..MAX_ORDER).map(|_| BfsScratch::new()).collect(),
        epoch: 1,
        visited: VisitedStore::new(cfg.store_bytes),
        stats: SearchStats::default(),
        sink,
    };
    for a in 0..v {
        for b in (a + 1)..v {
            if engine.pair_valid(a, b) {
                let cross = match (engine.leaf_set_of[a], engine.leaf_set_of[b]) {
                    (usize::MAX, _) | (_, usize::MAX) => None,
                    (sa, sb) if sa != sb => Some((sa, sb)),
                    _ => None,
                };
                let idx = engine.pairs.len() as u32;
                engine.pairs.push(Pair {
                    a,
                    b,
                    alive: true,
                    cross,
                });
                engine.pairs_at[a].push(idx);
                engine.pairs_at[b].push(idx);
                engine.alive_at[a] += 1;
                engine.alive_at[b] += 1;
            }
        }
    }
    engine
}

/// Collect outputs into a vector.
pub fn generate_to_vec(
    p: &ParamTuple,
    cfg: &GenerationConfig,
) -> Result<(Vec<Graph>, SearchStats), GenerateError> {
    let mut found = Vec::new();
    let mut sink = |g: &Graph| found.push(g.clone());
    let stats = generate_all(p, cfg, &mut sink)?;
    Ok((found, stats))
}
