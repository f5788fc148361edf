//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, backed by
//! one adjacency bitset word per vertex.

use thiserror::Error;

/// Hard upper bound on the number of vertices. One `u64` word per
/// adjacency row keeps edge tests and neighborhood scans branch-free.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} out of range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
}

/// An undirected edge with endpoints normalized so that `u < w`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    w: usize,
}

impl Edge {
    /// Normalizing constructor. Panics on a loop; loops are a caller bug,
    /// not a data condition.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "loop edge {a}-{a}");
        Edge {
            u: a.min(b),
            w: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn w(&self) -> usize {
        self.w
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.u, self.w)
    }
}

/// Simple graph: no loops, no parallel edges, vertex ids `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(Edge::new(a, b))?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline(always)]
    pub fn degree(&self, u: usize) -> usize {
        debug_assert!(u < self.n);
        self.adj[u].count_ones() as usize
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        debug_assert!(u < self.n && w < self.n);
        self.adj[u] & (1u64 << w) != 0
    }

    /// Neighbor set of `u` as a bitset word.
    #[inline(always)]
    pub fn neighbors_mask(&self, u: usize) -> u64 {
        debug_assert!(u < self.n);
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> BitIter {
        BitIter(self.neighbors_mask(u))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges in ascending `(u, w)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let higher = self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            for w in BitIter(higher) {
                out.push(Edge { u, w });
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.w)?;
        if self.has_edge(e.u, e.w) {
            return Err(GraphError::DuplicateEdge(e.u, e.w));
        }
        self.adj[e.u] |= 1u64 << e.w;
        self.adj[e.w] |= 1u64 << e.u;
        self.debug_check();
        Ok(())
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.w)?;
        if !self.has_edge(e.u, e.w) {
            return Err(GraphError::MissingEdge(e.u, e.w));
        }
        self.adj[e.u] &= !(1u64 << e.w);
        self.adj[e.w] &= !(1u64 << e.u);
        self.debug_check();
        Ok(())
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        let full: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut reached = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for u in BitIter(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached == full
    }

    /// Relabel vertices: vertex `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.n {
            for w in self.neighbors(u) {
                g.adj[perm[u]] |= 1u64 << perm[w];
            }
        }
        g.debug_check();
        g
    }

    #[inline]
    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            let mask: u64 = if self.n == 64 {
                u64::MAX
            } else {
                (1u64 << self.n) - 1
            };
            for u in 0..self.n {
                debug_assert_eq!(self.adj[u] & !mask, 0, "adjacency bit beyond order");
                debug_assert_eq!(self.adj[u] >> u & 1, 0, "loop at {u}");
                for w in BitIter(self.adj[u]) {
                    debug_assert!(self.adj[w] >> u & 1 == 1, "asymmetric edge {u}-{w}");
                }
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over the set bits of a word, ascending.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline(always)]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

// ---------------------------------------------------------------------------
// graph6 (McKay's format): header N(n), then the upper triangle column-major,
// six bits per byte, each byte offset by 63.
// ---------------------------------------------------------------------------

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input line")]
    Empty,
    #[error("byte {offset}: value {byte} outside graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated order header")]
    TruncatedHeader { offset: usize },
    #[error("order {0} unsupported (this build handles 1..={MAX_ORDER})")]
    UnsupportedOrder(u64),
    #[error("payload too short: expected {expected} payload bytes, found {found}")]
    ShortPayload { expected: usize, found: usize },
    #[error("trailing data after byte {offset}")]
    TrailingData { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    NonzeroPadding { offset: usize },
}

/// Parse one graph6 line. The optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let bytes = line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let check = |off: usize| -> Result<u8, Graph6Error> {
        let b = *bytes.get(off).ok_or(Graph6Error::TruncatedHeader { offset: off })?;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { offset: off, byte: b });
        }
        Ok(b)
    };

    // Order header: one byte for n <= 62, '~' + 3 bytes, or '~~' + 6 bytes.
    let (order, mut off): (u64, usize) = if check(0)? != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else if check(1)? != 126 {
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | (check(i)? - 63) as u64;
        }
        (n, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | (check(i)? - 63) as u64;
        }
        (n, 8)
    };
    if order == 0 || order > MAX_ORDER as u64 {
        return Err(Graph6Error::UnsupportedOrder(order));
    }
    let n = order as usize;

    let nbits = n * (n - 1) / 2;
    let npayload = nbits.div_ceil(6);
    let found = bytes.len() - off;
    if found < npayload {
        return Err(Graph6Error::ShortPayload {
            expected: npayload,
            found,
        });
    }
    if found > npayload {
        return Err(Graph6Error::TrailingData {
            offset: off + npayload,
        });
    }

    let mut g = Graph::empty(n).expect("order validated");
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = check(off + bit / 6)? - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.adj[row] |= 1u64 << col;
                g.adj[col] |= 1u64 << row;
            }
            bit += 1;
        }
    }
    // Padding bits of the final byte must be zero.
    if !nbits.is_multiple_of(6) {
        let last = check(off + npayload - 1)? - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: off + npayload - 1,
            });
        }
    }
    off += npayload;
    debug_assert_eq!(off, bytes.len());
    g.debug_check();
    Ok(g)
}

/// Serialize to a canonical-padding graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | g.has_edge(row, col) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

// ---------------------------------------------------------------------------
// LCF notation: Hamiltonian rim plus one chord per vertex, jumps repeating.
// ---------------------------------------------------------------------------

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LcfError {
    #[error("empty jump list")]
    EmptyJumps,
    #[error("order {0} out of range 3..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex}: jump {jump} produces a loop or an edge parallel to the rim")]
    DegenerateJump { vertex: usize, jump: i64 },
    #[error("vertex {vertex}: chord to {target} is not reciprocated (jump there is {theirs})")]
    Unreciprocated {
        vertex: usize,
        target: usize,
        theirs: i64,
    },
}

/// Build the cubic Hamiltonian graph described by `jumps` repeated
/// `repetitions` times: rim cycle `0-1-...-n-1-0` plus the chord
/// `i -> (i + jumps[i mod m]) mod n` for every vertex. Every chord must be
/// announced by both endpoints (jump `j` there, `-j mod n` back), otherwise
/// some vertex would exceed degree 3.
pub fn from_lcf(jumps: &[i64], repetitions: usize) -> Result<Graph, LcfError> {
    if jumps.is_empty() || repetitions == 0 {
        return Err(LcfError::EmptyJumps);
    }
    let m = jumps.len();
    let n = m * repetitions;
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(LcfError::OrderOutOfRange(n));
    }
    let jump_at = |i: usize| jumps[i % m];
    let target = |i: usize| (i as i64 + jump_at(i)).rem_euclid(n as i64) as usize;

    let mut g = Graph::empty(n).expect("order validated");
    for i in 0..n {
        g.add_edge(Edge::new(i, (i + 1) % n)).expect("rim edge");
    }
    for i in 0..n {
        let t = target(i);
        if t == i || t == (i + 1) % n || t == (i + n - 1) % n {
            return Err(LcfError::DegenerateJump {
                vertex: i,
                jump: jump_at(i),
            });
        }
        if target(t) != i {
            return Err(LcfError::Unreciprocated {
                vertex: i,
                target: t,
                theirs: jump_at(t),
            });
        }
        if i < t {
            g.add_edge(Edge::new(i, t)).map_err(|_| LcfError::DegenerateJump {
                vertex: i,
                jump: jump_at(i),
            })?;
        }
    }
    debug_assert_eq!(g.regular_degree(), Some(3));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn add_edge_to_empty_pair() {
        let mut g = Graph::empty(2).unwrap();
        g.add_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn add_edge_completes_k4() {
        let mut g = k4();
        g.remove_edge(Edge::new(0, 1)).unwrap();
        g.add_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(g, k4());
        assert!(g.vertices().all(|u| g.degree(u) == 3));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let mut g = Graph::empty(3).unwrap();
        g.add_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(
            g.add_edge(Edge::new(1, 0)),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        let mut g = Graph::empty(3).unwrap();
        assert!(matches!(
            g.add_edge(Edge::new(0, 3)),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn remove_edge_from_triangle() {
        let mut g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        g.remove_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(g.edges(), vec![Edge::new(0, 2), Edge::new(1, 2)]);
        assert_eq!(
            g.remove_edge(Edge::new(0, 1)),
            Err(GraphError::MissingEdge(0, 1))
        );
    }

    #[test]
    fn remove_then_add_is_identity() {
        let mut g = k4();
        let orig = g.clone();
        g.remove_edge(Edge::new(1, 3)).unwrap();
        g.add_edge(Edge::new(3, 1)).unwrap();
        assert_eq!(g, orig);
    }

    #[test]
    fn connectivity() {
        assert!(k4().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = k4();
        let sum: usize = g.vertices().map(|u| g.degree(u)).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn graph6_k4() {
        // n=4 -> 'C'; six 1-bits -> '~'.
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g, k4());
        assert_eq!(write_graph6(&k4()), "C~");
    }

    #[test]
    fn graph6_empty_on_five() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(write_graph6(&g), "D??");
    }

    #[test]
    fn graph6_header_prefix_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), k4());
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::ShortPayload {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("C~~"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        // n=3 uses 3 bits; the low 3 padding bits must stay zero. '@'=0b000001.
        assert_eq!(
            parse_graph6("B@"),
            Err(Graph6Error::NonzeroPadding { offset: 1 })
        );
        assert!(matches!(
            parse_graph6("B\x1f"),
            Err(Graph6Error::ByteOutOfRange { offset: 1, byte: 0x1f })
        ));
    }

    #[test]
    fn graph6_long_form_header() {
        // n=63 written in the '~' + 3 byte form.
        let g = Graph::empty(63).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        let h = parse_graph6(&s).unwrap();
        assert_eq!(h.order(), 63);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn lcf_moebius_kantor() {
        let g = from_lcf(&[5, -5], 8).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_connected());
    }

    #[test]
    fn lcf_unreciprocated_rejected() {
        // Vertex 0 announces a chord to 2, but vertex 2 points at 4.
        assert_eq!(
            from_lcf(&[2, -2], 3),
            Err(LcfError::Unreciprocated {
                vertex: 0,
                target: 2,
                theirs: 2
            })
        );
    }

    #[test]
    fn lcf_rim_parallel_rejected() {
        assert!(matches!(
            from_lcf(&[1, -1], 3),
            Err(LcfError::DegenerateJump { .. })
        ));
    }

    mod roundtrip {
        use super::super::*;
        use proptest::prelude::*;

        fn arbitrary_graph() -> impl Strategy<Value = Graph> {
            (1usize..=30, proptest::collection::vec(any::<bool>(), 435)).prop_map(|(n, bits)| {
                let mut g = Graph::empty(n).unwrap();
                let mut idx = 0;
                for u in 0..n {
                    for w in (u + 1)..n {
                        if bits[idx] {
                            g.add_edge(Edge::new(u, w)).unwrap();
                        }
                        idx += 1;
                    }
                }
                g
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn graph6_roundtrip(g in arbitrary_graph()) {
                let line = write_graph6(&g);
                prop_assert_eq!(parse_graph6(&line).unwrap(), g);
            }
        }
    }
}
