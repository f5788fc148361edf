//! Canonical forms for isomorph rejection.
//!
//! [`canonical_key`] relabels a graph by individualization-refinement and
//! returns the lexicographically smallest certificate over the backtrack
//! tree: equitable partition refinement (neighbor counts per cell), then
//! branching on the first smallest non-singleton cell. Automorphisms
//! discovered from equal-certificate leaves prune branches that only
//! revisit symmetric labelings, and determined certificate prefixes prune
//! branches that can no longer beat the best leaf.

use crate::graph::{BitIter, Graph, MAX_ORDER};
use std::collections::HashSet;
use thiserror::Error;

const CERT_WORDS: usize = MAX_ORDER * (MAX_ORDER - 1) / 2 / 64 + 1;

/// Packed upper-triangle bits of a labeled graph, MSB-first so that word
/// comparison is lexicographic bit comparison.
#[derive(Clone, PartialEq, Eq)]
struct Cert {
    words: [u64; CERT_WORDS],
}

impl Cert {
    fn new() -> Self {
        Cert {
            words: [0; CERT_WORDS],
        }
    }

    #[inline(always)]
    fn set(&mut self, bit: usize) {
        self.words[bit / 64] |= 1u64 << (63 - bit % 64);
    }

    /// Compare the first `nbits` bits.
    fn cmp_prefix(&self, other: &Cert, nbits: usize) -> std::cmp::Ordering {
        let full = nbits / 64;
        match self.words[..full].cmp(&other.words[..full]) {
            std::cmp::Ordering::Equal => {}
            ord => return ord,
        }
        let rest = nbits % 64;
        if rest == 0 {
            return std::cmp::Ordering::Equal;
        }
        let mask = !0u64 << (64 - rest);
        (self.words[full] & mask).cmp(&(other.words[full] & mask))
    }
}

/// Order-insensitive identity of a graph up to isomorphism: two graphs
/// have equal keys iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalKey({:02x?})", self.0)
    }
}

struct Searcher<'g> {
    graph: &'g Graph,
    n: usize,
    nbits: usize,
    best: Option<Cert>,
    best_labels: [u8; MAX_ORDER],
    first: Option<Cert>,
    first_labels: [u8; MAX_ORDER],
    /// Automorphism generators found from equal-certificate leaves.
    autos: Vec<[u8; MAX_ORDER]>,
    /// Vertices individualized along the current path.
    prefix: Vec<usize>,
}

impl<'g> Searcher<'g> {
    /// Split every cell by neighbor counts into `splitter` until the
    /// partition is equitable. Fragments are ordered by count, so the cell
    /// order is isomorphism-invariant.
    fn refine(&self, cells: &mut Vec<u64>, initial_work: Vec<u64>) {
        let mut work: std::collections::VecDeque<u64> = initial_work.into();
        while let Some(splitter) = work.pop_front() {
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() <= 1 {
                    i += 1;
                    continue;
                }
                let mut buckets = [0u64; MAX_ORDER + 1];
                let mut seen = 0u64;
                for v in BitIter(cell) {
                    let c = (self.graph.neighbors_mask(v) & splitter).count_ones() as usize;
                    buckets[c] |= 1u64 << v;
                    seen |= 1u64 << c;
                }
                if seen.count_ones() <= 1 {
                    i += 1;
                    continue;
                }
                let fragments: Vec<u64> = BitIter(seen).map(|c| buckets[c]).collect();
                let extra = fragments.len() - 1;
                cells.splice(i..=i, fragments.iter().copied());
                for &f in &fragments {
                    work.push_back(f);
                }
                i += 1 + extra;
            }
        }
    }

    /// Number of leading singleton cells; their vertices hold the final
    /// labels `0..p` no matter how the rest of the tree unfolds.
    fn fixed_prefix(cells: &[u64]) -> usize {
        cells.iter().take_while(|c| c.count_ones() == 1).count()
    }

    fn record_automorphism(&mut self, reference: &[u8; MAX_ORDER], labels: &[u8; MAX_ORDER]) {
        if self.autos.len() >= 64 {
            return;
        }
        let mut inv_ref = [0u8; MAX_ORDER];
        for v in 0..self.n {
            inv_ref[reference[v] as usize] = v as u8;
        }
        let mut sigma = [0u8; MAX_ORDER];
        for v in 0..self.n {
            sigma[v] = inv_ref[labels[v] as usize];
        }
        if sigma[..self.n].iter().enumerate().all(|(v, &s)| s as usize == v) {
            return;
        }
        self.autos.push(sigma);
    }

    fn cert_of(&self, labels: &[u8; MAX_ORDER]) -> Cert {
        // labels[v] = position; invert, then emit column-major triangle bits.
        let mut at = [0usize; MAX_ORDER];
        for v in 0..self.n {
            at[labels[v] as usize] = v;
        }
        let mut cert = Cert::new();
        let mut bit = 0;
        for col in 1..self.n {
            let col_mask = self.graph.neighbors_mask(at[col]);
            for &row_vertex in &at[..col] {
                if col_mask >> row_vertex & 1 == 1 {
                    cert.set(bit);
                }
                bit += 1;
            }
        }
        cert
    }

    /// Certificate bits determined by the first `p` fixed labels.
    fn partial_cert(&self, cells: &[u64], p: usize) -> (Cert, usize) {
        let mut at = [0usize; MAX_ORDER];
        for (pos, cell) in cells.iter().take(p).enumerate() {
            at[pos] = cell.trailing_zeros() as usize;
        }
        let mut cert = Cert::new();
        let mut bit = 0;
        for col in 1..p {
            let col_mask = self.graph.neighbors_mask(at[col]);
            for &row_vertex in &at[..col] {
                if col_mask >> row_vertex & 1 == 1 {
                    cert.set(bit);
                }
                bit += 1;
            }
        }
        (cert, bit)
    }

    fn search(&mut self, cells: Vec<u64>) {
        let p = Self::fixed_prefix(&cells);
        if let Some(best) = &self.best {
            let (partial, bits) = self.partial_cert(&cells, p);
            if partial.cmp_prefix(best, bits) == std::cmp::Ordering::Greater {
                return;
            }
        }
        if p == cells.len() {
            let mut labels = [0u8; MAX_ORDER];
            for (pos, cell) in cells.iter().enumerate() {
                labels[cell.trailing_zeros() as usize] = pos as u8;
            }
            let cert = self.cert_of(&labels);
            if self.first.is_none() {
                self.first = Some(cert.clone());
                self.first_labels = labels;
            } else if Some(std::cmp::Ordering::Equal)
                == self.first.as_ref().map(|f| cert.cmp_prefix(f, self.nbits))
            {
                self.record_automorphism(&self.first_labels.clone(), &labels);
            }
            match &self.best {
                None => {
                    self.best = Some(cert);
                    self.best_labels = labels;
                }
                Some(best) => match cert.cmp_prefix(best, self.nbits) {
                    std::cmp::Ordering::Less => {
                        self.best = Some(cert);
                        self.best_labels = labels;
                    }
                    std::cmp::Ordering::Equal => {
                        self.record_automorphism(&self.best_labels.clone(), &labels);
                    }
                    std::cmp::Ordering::Greater => {}
                },
            }
            return;
        }

        // Branch on the first smallest non-singleton cell.
        let (target_idx, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, c)| (i, *c))
            .expect("non-discrete partition has a splittable cell");
        let mut tried: Vec<usize> = Vec::new();
        for w in BitIter(target) {
            // Twins (identical rows up to the mutual bit) are swappable by
            // an automorphism fixing everything else; one suffices. This
            // collapses isolated vertices and duplicate leaves outright.
            let twin_of_tried = tried.iter().any(|&t| {
                self.graph.neighbors_mask(w) & !(1u64 << t)
                    == self.graph.neighbors_mask(t) & !(1u64 << w)
            });
            let symmetric_to_tried = twin_of_tried
                || self.autos.iter().any(|sigma| {
                    self.prefix.iter().all(|&f| sigma[f] as usize == f)
                        && tried.contains(&(sigma[w] as usize))
                });
            if symmetric_to_tried {
                continue;
            }
            tried.push(w);
            let mut child = cells.clone();
            let rest = target & !(1u64 << w);
            child.splice(target_idx..=target_idx, [1u64 << w, rest]);
            self.prefix.push(w);
            self.refine(&mut child, vec![1u64 << w]);
            self.search(child);
            self.prefix.pop();
        }
    }
}

/// Canonical key of `g`: invariant under relabeling, equal exactly for
/// isomorphic graphs, deterministic across runs.
pub fn canonical_key(g: &Graph) -> CanonicalKey {
    let n = g.order();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut searcher = Searcher {
        graph: g,
        n,
        nbits: n * (n - 1) / 2,
        best: None,
        best_labels: [0; MAX_ORDER],
        first: None,
        first_labels: [0; MAX_ORDER],
        autos: Vec::new(),
        prefix: Vec::new(),
    };
    let mut cells = vec![full];
    searcher.refine(&mut cells, vec![full]);
    searcher.search(cells);
    let best = searcher.best.expect("search visits at least one leaf");

    let mut bytes = Vec::with_capacity(1 + searcher.nbits.div_ceil(8));
    bytes.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for bit in 0..searcher.nbits {
        let b = (best.words[bit / 64] >> (63 - bit % 64) & 1) as u8;
        acc = acc << 1 | b;
        filled += 1;
        if filled == 8 {
            bytes.push(acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    CanonicalKey(bytes)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("visited store exceeded {cap} key bytes ({keys} keys)")]
pub struct StoreCapacity {
    pub cap: usize,
    pub keys: usize,
}

/// Set of canonical keys with a byte budget. Exceeding the budget is an
/// error: silently dropping entries would only cost duplicate work, but
/// aborting keeps run accounting honest.
pub struct VisitedStore {
    keys: HashSet<CanonicalKey>,
    key_bytes: usize,
    byte_cap: usize,
}

/// Default byte budget for stored keys.
pub const DEFAULT_STORE_BYTES: usize = 100_000_000;

impl VisitedStore {
    pub fn new(byte_cap: usize) -> Self {
        VisitedStore {
            keys: HashSet::new(),
            key_bytes: 0,
            byte_cap,
        }
    }

    /// True iff the key was absent; the key is present afterwards.
    pub fn insert_if_new(&mut self, key: CanonicalKey) -> Result<bool, StoreCapacity> {
        if self.keys.contains(&key) {
            return Ok(false);
        }
        if self.key_bytes + key.len() > self.byte_cap {
            return Err(StoreCapacity {
                cap: self.byte_cap,
                keys: self.keys.len(),
            });
        }
        self.key_bytes += key.len();
        self.keys.insert(key);
        Ok(true)
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn key_bytes(&self) -> usize {
        self.key_bytes
    }
}

impl Default for VisitedStore {
    fn default() -> Self {
        VisitedStore::new(DEFAULT_STORE_BYTES)
    }
}
