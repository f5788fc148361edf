//! Moore-tree seeds. Every k-regular graph of girth g contains, around any
//! vertex (odd g) or edge (even g), a tree in which each internal vertex
//! has degree k and all leaves sit at the same depth; the generator
//! therefore starts from that tree instead of the empty graph.

use crate::check::moore_bound;
use crate::graph::{Edge, Graph, GraphError, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeedError {
    #[error("parameters must satisfy k, g >= 3 (got k={k}, g={g})")]
    BadParams { k: usize, g: u32 },
    #[error("seed tree needs {needed} vertices, above the {MAX_ORDER}-vertex cap")]
    Capacity { needed: u64 },
}

/// The seed tree plus its leaf structure. Vertex ids are assigned level by
/// level: the root is 0 (roots 0 and 1 for even g), then children in
/// parent order.
#[derive(Debug, Clone)]
pub struct SeedTree {
    edges: Vec<Edge>,
    /// One bitmask per leaf set: subtree of each root child for odd g, the
    /// two sides for even g.
    pub leaf_sets: Vec<u64>,
    pub tree_order: usize,
    /// Union of all leaf sets.
    pub leaves: u64,
}

impl SeedTree {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The tree embedded in an order-`v` graph, remaining vertices isolated.
    pub fn padded_graph(&self, v: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(v)?;
        for &e in &self.edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }
}

pub fn build_seed_tree(k: usize, g: u32) -> Result<SeedTree, SeedError> {
    if k < 3 || g < 3 {
        return Err(SeedError::BadParams { k, g });
    }
    let needed = moore_bound(k, g);
    if needed > MAX_ORDER as u64 {
        return Err(SeedError::Capacity { needed });
    }

    let mut edges = Vec::new();
    let mut next_id = 0usize;
    // Frontier of (vertex, leaf-set index) pairs awaiting children.
    let mut frontier: Vec<(usize, usize)> = Vec::new();
    let depth;
    let num_sets;

    if g % 2 == 1 {
        depth = (g - 1) / 2;
        num_sets = k;
        let root = next_id;
        next_id += 1;
        for set in 0..k {
            let child = next_id;
            next_id += 1;
            edges.push(Edge::new(root, child));
            frontier.push((child, set));
        }
    } else {
        depth = g / 2 - 1;
        num_sets = 2;
        let (u1, u2) = (next_id, next_id + 1);
        next_id += 2;
        edges.push(Edge::new(u1, u2));
        for (root, set) in [(u1, 0), (u2, 1)] {
            for _ in 0..k - 1 {
                let child = next_id;
                next_id += 1;
                edges.push(Edge::new(root, child));
                frontier.push((child, set));
            }
        }
    }

    // Levels 2..depth: every internal vertex gains k-1 children.
    for _ in 1..depth {
        let mut next_frontier = Vec::with_capacity(frontier.len() * (k - 1));
        for &(parent, set) in &frontier {
            for _ in 0..k - 1 {
                let child = next_id;
                next_id += 1;
                edges.push(Edge::new(parent, child));
                next_frontier.push((child, set));
            }
        }
        frontier = next_frontier;
    }

    debug_assert_eq!(next_id as u64, needed);
    let mut leaf_sets = vec![0u64; num_sets];
    for &(leaf, set) in &frontier {
        leaf_sets[set] |= 1u64 << leaf;
    }
    Ok(SeedTree {
        edges,
        leaves: leaf_sets.iter().fold(0, |acc, m| acc | m),
        leaf_sets,
        tree_order: next_id,
    })
}
