//! Girth computation and girth-cycle counting.
//!
//! The central routine is [`ngc`]: the number of girth cycles through an
//! edge `u1u2`, obtained from a single truncated BFS on `G - u1u2` that
//! counts shortest paths layer by layer. A cycle of length `g` through the
//! edge is exactly a path of length `g - 1` between its endpoints in the
//! edge-deleted graph, and when `g - 1` is the distance those paths are the
//! shortest paths.

use crate::graph::{BitIter, Edge, Graph, MAX_ORDER};
use thiserror::Error;

const UNSEEN: u32 = u32::MAX;

/// BFS with shortest-path counting, early exit at `target`, optional edge
/// to ignore, and a layer cutoff. Returns `None` when `target` is not
/// reached within `cutoff` layers.
///
/// Counts grow multiplicatively along layers; they are accumulated with
/// checked additions so an overflow aborts instead of corrupting a count.
pub fn distance_and_nsp(
    g: &Graph,
    source: usize,
    target: usize,
    cutoff: u32,
) -> Option<(u32, u64)> {
    bfs_nsp(g, source, target, cutoff, None)
}

pub(crate) fn bfs_nsp(
    g: &Graph,
    source: usize,
    target: usize,
    cutoff: u32,
    skip: Option<Edge>,
) -> Option<(u32, u64)> {
    debug_assert_ne!(source, target);
    let mut dist = [UNSEEN; MAX_ORDER];
    let mut nsp = [0u64; MAX_ORDER];
    dist[source] = 0;
    nsp[source] = 1;
    let mut queue = [0usize; MAX_ORDER];
    let (mut head, mut tail) = (0, 0);
    queue[tail] = source;
    tail += 1;
    while head < tail {
        let current = queue[head];
        head += 1;
        // dist[target] and nsp[target] cannot change once it is dequeued.
        if current == target {
            return Some((dist[current], nsp[current]));
        }
        if dist[current] == cutoff {
            continue;
        }
        let mut mask = g.neighbors_mask(current);
        if let Some(e) = skip {
            if current == e.u() {
                mask &= !(1u64 << e.w());
            } else if current == e.w() {
                mask &= !(1u64 << e.u());
            }
        }
        for next in BitIter(mask) {
            if dist[next] == UNSEEN {
                dist[next] = dist[current] + 1;
                queue[tail] = next;
                tail += 1;
            }
            if dist[next] == dist[current] + 1 {
                nsp[next] = nsp[next]
                    .checked_add(nsp[current])
                    .expect("shortest-path count overflow");
            }
        }
    }
    None
}

/// Length of a shortest cycle, `None` for forests.
///
/// One BFS per start vertex; an edge closing within a layer witnesses an
/// odd cycle `2d+1`, an edge into the next layer a cycle `2d+2`. Later
/// scans stop expanding once the current layer can no longer improve on
/// the best cycle found.
pub fn girth(g: &Graph) -> Option<u32> {
    let mut best = u32::MAX;
    for start in g.vertices() {
        let mut dist = [UNSEEN; MAX_ORDER];
        dist[start] = 0;
        let mut queue = [0usize; MAX_ORDER];
        let (mut head, mut tail) = (0, 0);
        queue[tail] = start;
        tail += 1;
        while head < tail {
            let current = queue[head];
            head += 1;
            let d = dist[current];
            if best != u32::MAX && 2 * d + 1 >= best {
                break;
            }
            for next in g.neighbors(current) {
                if dist[next] == UNSEEN {
                    dist[next] = d + 1;
                    queue[tail] = next;
                    tail += 1;
                } else if dist[next] == d {
                    best = best.min(2 * d + 1);
                } else if dist[next] == d + 1 {
                    best = best.min(2 * d + 2);
                }
            }
        }
    }
    (best != u32::MAX).then_some(best)
}

/// Number of girth cycles containing `e`, given the girth of `g`.
///
/// The caller must pass the true girth; a single BFS on `G - e` with
/// cutoff `girth - 1` then settles the count. An endpoint pair left
/// unreachable (bridge) counts as zero.
pub fn ngc(g: &Graph, girth: u32, e: Edge) -> u64 {
    debug_assert!(g.has_edge(e.u(), e.w()));
    match bfs_nsp(g, e.u(), e.w(), girth - 1, Some(e)) {
        Some((_, count)) => count,
        None => 0,
    }
}

/// Girth plus the girth-cycle count of every edge, in ascending edge order.
/// `None` for forests.
pub fn per_edge_ngc(g: &Graph) -> Option<(u32, Vec<(Edge, u64)>)> {
    let girth = girth(g)?;
    let counts = g.edges().into_iter().map(|e| (e, ngc(g, girth, e))).collect();
    Some((girth, counts))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("order {order} above brute-force limit {limit}")]
    OrderAboveLimit { order: usize, limit: usize },
}

/// Default order cap for the exponential-time oracle.
pub const BRUTE_FORCE_ORDER_LIMIT: usize = 20;

/// Independent oracle for [`ngc`]: enumerate every simple path of length
/// `girth - 1` from `e.u()` to `e.w()` in `G - e` by depth-first search.
/// Exponential time, only for cross-validation on small graphs.
pub fn brute_force_ngc(g: &Graph, girth: u32, e: Edge) -> Result<u64, OracleError> {
    if g.order() > BRUTE_FORCE_ORDER_LIMIT {
        return Err(OracleError::OrderAboveLimit {
            order: g.order(),
            limit: BRUTE_FORCE_ORDER_LIMIT,
        });
    }
    fn walk(g: &Graph, at: usize, target: usize, left: u32, visited: u64, skip: Edge) -> u64 {
        if left == 0 {
            return (at == target) as u64;
        }
        let mut total = 0;
        let mut mask = g.neighbors_mask(at) & !visited;
        if at == skip.u() {
            mask &= !(1u64 << skip.w());
        } else if at == skip.w() {
            mask &= !(1u64 << skip.u());
        }
        for next in BitIter(mask) {
            total += walk(g, next, target, left - 1, visited | 1u64 << next, skip);
        }
        total
    }
    // The target stays unvisited so the path may end there and only there.
    Ok(walk(g, e.u(), e.w(), girth - 1, 1u64 << e.u(), e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn girth_of_petersen_is_five() {
        assert_eq!(girth(&fixtures::petersen()), Some(5));
    }

    #[test]
    fn trees_have_no_girth() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(girth(&star), None);
        assert_eq!(girth(&fixtures::path(4)), None);
    }

    #[test]
    fn girth_of_cycles() {
        assert_eq!(girth(&fixtures::cycle(6)), Some(6));
        assert_eq!(girth(&fixtures::cycle(3)), Some(3));
    }

    #[test]
    fn nsp_in_k23() {
        // Two degree-3 vertices joined by three internally disjoint 2-paths.
        let g = fixtures::complete_bipartite(2, 3);
        assert_eq!(distance_and_nsp(&g, 0, 1, 4), Some((2, 3)));
    }

    #[test]
    fn nsp_antipodal_on_c6() {
        let g = fixtures::cycle(6);
        assert_eq!(distance_and_nsp(&g, 0, 3, 6), Some((3, 2)));
    }

    #[test]
    fn nsp_cutoff_exceeded() {
        let g = fixtures::path(4);
        assert_eq!(distance_and_nsp(&g, 0, 3, 2), None);
        assert_eq!(distance_and_nsp(&g, 0, 3, 3), Some((3, 1)));
    }

    #[test]
    fn ngc_k4_every_edge_in_two_triangles() {
        let g = fixtures::complete(4);
        for e in g.edges() {
            assert_eq!(ngc(&g, 3, e), 2);
        }
    }

    #[test]
    fn ngc_petersen_every_edge_in_four_pentagons() {
        let g = fixtures::petersen();
        for e in g.edges() {
            assert_eq!(ngc(&g, 5, e), 4);
        }
    }

    #[test]
    fn ngc_unique_cycle() {
        let g = fixtures::cycle(7);
        for e in g.edges() {
            assert_eq!(ngc(&g, 7, e), 1);
        }
    }

    #[test]
    fn ngc_bridge_is_zero() {
        // Two triangles joined by a bridge; the bridge lies on no cycle.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
            .unwrap();
        assert_eq!(ngc(&g, 3, Edge::new(2, 3)), 0);
    }

    #[test]
    fn oracle_agrees_on_fixtures() {
        for (g, girth) in [
            (fixtures::complete(4), 3),
            (fixtures::petersen(), 5),
            (fixtures::cycle(7), 7),
        ] {
            for e in g.edges() {
                assert_eq!(ngc(&g, girth, e), brute_force_ngc(&g, girth, e).unwrap());
            }
        }
    }

    #[test]
    fn oracle_heawood_eight_hexagons_per_edge() {
        let g = fixtures::heawood();
        for e in g.edges() {
            assert_eq!(brute_force_ngc(&g, 6, e), Ok(8));
            assert_eq!(ngc(&g, 6, e), 8);
        }
    }

    #[test]
    fn oracle_rejects_large_orders() {
        let g = fixtures::cycle(21);
        assert!(matches!(
            brute_force_ngc(&g, 21, Edge::new(0, 1)),
            Err(OracleError::OrderAboveLimit { order: 21, .. })
        ));
    }

    #[test]
    fn early_exit_matches_uncut_bfs() {
        // A cutoff of girth-1 must give the same counts as a generous one
        // post-filtered by distance.
        let g = fixtures::petersen();
        for e in g.edges() {
            let cut = bfs_nsp(&g, e.u(), e.w(), 4, Some(e));
            let free = bfs_nsp(&g, e.u(), e.w(), 64, Some(e));
            match free {
                Some((d, c)) if d <= 4 => assert_eq!(cut, Some((d, c))),
                _ => assert_eq!(cut, None),
            }
        }
    }

    /// Random graph strategy: order 4..=12, each possible edge present with
    /// probability 1/2, conditioned on being cyclic.
    fn sparse_graph() -> impl Strategy<Value = Graph> {
        (4usize..=12, proptest::collection::vec(any::<bool>(), 66)).prop_map(|(n, bits)| {
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
        #[test]
        fn ngc_matches_brute_force(g in sparse_graph()) {
            if let Some(girth) = girth(&g) {
                for e in g.edges() {
                    prop_assert_eq!(ngc(&g, girth, e), brute_force_ngc(&g, girth, e).unwrap());
                }
            }
        }

        #[test]
        fn girth_cycle_total_divisible_by_girth(g in sparse_graph()) {
            if let Some((girth, counts)) = per_edge_ngc(&g) {
                let total: u64 = counts.iter().map(|(_, c)| c).sum();
                prop_assert_eq!(total % girth as u64, 0);
            }
        }
    }
}
