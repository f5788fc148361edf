//! Order sweep: find n(k, g, lambda) by generating exhaustively at each
//! feasible order, smallest first, until extremal graphs appear or a cap
//! is reached.

use crate::canon::StoreCapacity;
use crate::check::{egr_lower_bound, feasible_order, ParamError, ParamTuple};
use crate::generate::{generate_to_vec, GenerateError, GenerationConfig};
use crate::graph::{Graph, MAX_ORDER};
use std::time::{Duration, Instant};
use thiserror::Error;

type OrderRun = (
    usize,
    Result<(Vec<Graph>, crate::generate::SearchStats), GenerateError>,
    Duration,
);

#[derive(Debug, Clone)]
pub struct OrderOutcome {
    pub v: usize,
    pub count: usize,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Result of sweeping orders for one (k, g, lambda).
#[derive(Debug)]
pub struct SweepOutcome {
    pub k: usize,
    pub g: u32,
    pub lambda: u64,
    pub tested: Vec<OrderOutcome>,
    /// Smallest order with extremal graphs, with their count.
    pub best_upper: Option<(usize, usize)>,
    /// n(k, g, lambda) is at least this: every feasible smaller order was
    /// exhausted with zero outputs.
    pub proven_lower: usize,
    pub extremal: Vec<Graph>,
    /// Set when the visited store overflowed at some order; results for
    /// that order and beyond are unreliable.
    pub aborted: Option<(usize, StoreCapacity)>,
}

impl SweepOutcome {
    /// n(k, g, lambda) when the sweep settled it exactly.
    pub fn exact(&self) -> Option<(usize, usize)> {
        match (self.aborted.is_none(), self.best_upper) {
            (true, Some((v, count))) if v == self.proven_lower => Some((v, count)),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Generate(GenerateError),
}

/// Feasible orders for the tuple, ascending, starting at the lower bound.
pub fn feasible_orders(p: &ParamTuple, v_max: usize) -> Result<Vec<usize>, ParamError> {
    p.validate()?;
    let start = egr_lower_bound(p.k, p.g, p.lambda)? as usize;
    Ok((start..=v_max).filter(|&v| feasible_order(v, p)).collect())
}

/// Sweep orders up to `v_max`. Orders are independent searches, so up to
/// `jobs` of them run concurrently; outcomes are still consumed smallest
/// first, and the sweep stops at the first order with graphs.
pub fn sweep(
    p: &ParamTuple,
    v_max: usize,
    cfg: &GenerationConfig,
    jobs: usize,
) -> Result<SweepOutcome, SweepError> {
    let orders = feasible_orders(p, v_max.min(MAX_ORDER))?;
    // Orders below the first feasible one are excluded arithmetically, so
    // the smallest feasible order is already a proven lower bound.
    let start = egr_lower_bound(p.k, p.g, p.lambda)? as usize;
    let mut outcome = SweepOutcome {
        k: p.k,
        g: p.g,
        lambda: p.lambda,
        tested: Vec::new(),
        best_upper: None,
        proven_lower: next_feasible(p, start.saturating_sub(1)),
        extremal: Vec::new(),
        aborted: None,
    };

    let jobs = jobs.max(1);
    let mut done = false;
    for batch in orders.chunks(jobs) {
        if done {
            break;
        }
        let results: Vec<OrderRun> =
            if batch.len() == 1 {
                let v = batch[0];
                let start = Instant::now();
                let r = generate_to_vec(&p.with_order(v), cfg);
                vec![(v, r, start.elapsed())]
            } else {
                std::thread::scope(|scope| {
                    let handles: Vec<_> = batch
                        .iter()
                        .map(|&v| {
                            let tuple = p.with_order(v);
                            let cfg = cfg.clone();
                            scope.spawn(move || {
                                let start = Instant::now();
                                let r = generate_to_vec(&tuple, &cfg);
                                (v, r, start.elapsed())
                            })
                        })
                        .collect();
                    handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
                })
            };

        for (v, result, elapsed) in results {
            if done {
                break;
            }
            match result {
                Ok((graphs, stats)) => {
                    if cfg.progress {
                        eprintln!(
                            "  order {v}: {} graph(s), {} nodes, {} classes, {:.2?}",
                            graphs.len(),
                            stats.nodes,
                            stats.store_keys,
                            elapsed
                        );
                    }
                    outcome.tested.push(OrderOutcome {
                        v,
                        count: graphs.len(),
                        nodes: stats.nodes,
                        elapsed,
                    });
                    if graphs.is_empty() {
                        // Exhausted with zero outputs: the next feasible
                        // order becomes the proven lower bound.
                        outcome.proven_lower = next_feasible(p, v);
                    } else {
                        // Every feasible order below v was exhausted, so
                        // the bound has already advanced to v.
                        debug_assert_eq!(outcome.proven_lower, v);
                        outcome.best_upper = Some((v, graphs.len()));
                        outcome.extremal = graphs;
                        done = true;
                    }
                }
                Err(GenerateError::Capacity { capacity, stats }) => {
                    if cfg.progress {
                        eprintln!("  order {v}: aborted after {} nodes: {capacity}", stats.nodes);
                    }
                    outcome.aborted = Some((v, capacity));
                    done = true;
                }
                Err(other) => return Err(SweepError::Generate(other)),
            }
        }
    }
    Ok(outcome)
}

fn next_feasible(p: &ParamTuple, after: usize) -> usize {
    (after + 1..)
        .find(|&v| feasible_order(v, p))
        .expect("feasible orders are unbounded")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::fixtures;

    #[test]
    fn petersen_sweep() {
        let p = ParamTuple::without_order(3, 5, 4);
        let outcome = sweep(&p, 12, &GenerationConfig::default(), 1).unwrap();
        assert_eq!(outcome.exact(), Some((10, 1)));
        assert_eq!(outcome.proven_lower, 10);
        assert_eq!(
            canonical_key(&outcome.extremal[0]),
            canonical_key(&fixtures::petersen())
        );
    }

    #[test]
    fn cube_sweep() {
        let p = ParamTuple::without_order(3, 4, 2);
        let outcome = sweep(&p, 10, &GenerationConfig::default(), 1).unwrap();
        assert_eq!(outcome.exact(), Some((8, 1)));
        assert_eq!(
            canonical_key(&outcome.extremal[0]),
            canonical_key(&fixtures::cube())
        );
    }

    #[test]
    fn lower_bound_only_when_capped() {
        // (3,5,2) has 20 as its only feasible order up to 19, so a cap of
        // 19 yields an empty sweep with the bound intact.
        let p = ParamTuple::without_order(3, 5, 2);
        let outcome = sweep(&p, 19, &GenerationConfig::default(), 1).unwrap();
        assert_eq!(outcome.best_upper, None);
        assert_eq!(outcome.exact(), None);
        assert!(outcome.tested.is_empty());
        // Orders 12..=19 all fail the 2g | vkl rule, so 20 is proven.
        assert_eq!(outcome.proven_lower, 20);
    }

    #[test]
    fn feasible_order_lists() {
        let p = ParamTuple::without_order(3, 5, 4);
        assert_eq!(feasible_orders(&p, 25).unwrap(), vec![10, 20]);
        let p = ParamTuple::without_order(4, 3, 1);
        assert_eq!(feasible_orders(&p, 12).unwrap(), vec![9, 12]);
    }

    #[test]
    fn parallel_batches_match_sequential() {
        let p = ParamTuple::without_order(4, 3, 1);
        let seq = sweep(&p, 12, &GenerationConfig::default(), 1).unwrap();
        let par = sweep(&p, 12, &GenerationConfig::default(), 2).unwrap();
        assert_eq!(seq.exact(), par.exact());
        assert_eq!(seq.exact(), Some((9, 1)));
        assert_eq!(
            canonical_key(&seq.extremal[0]),
            canonical_key(&fixtures::rook_3x3())
        );
    }
}
