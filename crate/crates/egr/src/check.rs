//! Feasibility arithmetic and verification of the edge-girth-regular
//! property: a graph is egr(v, k, g, lambda) when it is connected,
//! k-regular, of order v and girth exactly g, and every edge lies on
//! exactly lambda girth cycles.

use crate::girth::{girth, ngc};
use crate::graph::{Edge, Graph};
use thiserror::Error;

/// Search parameters (v, k, g, lambda). `v` is absent for (k, g, lambda)
/// order sweeps.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct ParamTuple {
    pub v: Option<usize>,
    pub k: usize,
    pub g: u32,
    pub lambda: u64,
}

impl ParamTuple {
    pub fn new(v: usize, k: usize, g: u32, lambda: u64) -> Self {
        ParamTuple {
            v: Some(v),
            k,
            g,
            lambda,
        }
    }

    pub fn without_order(k: usize, g: u32, lambda: u64) -> Self {
        ParamTuple {
            v: None,
            k,
            g,
            lambda,
        }
    }

    pub fn with_order(self, v: usize) -> Self {
        ParamTuple {
            v: Some(v),
            ..self
        }
    }

    /// Check the arithmetic existence conditions: degrees and girth at
    /// least 3, k*lambda even, lambda within the parity cap, and (when the
    /// order is present) 2g dividing v*k*lambda.
    pub fn validate(&self) -> Result<(), ParamError> {
        if self.k < 3 {
            return Err(ParamError::DegreeTooSmall(self.k));
        }
        if self.g < 3 {
            return Err(ParamError::GirthTooSmall(self.g));
        }
        if self.lambda == 0 {
            return Err(ParamError::LambdaZero);
        }
        let cap = lambda_cap(self.k, self.g);
        if self.lambda > cap {
            return Err(ParamError::LambdaAboveCap {
                lambda: self.lambda,
                cap,
            });
        }
        if !(self.k as u64 * self.lambda).is_multiple_of(2) {
            return Err(ParamError::OddEdgeCycleProduct {
                k: self.k,
                lambda: self.lambda,
            });
        }
        if let Some(v) = self.v {
            if !(v as u64 * self.k as u64).is_multiple_of(2) {
                return Err(ParamError::OddDegreeSum { v, k: self.k });
            }
            if !(v as u64 * self.k as u64 * self.lambda).is_multiple_of(2 * self.g as u64) {
                return Err(ParamError::CycleCountNotIntegral {
                    v,
                    k: self.k,
                    g: self.g,
                    lambda: self.lambda,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("degree k={0} must be at least 3")]
    DegreeTooSmall(usize),
    #[error("girth g={0} must be at least 3")]
    GirthTooSmall(u32),
    #[error("lambda must be positive")]
    LambdaZero,
    #[error("lambda={lambda} exceeds the parity cap (k-1)^floor(g/2) = {cap}")]
    LambdaAboveCap { lambda: u64, cap: u64 },
    #[error("k*lambda = {k}*{lambda} must be even")]
    OddEdgeCycleProduct { k: usize, lambda: u64 },
    #[error("v*k = {v}*{k} must be even")]
    OddDegreeSum { v: usize, k: usize },
    #[error("2g = {} must divide v*k*lambda = {}", 2 * g, *v as u64 * *k as u64 * lambda)]
    CycleCountNotIntegral {
        v: usize,
        k: usize,
        g: u32,
        lambda: u64,
    },
}

/// Largest admissible lambda: (k-1)^(g/2) for even g, (k-1)^((g-1)/2)
/// for odd g.
pub fn lambda_cap(k: usize, g: u32) -> u64 {
    (k as u64 - 1).pow(g / 2)
}

/// Moore bound M(k, g), the classical minimum order of a k-regular graph
/// of girth g.
pub fn moore_bound(k: usize, g: u32) -> u64 {
    assert!(k >= 3 && g >= 3, "Moore bound needs k, g >= 3");
    let k = k as u64;
    if g % 2 == 1 {
        // 1 + k + k(k-1) + ... + k(k-1)^((g-3)/2)
        let mut total = 1;
        let mut layer = k;
        for _ in 0..(g - 1) / 2 {
            total += layer;
            layer *= k - 1;
        }
        total
    } else {
        // 2(1 + (k-1) + ... + (k-1)^((g-2)/2))
        let mut total = 0;
        let mut layer = 1;
        for _ in 0..g / 2 {
            total += layer;
            layer *= k - 1;
        }
        2 * total
    }
}

/// Lower bound on the order of an egr(v, k, g, lambda) graph:
/// M + (k-1)^((g-1)/2) - lambda for odd g,
/// M + ceil(2((k-1)^(g/2) - lambda) / k) for even g.
pub fn egr_lower_bound(k: usize, g: u32, lambda: u64) -> Result<u64, ParamError> {
    let cap = lambda_cap(k, g);
    if lambda == 0 {
        return Err(ParamError::LambdaZero);
    }
    if lambda > cap {
        return Err(ParamError::LambdaAboveCap { lambda, cap });
    }
    let m = moore_bound(k, g);
    Ok(if g % 2 == 1 {
        m + (cap - lambda)
    } else {
        m + (2 * (cap - lambda)).div_ceil(k as u64)
    })
}

/// Order-sweep skip rule: `v` is worth generating at iff v*k is even,
/// 2g divides v*k*lambda, and v is not below the lower bound.
pub fn feasible_order(v: usize, p: &ParamTuple) -> bool {
    let (k, g, lambda) = (p.k as u64, p.g as u64, p.lambda);
    let v = v as u64;
    (v * k).is_multiple_of(2)
        && (v * k * lambda).is_multiple_of(2 * g)
        && v >= egr_lower_bound(p.k, p.g, p.lambda).unwrap_or(u64::MAX)
}

/// Per-edge girth-cycle census: either every edge has the same count, or a
/// witness pair of edges with differing counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaProfile {
    Uniform(u64),
    NonUniform {
        low_edge: Edge,
        low: u64,
        high_edge: Edge,
        high: u64,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("graph is acyclic; girth (and the profile) is undefined")]
    Acyclic,
}

/// Girth plus the lambda profile. Scans edges in order and stops at the
/// first mismatch; the generator calls this on hot paths.
pub fn lambda_profile(g: &Graph) -> Result<(u32, LambdaProfile), ProfileError> {
    let girth_val = girth(g).ok_or(ProfileError::Acyclic)?;
    let edges = g.edges();
    let first = edges[0];
    let expect = ngc(g, girth_val, first);
    for &e in &edges[1..] {
        let count = ngc(g, girth_val, e);
        if count != expect {
            let (low_edge, low, high_edge, high) = if count < expect {
                (e, count, first, expect)
            } else {
                (first, expect, e, count)
            };
            return Ok((
                girth_val,
                LambdaProfile::NonUniform {
                    low_edge,
                    low,
                    high_edge,
                    high,
                },
            ));
        }
    }
    Ok((girth_val, LambdaProfile::Uniform(expect)))
}

/// Why a graph fails to be egr for a parameter tuple.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EgrViolation {
    #[error("parameters infeasible: {0}")]
    Params(#[from] ParamError),
    #[error("order is {got}, expected {want}")]
    WrongOrder { got: usize, want: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {vertex} has degree {degree}, expected {want}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        want: usize,
    },
    #[error("girth is {got:?}, expected {want}")]
    WrongGirth { got: Option<u32>, want: u32 },
    #[error("edge {low_edge} lies on {low} girth cycles but edge {high_edge} on {high}")]
    NonUniform {
        low_edge: Edge,
        low: u64,
        high_edge: Edge,
        high: u64,
    },
    #[error("every edge lies on {got} girth cycles, expected {want}")]
    WrongLambda { got: u64, want: u64 },
}

/// Full verification with a witness on failure. Parameter arithmetic is
/// rejected before the graph is inspected.
pub fn verify_egr(graph: &Graph, p: &ParamTuple) -> Result<(), EgrViolation> {
    let v = p.v.expect("verification needs an order");
    p.validate()?;
    if graph.order() != v {
        return Err(EgrViolation::WrongOrder {
            got: graph.order(),
            want: v,
        });
    }
    for u in graph.vertices() {
        if graph.degree(u) != p.k {
            return Err(EgrViolation::NotRegular {
                vertex: u,
                degree: graph.degree(u),
                want: p.k,
            });
        }
    }
    if !graph.is_connected() {
        return Err(EgrViolation::NotConnected);
    }
    let (girth_val, profile) = lambda_profile(graph).map_err(|_| EgrViolation::WrongGirth {
        got: None,
        want: p.g,
    })?;
    if girth_val != p.g {
        return Err(EgrViolation::WrongGirth {
            got: Some(girth_val),
            want: p.g,
        });
    }
    match profile {
        LambdaProfile::Uniform(l) if l == p.lambda => Ok(()),
        LambdaProfile::Uniform(l) => Err(EgrViolation::WrongLambda {
            got: l,
            want: p.lambda,
        }),
        LambdaProfile::NonUniform {
            low_edge,
            low,
            high_edge,
            high,
        } => Err(EgrViolation::NonUniform {
            low_edge,
            low,
            high_edge,
            high,
        }),
    }
}

pub fn is_egr(graph: &Graph, p: &ParamTuple) -> bool {
    verify_egr(graph, p).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Graph;

    #[test]
    fn moore_values() {
        assert_eq!(moore_bound(3, 5), 10);
        assert_eq!(moore_bound(3, 6), 14);
        assert_eq!(moore_bound(4, 5), 17);
        assert_eq!(moore_bound(3, 3), 4);
        assert_eq!(moore_bound(6, 3), 7);
        assert_eq!(moore_bound(4, 4), 8);
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(egr_lower_bound(3, 6, 6), Ok(16));
        assert_eq!(egr_lower_bound(3, 6, 8), Ok(14));
        assert_eq!(egr_lower_bound(3, 5, 2), Ok(12));
        assert!(matches!(
            egr_lower_bound(3, 5, 5),
            Err(ParamError::LambdaAboveCap { cap: 4, .. })
        ));
    }

    #[test]
    fn lower_bound_meets_moore_only_at_cap() {
        for (k, g) in [(3, 5), (3, 6), (4, 4), (4, 5), (5, 4), (6, 3)] {
            let cap = lambda_cap(k, g);
            for lambda in 1..=cap {
                let lb = egr_lower_bound(k, g, lambda).unwrap();
                assert!(lb >= moore_bound(k, g));
                assert_eq!(lb == moore_bound(k, g), lambda == cap, "(k,g,l)=({k},{g},{lambda})");
            }
        }
    }

    #[test]
    fn feasibility_examples() {
        assert!(!feasible_order(7, &ParamTuple::without_order(3, 4, 2)));
        assert!(feasible_order(10, &ParamTuple::without_order(3, 5, 4)));
        assert!(feasible_order(16, &ParamTuple::without_order(3, 6, 6)));
        assert!(!feasible_order(15, &ParamTuple::without_order(3, 6, 6)));
        // 2g = 10 requires 5 | v for (3,5,2); within the bound only 20 works.
        let p = ParamTuple::without_order(3, 5, 2);
        let feasible: Vec<usize> = (1..=20).filter(|&v| feasible_order(v, &p)).collect();
        assert_eq!(feasible, vec![20]);
    }

    #[test]
    fn profile_of_petersen() {
        let (g, profile) = lambda_profile(&fixtures::petersen()).unwrap();
        assert_eq!(g, 5);
        assert_eq!(profile, LambdaProfile::Uniform(4));
    }

    #[test]
    fn profile_of_heawood() {
        let (g, profile) = lambda_profile(&fixtures::heawood()).unwrap();
        assert_eq!(g, 6);
        assert_eq!(profile, LambdaProfile::Uniform(8));
    }

    #[test]
    fn profile_of_subdivided_k4_is_nonuniform() {
        // K4 with edge 0-1 subdivided through vertex 4: edge 2-3 stays on
        // two triangles, the others on fewer.
        let g = Graph::from_edges(
            5,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)],
        )
        .unwrap();
        let (girth_val, profile) = lambda_profile(&g).unwrap();
        assert_eq!(girth_val, 3);
        assert!(matches!(profile, LambdaProfile::NonUniform { .. }));
    }

    #[test]
    fn profile_of_tree_is_error() {
        assert_eq!(
            lambda_profile(&fixtures::path(4)),
            Err(ProfileError::Acyclic)
        );
    }

    #[test]
    fn egr_verdicts() {
        assert!(is_egr(&fixtures::petersen(), &ParamTuple::new(10, 3, 5, 4)));
        assert!(!is_egr(&fixtures::petersen(), &ParamTuple::new(10, 3, 5, 3)));
        assert!(is_egr(
            &fixtures::complete_bipartite(3, 3),
            &ParamTuple::new(6, 3, 4, 4)
        ));
        assert!(is_egr(&fixtures::heawood(), &ParamTuple::new(14, 3, 6, 8)));
        assert!(is_egr(&fixtures::pappus(), &ParamTuple::new(18, 3, 6, 4)));
        assert!(is_egr(
            &fixtures::moebius_kantor(),
            &ParamTuple::new(16, 3, 6, 6)
        ));
        assert!(is_egr(
            &fixtures::dodecahedron(),
            &ParamTuple::new(20, 3, 5, 2)
        ));
        assert!(is_egr(&fixtures::rook_3x3(), &ParamTuple::new(9, 4, 3, 1)));
        assert!(is_egr(&fixtures::kneser_2(6), &ParamTuple::new(15, 6, 3, 1)));
        assert!(is_egr(&fixtures::crown(5), &ParamTuple::new(10, 4, 4, 6)));
        assert!(is_egr(&fixtures::crown(6), &ParamTuple::new(12, 5, 4, 12)));
        assert!(is_egr(
            &fixtures::complete_bipartite(6, 6),
            &ParamTuple::new(12, 6, 4, 25)
        ));
    }

    #[test]
    fn disconnected_rejected_by_connectivity() {
        let mut g = Graph::empty(8).unwrap();
        for base in [0, 4] {
            for u in 0..4 {
                for w in (u + 1)..4 {
                    g.add_edge(crate::graph::Edge::new(base + u, base + w)).unwrap();
                }
            }
        }
        assert_eq!(
            verify_egr(&g, &ParamTuple::new(8, 3, 3, 2)),
            Err(EgrViolation::NotConnected)
        );
    }

    #[test]
    fn fixture_graphs_pass_the_sweep_skip_rule() {
        // The order sweep may only skip orders that cannot host an egr
        // graph, so every known extremal graph must count as feasible.
        let fixtures: [(usize, usize, u32, u64); 10] = [
            (4, 3, 3, 2),
            (8, 3, 4, 2),
            (6, 3, 4, 4),
            (10, 3, 5, 4),
            (20, 3, 5, 2),
            (14, 3, 6, 8),
            (16, 3, 6, 6),
            (18, 3, 6, 4),
            (9, 4, 3, 1),
            (12, 6, 4, 25),
        ];
        for (v, k, g, lambda) in fixtures {
            assert!(
                feasible_order(v, &ParamTuple::without_order(k, g, lambda)),
                "({v},{k},{g},{lambda})"
            );
        }
    }

    #[test]
    fn param_rejection_without_graph_inspection() {
        // k*lambda odd fails before anything else.
        assert!(matches!(
            verify_egr(&fixtures::petersen(), &ParamTuple::new(10, 3, 5, 3)),
            Err(EgrViolation::Params(ParamError::OddEdgeCycleProduct { .. }))
        ));
    }

    #[test]
    fn prop1_sums_for_verified_graphs() {
        // For an egr graph: incident counts sum to k*lambda at every
        // vertex, and the total count over edges is g * (v k lambda / 2g).
        for (g, p) in [
            (fixtures::petersen(), ParamTuple::new(10, 3, 5, 4)),
            (fixtures::heawood(), ParamTuple::new(14, 3, 6, 8)),
            (fixtures::complete(4), ParamTuple::new(4, 3, 3, 2)),
        ] {
            assert!(is_egr(&g, &p));
            let (girth_val, counts) = crate::girth::per_edge_ngc(&g).unwrap();
            assert_eq!(girth_val, p.g);
            for u in g.vertices() {
                let incident: u64 = counts
                    .iter()
                    .filter(|(e, _)| e.u() == u || e.w() == u)
                    .map(|(_, c)| c)
                    .sum();
                assert_eq!(incident, p.k as u64 * p.lambda);
            }
            let total: u64 = counts.iter().map(|(_, c)| c).sum();
            let v = p.v.unwrap() as u64;
            assert_eq!(total % p.g as u64, 0);
            assert_eq!(
                total / p.g as u64,
                v * p.k as u64 * p.lambda / (2 * p.g as u64)
            );
        }
    }
}
