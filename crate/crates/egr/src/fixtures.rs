//! Named graphs used as test fixtures and verification targets.

use crate::graph::{from_lcf, Edge, Graph};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for w in (u + 1)..n {
            g.add_edge(Edge::new(u, w)).unwrap();
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b).unwrap();
    for u in 0..a {
        for w in a..(a + b) {
            g.add_edge(Edge::new(u, w)).unwrap();
        }
    }
    g
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut g = Graph::empty(n).unwrap();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    for u in 0..n {
        for w in (u + 1)..n {
            if part_of[u] != part_of[w] {
                g.add_edge(Edge::new(u, w)).unwrap();
            }
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        g.add_edge(Edge::new(u, (u + 1) % n)).unwrap();
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n - 1 {
        g.add_edge(Edge::new(u, u + 1)).unwrap();
    }
    g
}

/// Kneser graph K(m, 2): vertices are the 2-subsets of an m-set, adjacent
/// when disjoint. K(5,2) is the Petersen graph; K(6,2) is 6-regular on 15
/// vertices with every edge in exactly one triangle.
pub fn kneser_2(m: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
        .collect();
    let mut g = Graph::empty(pairs.len()).unwrap();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(x, y)) in pairs.iter().enumerate().skip(a + 1) {
            if i != x && i != y && j != x && j != y {
                g.add_edge(Edge::new(a, b)).unwrap();
            }
        }
    }
    g
}

pub fn petersen() -> Graph {
    kneser_2(5)
}

/// Heawood graph: the unique 14-vertex cubic graph of girth 6.
pub fn heawood() -> Graph {
    from_lcf(&[5, -5], 7).unwrap()
}

/// Moebius-Kantor graph: 16 vertices, cubic, girth 6.
pub fn moebius_kantor() -> Graph {
    from_lcf(&[5, -5], 8).unwrap()
}

/// 3-cube graph: 8 vertices, cubic, girth 4.
pub fn cube() -> Graph {
    from_lcf(&[3, -3], 4).unwrap()
}

/// Dodecahedron: 20 vertices, cubic, girth 5.
pub fn dodecahedron() -> Graph {
    from_lcf(&[10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2).unwrap()
}

/// Pappus graph as the incidence graph of the 9_3 Pappus configuration:
/// points (x, y) in Z3 x Z3, lines (a, b) for y = ax + b, a point on a
/// line when the equation holds. Cubic, 18 vertices, girth 6.
pub fn pappus() -> Graph {
    let mut g = Graph::empty(18).unwrap();
    for x in 0..3usize {
        for y in 0..3usize {
            for a in 0..3usize {
                let b = (y + 2 * a * x) % 3; // b = y - ax (mod 3)
                g.add_edge(Edge::new(3 * x + y, 9 + 3 * a + b)).unwrap();
            }
        }
    }
    g
}

/// Rook's graph on a 3x3 board: 4-regular, 9 vertices, every edge in
/// exactly one triangle.
pub fn rook_3x3() -> Graph {
    let mut g = Graph::empty(9).unwrap();
    for u in 0..9 {
        for w in (u + 1)..9 {
            if u / 3 == w / 3 || u % 3 == w % 3 {
                g.add_edge(Edge::new(u, w)).unwrap();
            }
        }
    }
    g
}

/// K_{m,m} minus a perfect matching: (m-1)-regular bipartite, girth 4
/// for m >= 3.
pub fn crown(m: usize) -> Graph {
    let mut g = complete_bipartite(m, m);
    for i in 0..m {
        g.remove_edge(Edge::new(i, m + i)).unwrap();
    }
    g
}
