//! Rough timing probe for the canonical labeler and a generation run.

use egr::canon::canonical_key;
use egr::check::ParamTuple;
use egr::generate::{generate_to_vec, GenerationConfig};
use egr::seed::build_seed_tree;
use std::time::Instant;

fn time_key(label: &str, g: &egr::graph::Graph, iters: u32) {
    let start = Instant::now();
    for _ in 0..iters {
        std::hint::black_box(canonical_key(std::hint::black_box(g)));
    }
    println!(
        "{label}: {:.1} us/key",
        start.elapsed().as_secs_f64() * 1e6 / iters as f64
    );
}

fn main() {
    let seed = build_seed_tree(3, 5).unwrap();
    let padded = seed.padded_graph(20).unwrap();
    time_key("T(3,5) + 10 isolated", &padded, 200);

    let mut one_edge = padded.clone();
    one_edge
        .add_edge(egr::graph::Edge::new(5, 7))
        .unwrap();
    time_key("T(3,5) + 10 iso + 1 cross", &one_edge, 200);

    time_key("dodecahedron", &egr::fixtures::dodecahedron(), 2000);
    time_key("petersen", &egr::fixtures::petersen(), 2000);
    time_key("K_{6,6}", &egr::fixtures::complete_bipartite(6, 6), 200);

    let start = Instant::now();
    let (out, stats) = generate_to_vec(
        &ParamTuple::new(20, 3, 5, 2),
        &GenerationConfig::default(),
    )
    .unwrap();
    println!(
        "(20,3,5,2): {} graphs, {} nodes, {:.2}s total, {:.1} us/node",
        out.len(),
        stats.nodes,
        start.elapsed().as_secs_f64(),
        start.elapsed().as_secs_f64() * 1e6 / stats.nodes as f64
    );
}
