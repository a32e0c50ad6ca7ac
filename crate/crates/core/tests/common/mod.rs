#![allow(dead_code)]

use grover_lab::graph::{construct, Graph};

/// Connected regular graphs whose spectra lie in quadratic fields.
pub const CORPUS: &[&str] = &[
    "complete(2)",
    "complete(3)",
    "complete(4)",
    "complete(5)",
    "cycle(4)",
    "cycle(5)",
    "cycle(6)",
    "cycle(8)",
    "cycle(10)",
    "cycle(12)",
    "complete_multipartite(2,2)",
    "complete_multipartite(3,3)",
    "complete_multipartite(4,4)",
    "complete_multipartite(2,2,2)",
    "complete_multipartite(3,3,3)",
    "petersen",
    "hamming(2,3)",
    "hamming(3,2)",
    "hamming(3,3)",
    "hamming(2,4)",
    "complement(hamming(3,2))",
    "line(hamming(3,2))",
    "line(petersen)",
    "cay(8;1,-1,2,-2)",
    "cay(10;1,-1,4,-4)",
    "cartesian(cycle(5),complete(2))",
    "cartesian(cycle(4),cycle(3))",
    "coclique(complement(hamming(3,2)),2)",
    "coclique(line(hamming(3,2)),2)",
    "coclique(cycle(5),2)",
    "cycle(3)",
];

pub fn corpus() -> Vec<Graph> {
    CORPUS.iter().map(|s| construct(s).unwrap()).collect()
}

pub fn graph(spec: &str) -> Graph {
    construct(spec).unwrap()
}
