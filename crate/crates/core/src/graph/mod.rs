//! Simple finite graphs with dense adjacency, plus the combinatorial counts
//! (triangles, quadrangles, walks) used as independent oracles elsewhere.

mod construct;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::ExactMatrix;

pub use construct::{
    cartesian_product, circulant, coclique_extension, complement, complete, complete_multipartite,
    construct, cycle, hamming, line_graph,
};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

/// Errors raised while building or decoding graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid parameters for {family}: {message}")]
    Domain {
        family: &'static str,
        message: String,
    },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),
}

impl GraphError {
    pub(crate) fn domain(family: &'static str, message: impl Into<String>) -> Self {
        GraphError::Domain {
            family,
            message: message.into(),
        }
    }
}

/// An immutable simple graph on vertices `0..n`.
///
/// The adjacency relation is stored twice: as a dense boolean matrix for O(1)
/// edge queries and as sorted neighbor lists for traversal.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adjacent: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    label: String,
}

/// A directed copy of an edge. Every edge `{x, y}` contributes `(x, y)` and `(y, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
}

impl Arc {
    pub fn inverse(self) -> Arc {
        Arc {
            origin: self.terminus,
            terminus: self.origin,
        }
    }
}

/// Cheap structural facts about a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicPredicates {
    /// `Some(k)` iff every vertex has degree `k`.
    pub regular: Option<usize>,
    pub connected: bool,
    pub complete: bool,
    pub bipartite: bool,
}

/// Number of 4-cycles in the graph, in total and through each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrangleCounts {
    pub total: u64,
    pub through: Vec<u64>,
}

impl Graph {
    /// Builds a graph from a row-major boolean adjacency matrix.
    pub fn from_adjacency(
        n: usize,
        adjacent: Vec<bool>,
        label: impl Into<String>,
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidAdjacency(
                "a graph needs at least one vertex".into(),
            ));
        }
        if adjacent.len() != n * n {
            return Err(GraphError::InvalidAdjacency(format!(
                "expected {} entries, got {}",
                n * n,
                adjacent.len()
            )));
        }
        for x in 0..n {
            if adjacent[x * n + x] {
                return Err(GraphError::InvalidAdjacency(format!("loop at vertex {x}")));
            }
            for y in (x + 1)..n {
                if adjacent[x * n + y] != adjacent[y * n + x] {
                    return Err(GraphError::InvalidAdjacency(format!(
                        "asymmetric entry at ({x}, {y})"
                    )));
                }
            }
        }
        let neighbors = (0..n)
            .map(|x| (0..n).filter(|&y| adjacent[x * n + y]).collect())
            .collect();
        Ok(Graph {
            n,
            adjacent,
            neighbors,
            label: label.into(),
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        label: impl Into<String>,
    ) -> Result<Graph, GraphError> {
        let mut adjacent = vec![false; n * n];
        for (x, y) in edges {
            if x >= n || y >= n {
                return Err(GraphError::InvalidAdjacency(format!(
                    "edge ({x}, {y}) out of range for {n} vertices"
                )));
            }
            if x == y {
                return Err(GraphError::InvalidAdjacency(format!("loop at vertex {x}")));
            }
            adjacent[x * n + y] = true;
            adjacent[y * n + x] = true;
        }
        Graph::from_adjacency(n, adjacent, label)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        self.adjacent[x * self.n + y]
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.neighbors[x].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| {
                self.neighbors[x]
                    .iter()
                    .filter(move |&&y| y > x)
                    .map(move |&y| (x, y))
            })
            .collect()
    }

    /// All symmetric arcs, sorted by `(origin, terminus)`.
    pub fn arcs(&self) -> Vec<Arc> {
        (0..self.n)
            .flat_map(|x| {
                self.neighbors[x].iter().map(move |&y| Arc {
                    origin: x,
                    terminus: y,
                })
            })
            .collect()
    }

    /// The 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_fn_integer(self.n, self.n, |i, j| i64::from(self.adjacent[i * self.n + j]))
    }

    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|x| self.degree(x) == k).then_some(k)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut component = Vec::new();
            while let Some(x) = queue.pop_front() {
                component.push(x);
                for &y in &self.neighbors[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            component.sort_unstable();
            out.push(component);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A proper 2-colouring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.neighbors[x] {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        queue.push_back(y);
                    } else if colour[y] == colour[x] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn basic_predicates(&self) -> BasicPredicates {
        BasicPredicates {
            regular: self.regularity(),
            connected: self.is_connected(),
            complete: self.edge_count() == self.n * (self.n - 1) / 2,
            bipartite: self.two_coloring().is_some(),
        }
    }

    pub fn common_neighbors(&self, x: usize, y: usize) -> usize {
        self.neighbors[x]
            .iter()
            .filter(|&&z| self.is_adjacent(z, y))
            .count()
    }

    /// Unordered triangles containing `x`, by enumerating neighbor pairs.
    pub fn count_triangles_through(&self, x: usize) -> u64 {
        let nbrs = &self.neighbors[x];
        let mut count = 0;
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if self.is_adjacent(y, z) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Counts 4-cycles (as subgraphs, not necessarily induced).
    ///
    /// Small graphs are scanned over every 4-subset; larger ones use the pair
    /// identity: a 4-cycle is determined by one diagonal `{x, y}` plus two
    /// common neighbors of `x` and `y`.
    pub fn count_quadrangles(&self) -> QuadrangleCounts {
        if self.n <= 64 {
            self.quadrangles_by_subsets()
        } else {
            self.quadrangles_by_pairs()
        }
    }

    pub(crate) fn quadrangles_by_subsets(&self) -> QuadrangleCounts {
        let n = self.n;
        let adj = |x: usize, y: usize| self.is_adjacent(x, y);
        let mut through = vec![0u64; n];
        let mut total = 0u64;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        // The three Hamiltonian cycles on {a, b, c, d}.
                        let found = u64::from(adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a))
                            + u64::from(adj(a, b) && adj(b, d) && adj(d, c) && adj(c, a))
                            + u64::from(adj(a, c) && adj(c, b) && adj(b, d) && adj(d, a));
                        if found > 0 {
                            total += found;
                            for v in [a, b, c, d] {
                                through[v] += found;
                            }
                        }
                    }
                }
            }
        }
        QuadrangleCounts { total, through }
    }

    pub(crate) fn quadrangles_by_pairs(&self) -> QuadrangleCounts {
        let n = self.n;
        let mut through = vec![0u64; n];
        let mut doubled = 0u64;
        for x in 0..n {
            for y in (x + 1)..n {
                let c = self.common_neighbors(x, y) as u64;
                let pairs = c * c.saturating_sub(1) / 2;
                through[x] += pairs;
                through[y] += pairs;
                doubled += pairs;
            }
        }
        QuadrangleCounts {
            total: doubled / 2,
            through,
        }
    }

    /// Row `x` of `A^r`: the number of walks of length `r` from `x` to each vertex.
    pub fn walk_counts(&self, x: usize, r: u32) -> Vec<BigInt> {
        let power = self.adjacency_matrix().pow(r);
        (0..self.n)
            .map(|y| power.numerator(x, y).clone())
            .collect()
    }
}

impl PartialEq for Graph {
    /// Labelled equality: same vertex count and identical adjacency. Labels are ignored.
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adjacent == other.adjacent
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("label", &self.label)
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl std::str::FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Graph, GraphError> {
        construct(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(spec: &str) -> Graph {
        construct(spec).unwrap()
    }

    #[test]
    fn arcs_are_sorted_and_closed_under_inverse() {
        let c3 = g("cycle(3)");
        let arcs = c3.arcs();
        assert_eq!(arcs.len(), 6);
        assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        for a in &arcs {
            assert!(arcs.contains(&a.inverse()));
            assert_ne!(a.origin, a.terminus);
        }
        assert_eq!(g("complement(hamming(3,2))").arcs().len(), 32);
        let single = Graph::from_edges(1, [], "k1").unwrap();
        assert!(single.arcs().is_empty());
    }

    #[test]
    fn predicates_on_small_families() {
        assert_eq!(
            g("cycle(5)").basic_predicates(),
            BasicPredicates {
                regular: Some(2),
                connected: true,
                complete: false,
                bipartite: false
            }
        );
        assert_eq!(
            g("hamming(3,3)").basic_predicates(),
            BasicPredicates {
                regular: Some(6),
                connected: true,
                complete: false,
                bipartite: false
            }
        );
        assert_eq!(
            g("complete(4)").basic_predicates(),
            BasicPredicates {
                regular: Some(3),
                connected: true,
                complete: true,
                bipartite: false
            }
        );
        let p = g("cycle(6)").basic_predicates();
        assert!(p.bipartite);
        let two_triangles = g("cartesian(complete(3),complement(complete(2)))");
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.components().len(), 2);
    }

    #[test]
    fn triangles_through_vertex() {
        let k4 = g("complete(4)");
        assert!((0..4).all(|x| k4.count_triangles_through(x) == 3));
        let cube_bar = g("complement(hamming(3,2))");
        assert!((0..8).all(|x| cube_bar.count_triangles_through(x) == 3));
        let c5 = g("cycle(5)");
        assert!((0..5).all(|x| c5.count_triangles_through(x) == 0));
    }

    #[test]
    fn quadrangle_counts() {
        let c4 = g("cycle(4)").count_quadrangles();
        assert_eq!(c4, QuadrangleCounts { total: 1, through: vec![1; 4] });
        let cube_bar = g("complement(hamming(3,2))").count_quadrangles();
        assert_eq!(cube_bar.total, 12);
        assert!(cube_bar.through.iter().all(|&t| t == 6));
        assert_eq!(g("complete(3)").count_quadrangles().total, 0);
        assert_eq!(g("complete(4)").count_quadrangles().total, 3);
    }

    #[test]
    fn quadrangle_methods_agree() {
        for spec in [
            "hamming(3,3)",
            "petersen()",
            "line(hamming(3,2))",
            "cay(13;1,3,4,9,10,12)",
            "complete_multipartite(3,3,3)",
        ] {
            let graph = g(spec);
            assert_eq!(graph.quadrangles_by_subsets(), graph.quadrangles_by_pairs(), "{spec}");
        }
    }

    #[test]
    fn cycle7_walk_counts() {
        let c7 = g("cycle(7)");
        let w4: Vec<i64> = c7
            .walk_counts(0, 4)
            .iter()
            .map(|w| i64::try_from(w).unwrap())
            .collect();
        assert_eq!(w4, vec![6, 0, 4, 1, 1, 4, 0]);
        let w2 = c7.walk_counts(0, 2);
        assert_eq!(w2[2], BigInt::from(1));
        assert_eq!(w2[3], BigInt::from(0));
        let w0 = c7.walk_counts(3, 0);
        for (y, w) in w0.iter().enumerate() {
            assert_eq!(*w, BigInt::from(u8::from(y == 3)));
        }
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(2, vec![false, true, false, false], "x").is_err());
        assert!(Graph::from_adjacency(1, vec![true], "x").is_err());
        assert!(Graph::from_adjacency(0, vec![], "x").is_err());
        assert!(Graph::from_edges(3, [(0, 3)], "x").is_err());
        assert!(Graph::from_edges(3, [(1, 1)], "x").is_err());
    }
}
