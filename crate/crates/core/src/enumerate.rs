//! Exhaustive enumeration of labeled graphs on few vertices.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

/// Largest `n` for which labeled enumeration is offered (2^21 graphs).
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Vertex pairs in graph6 column order; bit `k` of an edge mask is pair `k`.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Decodes an edge mask over [`edge_pairs`] into a graph.
pub fn graph_from_edge_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    debug_assert!(n <= MAX_VERTICES && pairs.len() <= 64);
    let mut rows = [0u64; MAX_VERTICES];
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        m &= m - 1;
        let (i, j) = pairs[k];
        rows[i] |= bit(j);
        rows[j] |= bit(i);
    }
    Graph::with_rows(n, &rows)
}

/// Every labeled simple graph on `n` vertices, in increasing edge-mask order.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ENUMERATION_VERTICES {
            return Err(Error::invalid(format!(
                "labeled enumeration is limited to n <= {MAX_ENUMERATION_VERTICES}; \
                 supply a graph6 catalog for n = {n}"
            )));
        }
        let pairs = edge_pairs(n);
        let end = 1u64 << pairs.len();
        Ok(LabeledGraphs { n, pairs, next: 0, end })
    }

    /// Total number of graphs, `2^(n choose 2)`.
    pub fn count(&self) -> u64 {
        self.end
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn graph_at(&self, mask: u64) -> Graph {
        graph_from_edge_mask(self.n, &self.pairs, mask)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.graph_at(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}
