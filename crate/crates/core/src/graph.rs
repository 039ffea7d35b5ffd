//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; each adjacency row is a single `u64`.
pub const MAX_VERTICES: usize = 64;

/// Bitmask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates over the indices of the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An undirected simple graph with vertex set `{0, .., n-1}`.
///
/// `adj[v]` holds the neighbourhood of `v` as a bitset. Rows at index `>= n`
/// are always zero, so derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                requested: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows.
    ///
    /// Rows must be symmetric, loop-free and stay within the first `rows.len()`
    /// bits.
    pub fn from_adjacency(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(rows.len())?;
        let n = rows.len();
        for (v, &row) in rows.iter().enumerate() {
            if row & !low_bits(n) != 0 {
                return Err(Error::invalid(format!("row {v} has bits beyond vertex {n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::invalid(format!("loop at vertex {v}")));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::invalid(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Neighbourhood of `v` as a bitset. `v` must be a vertex.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    /// Edges `(i, j)` with `i < j`, ordered by `j` then `i` (graph6 column order).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for j in 1..self.n {
            for i in bits(self.adj[j] & low_bits(j)) {
                out.push((i, j));
            }
        }
        out
    }

    /// Intersection of the neighbourhoods of every vertex in `set`.
    ///
    /// The empty set yields the full vertex mask.
    pub fn common_neighborhood(&self, set: &[usize]) -> Result<u64> {
        let mut acc = self.vertex_mask();
        for &v in set {
            self.check_vertex(v)?;
            acc &= self.adj[v];
        }
        Ok(acc)
    }

    /// Same as [`Graph::common_neighborhood`] over a vertex bitset.
    #[inline]
    pub fn common_neighborhood_mask(&self, set: u64) -> u64 {
        bits(set).fold(self.vertex_mask(), |acc, v| acc & self.adj[v])
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::invalid("relabeling is not a permutation"));
            }
            seen |= bit(p);
        }
        Ok(self.permuted_unchecked(perm))
    }

    pub(crate) fn permuted_unchecked(&self, perm: &[usize]) -> Self {
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for v in 0..self.n {
            g.adj[perm[v]] = bits(self.adj[v]).fold(0, |acc, u| acc | bit(perm[u]));
        }
        g
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Self {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = bits(mask).collect();
        let mut g = Graph {
            n: verts.len(),
            adj: [0; MAX_VERTICES],
        };
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    g.adj[a] |= bit(b);
                }
            }
        }
        g
    }

    /// Same vertex set, keeping only the edges inside `rows` (masked per vertex).
    pub(crate) fn with_rows(n: usize, rows: &[u64]) -> Self {
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        Graph { n, adj }
    }

    /// Connected components as vertex bitsets, ordered by their lowest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let next = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            remaining &= !comp;
            out.push(comp);
        }
        out
    }

    /// Connected components, each sorted, listed by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}
