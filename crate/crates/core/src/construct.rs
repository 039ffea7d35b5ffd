//! Graph families: complete, Turán, complete multipartite, joins, unions and
//! flowers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, low_bits, Graph, MAX_VERTICES};

/// Part sizes of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a multipartite spec needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("part sizes must be positive"));
        }
        Ok(MultipartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().sum()
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            requested: n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    check_capacity(n)?;
    let all = low_bits(n);
    let rows: Vec<u64> = (0..n).map(|v| all & !bit(v)).collect();
    Ok(Graph::with_rows(n, &rows))
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn path_graph(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("a cycle needs at least 3 vertices"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// Part sizes of `T_r(n)`, larger parts first. Parts may be empty when `r > n`.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 {
        return if n == 0 {
            Ok(Vec::new())
        } else {
            Err(Error::invalid("Turán graph with zero parts on a nonempty vertex set"))
        };
    }
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|i| if i < rem { q + 1 } else { q }).collect())
}

/// Builds a complete multipartite graph from raw part sizes; empty parts are allowed.
fn multipartite_from_sizes(sizes: &[usize]) -> Result<Graph> {
    let n: usize = sizes.iter().sum();
    check_capacity(n)?;
    let all = low_bits(n);
    let mut rows = vec![0u64; n];
    let mut start = 0;
    for &size in sizes {
        let part = low_bits(start + size) & !low_bits(start);
        for row in &mut rows[start..start + size] {
            *row = all & !part;
        }
        start += size;
    }
    Ok(Graph::with_rows(n, &rows))
}

/// The Turán graph `T_r(n)`: complete `r`-partite with part sizes differing by at most one.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    multipartite_from_sizes(&turan_parts(n, r)?)
}

/// Complete multipartite graph; vertices are numbered part by part.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> Result<Graph> {
    multipartite_from_sizes(spec.parts())
}

/// `G ∨ H`: vertices of `g` first, then those of `h`, with every cross pair joined.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.n(), h.n());
    check_capacity(a + b)?;
    let left = low_bits(a);
    let right = low_bits(a + b) & !left;
    let mut rows = Vec::with_capacity(a + b);
    rows.extend(g.rows().iter().map(|&r| r | right));
    rows.extend(h.rows().iter().map(|&r| (r << a) | left));
    Ok(Graph::with_rows(a + b, &rows))
}

/// `G ∪ H` with no edges between the parts.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let a = g.n();
    check_capacity(a + h.n())?;
    let mut rows: Vec<u64> = g.rows().to_vec();
    rows.extend(h.rows().iter().map(|&r| r << a));
    Ok(Graph::with_rows(a + h.n(), &rows))
}

/// `copies` disjoint copies of `g`.
pub fn disjoint_copies(g: &Graph, copies: usize) -> Result<Graph> {
    (0..copies).try_fold(Graph::empty(0)?, |acc, _| disjoint_union(&acc, g))
}

/// `K_m ∨ T_{r-m}(n-m)`.
pub fn km_join_turan(n: usize, m: usize, r: usize) -> Result<Graph> {
    if m > n || m > r {
        return Err(Error::invalid(format!("K_{m} ∨ T_{{r-m}}(n-m) needs m <= r and m <= n")));
    }
    join(&complete_graph(m)?, &turan_graph(n - m, r - m)?)
}

/// `K_3 ∨ (n-3)K_1`.
pub fn k3_join_empty(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("K_3 ∨ (n-3)K_1 needs n >= 3"));
    }
    join(&complete_graph(3)?, &empty_graph(n - 3)?)
}

/// The flower: `petals` cliques of order `k` pairwise meeting in a common
/// kernel of `2k - 2r + 1` vertices.
///
/// Kernel vertices are `0..kernel`; petal `p` occupies the next `2r - 1 - k`
/// vertices in order.
pub fn flower(r: usize, k: usize, petals: usize) -> Result<Graph> {
    if r < 2 || k < r || k + 2 > 2 * r {
        return Err(Error::invalid(format!(
            "flower needs r <= k <= 2r-2 (got r={r}, k={k})"
        )));
    }
    if petals == 0 {
        return Err(Error::invalid("flower needs at least one petal"));
    }
    let kernel = 2 * k + 1 - 2 * r;
    let petal = k - kernel;
    let n = kernel + petals * petal;
    check_capacity(n)?;
    let kernel_mask = low_bits(kernel);
    let mut rows = vec![0u64; n];
    for p in 0..petals {
        let start = kernel + p * petal;
        let clique = kernel_mask | (low_bits(start + petal) & !low_bits(start));
        for v in crate::graph::bits(clique) {
            rows[v] |= clique & !bit(v);
        }
    }
    Ok(Graph::with_rows(n, &rows))
}
