//! Clique enumeration and the clique-based graph statistics built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// All `r`-cliques of a graph, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    n: usize,
    r: usize,
    /// Vertices of clique `c` are `flat[c*r .. (c+1)*r]`, increasing.
    flat: Vec<u8>,
    masks: Vec<u64>,
}

impl CliqueSet {
    /// Vertex count of the source graph.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn get(&self, idx: usize) -> &[u8] {
        &self.flat[idx * self.r..(idx + 1) * self.r]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.flat.chunks_exact(self.r.max(1)).take(self.masks.len())
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.iter().map(|c| c.iter().map(|&v| v as usize).collect()).collect()
    }

    /// Vertices lying in at least one clique.
    pub fn support(&self) -> u64 {
        self.masks.iter().fold(0, |acc, m| acc | m)
    }

    /// The cliques contained in the vertex set `mask`, same vertex space.
    pub fn restricted_to(&self, mask: u64) -> CliqueSet {
        let mut out = CliqueSet {
            n: self.n,
            r: self.r,
            flat: Vec::new(),
            masks: Vec::new(),
        };
        for (idx, &m) in self.masks.iter().enumerate() {
            if m & !mask == 0 {
                out.masks.push(m);
                out.flat.extend_from_slice(self.get(idx));
            }
        }
        out
    }

    /// Per-vertex clique counts.
    pub fn degrees(&self) -> CliqueDegreeVector {
        let mut d = vec![0u64; self.n];
        for &v in &self.flat {
            d[v as usize] += 1;
        }
        CliqueDegreeVector { r: self.r, d }
    }

    fn push(&mut self, mask: u64) {
        self.masks.push(mask);
        self.flat.extend(bits(mask).map(|v| v as u8));
    }
}

/// `d(i)`: number of `r`-cliques containing vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDegreeVector {
    pub r: usize,
    pub d: Vec<u64>,
}

impl CliqueDegreeVector {
    pub fn min(&self) -> u64 {
        self.d.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> u64 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

fn check_order(r: usize) -> Result<()> {
    if r < 2 {
        Err(Error::invalid(format!("clique order must be at least 2, got {r}")))
    } else {
        Ok(())
    }
}

/// Extends `current` by vertices of `cand`, all larger than those already chosen.
fn extend(g: &Graph, current: u64, cand: u64, need: usize, out: &mut CliqueSet) {
    if need == 0 {
        out.push(current);
        return;
    }
    let mut rest = cand;
    while rest.count_ones() as usize >= need {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        extend(g, current | bit(v), rest & g.neighbors(v), need - 1, out);
    }
}

/// Every `r`-clique of `g`, in lexicographic order.
pub fn enumerate_cliques(g: &Graph, r: usize) -> Result<CliqueSet> {
    check_order(r)?;
    let mut out = CliqueSet {
        n: g.n(),
        r,
        flat: Vec::new(),
        masks: Vec::new(),
    };
    if r <= g.n() {
        extend(g, 0, g.vertex_mask(), r, &mut out);
    }
    Ok(out)
}

/// Number of `r`-cliques.
pub fn clique_count(g: &Graph, r: usize) -> Result<usize> {
    fn count(g: &Graph, cand: u64, need: usize) -> usize {
        if need == 1 {
            return cand.count_ones() as usize;
        }
        let mut total = 0;
        let mut rest = cand;
        while rest.count_ones() as usize >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += count(g, rest & g.neighbors(v), need - 1);
        }
        total
    }
    check_order(r)?;
    Ok(if r > g.n() { 0 } else { count(g, g.vertex_mask(), r) })
}

/// Size of a largest clique: 0 for the empty graph, 1 for an edgeless one.
///
/// Bron–Kerbosch with Tomita pivoting: the pivot maximises the number of
/// candidates it is adjacent to.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, cand: u64, excluded: u64, best: &mut usize) {
        if cand == 0 {
            if excluded == 0 {
                *best = (*best).max(size);
            }
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let pivot = bits(cand | excluded)
            .max_by_key(|&u| (g.neighbors(u) & cand).count_ones())
            .expect("nonempty");
        let mut todo = cand & !g.neighbors(pivot);
        let (mut cand, mut excluded) = (cand, excluded);
        while todo != 0 {
            let v = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            let nv = g.neighbors(v);
            expand(g, size + 1, cand & nv, excluded & nv, best);
            cand &= !bit(v);
            excluded |= bit(v);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertex_mask(), 0, &mut best);
    best
}

pub fn clique_degrees(g: &Graph, r: usize) -> Result<CliqueDegreeVector> {
    Ok(enumerate_cliques(g, r)?.degrees())
}

/// True iff some two cliques in the set are vertex-disjoint.
pub fn has_disjoint_pair(cliques: &CliqueSet) -> bool {
    let masks = cliques.masks();
    masks
        .iter()
        .enumerate()
        .any(|(i, &a)| masks[i + 1..].iter().any(|&b| a & b == 0))
}

/// True iff `g` has no two vertex-disjoint `r`-cliques.
pub fn is_2kr_free(g: &Graph, r: usize) -> Result<bool> {
    Ok(!has_disjoint_pair(&enumerate_cliques(g, r)?))
}

/// Finds `count` pairwise vertex-disjoint cliques from `cliques` by exact backtracking.
pub fn disjoint_cliques_in(cliques: &CliqueSet, count: usize) -> Option<Vec<usize>> {
    fn go(masks: &[u64], start: usize, used: u64, need: usize, chosen: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        for idx in start..masks.len() {
            if masks.len() - idx < need {
                return false;
            }
            if masks[idx] & used == 0 {
                chosen.push(idx);
                if go(masks, idx + 1, used | masks[idx], need - 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(count);
    go(cliques.masks(), 0, 0, count, &mut chosen).then_some(chosen)
}

/// `count` pairwise vertex-disjoint `r`-cliques of `g`, if they exist.
pub fn find_disjoint_cliques(g: &Graph, r: usize, count: usize) -> Result<Option<Vec<Vec<usize>>>> {
    if count == 0 {
        return Err(Error::invalid("asked for zero disjoint cliques"));
    }
    let cliques = enumerate_cliques(g, r)?;
    Ok(disjoint_cliques_in(&cliques, count)
        .map(|idx| idx.into_iter().map(|i| cliques.get(i).iter().map(|&v| v as usize).collect()).collect()))
}

/// The graph keeping exactly the edges that lie in some clique of the set.
pub fn core_from_cliques(n: usize, cliques: &CliqueSet) -> Graph {
    let mut rows = vec![0u64; n];
    for &m in cliques.masks() {
        for v in bits(m) {
            rows[v] |= m & !bit(v);
        }
    }
    Graph::with_rows(n, &rows)
}

/// G′: same vertices, only the edges contained in at least one `r`-clique.
pub fn clique_core(g: &Graph, r: usize) -> Result<Graph> {
    Ok(core_from_cliques(g.n(), &enumerate_cliques(g, r)?))
}

/// `r`-clique connectivity, decided as connectivity of the clique core.
pub fn is_r_clique_connected(g: &Graph, r: usize) -> Result<bool> {
    Ok(clique_core(g, r)?.is_connected())
}

/// Vertex sets of the connected components, each sorted, listed by minimum vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    g.components()
}

/// Outcome of the shared-vertex test for 2K_r-freeness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Criterion {
    /// Every pair of `k`-cliques meets in at least `2k - 2r + 1` vertices.
    Holds,
    /// Two `k`-cliques meet in fewer vertices; the pair is reported.
    Fails { first: Vec<usize>, second: Vec<usize> },
    /// The hypotheses are not met, so the test says nothing about 2K_r-freeness.
    Inapplicable(String),
}

/// Decides whether any two `k`-cliques of `g` share at least `2k - 2r + 1` vertices.
///
/// When `r <= k <= 2r - 2`, every edge lies in a `k`-clique and there are at
/// least two `k`-cliques, this is equivalent to `g` being 2K_r-free. The
/// original statement asks for "more than two" cliques while its argument
/// only ever uses a pair, so two is accepted here.
pub fn shared_vertex_criterion(g: &Graph, r: usize, k: usize) -> Result<Criterion> {
    if r < 2 || k < r || k + 2 > 2 * r {
        return Ok(Criterion::Inapplicable(format!("needs r <= k <= 2r-2, got r={r}, k={k}")));
    }
    let cliques = enumerate_cliques(g, k)?;
    if cliques.len() < 2 {
        return Ok(Criterion::Inapplicable(format!("{} {k}-clique(s); at least two required", cliques.len())));
    }
    if core_from_cliques(g.n(), &cliques) != *g {
        return Ok(Criterion::Inapplicable(format!("some edge lies in no {k}-clique")));
    }
    let need = (2 * k + 1 - 2 * r) as u32;
    let masks = cliques.masks();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if (masks[i] & masks[j]).count_ones() < need {
                return Ok(Criterion::Fails {
                    first: bits(masks[i]).collect(),
                    second: bits(masks[j]).collect(),
                });
            }
        }
    }
    Ok(Criterion::Holds)
}

/// Every subset of `mask` with exactly `size` elements, as bitsets.
pub fn subsets_of_size(mask: u64, size: usize) -> Vec<u64> {
    fn go(rest: u64, size: usize, acc: u64, out: &mut Vec<u64>) {
        if size == 0 {
            out.push(acc);
            return;
        }
        let mut r = rest;
        while r.count_ones() as usize >= size {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            go(r, size - 1, acc | bit(v), out);
        }
    }
    let mut out = Vec::new();
    go(mask, size, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::enumerate::LabeledGraphs;

    fn k1_join_t25() -> Graph {
        join(&complete_graph(1).unwrap(), &turan_graph(5, 2).unwrap()).unwrap()
    }

    fn brute_is_clique(g: &Graph, m: u64) -> bool {
        bits(m).all(|v| g.neighbors(v) & m == m & !bit(v))
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_cliques(&complete_graph(5).unwrap(), 3).unwrap().len(), 10);
        assert_eq!(enumerate_cliques(&k1_join_t25(), 3).unwrap().len(), 6);
        let two = disjoint_copies(&complete_graph(3).unwrap(), 2).unwrap();
        assert_eq!(enumerate_cliques(&two, 3).unwrap().to_vecs(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(enumerate_cliques(&two, 1).is_err());
        assert!(enumerate_cliques(&complete_graph(3).unwrap(), 4).unwrap().is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for g in LabeledGraphs::new(6).unwrap().step_by(37) {
            for r in 2..=6 {
                let got = enumerate_cliques(&g, r).unwrap();
                let brute: Vec<u64> = subsets_of_size(g.vertex_mask(), r)
                    .into_iter()
                    .filter(|&m| brute_is_clique(&g, m))
                    .collect();
                let mut sorted = got.to_vecs();
                sorted.sort();
                assert_eq!(sorted, got.to_vecs());
                let mut got_masks = got.masks().to_vec();
                got_masks.sort();
                let mut brute_sorted = brute.clone();
                brute_sorted.sort();
                assert_eq!(got_masks, brute_sorted);
                assert_eq!(clique_count(&g, r).unwrap(), got.len());
            }
        }
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&k3_join_empty(9).unwrap()), 4);
        assert_eq!(clique_number(&turan_graph(5, 2).unwrap()), 2);
        let k5k1 = disjoint_union(&complete_graph(5).unwrap(), &complete_graph(1).unwrap()).unwrap();
        assert_eq!(clique_number(&k5k1), 5);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(clique_number(&Graph::empty(4).unwrap()), 1);
    }

    #[test]
    fn clique_number_matches_enumeration() {
        for g in LabeledGraphs::new(6).unwrap().step_by(11) {
            let omega = (1..=6).rev().find(|&r| r == 1 || clique_count(&g, r).unwrap() > 0).unwrap();
            assert_eq!(clique_number(&g), omega);
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(clique_degrees(&complete_graph(4).unwrap(), 3).unwrap().d, vec![3; 4]);
        // apex, then the part of size 3, then the part of size 2
        assert_eq!(clique_degrees(&k1_join_t25(), 3).unwrap().d, vec![6, 2, 2, 2, 3, 3]);
        assert_eq!(clique_degrees(&Graph::empty(5).unwrap(), 3).unwrap().d, vec![0; 5]);
    }

    #[test]
    fn handshake_identity() {
        for g in LabeledGraphs::new(5).unwrap() {
            for r in 2..=5 {
                let c = enumerate_cliques(&g, r).unwrap();
                assert_eq!(c.degrees().d.iter().sum::<u64>() as usize, r * c.len());
            }
        }
    }

    #[test]
    fn two_kr_free_examples() {
        let two = disjoint_copies(&complete_graph(3).unwrap(), 2).unwrap();
        assert!(!is_2kr_free(&two, 3).unwrap());
        let k5k1 = disjoint_union(&complete_graph(5).unwrap(), &complete_graph(1).unwrap()).unwrap();
        assert!(is_2kr_free(&k5k1, 3).unwrap());
        assert!(is_2kr_free(&cycle_graph(6).unwrap(), 3).unwrap());
    }

    #[test]
    fn two_kr_free_matches_subset_scan() {
        for g in LabeledGraphs::new(6).unwrap() {
            let tri: Vec<u64> = subsets_of_size(g.vertex_mask(), 3)
                .into_iter()
                .filter(|&m| brute_is_clique(&g, m))
                .collect();
            let brute = !tri.iter().any(|&a| tri.iter().any(|&b| a & b == 0));
            assert_eq!(is_2kr_free(&g, 3).unwrap(), brute);
        }
    }

    #[test]
    fn disjoint_clique_search() {
        let three = disjoint_copies(&complete_graph(3).unwrap(), 3).unwrap();
        assert_eq!(
            find_disjoint_cliques(&three, 3, 3).unwrap(),
            Some(vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]])
        );
        assert_eq!(find_disjoint_cliques(&complete_graph(5).unwrap(), 3, 2).unwrap(), None);
        assert_eq!(find_disjoint_cliques(&complete_graph(5).unwrap(), 3, 1).unwrap(), Some(vec![vec![0, 1, 2]]));
        // greedy would take {0,1,2} first and get stuck
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 4), (4, 5), (2, 5), (3, 5)]).unwrap();
        let found = find_disjoint_cliques(&g, 3, 2).unwrap().unwrap();
        assert_eq!(found, vec![vec![0, 1, 3], vec![2, 4, 5]]);
    }

    #[test]
    fn core_examples() {
        let k5k1 = disjoint_union(&complete_graph(5).unwrap(), &complete_graph(1).unwrap()).unwrap();
        let mut g0 = k5k1.clone();
        g0.add_edge(0, 5).unwrap();
        assert_eq!(clique_core(&g0, 3).unwrap(), k5k1);
        assert_eq!(clique_core(&cycle_graph(6).unwrap(), 3).unwrap(), Graph::empty(6).unwrap());
        assert_eq!(clique_core(&complete_graph(4).unwrap(), 3).unwrap(), complete_graph(4).unwrap());
    }

    #[test]
    fn core_keeps_cliques() {
        for g in LabeledGraphs::new(6).unwrap().step_by(5) {
            for r in 2..=4 {
                let core = clique_core(&g, r).unwrap();
                assert_eq!(enumerate_cliques(&core, r).unwrap(), enumerate_cliques(&g, r).unwrap());
            }
        }
    }

    #[test]
    fn clique_connectivity_examples() {
        let k5k1 = disjoint_union(&complete_graph(5).unwrap(), &complete_graph(1).unwrap()).unwrap();
        assert!(!is_r_clique_connected(&k5k1, 3).unwrap());
        assert!(is_r_clique_connected(&k1_join_t25(), 3).unwrap());
        assert!(is_r_clique_connected(&flower(3, 3, 4).unwrap(), 3).unwrap());
        assert_eq!(components(&k5k1), vec![vec![0, 1, 2, 3, 4], vec![5]]);
        assert_eq!(components(&complete_graph(4).unwrap()).len(), 1);
    }

    #[test]
    fn shared_vertex_examples() {
        assert_eq!(shared_vertex_criterion(&flower(3, 4, 2).unwrap(), 3, 4).unwrap(), Criterion::Holds);
        let two_k4 = disjoint_copies(&complete_graph(4).unwrap(), 2).unwrap();
        assert!(matches!(shared_vertex_criterion(&two_k4, 3, 4).unwrap(), Criterion::Fails { .. }));
        assert!(matches!(
            shared_vertex_criterion(&complete_graph(4).unwrap(), 3, 4).unwrap(),
            Criterion::Inapplicable(_)
        ));
        assert!(matches!(shared_vertex_criterion(&two_k4, 3, 5).unwrap(), Criterion::Inapplicable(_)));
        let mut pendant = flower(3, 4, 2).unwrap();
        pendant = disjoint_union(&pendant, &complete_graph(1).unwrap()).unwrap();
        pendant.add_edge(0, 5).unwrap();
        assert!(matches!(shared_vertex_criterion(&pendant, 3, 4).unwrap(), Criterion::Inapplicable(_)));
    }

    #[test]
    fn shared_vertex_agrees_with_2kr_free() {
        let mut applicable = 0;
        for n in 4..=7 {
            for g in LabeledGraphs::new(n).unwrap() {
                for (r, k) in [(3, 3), (3, 4), (4, 4), (4, 5), (4, 6)] {
                    match shared_vertex_criterion(&g, r, k).unwrap() {
                        Criterion::Holds => {
                            applicable += 1;
                            assert!(is_2kr_free(&g, r).unwrap(), "{g:?} r={r} k={k}");
                        }
                        Criterion::Fails { .. } => {
                            applicable += 1;
                            assert!(!is_2kr_free(&g, r).unwrap(), "{g:?} r={r} k={k}");
                        }
                        Criterion::Inapplicable(_) => {}
                    }
                }
            }
        }
        assert!(applicable > 1000);
    }

    #[test]
    fn adding_edges_is_monotone() {
        for g in LabeledGraphs::new(5).unwrap().step_by(3) {
            for (i, j) in crate::enumerate::edge_pairs(5) {
                if g.has_edge(i, j) {
                    continue;
                }
                let mut h = g.clone();
                h.add_edge(i, j).unwrap();
                assert!(clique_number(&h) >= clique_number(&g));
                assert!(clique_count(&h, 3).unwrap() >= clique_count(&g, 3).unwrap());
            }
        }
    }
}
