//! Canonical labeling by colour refinement and individualisation.
//!
//! The search explores every branch of the individualisation tree and keeps
//! the lexicographically smallest graph6 string among the leaves. Branches
//! that differ only by swapping two twin vertices are skipped: such a swap is
//! an automorphism fixing the current node, so both subtrees yield the same
//! leaf graphs.

use crate::graph::{bit, bits, Graph};
use crate::graph6;

/// Refines `colors` to the coarsest equitable partition finer than it.
///
/// Colours are dense indices `0..k`; new colours are ranks of
/// `(old colour, neighbour counts per colour)`, which keeps the result
/// independent of vertex labels.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    let mut cells = colors.iter().copied().max().map_or(0, |m| m + 1);
    loop {
        let mut keys: Vec<(Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut key = vec![0usize; cells + 1];
                key[0] = colors[v];
                for u in bits(g.neighbors(v)) {
                    key[1 + colors[u]] += 1;
                }
                (key, v)
            })
            .collect();
        keys.sort();
        let mut next = 0;
        for idx in 0..n {
            if idx > 0 && keys[idx].0 != keys[idx - 1].0 {
                next += 1;
            }
            colors[keys[idx].1] = next;
        }
        let new_cells = if n == 0 { 0 } else { next + 1 };
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u)
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(String, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = g.n();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let code = graph6::encode(&g.permuted_unchecked(&colors));
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colors));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let child: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| {
                if c > target || (c == target && w != v) {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        search(g, child, best);
    }
}

/// Canonical relabeling `perm` (old vertex `v` becomes `perm[v]`) and the
/// resulting graph6 code.
pub fn canonical_labeling(g: &Graph) -> (String, Vec<usize>) {
    let mut best = None;
    search(g, vec![0; g.n()], &mut best);
    best.unwrap_or_else(|| (graph6::encode(g), Vec::new()))
}

/// Isomorphism-invariant code: equal for two graphs iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> String {
    canonical_labeling(g).0
}

pub fn canonical_form(g: &Graph) -> Graph {
    let (_, perm) = canonical_labeling(g);
    g.permuted_unchecked(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::enumerate::LabeledGraphs;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn isomorphic_constructions_agree() {
        let a = join(&complete_graph(1).unwrap(), &turan_graph(5, 2).unwrap()).unwrap();
        let b = complete_multipartite(&MultipartiteSpec::new(vec![2, 3, 1]).unwrap()).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn distinguishes_small_graphs() {
        let p3 = path_graph(3).unwrap();
        let edge_plus_isolate = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_ne!(canonical_code(&p3), canonical_code(&edge_plus_isolate));
        assert_ne!(canonical_code(&cycle_graph(6).unwrap()), canonical_code(&disjoint_copies(&complete_graph(3).unwrap(), 2).unwrap()));
    }

    #[test]
    fn relabeled_two_triangles() {
        let g = disjoint_copies(&complete_graph(3).unwrap(), 2).unwrap();
        let h = g.permuted(&[5, 0, 3, 1, 4, 2]).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_eq!(canonical_form(&h), canonical_form(&g));
    }

    #[test]
    fn canonical_form_encodes_to_code() {
        let g = flower(3, 3, 4).unwrap();
        let (code, _) = canonical_labeling(&g);
        assert_eq!(graph6::encode(&canonical_form(&g)), code);
        assert_eq!(canonical_code(&Graph::empty(0).unwrap()), "?");
    }

    /// The number of isomorphism classes of graphs on n vertices (OEIS A000088).
    #[test]
    fn class_counts_match_known_values() {
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            let codes: HashSet<String> = LabeledGraphs::new(n).unwrap().map(|g| canonical_code(&g)).collect();
            assert_eq!(codes.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn invariant_under_random_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let samples = [
            flower(3, 3, 3).unwrap(),
            cycle_graph(7).unwrap(),
            k3_join_empty(8).unwrap(),
            disjoint_union(&complete_graph(5).unwrap(), &path_graph(4).unwrap()).unwrap(),
            Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 4), (2, 6)]).unwrap(),
        ];
        for g in &samples {
            let code = canonical_code(g);
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_code(&g.permuted(&perm).unwrap()), code);
            }
        }
    }

    #[test]
    fn petersen_graph() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let h = g.permuted(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]).unwrap();
        assert!(is_isomorphic(&g, &h));
        let mut c = g.clone();
        c.remove_edge(0, 1).unwrap();
        c.add_edge(0, 2).unwrap();
        assert!(!is_isomorphic(&g, &c));
    }
}
