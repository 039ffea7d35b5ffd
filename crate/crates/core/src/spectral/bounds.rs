use crate::clique::{clique_degrees, clique_number, enumerate_cliques};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `C(n, k)` as a float; exact for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `(min_i d(i), max_i d(i))` over `r`-clique degrees; these bracket `μ_r(G)`.
pub fn row_sum_bounds(g: &Graph, r: usize) -> Result<(f64, f64)> {
    let d = clique_degrees(g, r)?;
    Ok((d.min() as f64, d.max() as f64))
}

/// `μ_r(G) <= (r/ω) · C(ω, r)^{1/r} · |C_r(G)|^{(r-1)/r}` where `ω` is the clique number.
///
/// Tight for complete regular `ω`-partite graphs.
pub fn liu_bound(g: &Graph, r: usize) -> Result<f64> {
    let count = enumerate_cliques(g, r)?.len();
    let omega = clique_number(g);
    if omega < r {
        return Err(Error::inapplicable(
            "clique-count bound",
            format!("clique number {omega} is below r = {r}"),
        ));
    }
    let (rf, of) = (r as f64, omega as f64);
    Ok(rf / of * binomial(omega, r).powf(1.0 / rf) * (count as f64).powf((rf - 1.0) / rf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(4, 4), 1.0);
        assert_eq!(binomial(3, 4), 0.0);
        assert_eq!(binomial(20, 10), 184756.0);
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(row_sum_bounds(&complete_graph(5).unwrap(), 3).unwrap(), (6.0, 6.0));
        let g = join(&complete_graph(1).unwrap(), &turan_graph(5, 2).unwrap()).unwrap();
        assert_eq!(row_sum_bounds(&g, 3).unwrap(), (2.0, 6.0));
        assert_eq!(row_sum_bounds(&cycle_graph(5).unwrap(), 3).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn liu_examples() {
        let oct = complete_multipartite(&MultipartiteSpec::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert!((liu_bound(&oct, 2).unwrap() - 4.0).abs() < 1e-12);
        assert!((liu_bound(&oct, 3).unwrap() - 4.0).abs() < 1e-12);
        let g = k3_join_empty(5).unwrap();
        let expected = 0.75 * 4f64.powf(1.0 / 3.0) * 7f64.powf(2.0 / 3.0);
        assert!((liu_bound(&g, 3).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 4.356589).abs() < 1e-6);
        assert!(matches!(liu_bound(&cycle_graph(5).unwrap(), 3), Err(Error::Inapplicable { .. })));
    }
}
