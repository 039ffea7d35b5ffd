//! The `r`-clique tensor as an implicit operator and its spectral radius.
//!
//! `(A x^{r-1})_i = Σ_{C ∋ i} Π_{j ∈ C \ {i}} x_j`: the `(r-1)!` orderings of
//! a clique cancel the `1/(r-1)!` entry, so the tensor never needs to be
//! materialised.

mod bounds;
mod closed_form;

pub use bounds::{binomial, liu_bound, row_sum_bounds};
pub use closed_form::{
    closed_form_radius, km_join_turan_lower_bound, mu3_k3_join_empty, mu_complete_multipartite,
    mu_km_join_turan, recognize_multipartite,
};

use serde::Serialize;

use crate::clique::{core_from_cliques, enumerate_cliques, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// How a [`SpectralResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    PowerIteration,
    ClosedFormMultipartite,
    ZeroCliques,
    RowSumRegular,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::PowerIteration => "power-iteration",
            Method::ClosedFormMultipartite => "closed-form-multipartite",
            Method::ZeroCliques => "zero-cliques",
            Method::RowSumRegular => "row-sum-regular",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub order: usize,
    pub radius: f64,
    /// Nonnegative, `Σ x_i^r = 1`, zero outside the chosen component's clique support.
    pub eigenvector: Option<Vec<f64>>,
    pub iterations: usize,
    /// Half-width of the final eigenvalue bracket.
    pub residual: f64,
    pub method: Method,
}

impl SpectralResult {
    fn zero(order: usize) -> Self {
        SpectralResult {
            order,
            radius: 0.0,
            eigenvector: None,
            iterations: 0,
            residual: 0.0,
            method: Method::ZeroCliques,
        }
    }
}

/// Stopping rule and shift for [`power_iteration`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IterationOptions {
    /// Width of the eigenvalue bracket at which iteration stops.
    pub tol: f64,
    pub max_iter: usize,
    /// Diagonal shift added to the tensor; makes the iteration primitive.
    pub shift: f64,
}

impl Default for IterationOptions {
    fn default() -> Self {
        IterationOptions {
            tol: 1e-10,
            max_iter: 200_000,
            shift: 1.0,
        }
    }
}

impl IterationOptions {
    pub fn with_tol(tol: f64) -> Self {
        IterationOptions {
            tol,
            ..Self::default()
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::invalid(format!("tolerance must be positive, got {}", self.tol)));
        }
        if !(self.shift >= 0.0 && self.shift.is_finite()) {
            return Err(Error::invalid(format!("shift must be nonnegative, got {}", self.shift)));
        }
        if self.max_iter == 0 {
            return Err(Error::invalid("max_iter must be positive"));
        }
        Ok(())
    }
}

/// Writes `A x^{r-1}` into `out`, using `carry` as scratch.
///
/// Sums are compensated (Neumaier): a vertex may collect thousands of
/// terms, and plain accumulation then leaves rounding noise above the
/// bracket tolerance.
fn apply_into(cliques: &CliqueSet, x: &[f64], out: &mut [f64], carry: &mut [f64]) {
    out.iter_mut().for_each(|v| *v = 0.0);
    carry.iter_mut().for_each(|v| *v = 0.0);
    let r = cliques.order();
    let mut prefix = [1.0f64; 65];
    for clique in cliques.iter() {
        for (k, &v) in clique.iter().enumerate() {
            prefix[k + 1] = prefix[k] * x[v as usize];
        }
        let mut suffix = 1.0;
        for k in (0..r).rev() {
            let v = clique[k] as usize;
            let term = prefix[k] * suffix;
            let sum = out[v] + term;
            carry[v] += if out[v].abs() >= term.abs() {
                (out[v] - sum) + term
            } else {
                (term - sum) + out[v]
            };
            out[v] = sum;
            suffix *= x[v];
        }
    }
    for (o, c) in out.iter_mut().zip(carry.iter()) {
        *o += c;
    }
}

fn check_len(cliques: &CliqueSet, x: &[f64]) -> Result<()> {
    if x.len() != cliques.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: cliques.vertex_count(),
            found: x.len(),
        });
    }
    if x.iter().any(|&v| !(v >= 0.0 && v.is_finite())) {
        return Err(Error::invalid("vector entries must be finite and nonnegative"));
    }
    Ok(())
}

/// `A_r(G) x^{r-1}` for the clique tensor of `cliques`.
pub fn apply_clique_tensor(cliques: &CliqueSet, x: &[f64]) -> Result<Vec<f64>> {
    check_len(cliques, x)?;
    let mut out = vec![0.0; x.len()];
    let mut carry = vec![0.0; x.len()];
    apply_into(cliques, x, &mut out, &mut carry);
    Ok(out)
}

/// `x^T A x^{r-1} = r Σ_C Π_{j∈C} x_j` for a nonnegative `x` with `Σ x_i^r = 1`.
///
/// Never exceeds the spectral radius.
pub fn rayleigh(cliques: &CliqueSet, x: &[f64]) -> Result<f64> {
    check_len(cliques, x)?;
    let r = cliques.order();
    let norm: f64 = x.iter().map(|v| v.powi(r as i32)).sum();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::invalid(format!("vector is not normalised: Σ x_i^{r} = {norm}")));
    }
    let sum: f64 = cliques
        .iter()
        .map(|c| c.iter().map(|&v| x[v as usize]).product::<f64>())
        .sum();
    Ok(r as f64 * sum)
}

#[inline]
fn root(y: f64, degree: usize) -> f64 {
    match degree {
        1 => y,
        2 => y.sqrt(),
        3 => y.cbrt(),
        d => y.powf(1.0 / d as f64),
    }
}

/// Shifted power iteration for the Perron eigenpair of the clique tensor.
///
/// Each step forms `y = A x^{r-1} + shift · x^{[r-1]}` and tracks
/// `λ_min = min_i y_i / x_i^{r-1}` and `λ_max = max_i y_i / x_i^{r-1}` over the
/// clique support, which bracket `μ_r + shift` for any positive `x`. It stops
/// once the bracket is narrower than `tol`; otherwise `x ← y^{[1/(r-1)]}`,
/// rescaled to unit `r`-norm.
///
/// The cliques must form a single clique-connected component;
/// [`spectral_radius`] arranges this.
pub fn power_iteration(cliques: &CliqueSet, opts: &IterationOptions) -> Result<SpectralResult> {
    opts.validate()?;
    let r = cliques.order();
    if cliques.is_empty() {
        return Ok(SpectralResult::zero(r));
    }
    let n = cliques.vertex_count();
    let support: Vec<usize> = bits(cliques.support()).collect();
    let start = (1.0 / support.len() as f64).powf(1.0 / r as f64);
    let mut x = vec![0.0; n];
    for &v in &support {
        x[v] = start;
    }
    let mut y = vec![0.0; n];
    let mut carry = vec![0.0; n];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for iteration in 1..=opts.max_iter {
        apply_into(cliques, &x, &mut y, &mut carry);
        lo = f64::INFINITY;
        hi = f64::NEG_INFINITY;
        for &v in &support {
            let p = x[v].powi(r as i32 - 1);
            let shifted = y[v] + opts.shift * p;
            let ratio = shifted / p;
            lo = f64::min(lo, ratio);
            hi = f64::max(hi, ratio);
            y[v] = shifted;
        }
        if hi - lo <= opts.tol {
            return Ok(SpectralResult {
                order: r,
                radius: 0.5 * (lo + hi) - opts.shift,
                eigenvector: Some(x),
                iterations: iteration,
                residual: 0.5 * (hi - lo),
                method: Method::PowerIteration,
            });
        }
        let mut norm = 0.0;
        for &v in &support {
            let next = root(y[v], r - 1);
            x[v] = next;
            norm += next.powi(r as i32);
        }
        let scale = 1.0 / norm.powf(1.0 / r as f64);
        for &v in &support {
            x[v] *= scale;
        }
    }
    Err(Error::NotConverged {
        order: r,
        iterations: opts.max_iter,
        lower: lo - opts.shift,
        upper: hi - opts.shift,
    })
}

/// When every support vertex lies in the same number `d` of cliques the
/// uniform vector is an exact eigenvector with eigenvalue `d`.
fn regular_result(cliques: &CliqueSet) -> Option<SpectralResult> {
    let degrees = cliques.degrees();
    let support = cliques.support();
    let mut values = bits(support).map(|v| degrees.d[v]);
    let first = values.next()?;
    if values.any(|d| d != first) {
        return None;
    }
    let r = cliques.order();
    let m = support.count_ones() as f64;
    let entry = (1.0 / m).powf(1.0 / r as f64);
    let mut x = vec![0.0; cliques.vertex_count()];
    for v in bits(support) {
        x[v] = entry;
    }
    Some(SpectralResult {
        order: r,
        radius: first as f64,
        eigenvector: Some(x),
        iterations: 0,
        residual: 0.0,
        method: Method::RowSumRegular,
    })
}

/// `μ_r` from a precomputed clique set: maximum over the components of the
/// clique core.
pub fn spectral_radius_of_cliques(cliques: &CliqueSet, opts: &IterationOptions) -> Result<SpectralResult> {
    opts.validate()?;
    if cliques.is_empty() {
        return Ok(SpectralResult::zero(cliques.order()));
    }
    let core = core_from_cliques(cliques.vertex_count(), cliques);
    let support = cliques.support();
    let comps: Vec<u64> = core
        .component_masks()
        .into_iter()
        .filter(|&c| c & support != 0)
        .collect();
    let mut best: Option<SpectralResult> = None;
    let mut failure: Option<Error> = None;
    for comp in comps.iter().copied() {
        let owned;
        let part = if comps.len() == 1 {
            cliques
        } else {
            owned = cliques.restricted_to(comp);
            &owned
        };
        let outcome = match regular_result(part) {
            Some(res) => Ok(res),
            None => power_iteration(part, opts),
        };
        match outcome {
            Ok(res) => {
                if best.as_ref().is_none_or(|b| res.radius > b.radius) {
                    best = Some(res);
                }
            }
            Err(e @ Error::NotConverged { .. }) => {
                let width = |e: &Error| match e {
                    Error::NotConverged { lower, upper, .. } => upper - lower,
                    _ => 0.0,
                };
                if failure.as_ref().is_none_or(|f| width(&e) > width(f)) {
                    failure = Some(e);
                }
            }
            Err(e) => return Err(e),
        }
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(best.expect("at least one component carries a clique")),
    }
}

/// `μ_r(G)`, computed component by component on the clique core.
pub fn spectral_radius(g: &Graph, r: usize, opts: &IterationOptions) -> Result<SpectralResult> {
    spectral_radius_of_cliques(&enumerate_cliques(g, r)?, opts)
}

/// `μ_k(G) + μ_{k+1}(G) + ... + μ_upper(G)`.
pub fn spectra_sum(g: &Graph, k: usize, upper: usize, opts: &IterationOptions) -> Result<f64> {
    if k < 2 || k > upper {
        return Err(Error::invalid(format!("spectra sum needs 2 <= k <= upper, got k={k}, upper={upper}")));
    }
    let mut total = 0.0;
    for order in k..=upper {
        if order > g.n() {
            break;
        }
        total += spectral_radius(g, order, opts)?.radius;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{clique_degrees, enumerate_cliques};
    use crate::construct::*;
    use crate::enumerate::LabeledGraphs;

    fn cliques(g: &Graph, r: usize) -> CliqueSet {
        enumerate_cliques(g, r).unwrap()
    }

    fn opts() -> IterationOptions {
        IterationOptions::default()
    }

    #[test]
    fn apply_examples() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(apply_clique_tensor(&cliques(&k3, 3), &[1.0; 3]).unwrap(), vec![1.0; 3]);
        let k4 = complete_graph(4).unwrap();
        let d: Vec<f64> = clique_degrees(&k4, 3).unwrap().d.iter().map(|&v| v as f64).collect();
        assert_eq!(apply_clique_tensor(&cliques(&k4, 3), &[1.0; 4]).unwrap(), d);
        let e = Graph::empty(4).unwrap();
        assert_eq!(apply_clique_tensor(&cliques(&e, 3), &[0.3, 1.0, 2.0, 5.0]).unwrap(), vec![0.0; 4]);
        assert!(matches!(
            apply_clique_tensor(&cliques(&k4, 3), &[1.0; 3]),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        ));
        assert!(apply_clique_tensor(&cliques(&k4, 3), &[1.0, -1.0, 1.0, 1.0]).is_err());
    }

    /// Compares the implicit operator with a brute-force sum over every
    /// ordered tuple of vertices, weighting clique tuples by `1/(r-1)!`.
    #[test]
    fn apply_matches_dense_tensor_sum() {
        fn dense(g: &Graph, r: usize, x: &[f64]) -> Vec<f64> {
            let n = g.n();
            let fact: f64 = (1..r).map(|v| v as f64).product();
            let mut out = vec![0.0; n];
            let mut idx = vec![0usize; r];
            loop {
                let mut mask = 0u64;
                let mut distinct = true;
                for &v in &idx {
                    if mask >> v & 1 == 1 {
                        distinct = false;
                    }
                    mask |= 1 << v;
                }
                if distinct && crate::graph::bits(mask).all(|v| g.neighbors(v) & mask == mask & !(1 << v)) {
                    out[idx[0]] += idx[1..].iter().map(|&v| x[v]).product::<f64>() / fact;
                }
                let mut pos = r;
                loop {
                    if pos == 0 {
                        return out;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < n {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let x = [0.3, 0.9, 0.5, 1.2, 0.7, 0.1];
        for r in 2..=4 {
            let got = apply_clique_tensor(&cliques(&g, r), &x).unwrap();
            let want = dense(&g, r, &x);
            for (a, b) in got.iter().zip(&want) {
                assert!((a - b).abs() < 1e-12, "r={r}: {got:?} vs {want:?}");
            }
        }
    }

    #[test]
    fn rayleigh_examples() {
        let k3 = complete_graph(3).unwrap();
        let x = vec![3f64.powf(-1.0 / 3.0); 3];
        assert!((rayleigh(&cliques(&k3, 3), &x).unwrap() - 1.0).abs() < 1e-12);
        let g = disjoint_union(&k3, &complete_graph(1).unwrap()).unwrap();
        assert_eq!(rayleigh(&cliques(&g, 3), &[0.0, 0.0, 0.0, 1.0]).unwrap(), 0.0);
        assert!(rayleigh(&cliques(&k3, 3), &[1.0, 1.0, 1.0]).is_err());
    }

    #[test]
    fn power_iteration_examples() {
        let k5 = power_iteration(&cliques(&complete_graph(5).unwrap(), 3), &opts()).unwrap();
        assert!((k5.radius - 6.0).abs() < 1e-9);
        assert_eq!(k5.method, Method::PowerIteration);
        let k4 = power_iteration(&cliques(&complete_graph(4).unwrap(), 3), &opts()).unwrap();
        assert!((k4.radius - 3.0).abs() < 1e-9);
        let oct = complete_multipartite(&MultipartiteSpec::new(vec![2, 2, 2]).unwrap()).unwrap();
        let res = power_iteration(&cliques(&oct, 3), &opts()).unwrap();
        assert!((res.radius - 4.0).abs() < 1e-9);
        let empty = power_iteration(&cliques(&Graph::empty(3).unwrap(), 3), &opts()).unwrap();
        assert_eq!((empty.radius, empty.method), (0.0, Method::ZeroCliques));
    }

    #[test]
    fn power_iteration_rejects_bad_options() {
        let c = cliques(&complete_graph(4).unwrap(), 3);
        for bad in [
            IterationOptions { tol: 0.0, ..opts() },
            IterationOptions { shift: -1.0, ..opts() },
            IterationOptions { max_iter: 0, ..opts() },
        ] {
            assert!(matches!(power_iteration(&c, &bad), Err(Error::InvalidArgument(_))));
        }
    }

    #[test]
    fn non_convergence_reports_bracket() {
        let g = k3_join_empty(9).unwrap();
        let res = power_iteration(&cliques(&g, 3), &IterationOptions { max_iter: 3, ..opts() });
        match res {
            Err(Error::NotConverged { order, iterations, lower, upper }) => {
                assert_eq!((order, iterations), (3, 3));
                let exact = mu3_k3_join_empty(9).unwrap();
                assert!(lower <= exact && exact <= upper, "{lower} {exact} {upper}");
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn spectral_radius_examples() {
        let k5k1 = disjoint_union(&complete_graph(5).unwrap(), &complete_graph(1).unwrap()).unwrap();
        let res = spectral_radius(&k5k1, 3, &opts()).unwrap();
        assert!((res.radius - 6.0).abs() < 1e-9);
        let x = res.eigenvector.unwrap();
        assert_eq!(x[5], 0.0);
        let mut g0 = k5k1.clone();
        g0.add_edge(4, 5).unwrap();
        assert!((spectral_radius(&g0, 3, &opts()).unwrap().radius - 6.0).abs() < 1e-9);
        let c6 = spectral_radius(&cycle_graph(6).unwrap(), 3, &opts()).unwrap();
        assert_eq!(c6.radius, 0.0);
        assert_eq!(c6.method, Method::ZeroCliques);
    }

    #[test]
    fn component_reduction_takes_the_maximum() {
        let k4 = complete_graph(4).unwrap();
        let joined = k3_join_empty(6).unwrap();
        let g = disjoint_union(&disjoint_union(&k4, &joined).unwrap(), &cycle_graph(5).unwrap()).unwrap();
        let total = spectral_radius(&g, 3, &opts()).unwrap();
        let parts = [
            spectral_radius(&k4, 3, &opts()).unwrap().radius,
            spectral_radius(&joined, 3, &opts()).unwrap().radius,
        ];
        assert_eq!(total.radius, parts[1]);
        assert!(parts[1] > parts[0]);
        let x = total.eigenvector.unwrap();
        assert!(x[..4].iter().all(|&v| v == 0.0));
        assert!(x[4..10].iter().all(|&v| v > 0.0));
        assert!(x[10..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn eigenvector_is_normalised_and_satisfies_equation() {
        let tol = 1e-10;
        let graphs = [
            k3_join_empty(8).unwrap(),
            flower(3, 3, 3).unwrap(),
            join(&complete_graph(1).unwrap(), &turan_graph(7, 2).unwrap()).unwrap(),
            flower(3, 4, 3).unwrap(),
        ];
        for g in &graphs {
            for r in 2..=4 {
                let c = cliques(g, r);
                if c.is_empty() {
                    continue;
                }
                let res = power_iteration(&c, &IterationOptions::with_tol(tol)).unwrap();
                let x = res.eigenvector.clone().unwrap();
                let norm: f64 = x.iter().map(|v| v.powi(r as i32)).sum();
                assert!((norm - 1.0).abs() < 1e-12);
                assert!(res.residual <= tol);
                let ax = apply_clique_tensor(&c, &x).unwrap();
                for v in 0..g.n() {
                    let gap = (ax[v] - res.radius * x[v].powi(r as i32 - 1)).abs();
                    assert!(gap <= 10.0 * tol, "r={r} v={v} gap={gap}");
                }
            }
        }
    }

    #[test]
    fn bounds_hold_on_small_graphs() {
        for g in LabeledGraphs::new(5).unwrap() {
            for r in 2..=4 {
                let mu = spectral_radius(&g, r, &opts()).unwrap().radius;
                let (lo, hi) = row_sum_bounds(&g, r).unwrap();
                assert!(lo - 1e-9 <= mu && mu <= hi + 1e-9);
                if let Ok(b) = liu_bound(&g, r) {
                    assert!(mu <= b + 1e-9);
                }
            }
        }
    }

    #[test]
    fn spectra_sum_examples() {
        for n in 5..=8 {
            let g = k3_join_empty(n).unwrap();
            let s = spectra_sum(&g, 4, 5, &opts()).unwrap();
            assert!((s - ((n - 3) as f64).powf(0.75)).abs() < 1e-9);
        }
        let s = spectra_sum(&complete_graph(5).unwrap(), 5, 5, &opts()).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
        assert_eq!(spectra_sum(&cycle_graph(7).unwrap(), 3, 5, &opts()).unwrap(), 0.0);
        assert!(spectra_sum(&cycle_graph(7).unwrap(), 4, 3, &opts()).is_err());
    }
}
