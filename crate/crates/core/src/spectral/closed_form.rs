//! Exact spectral radii for complete multipartite graphs and `K_3 ∨ (n-3)K_1`.

use crate::canon::is_isomorphic;
use crate::construct::{k3_join_empty, MultipartiteSpec};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

use super::{Method, SpectralResult};

/// `μ_r` of a complete `r`-partite graph: `(Π |V_i|)^{(r-1)/r}`.
pub fn mu_complete_multipartite(spec: &MultipartiteSpec, r: usize) -> Result<f64> {
    if r < 2 {
        return Err(Error::invalid(format!("clique order must be at least 2, got {r}")));
    }
    if spec.parts().len() != r {
        return Err(Error::inapplicable(
            "multipartite closed form",
            format!("{} parts given but the formula needs exactly r = {r}", spec.parts().len()),
        ));
    }
    let product: f64 = spec.parts().iter().map(|&p| p as f64).product();
    let rf = r as f64;
    Ok(product.powf((rf - 1.0) / rf))
}

fn check_km_join_range(n: usize, m: usize, r: usize) -> Result<()> {
    if m < 1 || m + 1 > r || r > n {
        return Err(Error::inapplicable(
            "K_m ∨ T_{r-m}(n-m) closed form",
            format!("needs 2 <= m+1 <= r <= n, got n={n}, m={m}, r={r}"),
        ));
    }
    Ok(())
}

/// `μ_r(K_m ∨ T_{r-m}(n-m)) = (Π_{i=1}^{r-m} ⌊(n-m-1+i)/(r-m)⌋)^{(r-1)/r}`.
pub fn mu_km_join_turan(n: usize, m: usize, r: usize) -> Result<f64> {
    check_km_join_range(n, m, r)?;
    let t = r - m;
    let product: f64 = (1..=t).map(|i| ((n - m - 1 + i) / t) as f64).product();
    let rf = r as f64;
    Ok(product.powf((rf - 1.0) / rf))
}

/// `((n-r)/(r-m))^{(r-1)(r-m)/r}`, a strict lower bound for [`mu_km_join_turan`].
pub fn km_join_turan_lower_bound(n: usize, m: usize, r: usize) -> Result<f64> {
    check_km_join_range(n, m, r)?;
    let (rf, t) = (r as f64, (r - m) as f64);
    Ok(((n - r) as f64 / t).powf((rf - 1.0) * t / rf))
}

/// `μ_3(K_3 ∨ (n-3)K_1)` for `n >= 5`, via the real root of `s³ - s = 2√3(n-3)`.
pub fn mu3_k3_join_empty(n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::inapplicable("K_3 ∨ (n-3)K_1 closed form", format!("needs n >= 5, got {n}")));
    }
    let m = (n - 3) as f64;
    let a = 3f64.sqrt() * m;
    let b = (3.0 * m * m - 1.0 / 27.0).sqrt();
    // a - b written as (a² - b²)/(a + b) to avoid cancellation.
    let s = (a + b).cbrt() + ((1.0 / 27.0) / (a + b)).cbrt();
    Ok(s * s)
}

/// Part sizes if `g` is complete multipartite (non-adjacency is an equivalence
/// relation), ordered by each part's lowest vertex.
pub fn recognize_multipartite(g: &Graph) -> Option<MultipartiteSpec> {
    let all = g.vertex_mask();
    let mut seen = 0u64;
    let mut parts = Vec::new();
    for v in 0..g.n() {
        if seen >> v & 1 == 1 {
            continue;
        }
        let class = all & !g.neighbors(v);
        if bits(class).any(|u| all & !g.neighbors(u) != class) {
            return None;
        }
        seen |= class;
        parts.push(class.count_ones() as usize);
    }
    MultipartiteSpec::new(parts).ok()
}

/// `μ_r(G)` from a closed form, refusing graphs outside the formulas' hypotheses.
///
/// Covers complete `r`-partite graphs and, for `r = 3`, `K_3 ∨ (n-3)K_1` with `n >= 5`.
pub fn closed_form_radius(g: &Graph, r: usize) -> Result<SpectralResult> {
    let spec = recognize_multipartite(g);
    let radius = match &spec {
        Some(spec) if spec.parts().len() == r => mu_complete_multipartite(spec, r)?,
        _ if r == 3 && g.n() >= 5 && is_isomorphic(g, &k3_join_empty(g.n())?) => mu3_k3_join_empty(g.n())?,
        _ => {
            return Err(Error::inapplicable(
                "closed form",
                format!("graph is neither complete {r}-partite nor K_3 ∨ (n-3)K_1 with r = 3, n >= 5"),
            ))
        }
    };
    Ok(SpectralResult {
        order: r,
        radius,
        eigenvector: None,
        iterations: 0,
        residual: 0.0,
        method: Method::ClosedFormMultipartite,
    })
}
