//! Exhaustive extremal sweeps over graphs without `k` vertex-disjoint
//! `r`-cliques.
//!
//! A sweep walks a population of graphs on `n` vertices (every labeled graph
//! for `n <= 7`, otherwise a graph6 catalog), keeps the admissible ones,
//! evaluates an objective and reports the maximizers up to isomorphism.

mod engine;
mod report;
mod verify;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;

pub use report::{format_value, report_json, round_json, round_value, write_csv, write_json, VALUE_DIGITS};
pub use verify::{
    disjoint_clique_count_probe, explore_spectra_sum_extremal, generalized_turan, mu3_candidate_comparison,
    top_order_threshold, verify_mu3_extremal, verify_top_order_extremal, verify_triangle_count_extremal,
    CandidateComparison, Exploration, ProbeStatus, CountProbe, VerifyOptions, Verification,
};

use crate::canon::canonical_labeling;
use crate::clique::{clique_count, disjoint_cliques_in, enumerate_cliques, has_disjoint_pair, CliqueSet};
use crate::enumerate::MAX_ENUMERATION_VERTICES;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6;
use crate::spectral::{spectral_radius, spectral_radius_of_cliques, IterationOptions};
use engine::{fold_source, Executor};

/// Environment variable naming a directory of `graph{n}.g6` catalogs.
pub const CATALOG_DIR_ENV: &str = "CLIQUE_SPECTRA_CATALOG_DIR";

/// Quantity maximised by a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Objective {
    /// `μ_k(G)`.
    Mu { k: usize },
    /// `μ_from(G) + ... + μ_to(G)`; orders above `n` contribute zero.
    MuSum { from: usize, to: usize },
    /// Number of `k`-cliques.
    CliqueCount { k: usize },
}

impl Objective {
    /// Short comma-free label used in CSV output.
    pub fn label(&self) -> String {
        match *self {
            Objective::Mu { k } => format!("mu:{k}"),
            Objective::MuSum { from, to } => format!("mu-sum:{from}-{to}"),
            Objective::CliqueCount { k } => format!("clique-count:{k}"),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Objective::Mu { k } | Objective::CliqueCount { k } => (2..=n.max(2)).contains(&k),
            Objective::MuSum { from, to } => from >= 2 && from <= to && from <= n.max(2) && to <= MAX_VERTICES,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!("objective {} does not fit graphs on {n} vertices", self.label())))
        }
    }
}

/// Where the graphs of a sweep come from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Every labeled graph on `n` vertices, in edge-mask order.
    LabeledEnumeration,
    /// One graph6 line per graph, e.g. the output of `geng`.
    Catalog(PathBuf),
}

impl Source {
    /// Labeled enumeration for `n <= 7`, otherwise `graph{n}.g6` under
    /// [`CATALOG_DIR_ENV`].
    pub fn default_for(n: usize) -> Result<Source> {
        if n <= MAX_ENUMERATION_VERTICES {
            return Ok(Source::LabeledEnumeration);
        }
        match std::env::var_os(CATALOG_DIR_ENV) {
            Some(dir) => Ok(Source::Catalog(PathBuf::from(dir).join(format!("graph{n}.g6")))),
            None => Err(Error::invalid(format!(
                "n = {n} is too large for labeled enumeration; pass a graph6 catalog \
                 (e.g. `geng {n} > graph{n}.g6`) or set {CATALOG_DIR_ENV}"
            ))),
        }
    }
}

/// Parameters of one sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepConfig {
    pub n: usize,
    /// Order of the forbidden disjoint cliques.
    pub r: usize,
    /// Graphs with this many pairwise disjoint `r`-cliques are excluded.
    pub forbidden_copies: usize,
    pub objective: Objective,
    pub source: Source,
    pub iteration: IterationOptions,
    /// Values within this distance of the best one count as ties.
    pub equality_slack: f64,
    /// Worker threads; `None` lets rayon decide. Never affects results.
    #[serde(skip)]
    pub jobs: Option<usize>,
    /// Keep one row per admitted graph for CSV output.
    #[serde(skip)]
    pub record_rows: bool,
}

impl SweepConfig {
    /// Forbids two disjoint `r`-cliques; labeled enumeration; default
    /// tolerances.
    pub fn new(n: usize, r: usize, objective: Objective) -> Self {
        SweepConfig {
            n,
            r,
            forbidden_copies: 2,
            objective,
            source: Source::LabeledEnumeration,
            iteration: IterationOptions::default(),
            equality_slack: 1e-8,
            jobs: None,
            record_rows: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_VERTICES {
            return Err(Error::Capacity {
                requested: self.n,
                max: MAX_VERTICES,
            });
        }
        if self.r < 2 {
            return Err(Error::invalid(format!("clique order must be at least 2, got {}", self.r)));
        }
        if self.forbidden_copies == 0 {
            return Err(Error::invalid("forbidden copy count must be positive"));
        }
        self.objective.validate(self.n)?;
        self.iteration.validate()?;
        // ties are only meaningful above the certified bracket width
        if !(self.equality_slack > self.iteration.tol && self.equality_slack.is_finite()) {
            return Err(Error::invalid(format!(
                "equality slack must exceed the tolerance {}, got {}",
                self.iteration.tol, self.equality_slack
            )));
        }
        if self.source == Source::LabeledEnumeration && self.n > MAX_ENUMERATION_VERTICES {
            return Err(Error::invalid(format!(
                "n = {n} is too large for labeled enumeration; pass a graph6 catalog (e.g. `geng {n} > graph{n}.g6`)",
                n = self.n
            )));
        }
        Ok(())
    }

    /// `None` when `g` contains the forbidden configuration, else the objective.
    pub fn evaluate(&self, g: &Graph) -> Result<Option<f64>> {
        let base = enumerate_cliques(g, self.r)?;
        let admitted = if self.forbidden_copies == 2 {
            !has_disjoint_pair(&base)
        } else {
            disjoint_cliques_in(&base, self.forbidden_copies).is_none()
        };
        if !admitted {
            return Ok(None);
        }
        self.objective_value(g, &base).map(Some)
    }

    fn mu(&self, g: &Graph, base: &CliqueSet, k: usize) -> Result<f64> {
        let res = if k == self.r {
            spectral_radius_of_cliques(base, &self.iteration)?
        } else {
            spectral_radius(g, k, &self.iteration)?
        };
        Ok(res.radius)
    }

    fn objective_value(&self, g: &Graph, base: &CliqueSet) -> Result<f64> {
        match self.objective {
            Objective::Mu { k } => self.mu(g, base, k),
            Objective::MuSum { from, to } => {
                let mut total = 0.0;
                for k in from..=to.min(g.n()) {
                    total += self.mu(g, base, k)?;
                }
                Ok(total)
            }
            Objective::CliqueCount { k } => Ok(if k == self.r { base.len() } else { clique_count(g, k)? } as f64),
        }
    }
}

/// One maximizing isomorphism class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Maximizer {
    /// Canonical graph6 code.
    pub graph6: String,
    /// Objective recomputed on the canonical representative.
    pub value: f64,
    /// Number of graphs in the population belonging to this class.
    pub instances: u64,
}

/// Value of one admitted graph, in population order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    /// Edge mask (labeled enumeration) or line number (catalog).
    pub index: u64,
    pub graph6: String,
    pub value: f64,
}

/// Outcome of [`sweep`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub config: SweepConfig,
    pub examined: u64,
    pub admitted: u64,
    /// Largest recomputed value among the maximizer classes.
    pub best_value: Option<f64>,
    /// Sorted by canonical code.
    pub maximizers: Vec<Maximizer>,
    pub maximizer_instances: u64,
    pub runtime_seconds: f64,
    #[serde(skip)]
    pub rows: Vec<SweepRow>,
}

impl ExtremalReport {
    pub fn maximizer_codes(&self) -> Vec<&str> {
        self.maximizers.iter().map(|m| m.graph6.as_str()).collect()
    }

    /// Whether `value` ties the best value under the configured slack.
    pub fn is_maximal(&self, value: f64) -> bool {
        self.best_value
            .is_some_and(|b| value >= b - self.config.equality_slack)
    }
}

struct Tally {
    examined: u64,
    admitted: u64,
    best: f64,
    candidates: Vec<(Graph, f64)>,
    rows: Vec<SweepRow>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            examined: 0,
            admitted: 0,
            best: f64::NEG_INFINITY,
            candidates: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn offer(&mut self, g: &Graph, value: f64, slack: f64) {
        if value > self.best {
            self.best = value;
            self.candidates.retain(|(_, v)| *v >= value - slack);
        }
        if value >= self.best - slack {
            self.candidates.push((g.clone(), value));
        }
    }

    fn absorb(&mut self, other: Tally, slack: f64) {
        self.examined += other.examined;
        self.admitted += other.admitted;
        self.rows.extend(other.rows);
        for (g, v) in other.candidates {
            self.offer(&g, v, slack);
        }
    }
}

fn at_graph(g: &Graph, e: Error) -> Error {
    Error::AtGraph {
        graph6: graph6::encode(g),
        source: Box::new(e),
    }
}

/// Runs one exhaustive sweep.
///
/// Maximizers are grouped by canonical code and their values recomputed on
/// the canonical representative, so the report is identical for any worker
/// count and for isomorphic populations.
pub fn sweep(config: &SweepConfig) -> Result<ExtremalReport> {
    config.validate()?;
    let started = Instant::now();
    let exec = Executor::new(config.jobs)?;
    let slack = config.equality_slack;
    let tally = fold_source(
        &config.source,
        config.n,
        &exec,
        Tally::new,
        |acc, index, g| {
            acc.examined += 1;
            if let Some(value) = config.evaluate(g).map_err(|e| at_graph(g, e))? {
                acc.admitted += 1;
                acc.offer(g, value, slack);
                if config.record_rows {
                    acc.rows.push(SweepRow {
                        index,
                        graph6: graph6::encode(g),
                        value,
                    });
                }
            }
            Ok(())
        },
        |acc, other| acc.absorb(other, slack),
    )?;

    let mut classes: BTreeMap<String, (Graph, u64)> = BTreeMap::new();
    for (g, _) in &tally.candidates {
        let (code, perm) = canonical_labeling(g);
        classes
            .entry(code)
            .or_insert_with(|| (g.permuted_unchecked(&perm), 0))
            .1 += 1;
    }
    let mut maximizers = Vec::with_capacity(classes.len());
    for (code, (g, instances)) in classes {
        let value = config
            .evaluate(&g)
            .map_err(|e| at_graph(&g, e))?
            .expect("admissibility is invariant under relabeling");
        maximizers.push(Maximizer {
            graph6: code,
            value,
            instances,
        });
    }
    let best_value = maximizers.iter().map(|m| m.value).reduce(f64::max);
    if let Some(best) = best_value {
        maximizers.retain(|m| m.value >= best - slack);
    }
    let maximizer_instances = maximizers.iter().map(|m| m.instances).sum();

    Ok(ExtremalReport {
        config: config.clone(),
        examined: tally.examined,
        admitted: tally.admitted,
        best_value,
        maximizers,
        maximizer_instances,
        runtime_seconds: started.elapsed().as_secs_f64(),
        rows: tally.rows,
    })
}
