//! Ordered map-reduce over a graph population.
//!
//! Work is cut into fixed chunks that are folded independently (in parallel
//! when the `parallel` feature is on) and merged strictly in chunk order, so
//! results never depend on the number of workers.

use std::fs::File;
use std::io::BufReader;

use super::Source;
use crate::enumerate::LabeledGraphs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::read_catalog;

const LABELED_CHUNK: u64 = 1 << 12;
const CATALOG_BATCH: usize = 1 << 15;
const CATALOG_CHUNK: usize = 512;

/// Runs chunk closures either on a rayon pool or on the calling thread.
pub(crate) struct Executor {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
    sequential: bool,
}

impl Executor {
    /// `None` uses the global rayon pool, `Some(1)` stays on the calling thread.
    pub(crate) fn new(jobs: Option<usize>) -> Result<Self> {
        if jobs == Some(0) {
            return Err(Error::invalid("worker count must be positive"));
        }
        #[cfg(feature = "parallel")]
        {
            let pool = match jobs {
                Some(j) if j > 1 => Some(
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(j)
                        .build()
                        .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?,
                ),
                _ => None,
            };
            Ok(Executor {
                pool,
                sequential: jobs == Some(1),
            })
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(Executor { sequential: true })
        }
    }

    /// `(0..count).map(f)` with results in index order.
    pub(crate) fn map<A, F>(&self, count: usize, f: F) -> Vec<A>
    where
        A: Send,
        F: Fn(usize) -> A + Sync + Send,
    {
        if self.sequential || count <= 1 {
            return (0..count).map(f).collect();
        }
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            let run = || (0..count).into_par_iter().map(&f).collect();
            match &self.pool {
                Some(pool) => pool.install(run),
                None => run(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..count).map(f).collect()
        }
    }
}

/// Folds every graph of `source` (each with its index: edge mask or catalog
/// line) and merges chunk results in order.
///
/// The first error in source order wins.
pub(crate) fn fold_source<A, I, F, M>(source: &Source, n: usize, exec: &Executor, init: I, fold: F, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, u64, &Graph) -> Result<()> + Sync + Send,
    M: Fn(&mut A, A),
{
    let mut total = init();
    match source {
        Source::LabeledEnumeration => {
            let graphs = LabeledGraphs::new(n)?;
            let count = LabeledGraphs::count(&graphs);
            let chunks = count.div_ceil(LABELED_CHUNK) as usize;
            let results: Vec<Result<A>> = exec.map(chunks, |c| {
                let mut acc = init();
                let start = c as u64 * LABELED_CHUNK;
                for mask in start..(start + LABELED_CHUNK).min(count) {
                    fold(&mut acc, mask, &graphs.graph_at(mask))?;
                }
                Ok(acc)
            });
            for r in results {
                merge(&mut total, r?);
            }
        }
        Source::Catalog(path) => {
            let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut lines = read_catalog(BufReader::new(file));
            loop {
                let mut batch: Vec<(usize, Graph)> = Vec::with_capacity(CATALOG_BATCH);
                for item in lines.by_ref().take(CATALOG_BATCH) {
                    let (line, g) = item?;
                    if g.n() != n {
                        return Err(Error::Catalog {
                            line,
                            message: format!("graph has {} vertices, sweep expects {n}", g.n()),
                        });
                    }
                    batch.push((line, g));
                }
                if batch.is_empty() {
                    break;
                }
                let chunks = batch.len().div_ceil(CATALOG_CHUNK);
                let results: Vec<Result<A>> = exec.map(chunks, |c| {
                    let mut acc = init();
                    for (line, g) in batch.iter().skip(c * CATALOG_CHUNK).take(CATALOG_CHUNK) {
                        fold(&mut acc, *line as u64, g)?;
                    }
                    Ok(acc)
                });
                for r in results {
                    merge(&mut total, r?);
                }
            }
        }
    }
    Ok(total)
}
