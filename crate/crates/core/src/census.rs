//! Exhaustive agreement check between the classifier and the exact search
//! over all small connected members of S.

use std::collections::BTreeMap;

use crate::classifier;
use crate::coloring::verify_odd;
use crate::error::Result;
use crate::multigraph::MultiGraph;
use crate::oracle::{self, enumerate, SearchConfig};

/// How a batch of independent graph checks is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Runner {
    Sequential,
    /// Data-parallel over graphs; `None` uses the global thread pool.
    Parallel(Option<usize>),
}

impl Runner {
    /// Parallel when the `parallel` feature is on, sized by
    /// `ODDCHROME_THREADS` when set; a value of 1 means sequential.
    pub fn from_env() -> Self {
        let threads = std::env::var("ODDCHROME_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok());
        match threads {
            Some(1) => Runner::Sequential,
            _ if !cfg!(feature = "parallel") => Runner::Sequential,
            t => Runner::Parallel(t),
        }
    }

    /// `f` applied to every item, results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Runner::Sequential => items.iter().map(f).collect(),
            Runner::Parallel(threads) => parallel_map(items, f, threads),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F, threads: Option<usize>) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.par_iter().map(&f).collect(),
        },
        None => items.par_iter().map(&f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F, _threads: Option<usize>) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Result of checking one graph.
#[derive(Clone, Debug)]
pub struct GraphCheck {
    pub n: usize,
    pub m: usize,
    /// Classifier value, or the error message it raised.
    pub classifier: std::result::Result<u32, String>,
    pub oracle: std::result::Result<u32, String>,
    /// For index 4: whether a witness edge with a verified 3-coloring of
    /// `G - e` was produced.
    pub witness_ok: Option<bool>,
}

impl GraphCheck {
    pub fn agrees(&self) -> bool {
        matches!((&self.classifier, &self.oracle), (Ok(a), Ok(b)) if a == b)
    }
}

/// Classifier value (coloring verified), oracle value and, for index 4, a
/// witness check.
pub fn check_graph(g: &MultiGraph, cfg: &SearchConfig) -> GraphCheck {
    let classifier = classifier::classify(g).and_then(|r| {
        if verify_odd(g, &r.coloring)? {
            Ok(r.chi)
        } else {
            Err(crate::Error::ConstructionDivergence("unverified classifier coloring".into()))
        }
    });
    let witness_ok = match classifier {
        Ok(4) => Some(
            classifier::witness_edge(g)
                .and_then(|w| verify_odd(&w.graph, &w.coloring))
                .unwrap_or(false),
        ),
        _ => None,
    };
    GraphCheck {
        n: g.n(),
        m: g.m(),
        classifier: classifier.map_err(|e| e.to_string()),
        oracle: oracle::chi(g, cfg).map(|r| r.chi).map_err(|e| e.to_string()),
        witness_ok,
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusReport {
    /// (n, m, chi) -> number of graphs, chi as reported by the oracle.
    pub table: BTreeMap<(usize, usize, u32), usize>,
    pub graphs: usize,
    pub disagreements: Vec<(MultiGraph, GraphCheck)>,
    pub witnesses: usize,
    pub witness_failures: Vec<MultiGraph>,
}

impl CensusReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.witness_failures.is_empty()
    }

    /// One line per (n, m, chi) cell.
    pub fn render(&self) -> String {
        let mut out = String::from("n\tm\tchi\tcount\n");
        for (&(n, m, chi), &count) in &self.table {
            out.push_str(&format!("{n}\t{m}\t{chi}\t{count}\n"));
        }
        out.push_str(&format!(
            "graphs={} disagreements={} witnesses={} witness_failures={}\n",
            self.graphs,
            self.disagreements.len(),
            self.witnesses,
            self.witness_failures.len()
        ));
        out
    }
}

/// Check a batch of graphs and tabulate.
pub fn check_all(graphs: &[MultiGraph], runner: Runner, cfg: &SearchConfig) -> CensusReport {
    let checks = runner.map(graphs, |g| check_graph(g, cfg));
    let mut report = CensusReport {
        graphs: graphs.len(),
        ..Default::default()
    };
    for (g, c) in graphs.iter().zip(checks) {
        if let Ok(chi) = c.oracle {
            *report.table.entry((c.n, c.m, chi)).or_default() += 1;
        }
        if let Some(ok) = c.witness_ok {
            report.witnesses += 1;
            if !ok {
                report.witness_failures.push(g.clone());
            }
        }
        if !c.agrees() {
            report.disagreements.push((g.clone(), c));
        }
    }
    report
}

/// All connected members of S with at most `max_m` edges.
pub fn census(max_m: usize, runner: Runner) -> Result<CensusReport> {
    let graphs = enumerate::enumerate_s_list(max_m + 1, max_m)?;
    Ok(check_all(&graphs, runner, &SearchConfig::default()))
}
