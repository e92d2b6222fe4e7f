//! Corpus-wide verification runs.
//!
//! Each graph is one work unit: every root class of its matching polynomial is
//! checked against every selected lemma. Units run on a rayon pool and are
//! sorted by canonical form before writing, so the JSON-lines report does not
//! depend on the number of workers.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use matchroot::exactpoly::{factor, RootClass};
use matchroot::graph::{
    canonical_form, enumerate_graphs_up_to_iso, to_graph6, Graph, GraphError, CANON_LIMIT,
    ENUMERATION_LIMIT,
};
use matchroot::matchpoly::root_support;
use matchroot::structure::{
    FaultHook, LemmaId, LemmaReport, Probe, Verdict, Verifier, VerifyConfig, DEFAULT_PATH_CAP,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::parse_graph;
use crate::CliError;

/// Largest graphs accepted from a corpus file.
pub const INGEST_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Corpus {
    /// Every isomorphism class on 1 to `max_n` vertices.
    Generated,
    /// One graph per line, graph6 or edge-list text.
    File(PathBuf),
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub max_n: usize,
    pub corpus: Corpus,
    pub lemmas: Vec<LemmaId>,
    pub path_cap: usize,
    pub exploratory: bool,
    pub jobs: usize,
    pub out: Option<PathBuf>,
    pub fault: Option<FaultHook>,
}

impl CampaignConfig {
    pub fn generated(max_n: usize) -> CampaignConfig {
        CampaignConfig {
            max_n,
            corpus: Corpus::Generated,
            lemmas: default_lemmas(false),
            path_cap: DEFAULT_PATH_CAP,
            exploratory: false,
            jobs: 1,
            out: None,
            fault: None,
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        let limit = match self.corpus {
            Corpus::Generated => ENUMERATION_LIMIT,
            Corpus::File(_) => INGEST_LIMIT,
        };
        if self.max_n > limit {
            return Err(CliError::Usage(format!(
                "max-n {} exceeds the limit of {limit} for this corpus",
                self.max_n
            )));
        }
        if self.jobs == 0 {
            return Err(CliError::Usage("jobs must be at least 1".into()));
        }
        if self.lemmas.is_empty() {
            return Err(CliError::Usage("no lemmas selected".into()));
        }
        Ok(())
    }
}

/// Every lemma id, with the conjectural ones only when exploring.
pub fn default_lemmas(exploratory: bool) -> Vec<LemmaId> {
    LemmaId::ALL
        .into_iter()
        .filter(|l| exploratory || !l.is_conjectural())
        .collect()
}

fn zero_only(l: LemmaId) -> bool {
    matches!(
        l,
        LemmaId::ZeroRootDeficiency | LemmaId::ZeroEssentialUnmatched
    )
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaTotals {
    pub holds: u64,
    /// Violated reports that count as failures.
    pub violated: u64,
    pub not_applicable: u64,
    /// Reports flagged exploratory, with their own counts.
    pub exploratory: u64,
    pub exploratory_violated: u64,
    pub exploratory_instances: u64,
    pub exploratory_violations: u64,
    pub instances: u64,
    pub violations: u64,
    pub tallies: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationRef {
    pub lemma: LemmaId,
    pub graph6: String,
    pub root_coeffs: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub graphs: u64,
    /// (graph, root) pairs with the root dividing the matching polynomial.
    pub pairs: u64,
    pub lemmas: BTreeMap<String, LemmaTotals>,
    pub violations: Vec<ViolationRef>,
    /// Not serialized, so report files stay reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_clean() {
            crate::EXIT_CLEAN
        } else {
            crate::EXIT_VIOLATIONS
        }
    }

    pub fn totals(&self, lemma: LemmaId) -> LemmaTotals {
        self.lemmas.get(lemma.as_str()).cloned().unwrap_or_default()
    }

    fn absorb(&mut self, r: &LemmaReport) {
        let t = self.lemmas.entry(r.lemma.as_str().to_string()).or_default();
        if r.exploratory {
            t.exploratory += 1;
            if r.verdict == Verdict::Violated {
                t.exploratory_violated += 1;
            }
            t.exploratory_instances += r.instances;
            t.exploratory_violations += r.violations;
        } else {
            match r.verdict {
                Verdict::Holds => t.holds += 1,
                Verdict::Violated => t.violated += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
            }
            t.instances += r.instances;
            t.violations += r.violations;
        }
        for (k, v) in &r.tallies {
            *t.tallies.entry(k.clone()).or_insert(0) += v;
        }
        if r.is_failure() {
            self.violations.push(ViolationRef {
                lemma: r.lemma,
                graph6: r.graph6.clone(),
                root_coeffs: r.root_coeffs.clone(),
            });
        }
    }
}

struct Unit {
    key: Vec<u8>,
    index: usize,
    pairs: u64,
    reports: Vec<LemmaReport>,
}

/// Root classes that divide the polynomial of some vertex-deleted subgraph
/// but not the polynomial of `g` itself.
fn absent_roots(probe: &Probe, support: &[RootClass]) -> BTreeSet<RootClass> {
    let mut out = BTreeSet::new();
    for u in 0..probe.graph().n() {
        let mu = probe.poly_without(1 << u);
        for (r, _) in factor(&mu).expect("matching polynomials are monic").factors {
            if !support.contains(&r) {
                out.insert(r);
            }
        }
    }
    out
}

fn run_graph(g: &Graph, cfg: &CampaignConfig) -> (u64, Vec<LemmaReport>) {
    let support: Vec<RootClass> = root_support(g)
        .factors
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    let mut base = Probe::new(*g, RootClass::zero_root());
    if let Some(hook) = cfg.fault {
        base = base.with_fault(hook);
    }
    let vcfg = VerifyConfig {
        path_cap: cfg.path_cap,
        exploratory: cfg.exploratory,
    };
    let mut reports = Vec::new();
    for root in &support {
        let v = Verifier::from_probe(base.for_root(root.clone()), vcfg);
        reports.extend(v.run_all(&cfg.lemmas));
    }
    // The deficiency checks also cover graphs with a perfect matching.
    let zero: Vec<LemmaId> = cfg
        .lemmas
        .iter()
        .copied()
        .filter(|&l| zero_only(l))
        .collect();
    if !zero.is_empty() && !support.iter().any(RootClass::is_zero_root) {
        let v = Verifier::from_probe(base.for_root(RootClass::zero_root()), vcfg);
        reports.extend(v.run_all(&zero));
    }
    if cfg.exploratory {
        let rest: Vec<LemmaId> = cfg
            .lemmas
            .iter()
            .copied()
            .filter(|&l| !zero_only(l))
            .collect();
        for root in absent_roots(&base, &support) {
            let v = Verifier::from_probe(base.for_root(root), vcfg);
            for mut r in v.run_all(&rest) {
                r.exploratory = true;
                reports.push(r);
            }
        }
    }
    (support.len() as u64, reports)
}

fn sort_key(g: &Graph) -> Result<Vec<u8>, GraphError> {
    if g.n() <= CANON_LIMIT {
        canonical_form(g)
    } else {
        Ok(to_graph6(g).into_bytes())
    }
}

pub fn read_corpus(path: &PathBuf, max_n: usize) -> Result<Vec<Graph>, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph(line)
            .map_err(|e| CliError::Usage(format!("{}:{}: {e}", path.display(), i + 1)))?;
        if g.n() > max_n {
            return Err(CliError::Usage(format!(
                "{}:{}: graph on {} vertices exceeds max-n {max_n}",
                path.display(),
                i + 1,
                g.n()
            )));
        }
        out.push(g);
    }
    Ok(out)
}

/// Runs the campaign, writing one JSON line per report followed by a
/// `{"summary": ...}` line.
pub fn run_campaign(
    cfg: &CampaignConfig,
    out: &mut dyn Write,
) -> Result<CampaignSummary, CliError> {
    cfg.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let batches: Vec<Vec<Graph>> = match &cfg.corpus {
        Corpus::Generated => (1..=cfg.max_n)
            .map(enumerate_graphs_up_to_iso)
            .collect::<Result<_, _>>()?,
        Corpus::File(p) => vec![read_corpus(p, cfg.max_n)?],
    };
    let sink = cfg
        .out
        .as_ref()
        .map(|p| p.display().to_string())
        .unwrap_or_else(|| "output".into());
    let io = |e| CliError::io(sink.clone(), e);
    let mut summary = CampaignSummary::default();
    for batch in batches {
        let mut units = pool.install(|| {
            batch
                .par_iter()
                .enumerate()
                .map(|(index, g)| {
                    let (pairs, reports) = run_graph(g, cfg);
                    Ok(Unit {
                        key: sort_key(g)?,
                        index,
                        pairs,
                        reports,
                    })
                })
                .collect::<Result<Vec<Unit>, GraphError>>()
        })?;
        units.sort_by(|a, b| (&a.key, a.index).cmp(&(&b.key, b.index)));
        for unit in units {
            summary.graphs += 1;
            summary.pairs += unit.pairs;
            for r in &unit.reports {
                summary.absorb(r);
                writeln!(out, "{}", r.to_json()).map_err(io)?;
            }
        }
    }
    let line = serde_json::json!({ "summary": &summary });
    writeln!(out, "{line}").map_err(io)?;
    out.flush().map_err(io)?;
    summary.wall_time = start.elapsed();
    Ok(summary)
}

/// Fault hook for harness self-tests: deleting vertex 0 alone reports a
/// multiplicity two higher than the truth.
#[doc(hidden)]
pub fn corrupt_vertex_zero(_: &Graph, deleted: u32, m: u32) -> u32 {
    if deleted == 1 {
        m + 2
    } else {
        m
    }
}
