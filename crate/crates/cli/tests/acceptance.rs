//! One PASS/FAIL line per acceptance criterion. Runs as a plain binary
//! (`harness = false`) and exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use matchroot::exactpoly::{factor, IntPoly, RootClass};
use matchroot::graph::{enumerate_graphs_up_to_iso, is_vertex_transitive, Graph};
use matchroot::matchpoly::{
    brute, matching_polynomial, mu_by_edge_recurrence_with, mu_by_vertex_recurrence, MemoCache,
};
use matchroot::structure::{decomposition, verify_simple_roots_vt, LemmaId, Verdict};
use matchroot_cli::campaign::{run_campaign, CampaignConfig, CampaignSummary};
use matchroot_cli::fixtures::fixture_graphs;

const ORACLE_BUDGET: Duration = Duration::from_secs(10);
const DEFICIENCY_BUDGET: Duration = Duration::from_secs(120);
const CAMPAIGN_BUDGET: Duration = Duration::from_secs(30 * 60);
const FIXTURE_BUDGET: Duration = Duration::from_secs(30);
const CLASSES_TO_SIX: usize = 208;
const CLASSES_TO_SEVEN: usize = 1252;
const FIXTURE_COUNT: usize = 20;
const PATH_CAP: usize = 4;
const CAMPAIGN_MAX_N: usize = 7;
const JOBS_A: usize = 1;
const JOBS_B: usize = 4;

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn brute_mu(g: &Graph) -> IntPoly {
    let n = g.n();
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, &c) in brute::count_by_size(g).iter().enumerate() {
        let c = BigInt::from(c);
        coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    IntPoly::new(coeffs)
}

fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphs_up_to_iso(n).unwrap())
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let cache = MemoCache::default();
    let graphs = corpus(6);
    let mut mismatches = 0;
    for g in &graphs {
        let mu = brute_mu(g);
        let ok = matching_polynomial(g) == mu
            && mu_by_edge_recurrence_with(g, &cache) == mu
            && mu_by_vertex_recurrence(g) == mu;
        mismatches += usize::from(!ok);
    }
    let t = start.elapsed();
    Outcome {
        id: 1,
        name: "three matching polynomial computations agree, n <= 6",
        pass: graphs.len() == CLASSES_TO_SIX && mismatches == 0 && t < ORACLE_BUDGET,
        detail: format!(
            "{} graphs, {mismatches} mismatches, {:.2?} (budget {:?})",
            graphs.len(),
            t,
            ORACLE_BUDGET
        ),
    }
}

fn zero_multiplicity_is_deficiency(summary: &CampaignSummary) -> Outcome {
    let start = Instant::now();
    let graphs = corpus(7);
    let x = RootClass::zero_root();
    let mut bad = 0;
    for g in &graphs {
        let m = factor(&matching_polynomial(g)).unwrap().exponent_of(&x) as usize;
        bad += usize::from(m != brute::deficiency(g));
    }
    let t = start.elapsed();
    let lemma = summary.totals(LemmaId::ZeroRootDeficiency);
    Outcome {
        id: 2,
        name: "mult(0, G) equals brute-force deficiency, n <= 7",
        pass: graphs.len() == CLASSES_TO_SEVEN
            && bad == 0
            && t < DEFICIENCY_BUDGET
            && lemma.holds == CLASSES_TO_SEVEN as u64
            && lemma.violations == 0,
        detail: format!(
            "{} graphs, {bad} mismatches, {:.2?} (budget {:?}); campaign {} holds, {} violations",
            graphs.len(),
            t,
            DEFICIENCY_BUDGET,
            lemma.holds,
            lemma.violations
        ),
    }
}

fn zero_essential_unmatched(summary: &CampaignSummary) -> Outcome {
    let x = RootClass::zero_root();
    let mut bad = 0;
    let graphs = corpus(7);
    for g in &graphs {
        let t = matchroot::structure::classify_all(g, &x).unwrap();
        let essential = t.essential().iter().fold(0u32, |m, &v| m | 1 << v);
        let ok = essential == brute::missed_by_some_maximum_matching(g) && t.neutral().is_empty();
        bad += usize::from(!ok);
    }
    let lemma = summary.totals(LemmaId::ZeroEssentialUnmatched);
    Outcome {
        id: 3,
        name: "0-essential vertices are those missed by a maximum matching, none 0-neutral",
        pass: bad == 0 && lemma.holds == CLASSES_TO_SEVEN as u64 && lemma.violations == 0,
        detail: format!(
            "{} graphs, {bad} mismatches; campaign {} holds over {} instances",
            graphs.len(),
            lemma.holds,
            lemma.instances
        ),
    }
}

/// Every (graph, root) pair ran the lemma and none failed.
fn lemmas_clean(summary: &CampaignSummary, lemmas: &[LemmaId]) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for &l in lemmas {
        let t = summary.totals(l);
        pass &= t.violations == 0 && t.violated == 0 && t.holds + t.not_applicable == summary.pairs;
        parts.push(format!(
            "{l}: {} instances, {} violations",
            t.instances, t.violations
        ));
    }
    (pass, parts.join("; "))
}

fn campaign_criterion(
    summary: &CampaignSummary,
    id: u32,
    name: &'static str,
    lemmas: &[LemmaId],
    extra: impl FnOnce(&CampaignSummary) -> (bool, String),
) -> Outcome {
    let (ok, detail) = lemmas_clean(summary, lemmas);
    let (more_ok, more) = extra(summary);
    Outcome {
        id,
        name,
        pass: ok && more_ok,
        detail: if more.is_empty() {
            detail
        } else {
            format!("{detail}; {more}")
        },
    }
}

fn vertex_transitive_fixtures() -> Outcome {
    let start = Instant::now();
    let fixtures = fixture_graphs();
    let mut failed = Vec::new();
    for (name, g) in &fixtures {
        let vt = is_vertex_transitive(g).unwrap();
        let r = verify_simple_roots_vt(g).unwrap();
        let simple = factor(&matching_polynomial(g))
            .unwrap()
            .factors
            .iter()
            .all(|(_, e)| *e == 1);
        if !(vt && simple && r.verdict == Verdict::Holds && r.instances > 0) {
            failed.push(name.clone());
        }
    }
    let t = start.elapsed();
    Outcome {
        id: 10,
        name: "vertex-transitive fixtures have simple roots",
        pass: fixtures.len() == FIXTURE_COUNT && failed.is_empty() && t < FIXTURE_BUDGET,
        detail: format!(
            "{} fixtures, failing {:?}, {:.2?} (budget {:?})",
            fixtures.len(),
            failed,
            t,
            FIXTURE_BUDGET
        ),
    }
}

fn golden_values() -> Outcome {
    let p = IntPoly::from_i64s;
    let mut notes = Vec::new();
    let mut check = |what: &str, ok: bool| {
        if !ok {
            notes.push(what.to_string());
        }
    };
    let star = Graph::star(3);
    let c5 = Graph::cycle(5);
    let p4 = Graph::path(4);
    // the frozen literals must first agree with the enumeration oracle
    for (name, g, want) in [
        ("K1,3", &star, p(&[0, 0, -3, 0, 1])),
        ("C5", &c5, p(&[0, 5, 0, -5, 0, 1])),
        ("P4", &p4, p(&[1, 0, -3, 0, 1])),
    ] {
        check(&format!("{name} oracle"), brute_mu(g) == want);
        check(
            &format!("{name} polynomial"),
            matching_polynomial(g) == want,
        );
    }
    let d = decomposition(&star, &RootClass::zero_root()).unwrap();
    check(
        "K1,3 decomposition",
        d.d == [1, 2, 3] && d.a == [0] && d.c.is_empty(),
    );
    let f = factor(&matching_polynomial(&c5)).unwrap();
    let want: Vec<(IntPoly, u32)> = vec![(p(&[0, 1]), 1), (p(&[5, 0, -5, 0, 1]), 1)];
    check(
        "C5 factors",
        f.factors
            .iter()
            .map(|(r, e)| (r.minpoly().clone(), *e))
            .collect::<Vec<_>>()
            == want,
    );
    let f = factor(&matching_polynomial(&p4)).unwrap();
    let want: Vec<(IntPoly, u32)> = vec![(p(&[-1, -1, 1]), 1), (p(&[-1, 1, 1]), 1)];
    check(
        "P4 factors",
        f.factors
            .iter()
            .map(|(r, e)| (r.minpoly().clone(), *e))
            .collect::<Vec<_>>()
            == want,
    );
    Outcome {
        id: 11,
        name: "golden polynomials, factorizations and decomposition",
        pass: notes.is_empty(),
        detail: if notes.is_empty() {
            "K1,3, C5, P4 match the enumeration oracle and the frozen values".into()
        } else {
            format!("mismatched: {}", notes.join(", "))
        },
    }
}

fn main() -> ExitCode {
    let mut outcomes = vec![oracle_equivalence()];

    let mut cfg = CampaignConfig::generated(CAMPAIGN_MAX_N);
    cfg.path_cap = PATH_CAP;
    cfg.jobs = JOBS_A;
    let mut report_a = Vec::new();
    let start = Instant::now();
    let summary = run_campaign(&cfg, &mut report_a).expect("campaign runs");
    let campaign_time = start.elapsed();
    cfg.jobs = JOBS_B;
    let mut report_b = Vec::new();
    run_campaign(&cfg, &mut report_b).expect("campaign runs");

    outcomes.push(zero_multiplicity_is_deficiency(&summary));
    outcomes.push(zero_essential_unmatched(&summary));
    outcomes.push(campaign_criterion(
        &summary,
        4,
        "vertex and path interlacing",
        &[LemmaId::Interlacing],
        |s| {
            let t = s.totals(LemmaId::Interlacing);
            (
                t.holds == s.pairs && t.tallies.get("path").copied().unwrap_or(0) > 0,
                String::new(),
            )
        },
    ));
    outcomes.push(campaign_criterion(
        &summary,
        5,
        "essential existence, neutral/essential non-adjacency, path ends, deletion transitions",
        &[
            LemmaId::EssentialExists,
            LemmaId::NeutralEssentialNonadjacent,
            LemmaId::EssentialPathEnds,
            LemmaId::DeletionTransitions,
        ],
        |_| (true, String::new()),
    ));
    outcomes.push(campaign_criterion(
        &summary,
        6,
        "edge addition, edge deletion and special-vertex edge lemmas",
        &[LemmaId::EdgeAddition, LemmaId::EdgeDeletion, LemmaId::SpecialEdgeDeletion],
        |s| {
            let t = s.totals(LemmaId::EdgeAddition).tallies;
            let hyp = t.get("essential-pair-hypothesis-holds").copied().unwrap_or(0);
            let pairs = t.get("essential-pair").copied().unwrap_or(0);
            (
                campaign_time < CAMPAIGN_BUDGET,
                format!(
                    "both-essential hypothesis held in {hyp} of {pairs} non-edges; full campaign {:.2?} (budget {:?})",
                    campaign_time, CAMPAIGN_BUDGET
                ),
            )
        },
    ));
    outcomes.push(campaign_criterion(
        &summary,
        7,
        "special vertex deletion preserves every other sign",
        &[LemmaId::Stability],
        |s| (s.totals(LemmaId::Stability).instances > 0, String::new()),
    ));
    outcomes.push(campaign_criterion(
        &summary,
        8,
        "connected all-essential graphs have multiplicity 1",
        &[LemmaId::Gallai],
        |s| {
            let t = s.totals(LemmaId::Gallai);
            let skipped = t.tallies.get("disconnected").copied().unwrap_or(0);
            (
                t.instances > 0,
                format!("{skipped} disconnected all-essential pairs outside the hypothesis"),
            )
        },
    ));
    outcomes.push(campaign_criterion(
        &summary,
        9,
        "mult = c(D) - |A|, primitive D components, root-free C components",
        &[LemmaId::DecompositionCount],
        |s| {
            (
                s.totals(LemmaId::DecompositionCount).instances > 0,
                String::new(),
            )
        },
    ));
    outcomes.push(vertex_transitive_fixtures());
    outcomes.push(golden_values());
    outcomes.push(Outcome {
        id: 12,
        name: "reports are byte-identical across worker counts",
        pass: report_a == report_b && !report_a.is_empty(),
        detail: format!(
            "jobs {JOBS_A} vs {JOBS_B}: {} bytes vs {} bytes",
            report_a.len(),
            report_b.len()
        ),
    });

    outcomes.sort_by_key(|o| o.id);
    let mut failed = 0;
    for o in &outcomes {
        println!(
            "criterion {:>2} {}: {} ({})",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "campaign: {} graphs, {} (graph, root) pairs, {} failing reports",
        summary.graphs,
        summary.pairs,
        summary.violations.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
