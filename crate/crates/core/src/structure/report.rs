use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::exactpoly::RootClass;
use crate::graph::{to_graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    Interlacing,
    EssentialExists,
    NeutralEssentialNonadjacent,
    EssentialPathEnds,
    DeletionTransitions,
    EdgeAddition,
    EdgeDeletion,
    SpecialEdgeDeletion,
    Stability,
    Gallai,
    DecompositionCount,
    VertexTransitiveSimpleRoots,
    ZeroRootDeficiency,
    ZeroEssentialUnmatched,
    SpecialSetStability,
}

impl LemmaId {
    pub const ALL: [LemmaId; 15] = [
        LemmaId::Interlacing,
        LemmaId::EssentialExists,
        LemmaId::NeutralEssentialNonadjacent,
        LemmaId::EssentialPathEnds,
        LemmaId::DeletionTransitions,
        LemmaId::EdgeAddition,
        LemmaId::EdgeDeletion,
        LemmaId::SpecialEdgeDeletion,
        LemmaId::Stability,
        LemmaId::Gallai,
        LemmaId::DecompositionCount,
        LemmaId::VertexTransitiveSimpleRoots,
        LemmaId::ZeroRootDeficiency,
        LemmaId::ZeroEssentialUnmatched,
        LemmaId::SpecialSetStability,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Interlacing => "interlacing",
            LemmaId::EssentialExists => "essential-exists",
            LemmaId::NeutralEssentialNonadjacent => "neutral-essential-nonadjacent",
            LemmaId::EssentialPathEnds => "essential-path-ends",
            LemmaId::DeletionTransitions => "deletion-transitions",
            LemmaId::EdgeAddition => "edge-addition",
            LemmaId::EdgeDeletion => "edge-deletion",
            LemmaId::SpecialEdgeDeletion => "special-edge-deletion",
            LemmaId::Stability => "stability",
            LemmaId::Gallai => "gallai",
            LemmaId::DecompositionCount => "decomposition-count",
            LemmaId::VertexTransitiveSimpleRoots => "vertex-transitive-simple-roots",
            LemmaId::ZeroRootDeficiency => "zero-root-deficiency",
            LemmaId::ZeroEssentialUnmatched => "zero-essential-unmatched",
            LemmaId::SpecialSetStability => "special-set-stability",
        }
    }

    /// Statements measured but never counted as failures.
    pub fn is_conjectural(self) -> bool {
        self == LemmaId::SpecialSetStability
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown lemma id `{s}`"))
    }
}

impl Serialize for LemmaId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

/// One checked instance that failed, with the multiplicities compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
    pub mults: BTreeMap<String, u32>,
}

impl Witness {
    pub fn new(detail: impl Into<String>) -> Witness {
        Witness {
            detail: detail.into(),
            vertices: Vec::new(),
            edge: None,
            mults: BTreeMap::new(),
        }
    }

    pub fn vertices(mut self, vs: &[usize]) -> Witness {
        self.vertices = vs.to_vec();
        self
    }

    pub fn edge(mut self, u: usize, v: usize) -> Witness {
        self.edge = Some((u, v));
        self
    }

    pub fn mult(mut self, key: impl Into<String>, m: u32) -> Witness {
        self.mults.insert(key.into(), m);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub graph6: String,
    /// Minimal polynomial of the root, ascending decimal coefficients.
    pub root_coeffs: Option<Vec<String>>,
    pub verdict: Verdict,
    pub exploratory: bool,
    pub instances: u64,
    pub violations: u64,
    /// First violation only; `violations` counts all of them.
    pub witnesses: Vec<Witness>,
    pub tallies: BTreeMap<String, u64>,
}

impl LemmaReport {
    pub fn new(lemma: LemmaId, g: &Graph, root: Option<&RootClass>) -> LemmaReport {
        LemmaReport {
            lemma,
            graph6: to_graph6(g),
            root_coeffs: root.map(|r| r.minpoly().to_coeff_strings()),
            verdict: Verdict::Holds,
            exploratory: lemma.is_conjectural(),
            instances: 0,
            violations: 0,
            witnesses: Vec::new(),
            tallies: BTreeMap::new(),
        }
    }

    pub fn not_applicable(mut self) -> LemmaReport {
        self.verdict = Verdict::NotApplicable;
        self
    }

    /// Counts one instance; on failure records the witness if it is the first.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok {
            self.violate(witness());
        }
    }

    pub fn violate(&mut self, witness: Witness) {
        self.violations += 1;
        self.verdict = Verdict::Violated;
        if self.witnesses.is_empty() {
            self.witnesses.push(witness);
        }
    }

    pub fn tally(&mut self, key: impl Into<String>) {
        *self.tallies.entry(key.into()).or_insert(0) += 1;
    }

    /// Violated and not marked exploratory.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Violated && !self.exploratory
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
