//! Vertex signs relative to a root class, special vertices, essential paths
//! and the per-root decomposition `D / A / C`, plus verifiers that check the
//! structural lemmas on concrete graphs.

mod probe;
mod report;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::{PolyError, RootClass};
use crate::graph::{bits, Graph, GraphError, VertexPath};

pub use probe::{FaultHook, Probe};
pub use report::{LemmaId, LemmaReport, Verdict, Witness};
pub use verify::{verify_simple_roots_vt, Verifier, VerifyConfig, DEFAULT_PATH_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("deleting vertex {vertex} moved the multiplicity from {base} to {deleted}")]
    Interlacing {
        vertex: usize,
        base: u32,
        deleted: u32,
    },
    #[error("root does not divide the matching polynomial")]
    RootAbsent,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexSign {
    Essential,
    Neutral,
    Positive,
}

impl VertexSign {
    pub(crate) fn from_delta(delta: i64) -> Option<VertexSign> {
        match delta {
            -1 => Some(VertexSign::Essential),
            0 => Some(VertexSign::Neutral),
            1 => Some(VertexSign::Positive),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            VertexSign::Essential => 'E',
            VertexSign::Neutral => 'N',
            VertexSign::Positive => 'P',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTable {
    pub root: RootClass,
    pub base_mult: u32,
    pub signs: Vec<VertexSign>,
    pub special: Vec<usize>,
}

impl SignTable {
    fn with(&self, sign: VertexSign) -> Vec<usize> {
        (0..self.signs.len())
            .filter(|&v| self.signs[v] == sign)
            .collect()
    }

    pub fn essential(&self) -> Vec<usize> {
        self.with(VertexSign::Essential)
    }

    pub fn neutral(&self) -> Vec<usize> {
        self.with(VertexSign::Neutral)
    }

    pub fn positive(&self) -> Vec<usize> {
        self.with(VertexSign::Positive)
    }

    pub fn is_special(&self, v: usize) -> bool {
        self.special.contains(&v)
    }
}

/// `d`: essential vertices, `a`: special vertices, `c`: everything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub root: RootClass,
    pub d: Vec<usize>,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
}

impl Decomposition {
    /// Number of connected components of the subgraph induced by `d`.
    pub fn d_components(&self, g: &Graph) -> usize {
        g.components_within(mask_of(&self.d)).len()
    }
}

pub(crate) fn mask_of(vs: &[usize]) -> u32 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn vertex_sign(g: &Graph, root: &RootClass, u: usize) -> Result<VertexSign, StructureError> {
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: u,
            n: g.n(),
        }
        .into());
    }
    Probe::new(*g, root.clone()).sign(u)
}

pub fn classify_all(g: &Graph, root: &RootClass) -> Result<SignTable, StructureError> {
    Probe::new(*g, root.clone()).table()
}

pub fn decomposition(g: &Graph, root: &RootClass) -> Result<Decomposition, StructureError> {
    Ok(decompose(g, &classify_all(g, root)?))
}

pub(crate) fn decompose(g: &Graph, table: &SignTable) -> Decomposition {
    let d = table.essential();
    let a = table.special.clone();
    let taken = mask_of(&d) | mask_of(&a);
    let c = bits(g.vertex_mask() & !taken).collect();
    Decomposition {
        root: table.root.clone(),
        d,
        a,
        c,
    }
}

/// True when deleting the vertices of `path` lowers the multiplicity by one.
pub fn is_essential_path(
    g: &Graph,
    root: &RootClass,
    path: &VertexPath,
) -> Result<bool, StructureError> {
    VertexPath::new(g, path.vertices().to_vec())?;
    let probe = Probe::new(*g, root.clone());
    let base = probe.base()?;
    if base == 0 {
        return Err(StructureError::RootAbsent);
    }
    Ok(probe.mult_without(path.mask())? + 1 == base)
}
