use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::{SignTable, StructureError, VertexSign};
use crate::exactpoly::{multiplicity, IntPoly, RootClass};
use crate::graph::{bits, Graph};

/// Test hook that rewrites every multiplicity the probe reports. Arguments
/// are the graph, the mask of deleted vertices and the true multiplicity.
pub type FaultHook = fn(&Graph, u32, u32) -> u32;

#[derive(Debug)]
struct PolyMemo {
    graph: Graph,
    polys: RefCell<HashMap<u32, IntPoly>>,
}

impl PolyMemo {
    /// `mu(G[keep])` by the vertex recurrence on the lowest kept vertex.
    fn poly(&self, keep: u32) -> IntPoly {
        if let Some(p) = self.polys.borrow().get(&keep) {
            return p.clone();
        }
        let p = if keep == 0 {
            IntPoly::one()
        } else {
            let u = keep.trailing_zeros() as usize;
            let rest = keep & !(1 << u);
            let mut p = self.poly(rest).shift(1);
            for v in bits(self.graph.neighbors_mask(u) & rest) {
                p = &p - &self.poly(rest & !(1 << v));
            }
            p
        };
        self.polys.borrow_mut().insert(keep, p.clone());
        p
    }
}

/// Multiplicities of one root in `G` minus arbitrary vertex sets, memoized by
/// the deleted mask. Single-threaded; build one per work unit.
#[derive(Debug)]
pub struct Probe {
    memo: Rc<PolyMemo>,
    root: RootClass,
    mults: RefCell<HashMap<u32, u32>>,
    fault: Option<FaultHook>,
}

impl Probe {
    pub fn new(graph: Graph, root: RootClass) -> Probe {
        Probe {
            memo: Rc::new(PolyMemo {
                graph,
                polys: RefCell::new(HashMap::new()),
            }),
            root,
            mults: RefCell::new(HashMap::new()),
            fault: None,
        }
    }

    #[doc(hidden)]
    pub fn with_fault(mut self, hook: FaultHook) -> Probe {
        self.fault = Some(hook);
        self
    }

    /// Same graph and polynomial memo, different root.
    pub fn for_root(&self, root: RootClass) -> Probe {
        Probe {
            memo: Rc::clone(&self.memo),
            root,
            mults: RefCell::new(HashMap::new()),
            fault: self.fault,
        }
    }

    /// Same root and fault hook on another graph.
    pub fn for_graph(&self, graph: Graph) -> Probe {
        let mut p = Probe::new(graph, self.root.clone());
        p.fault = self.fault;
        p
    }

    pub fn graph(&self) -> &Graph {
        &self.memo.graph
    }

    pub fn root(&self) -> &RootClass {
        &self.root
    }

    /// `mu(G - deleted)`.
    pub fn poly_without(&self, deleted: u32) -> IntPoly {
        self.memo.poly(self.graph().vertex_mask() & !deleted)
    }

    /// `mult(root, G - deleted)`.
    pub fn mult_without(&self, deleted: u32) -> Result<u32, StructureError> {
        let deleted = deleted & self.graph().vertex_mask();
        if let Some(&m) = self.mults.borrow().get(&deleted) {
            return Ok(m);
        }
        let mut m = multiplicity(&self.root, &self.poly_without(deleted))?;
        if let Some(hook) = self.fault {
            m = hook(self.graph(), deleted, m);
        }
        self.mults.borrow_mut().insert(deleted, m);
        Ok(m)
    }

    pub fn base(&self) -> Result<u32, StructureError> {
        self.mult_without(0)
    }

    pub fn sign(&self, v: usize) -> Result<VertexSign, StructureError> {
        self.sign_after(0, v)
    }

    /// Sign of `v` in `G - deleted`; `v` must not be deleted.
    pub fn sign_after(&self, deleted: u32, v: usize) -> Result<VertexSign, StructureError> {
        debug_assert!(deleted >> v & 1 == 0);
        let base = self.mult_without(deleted)?;
        let without = self.mult_without(deleted | 1 << v)?;
        VertexSign::from_delta(without as i64 - base as i64).ok_or(StructureError::Interlacing {
            vertex: v,
            base,
            deleted: without,
        })
    }

    /// Signs in `G - deleted`, indexed by the original labels.
    pub fn signs_after(&self, deleted: u32) -> Result<Vec<Option<VertexSign>>, StructureError> {
        (0..self.graph().n())
            .map(|v| {
                if deleted >> v & 1 == 1 {
                    Ok(None)
                } else {
                    self.sign_after(deleted, v).map(Some)
                }
            })
            .collect()
    }

    /// Special vertices of `G - deleted` as a mask over the original labels.
    pub fn special_after(&self, deleted: u32) -> Result<u32, StructureError> {
        let signs = self.signs_after(deleted)?;
        Ok(special_mask(self.graph(), deleted, &signs))
    }

    pub fn table(&self) -> Result<SignTable, StructureError> {
        let signs = self.signs_after(0)?;
        let special = special_mask(self.graph(), 0, &signs);
        Ok(SignTable {
            root: self.root.clone(),
            base_mult: self.base()?,
            signs: signs.into_iter().map(Option::unwrap).collect(),
            special: bits(special).collect(),
        })
    }
}

fn special_mask(g: &Graph, deleted: u32, signs: &[Option<VertexSign>]) -> u32 {
    let essential = signs
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Some(VertexSign::Essential))
        .fold(0u32, |m, (v, _)| m | 1 << v);
    let mut special = 0;
    for v in bits(g.vertex_mask() & !deleted & !essential) {
        if g.neighbors_mask(v) & essential != 0 {
            special |= 1 << v;
        }
    }
    special
}
