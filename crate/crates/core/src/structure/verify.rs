use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::report::{LemmaId, LemmaReport, Witness};
use super::{decompose, mask_of, Probe, StructureError, VertexSign};
use crate::exactpoly::RootClass;
use crate::graph::{bits, enumerate_paths, is_vertex_transitive, Graph};
use crate::matchpoly::{brute, root_support};

use VertexSign::{Essential, Neutral, Positive};

pub const DEFAULT_PATH_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Longest path, in vertices, fed to the path-based checks.
    pub path_cap: usize,
    /// Run root-only checks even when the multiplicity is 0, marking the
    /// reports exploratory.
    pub exploratory: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            path_cap: DEFAULT_PATH_CAP,
            exploratory: false,
        }
    }
}

/// Runs the structural checks for one graph and one root class.
pub struct Verifier {
    probe: Probe,
    config: VerifyConfig,
}

type Check = Result<(), StructureError>;

fn needs_root(lemma: LemmaId) -> bool {
    !matches!(
        lemma,
        LemmaId::Interlacing
            | LemmaId::NeutralEssentialNonadjacent
            | LemmaId::DeletionTransitions
            | LemmaId::Gallai
            | LemmaId::ZeroRootDeficiency
            | LemmaId::ZeroEssentialUnmatched
    )
}

fn error_witness(e: &StructureError) -> Witness {
    let w = Witness::new(e.to_string());
    match *e {
        StructureError::Interlacing {
            vertex,
            base,
            deleted,
        } => w
            .vertices(&[vertex])
            .mult("before", base)
            .mult("after", deleted),
        _ => w,
    }
}

fn transition_allowed(u: VertexSign, before: VertexSign, after: VertexSign) -> bool {
    match u {
        Positive => matches!(
            (before, after),
            (Essential, Essential)
                | (Positive, Essential | Positive)
                | (Neutral, Essential | Neutral)
        ),
        Neutral => matches!(
            (before, after),
            (Essential, Essential) | (Positive | Neutral, Positive | Neutral)
        ),
        Essential => matches!(
            (before, after),
            (Essential, _) | (Positive, Positive) | (Neutral, Neutral)
        ),
    }
}

fn signs_text(pairs: &[(usize, VertexSign)]) -> String {
    pairs
        .iter()
        .map(|(v, s)| format!("{v}:{}", s.letter()))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Verifier {
    pub fn new(g: &Graph, root: &RootClass, config: VerifyConfig) -> Verifier {
        Verifier::from_probe(Probe::new(*g, root.clone()), config)
    }

    pub fn from_probe(probe: Probe, config: VerifyConfig) -> Verifier {
        Verifier { probe, config }
    }

    pub fn probe(&self) -> &Probe {
        &self.probe
    }

    fn g(&self) -> &Graph {
        self.probe.graph()
    }

    fn m(&self, deleted: u32) -> Result<u32, StructureError> {
        self.probe.mult_without(deleted)
    }

    fn signs(&self) -> Result<Vec<VertexSign>, StructureError> {
        Ok(self
            .probe
            .signs_after(0)?
            .into_iter()
            .map(Option::unwrap)
            .collect())
    }

    pub fn run(&self, lemma: LemmaId) -> LemmaReport {
        let mut report = LemmaReport::new(lemma, self.g(), Some(self.probe.root()));
        let base = match self.m(0) {
            Ok(b) => b,
            Err(e) => {
                report.violate(error_witness(&e));
                return report;
            }
        };
        if needs_root(lemma) && base == 0 {
            if !self.config.exploratory {
                return report.not_applicable();
            }
            report.exploratory = true;
        }
        let zero_only = matches!(
            lemma,
            LemmaId::ZeroRootDeficiency | LemmaId::ZeroEssentialUnmatched
        );
        if zero_only && !self.probe.root().is_zero_root() {
            return report.not_applicable();
        }
        let outcome = match lemma {
            LemmaId::Interlacing => self.interlacing(base, &mut report),
            LemmaId::EssentialExists => self.essential_exists(&mut report),
            LemmaId::NeutralEssentialNonadjacent => self.neutral_essential(&mut report),
            LemmaId::EssentialPathEnds => self.essential_path_ends(base, &mut report),
            LemmaId::DeletionTransitions => self.deletion_transitions(&mut report),
            LemmaId::EdgeAddition => self.edge_addition(base, &mut report),
            LemmaId::EdgeDeletion => self.edge_deletion(base, &mut report),
            LemmaId::SpecialEdgeDeletion => self.special_edge_deletion(base, &mut report),
            LemmaId::Stability => self.stability(&mut report),
            LemmaId::Gallai => self.gallai(base, &mut report),
            LemmaId::DecompositionCount => self.decomposition_count(base, &mut report),
            LemmaId::VertexTransitiveSimpleRoots => match is_vertex_transitive(self.g()) {
                Ok(true) if self.g().is_connected() => {
                    report.check(base == 1, || {
                        Witness::new("exponent of root").mult("G", base)
                    });
                    Ok(())
                }
                Ok(_) => return report.not_applicable(),
                Err(e) => Err(e.into()),
            },
            LemmaId::ZeroRootDeficiency => {
                let def = brute::deficiency(self.g()) as u32;
                report.check(base == def, || {
                    Witness::new("zero multiplicity against deficiency")
                        .mult("G", base)
                        .mult("deficiency", def)
                });
                Ok(())
            }
            LemmaId::ZeroEssentialUnmatched => self.zero_essential(&mut report),
            LemmaId::SpecialSetStability => self.special_set_stability(&mut report),
        };
        if let Err(e) = outcome {
            report.violate(error_witness(&e));
        }
        report
    }

    pub fn run_all(&self, lemmas: &[LemmaId]) -> Vec<LemmaReport> {
        lemmas.iter().map(|&l| self.run(l)).collect()
    }

    fn interlacing(&self, base: u32, report: &mut LemmaReport) -> Check {
        for u in 0..self.g().n() {
            let d = self.m(1 << u)?;
            report.tally("vertex");
            report.check(d.abs_diff(base) <= 1, || {
                Witness::new(format!("delete {u}"))
                    .vertices(&[u])
                    .mult("G", base)
                    .mult("G-u", d)
            });
        }
        for p in enumerate_paths(self.g(), self.config.path_cap).filter(|p| p.len() >= 2) {
            let d = self.m(p.mask())?;
            report.tally("path");
            report.check(d + 1 >= base, || {
                Witness::new("delete path")
                    .vertices(p.vertices())
                    .mult("G", base)
                    .mult("G-P", d)
            });
        }
        Ok(())
    }

    fn essential_exists(&self, report: &mut LemmaReport) -> Check {
        let table = self.probe.table()?;
        let base = table.base_mult;
        report.check(!table.essential().is_empty(), || {
            Witness::new("no essential vertex").mult("G", base)
        });
        Ok(())
    }

    fn neutral_essential(&self, report: &mut LemmaReport) -> Check {
        let s = self.signs()?;
        for (u, v) in self.g().edges() {
            let mixed = matches!((s[u], s[v]), (Neutral, Essential) | (Essential, Neutral));
            report.check(!mixed, || {
                Witness::new(signs_text(&[(u, s[u]), (v, s[v])])).edge(u, v)
            });
        }
        Ok(())
    }

    fn essential_path_ends(&self, base: u32, report: &mut LemmaReport) -> Check {
        let s = self.signs()?;
        for p in enumerate_paths(self.g(), self.config.path_cap).filter(|p| p.len() >= 2) {
            let d = self.m(p.mask())?;
            if d + 1 != base {
                continue;
            }
            report.tally("essential-path");
            let (a, b) = (p.first(), p.last());
            report.check(s[a] == Essential && s[b] == Essential, || {
                Witness::new(signs_text(&[(a, s[a]), (b, s[b])]))
                    .vertices(p.vertices())
                    .mult("G", base)
                    .mult("G-P", d)
            });
        }
        Ok(())
    }

    fn deletion_transitions(&self, report: &mut LemmaReport) -> Check {
        let s = self.signs()?;
        for u in 0..self.g().n() {
            let after = self.probe.signs_after(1 << u)?;
            for v in (0..self.g().n()).filter(|&v| v != u) {
                let b = after[v].unwrap();
                report.tally(format!(
                    "u={} v:{}>{}",
                    s[u].letter(),
                    s[v].letter(),
                    b.letter()
                ));
                report.check(transition_allowed(s[u], s[v], b), || {
                    Witness::new(format!(
                        "u={u}:{} v={v}:{}>{}",
                        s[u].letter(),
                        s[v].letter(),
                        b.letter()
                    ))
                    .vertices(&[u, v])
                    .mult("G", self.m(0).unwrap_or(0))
                    .mult("G-u", self.m(1 << u).unwrap_or(0))
                    .mult("G-v", self.m(1 << v).unwrap_or(0))
                    .mult("G-u-v", self.m(1 << u | 1 << v).unwrap_or(0))
                });
            }
        }
        Ok(())
    }

    fn edge_addition(&self, base: u32, report: &mut LemmaReport) -> Check {
        let s = self.signs()?;
        for (a, b) in self.g().non_edges() {
            let pf = self.probe.for_graph(self.g().add_edge(a, b)?);
            let mf = pf.base()?;
            let (sa, sb) = (pf.sign(a)?, pf.sign(b)?);
            let after = |v: usize| if v == a { sa } else { sb };
            let witness = |what: &str| {
                let (u, v) = (a, b);
                Witness::new(format!(
                    "{what}; G {} / G+f {}",
                    signs_text(&[(u, s[u]), (v, s[v])]),
                    signs_text(&[(u, sa), (v, sb)])
                ))
                .edge(u, v)
                .mult("G", base)
                .mult("G+f", mf)
            };
            for (u, v) in [(a, b), (b, a)] {
                match (s[u], s[v]) {
                    (Positive, _) => {
                        report.tally("positive");
                        let ok = mf == base && after(u) == Positive && after(v) == s[v];
                        report.check(ok, || witness(&format!("{u} positive")));
                    }
                    (Neutral, Essential) => {
                        report.tally("neutral-essential");
                        let ok = mf + 1 == base && after(u) == Positive && after(v) == Neutral;
                        report.check(ok, || witness(&format!("{u} neutral, {v} essential")));
                    }
                    _ => {}
                }
            }
            if s[a] == Essential && s[b] == Essential {
                report.tally("essential-pair");
                let dab = self.m(1 << a | 1 << b)?;
                if dab + 1 < base {
                    report.tally("essential-pair-hypothesis-fails");
                    continue;
                }
                report.tally("essential-pair-hypothesis-holds");
                let drop = mf + 1 == base && sa == Neutral && sb == Neutral;
                let keep = mf == base && sa == Essential && sb == Essential;
                if drop {
                    report.tally("essential-pair-drop");
                }
                if keep {
                    report.tally("essential-pair-keep");
                }
                report.check(drop != keep, || {
                    witness("both essential").mult("G-u-v", dab)
                });
            }
        }
        Ok(())
    }

    fn edge_deletion(&self, base: u32, report: &mut LemmaReport) -> Check {
        let table = self.probe.table()?;
        let s = &table.signs;
        for (a, b) in self.g().edges() {
            let pe = self.probe.for_graph(self.g().delete_edge(a, b)?);
            let me = pe.base()?;
            let (sa, sb) = (pe.sign(a)?, pe.sign(b)?);
            let after = |v: usize| if v == a { sa } else { sb };
            let witness = |what: &str| {
                Witness::new(format!(
                    "{what}; G {} / G-e {}",
                    signs_text(&[(a, s[a]), (b, s[b])]),
                    signs_text(&[(a, sa), (b, sb)])
                ))
                .edge(a, b)
                .mult("G", base)
                .mult("G-e", me)
            };
            for (u, v) in [(a, b), (b, a)] {
                if table.is_special(u) && s[v] == Essential {
                    report.tally("special-essential");
                    let ok = me == base && after(u) == Positive && after(v) == Essential;
                    report.check(ok, || witness(&format!("{u} special, {v} essential")));
                }
                if s[u] == Positive && s[v] == Neutral {
                    report.tally("positive-neutral");
                    let up = me == base + 1 && after(u) == Neutral && after(v) == Essential;
                    let stay = me == base && after(u) == Positive && after(v) == Neutral;
                    if up {
                        report.tally("positive-neutral-up");
                    }
                    if stay {
                        report.tally("positive-neutral-stay");
                    }
                    report.check(up != stay, || {
                        witness(&format!("{u} positive, {v} neutral"))
                    });
                }
            }
        }
        Ok(())
    }

    fn special_edge_deletion(&self, base: u32, report: &mut LemmaReport) -> Check {
        let table = self.probe.table()?;
        let s = &table.signs;
        let g = self.g();
        for &u in &table.special {
            let mut cut: HashMap<usize, Probe> = HashMap::new();
            let nb = |sign: VertexSign| -> Vec<usize> {
                g.neighbors(u).filter(|&v| s[v] == sign).collect()
            };
            let (ess, neu, pos) = (nb(Essential), nb(Neutral), nb(Positive));
            for &v in &ess {
                for &w in ess.iter().filter(|&&w| w != v) {
                    let dp = self.m(1 << v | 1 << u | 1 << w)?;
                    if dp + 1 == base {
                        report.tally("two-essential-path-essential");
                        continue;
                    }
                    report.tally("two-essential");
                    let p = self.cut_edge(&mut cut, u, v)?;
                    let (m, special, sw) = (p.base()?, p.special_after(0)?, p.sign(w)?);
                    report.check(
                        m == base && special >> u & 1 == 1 && sw == Essential,
                        || {
                            Witness::new(format!(
                                "special {u}, cut {u}-{v}, watch {w}:{}",
                                sw.letter()
                            ))
                            .vertices(&[v, u, w])
                            .edge(u, v)
                            .mult("G", base)
                            .mult("G-e", m)
                            .mult("G-vuw", dp)
                        },
                    );
                }
            }
            for (others, key) in [(&neu, "essential-neutral"), (&pos, "essential-positive")] {
                for &w in others {
                    for &v in &ess {
                        report.tally(key);
                        let p = self.cut_edge(&mut cut, u, w)?;
                        let (m, special, sv) = (p.base()?, p.special_after(0)?, p.sign(v)?);
                        report.check(
                            m == base && special >> u & 1 == 1 && sv == Essential,
                            || {
                                Witness::new(format!(
                                    "special {u}, cut {u}-{w}, watch {v}:{}",
                                    sv.letter()
                                ))
                                .vertices(&[v, u, w])
                                .edge(u, w)
                                .mult("G", base)
                                .mult("G-e", m)
                            },
                        );
                    }
                }
            }
        }
        Ok(())
    }

    fn cut_edge<'c>(
        &self,
        cut: &'c mut HashMap<usize, Probe>,
        u: usize,
        w: usize,
    ) -> Result<&'c Probe, StructureError> {
        match cut.entry(w) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(self.probe.for_graph(self.g().delete_edge(u, w)?))),
        }
    }

    fn stability(&self, report: &mut LemmaReport) -> Check {
        let table = self.probe.table()?;
        for &u in &table.special {
            let after = self.probe.signs_after(1 << u)?;
            for v in (0..self.g().n()).filter(|&v| v != u) {
                let (a, b) = (table.signs[v], after[v].unwrap());
                report.tally(format!("{}>{}", a.letter(), b.letter()));
                report.check(a == b, || {
                    Witness::new(format!("special {u}, {v}:{}>{}", a.letter(), b.letter()))
                        .vertices(&[u, v])
                        .mult("G", table.base_mult)
                        .mult("G-u", self.m(1 << u).unwrap_or(0))
                        .mult("G-u-v", self.m(1 << u | 1 << v).unwrap_or(0))
                });
            }
        }
        Ok(())
    }

    fn gallai(&self, base: u32, report: &mut LemmaReport) -> Check {
        let s = self.signs()?;
        if !s.is_empty() && s.iter().all(|&x| x == Essential) {
            // Disjoint copies of a primitive graph are all-essential with
            // multiplicity above 1, so only connected graphs are checked.
            if !self.g().is_connected() {
                report.tally("disconnected");
                return Ok(());
            }
            report.check(base == 1, || {
                Witness::new("every vertex essential").mult("G", base)
            });
        }
        Ok(())
    }

    fn decomposition_count(&self, base: u32, report: &mut LemmaReport) -> Check {
        let table = self.probe.table()?;
        let g = self.g();
        let dec = decompose(g, &table);
        let d_comps = g.components_within(mask_of(&dec.d));
        let c_d = d_comps.len() as i64;
        let a = dec.a.len() as i64;
        report.check(base as i64 == c_d - a, || {
            Witness::new(format!("c(D)={c_d} |A|={a}"))
                .vertices(&dec.a)
                .mult("G", base)
        });
        let all = g.vertex_mask();
        for comp in d_comps {
            report.tally("d-component");
            let outside = all & !comp;
            let mh = self.m(outside)?;
            let mut ok = mh == 1;
            for v in bits(comp) {
                ok &= self.m(outside | 1 << v)? + 1 == mh;
            }
            report.check(ok, || {
                Witness::new("D component")
                    .vertices(&bits(comp).collect::<Vec<_>>())
                    .mult("H", mh)
            });
        }
        for comp in g.components_within(mask_of(&dec.c)) {
            report.tally("c-component");
            let mh = self.m(all & !comp)?;
            report.check(mh == 0, || {
                Witness::new("C component")
                    .vertices(&bits(comp).collect::<Vec<_>>())
                    .mult("H", mh)
            });
        }
        Ok(())
    }

    fn zero_essential(&self, report: &mut LemmaReport) -> Check {
        let s = self.signs()?;
        let essential = (0..s.len())
            .filter(|&v| s[v] == Essential)
            .fold(0u32, |m, v| m | 1 << v);
        let missed = brute::missed_by_some_maximum_matching(self.g());
        report.check(essential == missed, || {
            Witness::new("essential set against vertices missed by a maximum matching")
                .vertices(&bits(essential ^ missed).collect::<Vec<_>>())
        });
        let neutral: Vec<usize> = (0..s.len()).filter(|&v| s[v] == Neutral).collect();
        report.check(neutral.is_empty(), || {
            Witness::new("neutral vertices for the zero root").vertices(&neutral)
        });
        Ok(())
    }

    fn special_set_stability(&self, report: &mut LemmaReport) -> Check {
        let table = self.probe.table()?;
        let special = mask_of(&table.special);
        for &u in &table.special {
            let after = self.probe.special_after(1 << u)?;
            let expected = special & !(1 << u);
            report.check(after == expected, || {
                Witness::new(format!("delete special {u}"))
                    .vertices(&bits(after ^ expected).collect::<Vec<_>>())
            });
        }
        Ok(())
    }
}

/// Checks that every factor of the matching polynomial of a connected
/// vertex-transitive graph is simple.
pub fn verify_simple_roots_vt(g: &Graph) -> Result<LemmaReport, StructureError> {
    let mut report = LemmaReport::new(LemmaId::VertexTransitiveSimpleRoots, g, None);
    if !g.is_connected() || !is_vertex_transitive(g)? {
        return Ok(report.not_applicable());
    }
    for (root, e) in root_support(g).factors {
        report.check(e == 1, || {
            Witness::new(format!("factor {}", root.minpoly())).mult("exponent", e)
        });
    }
    Ok(report)
}
