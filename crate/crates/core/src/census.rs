//! Exhaustive edge-transitivity census over F(d) symbols, and single-graph
//! analysis.
//!
//! Per symbol the pipeline is: connectivity, degree check, a cheap edge
//! invariant (common neighbours and 4-cycles through an edge, which must be
//! constant on an edge-transitive graph), then the automorphism search and the
//! edge-orbit test. Survivors are deduplicated up to isomorphism.

use log::{debug, info};
use serde::Serialize;

use crate::bicirculant::{enumerate_for_inner, in_family_f_with_cap, primitive_case_check, BicirculantSymbol, Membership};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::group::DEFAULT_ELEMENT_CAP;
use crate::par;
use crate::symmetry::{
    self, all_minimal_block_systems, automorphism_search, is_arc_transitive, is_edge_transitive,
    is_primitive_gens, is_vertex_transitive, DEFAULT_NODE_BUDGET,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    TwiceOdd,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusJob {
    pub d: usize,
    pub max_order: usize,
    pub parity: Parity,
    pub connected_only: bool,
    pub element_cap: usize,
    pub node_budget: u64,
    /// Skip the automorphism search when the edge invariant is not constant.
    pub invariant_prune: bool,
}

impl CensusJob {
    pub fn new(d: usize, max_order: usize, parity: Parity) -> Result<CensusJob> {
        let job = CensusJob {
            d,
            max_order,
            parity,
            connected_only: true,
            element_cap: DEFAULT_ELEMENT_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
            invariant_prune: true,
        };
        job.validate()?;
        Ok(job)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 3 {
            return Err(Error::Precondition(format!("valence {} < 3", self.d)));
        }
        if self.max_order % 2 != 0 {
            return Err(Error::Precondition(format!("order cap {} is odd", self.max_order)));
        }
        if self.max_order < 2 * self.d + 2 {
            return Err(Error::Precondition(format!(
                "order cap {} below 2d + 2 = {}",
                self.max_order,
                2 * self.d + 2
            )));
        }
        Ok(())
    }

    /// Half-orders `n` covered by the job.
    pub fn half_orders(&self) -> Vec<usize> {
        (3.max(self.d - 2)..=self.max_order / 2)
            .filter(|n| self.parity == Parity::All || n % 2 == 1)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub symbol: String,
    pub order: usize,
    pub connected: bool,
    /// Empty for undecided rows.
    pub aut_order: String,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub primitive: bool,
    pub primitive_case_ok: bool,
    /// Isomorphism class number, 1-based, in symbol order; 0 for undecided rows.
    pub class_id: usize,
    /// `edge-transitive` or `undecided: <cause>`.
    pub status: String,
    pub graph6: String,
}

impl CensusRecord {
    pub fn is_undecided(&self) -> bool {
        self.status.starts_with("undecided")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderStats {
    pub order: usize,
    pub symbols: usize,
    pub disconnected: usize,
    pub pruned_by_invariant: usize,
    pub aut_computed: usize,
    pub edge_transitive: usize,
    pub undecided: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub job: CensusJob,
    pub records: Vec<CensusRecord>,
    pub stats: Vec<OrderStats>,
}

impl CensusReport {
    /// Edge-transitive class representatives.
    pub fn classes(&self) -> impl Iterator<Item = &CensusRecord> {
        self.records.iter().filter(|r| !r.is_undecided())
    }

    pub fn undecided(&self) -> impl Iterator<Item = &CensusRecord> {
        self.records.iter().filter(|r| r.is_undecided())
    }
}

enum Outcome {
    Disconnected,
    Pruned,
    NotEdgeTransitive,
    Survivor(Box<Survivor>),
    Undecided(BicirculantSymbol, String),
}

struct Survivor {
    sym: BicirculantSymbol,
    graph: Graph,
    record: CensusRecord,
}

/// Adjacency rows as bitsets.
struct Bits {
    words: usize,
    rows: Vec<u64>,
}

impl Bits {
    fn new(g: &Graph) -> Bits {
        let n = g.vertex_count();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for v in 0..n {
            for &w in g.neighbors(v) {
                rows[v * words + w / 64] |= 1 << (w % 64);
            }
        }
        Bits { words, rows }
    }

    fn common(&self, a: usize, b: usize) -> u32 {
        let (ra, rb) = (&self.rows[a * self.words..][..self.words], &self.rows[b * self.words..][..self.words]);
        ra.iter().zip(rb).map(|(x, y)| (x & y).count_ones()).sum()
    }
}

/// `(common neighbours, 4-cycles)` through the edge `ab`.
fn edge_signature(g: &Graph, bits: &Bits, a: usize, b: usize) -> (u32, u32) {
    let lambda = bits.common(a, b);
    let squares = g
        .neighbors(a)
        .iter()
        .filter(|&&x| x != b)
        .map(|&x| bits.common(x, b) - 1)
        .sum();
    (lambda, squares)
}

/// Rotation-invariant, so one representative per edge type suffices:
/// a cycle edge, an inner edge, and one spoke per spoke difference.
fn edge_invariant_uniform(sym: &BicirculantSymbol, g: &Graph) -> bool {
    let n = sym.n();
    let bits = Bits::new(g);
    let first = edge_signature(g, &bits, 0, 1);
    std::iter::once((n, n + sym.inner()))
        .chain(sym.spokes().iter().map(|&s| (0, n + s)))
        .all(|(a, b)| edge_signature(g, &bits, a, b) == first)
}

fn examine(sym: BicirculantSymbol, job: &CensusJob) -> Outcome {
    let g = sym.build();
    if job.connected_only && !g.is_connected() {
        return Outcome::Disconnected;
    }
    assert_eq!(g.regular_valence(), Some(job.d), "{sym} is not {}-regular", job.d);
    if job.invariant_prune && !edge_invariant_uniform(&sym, &g) {
        return Outcome::Pruned;
    }
    let search = match automorphism_search(&g, job.node_budget) {
        Ok(s) => s,
        Err(e) => return Outcome::Undecided(sym, e.to_string()),
    };
    let gens = &search.generators;
    let flags = (|| -> Result<(bool, bool, bool, bool)> {
        Ok((
            is_edge_transitive(&g, gens)?,
            is_vertex_transitive(&g, gens)?,
            is_arc_transitive(&g, gens)?,
            is_primitive_gens(g.vertex_count(), gens).unwrap_or(false),
        ))
    })();
    let (et, vt, at, primitive) = match flags {
        Ok(f) => f,
        Err(e) => return Outcome::Undecided(sym, e.to_string()),
    };
    if !et {
        return Outcome::NotEdgeTransitive;
    }
    let primitive_case_ok = match primitive_case_check(&g) {
        Ok(ok) => ok,
        Err(e) => return Outcome::Undecided(sym, e.to_string()),
    };
    let record = CensusRecord {
        symbol: sym.to_string(),
        order: g.vertex_count(),
        connected: g.is_connected(),
        aut_order: search.order.to_string(),
        vertex_transitive: vt,
        edge_transitive: true,
        arc_transitive: at,
        primitive,
        primitive_case_ok,
        class_id: 0,
        status: "edge-transitive".into(),
        graph6: graph6::encode(&g),
    };
    Outcome::Survivor(Box::new(Survivor { sym, graph: g, record }))
}

fn undecided_record(sym: &BicirculantSymbol, cause: &str) -> CensusRecord {
    CensusRecord {
        symbol: sym.to_string(),
        order: sym.order(),
        connected: true,
        aut_order: String::new(),
        vertex_transitive: false,
        edge_transitive: false,
        arc_transitive: false,
        primitive: false,
        primitive_case_ok: false,
        class_id: 0,
        status: format!("undecided: {cause}"),
        graph6: graph6::encode(&sym.build()),
    }
}

/// Runs the census. Output order is deterministic: by order, then symbol.
pub fn search(job: &CensusJob) -> Result<CensusReport> {
    job.validate()?;
    let k = job.d - 2;
    let slices: Vec<(usize, usize)> = job
        .half_orders()
        .into_iter()
        .flat_map(|n| (1..=(n - 1) / 2).map(move |b| (n, b)))
        .collect();
    info!("census d={} max order {}: {} (n, b) slices", job.d, job.max_order, slices.len());
    let outcomes: Vec<(usize, Vec<Outcome>)> = par::map(&slices, |&(n, b)| {
        let syms = enumerate_for_inner(n, k, b);
        (n, syms.into_iter().map(|s| examine(s, job)).collect())
    });

    let mut stats: Vec<OrderStats> = Vec::new();
    let mut survivors: Vec<Survivor> = Vec::new();
    let mut undecided: Vec<CensusRecord> = Vec::new();
    for (n, list) in outcomes {
        if stats.last().is_none_or(|s| s.order != 2 * n) {
            stats.push(OrderStats {
                order: 2 * n,
                ..OrderStats::default()
            });
        }
        let st = stats.last_mut().expect("just pushed");
        for o in list {
            st.symbols += 1;
            match o {
                Outcome::Disconnected => st.disconnected += 1,
                Outcome::Pruned => st.pruned_by_invariant += 1,
                Outcome::NotEdgeTransitive => st.aut_computed += 1,
                Outcome::Survivor(s) => {
                    st.aut_computed += 1;
                    survivors.push(*s);
                }
                Outcome::Undecided(sym, cause) => {
                    st.undecided += 1;
                    undecided.push(undecided_record(&sym, &cause));
                }
            }
        }
    }

    survivors.sort_by(|a, b| (a.sym.order(), &a.sym).cmp(&(b.sym.order(), &b.sym)));
    let mut classes: Vec<Survivor> = Vec::new();
    for s in survivors {
        let mut duplicate = false;
        for c in classes.iter().filter(|c| c.graph.vertex_count() == s.graph.vertex_count()) {
            match symmetry::find_isomorphism(&c.graph, &s.graph, job.node_budget) {
                Ok(Some(_)) => {
                    duplicate = true;
                    break;
                }
                Ok(None) => {}
                Err(e) => {
                    undecided.push(undecided_record(&s.sym, &format!("isomorphism test: {e}")));
                    duplicate = true;
                    break;
                }
            }
        }
        if !duplicate {
            classes.push(s);
        }
    }

    let mut records: Vec<CensusRecord> = Vec::new();
    for (i, c) in classes.into_iter().enumerate() {
        let mut r = c.record;
        r.class_id = i + 1;
        records.push(r);
    }
    for st in &mut stats {
        st.edge_transitive = records.iter().filter(|r| r.order == st.order).count();
        debug!("order {}: {:?}", st.order, st);
    }
    undecided.sort_by(|a, b| (a.order, &a.symbol).cmp(&(b.order, &b.symbol)));
    records.extend(undecided);
    info!(
        "census d={}: {} classes, {} undecided",
        job.d,
        records.iter().filter(|r| !r.is_undecided()).count(),
        records.iter().filter(|r| r.is_undecided()).count()
    );
    Ok(CensusReport {
        job: job.clone(),
        records,
        stats,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystemSummary {
    pub block_size: usize,
    pub blocks: usize,
    /// `None` when the group was too large to enumerate.
    pub normal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub edges: usize,
    pub valence: Option<usize>,
    pub connected: bool,
    pub aut_order: String,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub primitive: Option<bool>,
    pub minimal_block_systems: Vec<BlockSystemSummary>,
    /// `witness: ...`, `none`, or `undecided: <cause>`.
    pub family_f: String,
    pub primitive_case_ok: Option<bool>,
    pub graph6: String,
}

pub fn analyze(g: &Graph, element_cap: usize) -> Result<AnalysisReport> {
    let search = automorphism_search(g, DEFAULT_NODE_BUDGET)?;
    let gens = &search.generators;
    let n = g.vertex_count();
    let vt = n > 0 && is_vertex_transitive(g, gens)?;
    let (primitive, systems) = if vt {
        let partitions = symmetry::minimal_block_partitions(n, gens)?;
        let normal_flags: Option<Vec<bool>> = if search.order <= element_cap as u128 {
            let group = symmetry::automorphism_group(g, element_cap)?;
            Some(all_minimal_block_systems(&group)?.iter().map(|s| s.is_normal).collect())
        } else {
            None
        };
        let systems = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| BlockSystemSummary {
                block_size: p.classes()[0].len(),
                blocks: p.len(),
                normal: normal_flags.as_ref().map(|f| f[i]),
            })
            .collect();
        (Some(partitions.is_empty()), systems)
    } else {
        (None, Vec::new())
    };
    let family_f = match g.regular_valence() {
        Some(d) => match in_family_f_with_cap(g, d, element_cap) {
            Membership::Witness(w) => format!(
                "witness: rho = {}, cycle orbit {:?}",
                w.rho.to_cycle_string(),
                // same 1-indexed labels as the cycle notation
                w.cycle_orbit.iter().map(|v| v + 1).collect::<Vec<_>>()
            ),
            Membership::NotInFamily => "none".into(),
            Membership::Undecided(cause) => format!("undecided: {cause}"),
        },
        None => "none".into(),
    };
    let primitive_case_ok = if vt { Some(primitive_case_check(g)?) } else { None };
    Ok(AnalysisReport {
        order: n,
        edges: g.edge_count(),
        valence: g.regular_valence(),
        connected: g.is_connected(),
        aut_order: search.order.to_string(),
        vertex_transitive: vt,
        edge_transitive: g.edge_count() > 0 && is_edge_transitive(g, gens)?,
        arc_transitive: g.edge_count() > 0 && is_arc_transitive(g, gens)?,
        primitive,
        minimal_block_systems: systems,
        family_f,
        primitive_case_ok,
        graph6: graph6::encode(g),
    })
}
