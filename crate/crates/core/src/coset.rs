//! Coset graphs `Cos(G, H, H{g, g⁻¹}H)`, regular connection sets, and the
//! double-coset cardinality conditions for an order-n element.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{double_coset, intersection_size, pair_action, pairs, set_product_with_cyclic, Group};
use crate::perm::Perm;

/// Whether no non-trivial normal subgroup of `g` lies inside `h`.
pub fn core_free(g: &Group, h: &Group) -> Result<bool> {
    h.require_subgroup_of(g, "core-freeness needs H ≤ G")?;
    // the core is {k ∈ H : k^x ∈ H for every x ∈ G}
    let in_core = |k: &Perm| {
        g.elements()
            .iter()
            .all(|x| h.contains(&k.conjugate(x).expect("degrees agree")))
    };
    Ok(!h.elements().iter().any(|k| !k.is_identity() && in_core(k)))
}

/// The data of `Cos(G, H, H{g, g⁻¹}H)`.
#[derive(Clone, Debug)]
pub struct CosetGraphSpec {
    pub ambient: Group,
    pub h: Group,
    pub g: Perm,
}

impl CosetGraphSpec {
    /// Checks `H ≤ G`, `g ∈ G \ H` and core-freeness.
    pub fn new(ambient: Group, h: Group, g: Perm) -> Result<CosetGraphSpec> {
        h.require_subgroup_of(&ambient, "coset graph needs H ≤ G")?;
        if !ambient.contains(&g) {
            return Err(Error::Precondition(format!("{g} is not in the ambient group")));
        }
        if h.contains(&g) {
            return Err(Error::Degenerate(format!("{g} lies in H; the coset graph would have loops")));
        }
        if !core_free(&ambient, &h)? {
            return Err(Error::Precondition("H is not core-free in G".into()));
        }
        Ok(CosetGraphSpec { ambient, h, g })
    }

    /// `H{g, g⁻¹}H`, sorted.
    pub fn connection_double_cosets(&self) -> Result<Vec<Perm>> {
        let mut d = double_coset(&self.h, &self.g, &self.h)?.members;
        d.extend(double_coset(&self.h, &self.g.inverse(), &self.h)?.members);
        d.sort_unstable();
        d.dedup();
        Ok(d)
    }
}

/// Right cosets of the spec (sorted by least element) and the coset index of
/// every ambient element.
fn coset_index(spec: &CosetGraphSpec) -> Result<(Vec<Vec<Perm>>, HashMap<Perm, usize>)> {
    let cosets = spec.ambient.right_cosets(&spec.h)?;
    let mut index = HashMap::with_capacity(spec.ambient.order());
    for (i, c) in cosets.iter().enumerate() {
        for x in c {
            index.insert(x.clone(), i);
        }
    }
    Ok((cosets, index))
}

/// The coset graph: vertex `i` is the `i`-th right coset `Hx`, and
/// `Hx ~ Hy` iff `yx⁻¹ ∈ H{g, g⁻¹}H`.
pub fn coset_graph(spec: &CosetGraphSpec) -> Result<Graph> {
    let (cosets, index) = coset_index(spec)?;
    let d = spec.connection_double_cosets()?;
    let mut edges = Vec::new();
    for (i, c) in cosets.iter().enumerate() {
        let x = &c[0];
        for s in &d {
            // yx⁻¹ = s  ⇔  y = s·x
            let j = index[&s.then(x)];
            debug_assert_ne!(i, j, "g ∉ H rules out loops");
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Graph::new(cosets.len(), &edges)
}

/// `|H| / |H ∩ H^g|` when `HgH = Hg⁻¹H`, twice that otherwise.
pub fn coset_valence(spec: &CosetGraphSpec) -> Result<usize> {
    let meet = spec.h.intersection(&spec.h.conjugate_by(&spec.g)?)?.order();
    let dc = double_coset(&spec.h, &spec.g, &spec.h)?;
    let self_paired = dc.contains(&spec.g.inverse());
    let base = spec.h.order() / meet;
    Ok(if self_paired { base } else { 2 * base })
}

/// The permutation of the coset vertices induced by right multiplication by `x`.
pub fn right_multiplication(spec: &CosetGraphSpec, x: &Perm) -> Result<Perm> {
    if !spec.ambient.contains(x) {
        return Err(Error::Precondition(format!("{x} is not in the ambient group")));
    }
    let (cosets, index) = coset_index(spec)?;
    Perm::new(cosets.iter().map(|c| index[&c[0].then(x)]).collect())
}

/// `{x ∈ R : v^x ∈ Γ(v)}` for a subgroup `R` regular on the vertices.
pub fn sabidussi_connection_set(g: &Graph, r: &Group, v: usize) -> Result<Vec<Perm>> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::PointOutOfRange { point: v, degree: n });
    }
    if r.degree() != n {
        return Err(Error::DegreeMismatch(r.degree(), n));
    }
    if r.order() != n || !r.is_transitive() {
        return Err(Error::NotRegular);
    }
    if r.generators().iter().any(|p| !g.is_automorphism(p)) {
        return Err(Error::NotAutomorphism);
    }
    Ok(r.elements()
        .iter()
        .filter(|x| g.has_edge(v, x.apply(v)))
        .cloned()
        .collect())
}

/// Cardinalities entering the two condition sets for `(G, H, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub h_order: usize,
    /// `|H ∩ H^g|`
    pub h_meet_conjugate: usize,
    /// `|H⟨g⟩ ∩ HgH|`
    pub product_meet_double_coset: usize,
    /// `|HgH|`
    pub double_coset_size: usize,
    /// `HgH = Hg⁻¹H`
    pub self_paired: bool,
    pub case: Option<u8>,
}

/// Case 1: `HgH = Hg⁻¹H` and `|H| = 6|H ∩ H^g| = ½|H⟨g⟩ ∩ HgH|`.
/// Case 2: `HgH ≠ Hg⁻¹H` and `|H| = 3|H ∩ H^g| = |H⟨g⟩ ∩ HgH|`.
pub fn lemma_cond_eval(ambient: &Group, h: &Group, g: &Perm) -> Result<LemmaReport> {
    h.require_subgroup_of(ambient, "condition evaluation needs H ≤ G")?;
    if !ambient.contains(g) {
        return Err(Error::Precondition(format!("{g} is not in the ambient group")));
    }
    let meet = h.intersection(&h.conjugate_by(g)?)?.order();
    let dc = double_coset(h, g, h)?;
    let product = set_product_with_cyclic(h, g)?;
    let inter = intersection_size(&product, &dc.members);
    let self_paired = dc.contains(&g.inverse());
    let order = h.order();
    let case = if self_paired && order == 6 * meet && 2 * order == inter {
        Some(1)
    } else if !self_paired && order == 3 * meet && order == inter {
        Some(2)
    } else {
        None
    };
    Ok(LemmaReport {
        h_order: order,
        h_meet_conjugate: meet,
        product_meet_double_coset: inter,
        double_coset_size: dc.len(),
        self_paired,
        case,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    pub element: Perm,
    pub report: LemmaReport,
    /// Whether the witness lies in the supplied cyclic group, when one was given.
    pub inside_c: Option<bool>,
}

/// The first element of order `n` (in element order) satisfying one of the
/// two condition sets.
pub fn exists_order_n_witness(
    ambient: &Group,
    h: &Group,
    n: u64,
    c: Option<&Group>,
) -> Result<Option<OrderWitness>> {
    h.require_subgroup_of(ambient, "witness search needs H ≤ G")?;
    if n == 0 || ambient.order() as u64 % n != 0 {
        return Ok(None);
    }
    for x in ambient.elements() {
        if x.order() != n {
            continue;
        }
        let report = lemma_cond_eval(ambient, h, x)?;
        if report.case.is_some() {
            return Ok(Some(OrderWitness {
                element: x.clone(),
                report,
                inside_c: c.map(|c| c.contains(x)),
            }));
        }
    }
    Ok(None)
}

/// A transitive group on the vertices of a graph, a vertex, and an element
/// moving that vertex to a neighbour.
#[derive(Clone, Debug)]
pub struct SabidussiModel {
    pub graph: Graph,
    pub group: Group,
    pub vertex: usize,
    pub g: Perm,
}

impl SabidussiModel {
    pub fn stabilizer(&self) -> Result<Group> {
        self.group.stabilizer(self.vertex)
    }

    pub fn spec(&self) -> Result<CosetGraphSpec> {
        CosetGraphSpec::new(self.group.clone(), self.stabilizer()?, self.g.clone())
    }
}

/// The Petersen complement on the 2-subsets of `{0..4}` (adjacent when they
/// meet), with `S5` acting on pairs, the vertex `{0,1}` and the 5-cycle
/// `(0 1 2 3 4)`, which maps `{0,1}` to the adjacent `{1,2}`.
pub fn petersen_complement_model() -> SabidussiModel {
    let ps = pairs(5);
    let graph = Graph::from_fn(ps.len(), |a, b| {
        let (p, q) = (ps[a], ps[b]);
        p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1
    });
    let group = Group::symmetric(5)
        .and_then(|s5| s5.induced_action_on_pairs())
        .expect("S5 acts faithfully on pairs");
    let five = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).expect("valid cycle");
    SabidussiModel {
        graph,
        group,
        vertex: 0,
        g: pair_action(&five),
    }
}

/// The model for a vertex- and edge-transitive graph: its full automorphism
/// group, vertex 0, and the least element moving 0 to a neighbour.
pub fn model_from_graph(graph: &Graph, cap: usize) -> Result<SabidussiModel> {
    if graph.vertex_count() == 0 || graph.degree(0) == 0 {
        return Err(Error::Precondition("graph needs an edge at vertex 0".into()));
    }
    let group = crate::symmetry::automorphism_group(graph, cap)?;
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let g = group
        .elements()
        .iter()
        .find(|x| graph.has_edge(0, x.apply(0)))
        .cloned()
        .ok_or_else(|| Error::Precondition("no element maps 0 to a neighbour".into()))?;
    Ok(SabidussiModel {
        graph: graph.clone(),
        group,
        vertex: 0,
        g,
    })
}

/// Builds the coset graph of the model and the map `Hx ↦ v^x` into the
/// original graph. Returns the coset graph and that map when it is an
/// isomorphism.
pub fn sabidussi_roundtrip(model: &SabidussiModel) -> Result<(Graph, Option<Perm>)> {
    let spec = model.spec()?;
    let cos = coset_graph(&spec)?;
    let cosets = spec.ambient.right_cosets(&spec.h)?;
    let map = Perm::new(cosets.iter().map(|c| c[0].apply(model.vertex)).collect())?;
    let ok = cos.vertex_count() == model.graph.vertex_count() && cos.is_isomorphism_to(&model.graph, &map);
    Ok((cos, ok.then_some(map)))
}
