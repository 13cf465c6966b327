//! Individualisation-refinement search for automorphisms and isomorphisms.
//!
//! Ordered partitions are refined to equitable ones by colour refinement
//! (each vertex is split by its current cell and the multiset of its
//! neighbours' cells). Cells are split in a label-independent order, so an
//! isomorphism maps refined partitions to refined partitions position by
//! position. The search follows a reference path (always individualising the
//! least vertex of the first largest cell) and looks for leaves of the same
//! shape; a leaf matched against the reference leaf yields a candidate map.

use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Perm;

/// Default limit on search-tree nodes visited for one graph.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

type Cells = Vec<Vec<usize>>;

/// Refines `cells` in place to the coarsest equitable refinement and returns
/// a label-independent fingerprint of the process.
pub(crate) fn refine(g: &Graph, cells: &mut Cells) -> u64 {
    let n = g.vertex_count();
    let mut color = vec![0usize; n];
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v] = ci;
            }
        }
        let before = cells.len();
        let mut next: Cells = Vec::with_capacity(before);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut k: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                    k.sort_unstable();
                    (k, v)
                })
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i + 1;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    j += 1;
                }
                keyed[i].0.hash(&mut hasher);
                next.push(keyed[i..j].iter().map(|(_, v)| *v).collect());
                i = j;
            }
        }
        for cell in &next {
            cell.len().hash(&mut hasher);
        }
        *cells = next;
        if cells.len() == before {
            break;
        }
    }
    hasher.finish()
}

fn target_cell(cells: &Cells) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, c) in cells.iter().enumerate() {
        if c.len() > 1 && best.is_none_or(|b| c.len() > cells[b].len()) {
            best = Some(i);
        }
    }
    best
}

fn individualize(cells: &Cells, cell: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..cell]);
    out.push(vec![v]);
    out.push(cells[cell].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[cell + 1..]);
    out
}

/// The reference path of the search tree.
struct Path {
    cells: Vec<Cells>,
    fingerprints: Vec<u64>,
    targets: Vec<usize>,
    chosen: Vec<usize>,
}

impl Path {
    fn depth(&self) -> usize {
        self.targets.len()
    }

    fn leaf(&self) -> Vec<usize> {
        self.cells.last().expect("path has a root").iter().map(|c| c[0]).collect()
    }
}

fn root(g: &Graph) -> (Cells, u64) {
    let mut cells = vec![(0..g.vertex_count()).collect::<Vec<_>>()];
    let fp = refine(g, &mut cells);
    (cells, fp)
}

fn reference_path(g: &Graph) -> Path {
    let (mut cells, fp) = root(g);
    let mut path = Path {
        cells: vec![cells.clone()],
        fingerprints: vec![fp],
        targets: Vec::new(),
        chosen: Vec::new(),
    };
    while let Some(t) = target_cell(&cells) {
        let v = cells[t][0];
        cells = individualize(&cells, t, v);
        let fp = refine(g, &mut cells);
        path.targets.push(t);
        path.chosen.push(v);
        path.cells.push(cells.clone());
        path.fingerprints.push(fp);
    }
    path
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::SearchBudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

/// Depth-first search below `cells` (at `level` of the reference path) in the
/// tree of `target` for a leaf giving an isomorphism from `source` to `target`.
fn find_leaf(
    source: &Graph,
    target: &Graph,
    reference: &Path,
    reference_leaf: &[usize],
    level: usize,
    cells: &Cells,
    budget: &mut Budget,
) -> Result<Option<Perm>> {
    budget.tick()?;
    if level == reference.depth() {
        let mut images = vec![0usize; source.vertex_count()];
        for (pos, cell) in cells.iter().enumerate() {
            images[reference_leaf[pos]] = cell[0];
        }
        let p = Perm::new(images).expect("leaf is a bijection");
        return Ok(source.is_isomorphism_to(target, &p).then_some(p));
    }
    let t = reference.targets[level];
    if cells.get(t).map(|c| c.len()) != Some(reference.cells[level][t].len()) {
        return Ok(None);
    }
    for &v in &cells[t] {
        let mut next = individualize(cells, t, v);
        let fp = refine(target, &mut next);
        if fp != reference.fingerprints[level + 1] || next.len() != reference.cells[level + 1].len() {
            continue;
        }
        if let Some(p) = find_leaf(source, target, reference, reference_leaf, level + 1, &next, budget)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Result of the automorphism search: generators and the exact group order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSearch {
    pub generators: Vec<Perm>,
    pub order: u128,
    /// Base points fixed along the reference path, outermost first.
    pub base: Vec<usize>,
    /// Orbit length of each base point under the stabiliser of the earlier ones.
    pub basic_orbit_lengths: Vec<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn add_perm(&mut self, p: &Perm) {
        for x in 0..p.degree() {
            self.union(x, p.apply(x));
        }
    }
}

/// Generators and order of the full automorphism group.
///
/// Levels of the reference path are processed deepest first. At each level
/// the search tries to map the base point to every other vertex of its cell,
/// skipping vertices already known to lie in (or already known to lie outside)
/// its orbit under the stabiliser of the earlier base points. The group order
/// is the product of the resulting orbit lengths.
pub fn automorphism_search(g: &Graph, node_budget: u64) -> Result<AutomorphismSearch> {
    let n = g.vertex_count();
    let reference = reference_path(g);
    let leaf = reference.leaf();
    let mut budget = Budget { used: 0, limit: node_budget };
    let mut generators: Vec<Perm> = Vec::new();
    let mut orbit_lengths = vec![1usize; reference.depth()];
    let mut uf = UnionFind::new(n);

    for level in (0..reference.depth()).rev() {
        let cells = &reference.cells[level];
        let t = reference.targets[level];
        let beta = reference.chosen[level];
        let mut failed_roots: Vec<usize> = Vec::new();
        for &gamma in &cells[t] {
            if gamma == beta {
                continue;
            }
            let root_gamma = uf.find(gamma);
            if root_gamma == uf.find(beta) || failed_roots.iter().any(|&r| uf.find(r) == root_gamma) {
                continue;
            }
            let mut next = individualize(cells, t, gamma);
            let fp = refine(g, &mut next);
            let found = if fp == reference.fingerprints[level + 1]
                && next.len() == reference.cells[level + 1].len()
            {
                find_leaf(g, g, &reference, &leaf, level + 1, &next, &mut budget)?
            } else {
                None
            };
            match found {
                Some(p) => {
                    uf.add_perm(&p);
                    generators.push(p);
                }
                None => failed_roots.push(gamma),
            }
        }
        let rb = uf.find(beta);
        orbit_lengths[level] = cells[t].iter().filter(|&&x| uf.find(x) == rb).count();
    }

    let order = orbit_lengths.iter().map(|&l| l as u128).product();
    Ok(AutomorphismSearch {
        generators,
        order,
        base: reference.chosen.clone(),
        basic_orbit_lengths: orbit_lengths,
    })
}

/// An isomorphism from `a` onto `b`, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph, node_budget: u64) -> Result<Option<Perm>> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(None);
    }
    let reference = reference_path(a);
    let leaf = reference.leaf();
    let (cells, fp) = root(b);
    if fp != reference.fingerprints[0] || cells.len() != reference.cells[0].len() {
        return Ok(None);
    }
    let mut budget = Budget { used: 0, limit: node_budget };
    find_leaf(a, b, &reference, &leaf, 0, &cells, &mut budget)
}
