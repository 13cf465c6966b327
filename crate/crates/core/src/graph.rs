//! Finite simple undirected graphs on dense vertex sets `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

/// Human-readable edge-list form `{"n": m, "edges": [[a,b], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops are rejected, repeated edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Precondition("graph needs at least one vertex".into()));
        }
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
            }
            if a == b {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            g.add_edge(a, b);
        }
        g.finish();
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        if !self.matrix[a * self.n + b] {
            self.matrix[a * self.n + b] = true;
            self.matrix[b * self.n + a] = true;
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `a < b`.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                if adjacent(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g.finish();
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |a, b| b - a == 1 || (a == 0 && b == n - 1 && n > 2))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.n + b]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The common valence, if the graph is regular.
    pub fn regular_valence(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            for &b in &self.adj[a] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |a, b| !self.has_edge(a, b))
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced on `verts`, relabelled `0..k` in ascending original order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<Graph> {
        let mut vs = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Err(Error::Precondition("induced subgraph of the empty set".into()));
        }
        if let Some(&x) = vs.iter().find(|&&x| x >= self.n) {
            return Err(Error::PointOutOfRange { point: x, degree: self.n });
        }
        Ok(Graph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j])))
    }

    /// Connected, 2-regular, at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regular_valence() == Some(2) && self.is_connected()
    }

    /// The image of the graph under a vertex relabelling `v ↦ p(v)`.
    pub fn relabel(&self, p: &Perm) -> Result<Graph> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch(self.n, p.degree()));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (p.apply(a), p.apply(b)))
            .collect();
        Graph::new(self.n, &edges)
    }

    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.n
            && self
                .edges()
                .into_iter()
                .all(|(a, b)| self.has_edge(p.apply(a), p.apply(b)))
    }

    /// Whether `p` maps `self` onto `other` edge for edge.
    pub fn is_isomorphism_to(&self, other: &Graph, p: &Perm) -> bool {
        p.degree() == self.n
            && self.n == other.n
            && self.edge_count() == other.edge_count()
            && self
                .edges()
                .into_iter()
                .all(|(a, b)| other.has_edge(p.apply(a), p.apply(b)))
    }

    /// Quotient graph: one vertex per class, an edge wherever some edge crosses
    /// between two distinct classes. Never has loops.
    pub fn quotient(&self, partition: &VertexPartition) -> Result<Graph> {
        partition.check_domain(self.n)?;
        let k = partition.len();
        let mut q = Graph::empty(k);
        for (a, b) in self.edges() {
            let (ca, cb) = (partition.class_of(a), partition.class_of(b));
            if ca != cb {
                q.add_edge(ca, cb);
            }
        }
        q.finish();
        Ok(q)
    }

    /// The constant `r` for which the graph is an r-cover of its quotient, if any.
    ///
    /// Every edge must join distinct classes and every vertex must see exactly
    /// `r` neighbours in each class it is adjacent to.
    pub fn r_cover_check(&self, partition: &VertexPartition) -> Result<Option<usize>> {
        partition.check_domain(self.n)?;
        let mut r = None;
        for u in 0..self.n {
            let cu = partition.class_of(u);
            let mut counts: Vec<(usize, usize)> = Vec::new();
            for &w in &self.adj[u] {
                let cw = partition.class_of(w);
                if cw == cu {
                    return Ok(None);
                }
                match counts.iter_mut().find(|(c, _)| *c == cw) {
                    Some(entry) => entry.1 += 1,
                    None => counts.push((cw, 1)),
                }
            }
            for (_, c) in counts {
                match r {
                    None => r = Some(c),
                    Some(r0) if r0 != c => return Ok(None),
                    _ => {}
                }
            }
        }
        Ok(r)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(list.n, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serialises")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let list: EdgeList = serde_json::from_str(text).map_err(|e| {
            // serde_json reports line/column; turn it into a byte offset
            let offset = text
                .split_inclusive('\n')
                .take(e.line().saturating_sub(1))
                .map(str::len)
                .sum::<usize>()
                + e.column().saturating_sub(1);
            Error::parse(offset, e.to_string())
        })?;
        Graph::from_edge_list(&list)
    }
}

/// A partition of `0..n` into disjoint non-empty classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl VertexPartition {
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<VertexPartition> {
        let mut class_of = vec![usize::MAX; n];
        let mut classes = classes;
        for (i, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n {
                    return Err(Error::PointOutOfRange { point: v, degree: n });
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two classes")));
                }
                class_of[v] = i;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(VertexPartition { classes, class_of })
    }

    pub fn singletons(n: usize) -> VertexPartition {
        VertexPartition::new(n, (0..n).map(|v| vec![v]).collect()).expect("valid")
    }

    pub fn whole(n: usize) -> VertexPartition {
        VertexPartition::new(n, vec![(0..n).collect()]).expect("valid")
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn domain_size(&self) -> usize {
        self.class_of.len()
    }

    #[inline]
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Classes sorted internally and by least element; two partitions are the
    /// same set partition iff their normal forms agree.
    pub fn normal_form(&self) -> Vec<Vec<usize>> {
        let mut c = self.classes.clone();
        c.sort();
        c
    }

    fn check_domain(&self, n: usize) -> Result<()> {
        if self.domain_size() != n {
            return Err(Error::InvalidPartition(format!(
                "partition of {} points used on {} vertices",
                self.domain_size(),
                n
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn construction_rejects_loops_and_ranges() {
        assert!(Graph::new(3, &[(1, 1)]).is_err());
        assert!(Graph::new(3, &[(0, 3)]).is_err());
        assert!(Graph::new(0, &[]).is_err());
        let g = Graph::new(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.induced_subgraph(&[4, 1, 2]).unwrap(), Graph::complete(3));
        let c6 = Graph::cycle(6);
        let sub = c6.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(sub, Graph::empty(3));
        assert!(c6.induced_subgraph(&[]).is_err());
    }

    #[test]
    fn cycles() {
        assert!(Graph::cycle(5).is_cycle());
        assert!(!two_triangles().is_cycle());
        assert!(!Graph::complete(4).is_cycle());
        assert!(!Graph::complete(2).is_cycle());
    }

    #[test]
    fn quotients() {
        let c6 = Graph::cycle(6);
        assert_eq!(c6.quotient(&VertexPartition::singletons(6)).unwrap(), c6);
        assert_eq!(
            c6.quotient(&VertexPartition::whole(6)).unwrap(),
            Graph::empty(1)
        );
    }

    #[test]
    fn covers() {
        let c6 = Graph::cycle(6);
        let antipodal =
            VertexPartition::new(6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert_eq!(c6.r_cover_check(&antipodal).unwrap(), Some(1));
        let k4 = Graph::complete(4);
        let halves = VertexPartition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(k4.r_cover_check(&halves).unwrap(), None);
        // K_{2,2} over its two sides is a 2-cover of K2
        let c4 = Graph::cycle(4);
        let sides = VertexPartition::new(4, vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(c4.r_cover_check(&sides).unwrap(), Some(2));
    }

    #[test]
    fn partitions_validate() {
        assert!(VertexPartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1, 5]]).is_err());
    }

    #[test]
    fn complement_and_connectivity() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.regular_valence(), Some(2));
        assert!(comp.is_cycle());
        assert_eq!(comp.complement(), c5);
        assert!(!two_triangles().is_connected());
        assert_eq!(two_triangles().degree_sequence(), vec![2; 6]);
    }

    #[test]
    fn json_round_trip() {
        let g = two_triangles();
        let text = g.to_json();
        assert_eq!(Graph::from_json(&text).unwrap(), g);
        assert_eq!(
            Graph::from_json(r#"{"n": 2, "edges": [[0,1]]}"#).unwrap(),
            Graph::complete(2)
        );
        match Graph::from_json("{\"n\": 2,\n \"edges\": [[0,1]").unwrap_err() {
            Error::Parse { offset, .. } => assert!(offset > 8),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn relabel_and_automorphism() {
        let c5 = Graph::cycle(5);
        let rot = Perm::new(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(c5.is_automorphism(&rot));
        assert_eq!(c5.relabel(&rot).unwrap(), c5);
        let swap = Perm::new(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(!c5.is_automorphism(&swap));
    }
}
