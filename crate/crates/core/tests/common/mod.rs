//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use bicirc::{Graph, Perm};
use rand::Rng;

/// Every automorphism, found by extending partial bijections one vertex at a
/// time and discarding any prefix that breaks adjacency. No refinement.
pub fn brute_force_automorphisms(g: &Graph) -> Vec<Perm> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(g, &mut image, &mut used, &mut out);
    out.sort();
    out
}

fn extend(g: &Graph, image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
    let n = g.vertex_count();
    let v = image.len();
    if v == n {
        out.push(Perm::new(image.clone()).unwrap());
        return;
    }
    for w in 0..n {
        if used[w] || g.degree(v) != g.degree(w) {
            continue;
        }
        if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
            used[w] = true;
            image.push(w);
            extend(g, image, used, out);
            image.pop();
            used[w] = false;
        }
    }
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}
