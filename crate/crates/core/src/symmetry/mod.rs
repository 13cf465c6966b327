//! Automorphism groups, transitivity tests, blocks of imprimitivity.

mod blocks;
pub mod search;

use std::collections::HashMap;

pub use blocks::{
    all_minimal_block_systems, block_system_of, is_normal_block_system, is_primitive,
    is_primitive_gens, is_regular, kernel_of_action, minimal_block, minimal_block_partitions,
    rank, subdegrees, BlockSystem,
};
pub use search::{automorphism_search, find_isomorphism, AutomorphismSearch, DEFAULT_NODE_BUDGET};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::Group;
use crate::perm::Perm;

/// The full automorphism group, enumerated up to `cap` elements.
pub fn automorphism_group(g: &Graph, cap: usize) -> Result<Group> {
    let search = automorphism_search(g, DEFAULT_NODE_BUDGET)?;
    if search.order > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let group = Group::closure(g.vertex_count(), &search.generators, cap)?;
    debug_assert_eq!(group.order() as u128, search.order);
    Ok(group)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(find_isomorphism(a, b, DEFAULT_NODE_BUDGET)?.is_some())
}

fn check_automorphisms(g: &Graph, gens: &[Perm]) -> Result<()> {
    if gens.iter().all(|p| g.is_automorphism(p)) {
        Ok(())
    } else {
        Err(Error::NotAutomorphism)
    }
}

fn count_classes(size: usize, links: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut classes = size;
    for (a, b) in links {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            classes -= 1;
        }
    }
    classes
}

pub fn is_vertex_transitive(g: &Graph, gens: &[Perm]) -> Result<bool> {
    check_automorphisms(g, gens)?;
    let n = g.vertex_count();
    Ok(count_classes(n, gens.iter().flat_map(|p| (0..n).map(move |v| (v, p.apply(v))))) == 1)
}

/// Edge orbits under the group generated by `gens`, each a sorted edge list.
pub fn edge_orbits(g: &Graph, gens: &[Perm]) -> Result<Vec<Vec<(usize, usize)>>> {
    check_automorphisms(g, gens)?;
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in gens {
        for (i, &(a, b)) in edges.iter().enumerate() {
            let (x, y) = (p.apply(a), p.apply(b));
            let j = index[&(x.min(y), x.max(y))];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, &e) in edges.iter().enumerate() {
        let r = find(&mut parent, i);
        let k = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(e);
    }
    Ok(groups)
}

pub fn is_edge_transitive(g: &Graph, gens: &[Perm]) -> Result<bool> {
    Ok(edge_orbits(g, gens)?.len() == 1)
}

pub fn is_arc_transitive(g: &Graph, gens: &[Perm]) -> Result<bool> {
    check_automorphisms(g, gens)?;
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(2 * g.edge_count());
    for (a, b) in g.edges() {
        arcs.push((a, b));
        arcs.push((b, a));
    }
    arcs.sort_unstable();
    if arcs.is_empty() {
        return Ok(false);
    }
    let index = |a: (usize, usize)| arcs.binary_search(&a).expect("arc of the graph");
    let links: Vec<(usize, usize)> = gens
        .iter()
        .flat_map(|p| {
            arcs.iter()
                .enumerate()
                .map(move |(i, &(a, b))| (i, (p.apply(a), p.apply(b))))
        })
        .map(|(i, arc)| (i, index(arc)))
        .collect();
    Ok(count_classes(arcs.len(), links.into_iter()) == 1)
}
