use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::VertexPartition;
use crate::group::{orbit_of, orbits_of, Group};
use crate::perm::Perm;

/// A block system of an enumerated group together with its kernel.
#[derive(Clone, Debug)]
pub struct BlockSystem {
    pub blocks: VertexPartition,
    pub kernel: Group,
    pub is_normal: bool,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks.classes()[0].len()
    }
}

fn require_transitive(degree: usize, gens: &[Perm]) -> Result<()> {
    if orbits_of(degree, gens).len() != 1 {
        return Err(Error::NotTransitive);
    }
    Ok(())
}

/// The smallest block containing `seed`, by union-find closure over generators.
pub fn minimal_block(degree: usize, gens: &[Perm], seed: (usize, usize)) -> Result<Vec<usize>> {
    let (a, b) = seed;
    for x in [a, b] {
        if x >= degree {
            return Err(Error::PointOutOfRange { point: x, degree });
        }
    }
    require_transitive(degree, gens)?;
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = Vec::new();
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    if ra != rb {
        parent[rb] = ra;
        queue.push((a, b));
    }
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (rx, ry) = (find(&mut parent, g.apply(x)), find(&mut parent, g.apply(y)));
            if rx != ry {
                parent[ry] = rx;
                queue.push((rx, ry));
            }
        }
    }
    let r = find(&mut parent, a);
    Ok((0..degree).filter(|&x| find(&mut parent, x) == r).collect())
}

/// The partition formed by the images of `block`.
pub fn block_system_of(degree: usize, gens: &[Perm], block: &[usize]) -> Result<VertexPartition> {
    let mut start = block.to_vec();
    start.sort_unstable();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(b) = stack.pop() {
        for g in gens {
            let img = g.image_of_set(&b);
            if seen.insert(img.clone()) {
                stack.push(img);
            }
        }
    }
    VertexPartition::new(degree, seen.into_iter().collect()).map_err(|_| Error::Precondition(
        "set is not a block: its images overlap".into(),
    ))
}

/// One partition per minimal block through point 0, deduplicated.
/// Empty iff the group is primitive.
pub fn minimal_block_partitions(degree: usize, gens: &[Perm]) -> Result<Vec<VertexPartition>> {
    require_transitive(degree, gens)?;
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for b in 1..degree {
        let block = minimal_block(degree, gens, (0, b))?;
        if block.len() < degree && !candidates.contains(&block) {
            candidates.push(block);
        }
    }
    let minimal: Vec<&Vec<usize>> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.len() < c.len() && d.iter().all(|x| c.binary_search(x).is_ok()))
        })
        .collect();
    let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
    let mut out = Vec::new();
    for block in minimal {
        let system = block_system_of(degree, gens, block)?;
        if seen.insert(system.normal_form()) {
            out.push(system);
        }
    }
    Ok(out)
}

pub fn is_primitive_gens(degree: usize, gens: &[Perm]) -> Result<bool> {
    if degree <= 2 {
        require_transitive(degree, gens)?;
        return Ok(true);
    }
    Ok(minimal_block_partitions(degree, gens)?.is_empty())
}

pub fn is_primitive(group: &Group) -> Result<bool> {
    is_primitive_gens(group.degree(), group.generators())
}

/// Every minimal block system, each with its kernel and normality flag.
pub fn all_minimal_block_systems(group: &Group) -> Result<Vec<BlockSystem>> {
    minimal_block_partitions(group.degree(), group.generators())?
        .into_iter()
        .map(|blocks| {
            let kernel = kernel_of_action(group, &blocks)?;
            let is_normal = is_normal_block_system(group, &blocks)?.is_some();
            Ok(BlockSystem {
                blocks,
                kernel,
                is_normal,
            })
        })
        .collect()
}

fn check_invariant(group: &Group, partition: &VertexPartition) -> Result<()> {
    if partition.domain_size() != group.degree() {
        return Err(Error::InvalidPartition("partition and group degrees differ".into()));
    }
    for g in group.generators() {
        for class in partition.classes() {
            let img = g.image_of_set(class);
            let target = partition.class_of(img[0]);
            if partition.classes()[target] != img {
                return Err(Error::NotInvariant);
            }
        }
    }
    Ok(())
}

/// Elements fixing every class set-wise.
pub fn kernel_of_action(group: &Group, partition: &VertexPartition) -> Result<Group> {
    check_invariant(group, partition)?;
    let kernel = group.filter(|p| (0..group.degree()).all(|x| partition.class_of(p.apply(x)) == partition.class_of(x)));
    debug_assert!(kernel.is_normal_in(group).unwrap_or(false));
    Ok(kernel)
}

/// The kernel, when the classes are exactly its orbits (a normal block system).
pub fn is_normal_block_system(group: &Group, partition: &VertexPartition) -> Result<Option<Group>> {
    let kernel = kernel_of_action(group, partition)?;
    let mut orbits = kernel.orbits();
    orbits.sort();
    Ok((orbits == partition.normal_form()).then_some(kernel))
}

/// Orbit lengths of the stabiliser of point 0, ascending.
pub fn subdegrees(group: &Group) -> Result<Vec<usize>> {
    require_transitive(group.degree(), group.generators())?;
    let stab = group.stabilizer(0)?;
    let mut lengths: Vec<usize> = stab.orbits().iter().map(|o| o.len()).collect();
    lengths.sort_unstable();
    Ok(lengths)
}

pub fn rank(group: &Group) -> Result<usize> {
    Ok(subdegrees(group)?.len())
}

/// Whether the group induced on the invariant set `subset` is regular.
pub fn is_regular(group: &Group, subset: &[usize]) -> bool {
    let mut set = subset.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() || set.iter().any(|&x| x >= group.degree()) {
        return false;
    }
    if group.generators().iter().any(|g| g.image_of_set(&set) != set) {
        return false;
    }
    if orbit_of(group.degree(), group.generators(), set[0]).len() != set.len() {
        return false;
    }
    let restrictions: HashSet<Vec<usize>> = group
        .elements()
        .iter()
        .map(|p| set.iter().map(|&x| p.apply(x)).collect())
        .collect();
    restrictions.len() == set.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::symmetry::automorphism_group;

    fn rotation(n: usize) -> Perm {
        Perm::new((1..n).chain([0]).collect()).unwrap()
    }

    #[test]
    fn minimal_blocks_of_rotations() {
        let r = rotation(6);
        assert_eq!(minimal_block(6, &[r.clone()], (0, 3)).unwrap(), vec![0, 3]);
        assert_eq!(minimal_block(6, &[r.clone()], (0, 2)).unwrap(), vec![0, 2, 4]);
        assert_eq!(minimal_block(6, &[r], (0, 1)).unwrap(), (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn dihedral_c6_block() {
        let aut = automorphism_group(&Graph::cycle(6), 100).unwrap();
        assert_eq!(
            minimal_block(6, aut.generators(), (0, 2)).unwrap(),
            vec![0, 2, 4]
        );
    }

    #[test]
    fn intransitive_groups_are_rejected() {
        let p = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        assert_eq!(minimal_block(4, &[p.clone()], (0, 1)), Err(Error::NotTransitive));
        let g = Group::cyclic(&p);
        assert!(matches!(subdegrees(&g), Err(Error::NotTransitive)));
    }

    #[test]
    fn minimal_systems_of_c6() {
        let c6 = Group::cyclic(&rotation(6));
        let systems = all_minimal_block_systems(&c6).unwrap();
        let mut sizes: Vec<usize> = systems.iter().map(|s| s.block_size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        assert!(systems.iter().all(|s| s.is_normal));
    }

    #[test]
    fn primitive_groups() {
        assert!(is_primitive(&Group::symmetric(5).unwrap()).unwrap());
        let k6 = automorphism_group(&Graph::complete(6), 1000).unwrap();
        assert!(is_primitive(&k6).unwrap());
        assert!(!is_primitive(&Group::cyclic(&rotation(6))).unwrap());
        assert!(is_primitive(&Group::cyclic(&rotation(7))).unwrap());
    }

    #[test]
    fn kernels() {
        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(kernel_of_action(&s3, &VertexPartition::singletons(3)).unwrap().order(), 1);
        assert_eq!(kernel_of_action(&s3, &VertexPartition::whole(3)).unwrap(), s3);
        let s4 = Group::symmetric(4).unwrap();
        let pairs = VertexPartition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(kernel_of_action(&s4, &pairs), Err(Error::NotInvariant));
        assert!(matches!(is_normal_block_system(&s4, &pairs), Err(Error::NotInvariant)));
    }

    #[test]
    fn subdegrees_and_rank() {
        let s5 = Group::symmetric(5).unwrap();
        assert_eq!(subdegrees(&s5).unwrap(), vec![1, 4]);
        assert_eq!(rank(&s5).unwrap(), 2);
        let c5 = Group::cyclic(&rotation(5));
        assert_eq!(subdegrees(&c5).unwrap(), vec![1; 5]);
        let a5 = Group::alternating(5).unwrap();
        let on_pairs = Group::closure(
            10,
            &a5.generators().iter().map(crate::group::pair_action).collect::<Vec<_>>(),
            100,
        )
        .unwrap();
        assert_eq!(on_pairs.order(), 60);
        assert_eq!(subdegrees(&on_pairs).unwrap(), vec![1, 3, 6]);
        assert_eq!(rank(&on_pairs).unwrap(), 3);
    }

    #[test]
    fn regularity() {
        let c5 = Group::cyclic(&rotation(5));
        assert!(is_regular(&c5, &[0, 1, 2, 3, 4]));
        assert!(!is_regular(&Group::symmetric(3).unwrap(), &[0, 1, 2]));
    }
}
