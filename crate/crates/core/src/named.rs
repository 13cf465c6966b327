//! Standard small graphs referenced throughout the crate.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Perm;

/// GP(n, k): outer cycle `0..n`, inner vertices `n+i ~ n+i+k`, spokes `i ~ n+i`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::Precondition(format!("GP({n},{k}) needs n ≥ 3 and 1 ≤ k < n/2")));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + k) % n));
        edges.push((i, n + i));
    }
    Graph::new(2 * n, &edges)
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("valid parameters")
}

pub fn petersen_complement() -> Graph {
    petersen().complement()
}

/// The 4-cube with antipodal vertices joined: 16 vertices, valence 5.
pub fn clebsch() -> Graph {
    Graph::from_fn(16, |a, b| {
        let x = a ^ b;
        x.is_power_of_two() || x == 15
    })
}

/// The 4×4 rook's graph: vertex `(i, j)` is index `4i + j` (0-based), adjacent
/// when a coordinate agrees.
pub fn lattice_l2_4() -> Graph {
    Graph::from_fn(16, |a, b| a / 4 == b / 4 || a % 4 == b % 4)
}

/// The automorphism `(i, j) ↦ (j + 1, i)` of [`lattice_l2_4`], with two orbits
/// of length 8.
pub fn lattice_l2_4_sigma() -> Perm {
    let images = (0..16)
        .map(|v| {
            let (i, j) = (v / 4, v % 4);
            ((j + 1) % 4) * 4 + i
        })
        .collect();
    Perm::new(images).expect("sigma is a bijection")
}

/// Looks up a graph by name: `petersen`, `petersen_complement`, `clebsch`,
/// `lattice_L2_4`, `K<m>` / `complete(<m>)`, `C<m>` / `cycle(<m>)`, `GP(<n>,<k>)`.
pub fn by_name(name: &str) -> Result<Graph> {
    let trimmed = name.trim();
    let lower = trimmed.to_ascii_lowercase();
    let unknown = || Error::UnknownGraph(trimmed.to_string());
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| unknown());
    let args = |prefix: &str| -> Option<&str> {
        lower.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
    };
    match lower.as_str() {
        "petersen" => return Ok(petersen()),
        "petersen_complement" | "petersen-complement" => return Ok(petersen_complement()),
        "clebsch" => return Ok(clebsch()),
        "lattice_l2_4" | "l2_4" | "l2(4)" => return Ok(lattice_l2_4()),
        _ => {}
    }
    if let Some(a) = args("complete") {
        return complete_checked(number(a)?);
    }
    if let Some(a) = args("cycle") {
        return cycle_checked(number(a)?);
    }
    if let Some(a) = args("gp") {
        let (n, k) = a.split_once(',').ok_or_else(unknown)?;
        return generalized_petersen(number(n)?, number(k)?);
    }
    if let Some(rest) = lower.strip_prefix('k') {
        return complete_checked(number(rest)?);
    }
    if let Some(rest) = lower.strip_prefix('c') {
        return cycle_checked(number(rest)?);
    }
    Err(unknown())
}

fn complete_checked(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::Precondition("complete graph needs m ≥ 1".into()));
    }
    Ok(Graph::complete(m))
}

fn cycle_checked(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::Precondition("cycle needs m ≥ 3".into()));
    }
    Ok(Graph::cycle(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut best = usize::MAX;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn petersen_family() {
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.regular_valence(), Some(3));
        assert_eq!(girth(&p), 5);
        assert_eq!(petersen_complement().regular_valence(), Some(6));
    }

    #[test]
    fn clebsch_and_lattice() {
        let c = clebsch();
        assert_eq!((c.vertex_count(), c.regular_valence()), (16, Some(5)));
        let l = lattice_l2_4();
        assert_eq!((l.vertex_count(), l.regular_valence()), (16, Some(6)));
    }

    #[test]
    fn sigma_orbit_induces_an_eight_cycle() {
        let sigma = lattice_l2_4_sigma();
        assert!(lattice_l2_4().is_automorphism(&sigma));
        let (first, _) = sigma.two_equal_orbits().unwrap();
        // 1-based labels (1,1) (2,1) (2,2) (3,2) (3,3) (4,3) (4,4) (1,4)
        let expected: Vec<usize> = [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (4, 4), (1, 4)]
            .iter()
            .map(|&(i, j)| (i - 1) * 4 + (j - 1))
            .collect();
        let mut sorted = expected.clone();
        sorted.sort_unstable();
        assert_eq!(first, sorted);
        for w in expected.windows(2) {
            assert_eq!(sigma.apply(w[0]), w[1]);
        }
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(by_name("K6").unwrap(), Graph::complete(6));
        assert_eq!(by_name("complete(4)").unwrap(), Graph::complete(4));
        assert_eq!(by_name("C5").unwrap(), Graph::cycle(5));
        assert_eq!(by_name("GP(5,2)").unwrap(), petersen());
        assert_eq!(by_name("lattice_L2_4").unwrap(), lattice_l2_4());
        assert!(matches!(by_name("dodecahedron"), Err(Error::UnknownGraph(_))));
        assert!(by_name("GP(4,2)").is_err());
    }
}
