//! Finitely generated permutation groups with fully enumerated element lists.
//!
//! Every group in scope is small enough to materialise; closure stops with
//! [`Error::CapExceeded`] instead of truncating. Elements are kept sorted by
//! image sequence, which gives a deterministic iteration order and
//! binary-search membership.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default upper bound on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

/// Groups are equal as sets of permutations; generating sets are ignored.
impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl Group {
    /// Breadth-first closure of `generators` on `degree` points.
    pub fn closure(degree: usize, generators: &[Perm], cap: usize) -> Result<Group> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        if cap == 0 {
            return Err(Error::CapExceeded { cap });
        }
        let gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let identity = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = x.then(s);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Group {
            degree,
            generators: gens,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Group {
        Group {
            degree,
            generators: Vec::new(),
            elements: vec![Perm::identity(degree)],
        }
    }

    /// Symmetric group on `m` points, generated by a transposition and an m-cycle.
    pub fn symmetric(m: usize) -> Result<Group> {
        if m <= 1 {
            return Ok(Group::trivial(m.max(1)));
        }
        let cycle: Vec<usize> = (0..m).collect();
        let gens = [
            Perm::from_cycles(m, &[&[0, 1]])?,
            Perm::from_cycles(m, &[&cycle])?,
        ];
        Group::closure(m, &gens, DEFAULT_ELEMENT_CAP)
    }

    /// Alternating group on `m` points.
    pub fn alternating(m: usize) -> Result<Group> {
        let s = Group::symmetric(m)?;
        Ok(s.filter(|p| p.is_even()))
    }

    /// Cyclic group generated by a single permutation.
    pub fn cyclic(generator: &Perm) -> Group {
        let mut elements = Vec::new();
        let mut x = Perm::identity(generator.degree());
        loop {
            elements.push(x.clone());
            x = x.then(generator);
            if x.is_identity() {
                break;
            }
        }
        elements.sort_unstable();
        Group {
            degree: generator.degree(),
            generators: vec![generator.clone()].into_iter().filter(|g| !g.is_identity()).collect(),
            elements,
        }
    }

    /// Builds a group from an element list already known to be closed.
    /// A short generating set is chosen greedily in element order.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Perm>) -> Group {
        elements.sort_unstable();
        elements.dedup();
        let generators = greedy_generators(degree, &elements);
        Group {
            degree,
            generators,
            elements,
        }
    }

    /// The subgroup of elements satisfying a predicate that is known to
    /// define a subgroup (stabilisers, kernels, intersections).
    pub(crate) fn filter(&self, pred: impl Fn(&Perm) -> bool) -> Group {
        let elements: Vec<Perm> = self.elements.iter().filter(|p| pred(p)).cloned().collect();
        Group::from_closed_elements(self.degree, elements)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Elements in ascending image-sequence order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    pub(crate) fn require_subgroup_of(&self, other: &Group, what: &str) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(other.degree, self.degree));
        }
        if !self.is_subgroup_of(other) {
            return Err(Error::NotSubgroup(what.to_string()));
        }
        Ok(())
    }

    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(orbit_of(self.degree, &self.generators, point))
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Point stabiliser `G_x`.
    pub fn stabilizer(&self, point: usize) -> Result<Group> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(self.filter(|p| p.apply(point) == point))
    }

    /// Set-wise stabiliser `G_{B}`.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Result<Group> {
        let mut b: Vec<usize> = set.to_vec();
        b.sort_unstable();
        b.dedup();
        if let Some(&x) = b.iter().find(|&&x| x >= self.degree) {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        Ok(self.filter(|p| p.image_of_set(&b) == b))
    }

    /// `H^g = g⁻¹ H g`.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Group> {
        let elements = self
            .elements
            .iter()
            .map(|h| h.conjugate(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Group::from_closed_elements(self.degree, elements))
    }

    pub fn intersection(&self, other: &Group) -> Result<Group> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(self.filter(|p| other.contains(p)))
    }

    /// Whether `self` is normal in `ambient` (checked on generators).
    pub fn is_normal_in(&self, ambient: &Group) -> Result<bool> {
        self.require_subgroup_of(ambient, "normality test needs H ≤ G")?;
        for s in ambient.generators() {
            for h in &self.generators {
                if !self.contains(&h.conjugate(s)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn centralizer(&self, p: &Perm) -> Result<Group> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.filter(|x| x.then(p) == p.then(x)))
    }

    /// `N_G(H)` for a subgroup `H` of `self`.
    pub fn normalizer(&self, h: &Group) -> Result<Group> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, h.degree));
        }
        Ok(self.filter(|x| {
            h.generators
                .iter()
                .all(|g| h.contains(&g.conjugate(x).expect("degree checked")))
        }))
    }

    /// The right cosets `Hx` of `h` in `self`, each sorted, listed by least element.
    pub fn right_cosets(&self, h: &Group) -> Result<Vec<Vec<Perm>>> {
        h.require_subgroup_of(self, "right cosets need H ≤ G")?;
        let mut assigned: HashSet<&Perm> = HashSet::new();
        let mut cosets = Vec::with_capacity(self.order() / h.order());
        for x in &self.elements {
            if assigned.contains(x) {
                continue;
            }
            let mut coset: Vec<Perm> = h.elements.iter().map(|k| k.then(x)).collect();
            coset.sort_unstable();
            for y in &coset {
                // members of the coset are elements of self
                let idx = self.elements.binary_search(y).expect("coset inside G");
                assigned.insert(&self.elements[idx]);
            }
            cosets.push(coset);
        }
        // iterating elements in order already lists cosets by least member
        Ok(cosets)
    }

    /// Image of the induced action on 2-subsets, ordered lexicographically.
    pub fn induced_action_on_pairs(&self) -> Result<Group> {
        let m = self.degree;
        if m < 2 {
            return Err(Error::Precondition("pair action needs degree ≥ 2".into()));
        }
        let gens: Vec<Perm> = self.generators.iter().map(|g| pair_action(g)).collect();
        Group::closure(m * (m - 1) / 2, &gens, self.order().max(1))
    }
}

/// Lexicographically ordered 2-subsets of `{0..m-1}`.
pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for a in 0..m {
        for b in a + 1..m {
            out.push((a, b));
        }
    }
    out
}

fn pair_index(m: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    // pairs starting below a, then offset within row a
    a * (2 * m - a - 1) / 2 + (b - a - 1)
}

/// The permutation induced by `p` on the lexicographically ordered 2-subsets.
pub fn pair_action(p: &Perm) -> Perm {
    let m = p.degree();
    let images = pairs(m)
        .into_iter()
        .map(|(a, b)| pair_index(m, p.apply(a), p.apply(b)) as u32)
        .collect();
    Perm::from_images_unchecked(images)
}

/// A double coset `H g K` with its members sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub representative: Perm,
    pub members: Vec<Perm>,
}

impl DoubleCoset {
    pub fn contains(&self, p: &Perm) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `{h g k : h ∈ H, k ∈ K}`.
pub fn double_coset(h: &Group, g: &Perm, k: &Group) -> Result<DoubleCoset> {
    if h.degree() != g.degree() || k.degree() != g.degree() {
        return Err(Error::DegreeMismatch(h.degree(), g.degree()));
    }
    let mut members: HashSet<Perm> = HashSet::new();
    for a in h.elements() {
        let ag = a.then(g);
        for b in k.elements() {
            members.insert(ag.then(b));
        }
    }
    let mut members: Vec<Perm> = members.into_iter().collect();
    members.sort_unstable();
    debug_assert_eq!(
        members.len() * h.conjugate_by(g)?.intersection(k)?.order(),
        h.order() * k.order()
    );
    Ok(DoubleCoset {
        representative: g.clone(),
        members,
    })
}

/// The set product `H⟨g⟩ = {h g^i}`, sorted.
pub fn set_product_with_cyclic(h: &Group, g: &Perm) -> Result<Vec<Perm>> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch(h.degree(), g.degree()));
    }
    let powers = Group::cyclic(g);
    let mut out: HashSet<Perm> = HashSet::new();
    for a in h.elements() {
        for c in powers.elements() {
            out.insert(a.then(c));
        }
    }
    let mut out: Vec<Perm> = out.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Size of a sorted set intersection.
pub(crate) fn intersection_size(a: &[Perm], b: &[Perm]) -> usize {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter(|p| large.binary_search(p).is_ok())
        .count()
}

/// `(|H⟨g⟩ ∩ HgH|, HgH = Hg⁻¹H)`.
pub fn set_product_intersection(h: &Group, g: &Perm) -> Result<(usize, bool)> {
    let product = set_product_with_cyclic(h, g)?;
    let dc = double_coset(h, g, h)?;
    let dc_inv = double_coset(h, &g.inverse(), h)?;
    Ok((
        intersection_size(&product, &dc.members),
        dc.members == dc_inv.members,
    ))
}

/// Orbits of the group generated by `gens`, each sorted, listed by least point.
pub fn orbits_of(degree: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for x in 0..degree {
        if !seen[x] {
            let orbit = orbit_of(degree, gens, x);
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
    }
    out
}

pub fn orbit_of(degree: usize, gens: &[Perm], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut stack = vec![point];
    let mut orbit = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
                stack.push(y);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

fn greedy_generators(degree: usize, elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: HashSet<Perm> = HashSet::new();
    span.insert(Perm::identity(degree));
    for p in elements {
        if span.contains(p) {
            continue;
        }
        gens.push(p.clone());
        // re-close the span under the enlarged generating set
        let mut queue: VecDeque<Perm> = span.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = x.then(s);
                if span.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    fn parse(text: &str, degree: usize) -> Perm {
        Perm::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn closure_orders() {
        let c5 = Group::closure(5, &[cyc(5, &[&[0, 1, 2, 3, 4]])], 100).unwrap();
        assert_eq!(c5.order(), 5);
        let s3 = Group::closure(5, &[parse("(1,2,3)", 5), parse("(1,2)(4,5)", 5)], 100).unwrap();
        assert_eq!(s3.order(), 6);
        let s3z2 = Group::closure(
            5,
            &[parse("(1,2,3)", 5), parse("(1,2)", 5), parse("(4,5)", 5)],
            100,
        )
        .unwrap();
        assert_eq!(s3z2.order(), 12);
    }

    #[test]
    fn closure_cap_is_explicit() {
        let err = Group::closure(5, &[cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])], 50);
        assert_eq!(err, Err(Error::CapExceeded { cap: 50 }));
        assert!(Group::closure(3, &[cyc(4, &[&[0, 1]])], 10).is_err());
    }

    #[test]
    fn symmetric_orders() {
        let mut f = 1;
        for m in 1..=7 {
            f *= m;
            assert_eq!(Group::symmetric(m).unwrap().order(), f);
        }
        assert_eq!(Group::alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn orbits_and_stabilizers() {
        let c5 = Group::cyclic(&cyc(5, &[&[0, 1, 2, 3, 4]]));
        assert_eq!(c5.orbit(0).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(Group::trivial(5).orbit(3).unwrap(), vec![3]);
        let g = Group::cyclic(&cyc(9, &[&[0, 1], &[2, 3], &[4, 5, 6, 7, 8]]));
        assert_eq!(g.orbit(0).unwrap(), vec![0, 1]);
        assert!(c5.orbit(7).is_err());

        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(s3.stabilizer(0).unwrap().order(), 2);
        assert_eq!(c5.stabilizer(2).unwrap().order(), 1);
    }

    #[test]
    fn setwise_stabilizers() {
        let c6 = Group::cyclic(&cyc(6, &[&[0, 1, 2, 3, 4, 5]]));
        let st = c6.setwise_stabilizer(&[0, 3]).unwrap();
        assert_eq!(st.order(), 2);
        assert!(st.contains(&cyc(6, &[&[0, 3], &[1, 4], &[2, 5]])));
        assert_eq!(c6.setwise_stabilizer(&[0, 1, 2, 3, 4, 5]).unwrap(), c6);
        let c15 = Group::cyclic(&Perm::new((1..15).chain([0]).collect()).unwrap());
        assert_eq!(c15.setwise_stabilizer(&[0, 5, 10]).unwrap().order(), 3);
    }

    #[test]
    fn cosets() {
        let s5 = Group::symmetric(5).unwrap();
        let h = Group::closure(
            5,
            &[parse("(1,2,3)", 5), parse("(1,2)", 5), parse("(4,5)", 5)],
            100,
        )
        .unwrap();
        let cs = s5.right_cosets(&h).unwrap();
        assert_eq!(cs.len(), 10);
        assert!(cs.iter().all(|c| c.len() == 12));
        assert_eq!(s5.right_cosets(&s5).unwrap().len(), 1);
        assert_eq!(s5.right_cosets(&Group::trivial(5)).unwrap().len(), 120);
        let not_sub = Group::cyclic(&cyc(6, &[&[0, 1]]));
        assert!(s5.right_cosets(&not_sub).is_err());
    }

    #[test]
    fn double_cosets_small() {
        let g = cyc(4, &[&[2, 3]]);
        let t = Group::trivial(4);
        assert_eq!(double_coset(&t, &g, &t).unwrap().members, vec![g.clone()]);
        let h = Group::cyclic(&cyc(4, &[&[0, 1]]));
        let dc = double_coset(&h, &g, &h).unwrap();
        let mut expect = vec![g.clone(), cyc(4, &[&[0, 1], &[2, 3]])];
        expect.sort();
        assert_eq!(dc.members, expect);
    }

    #[test]
    fn double_coset_index_formula() {
        let h = Group::closure(5, &[parse("(1,2,3)", 5), parse("(1,2)(4,5)", 5)], 100).unwrap();
        let g = parse("(1,2,3,4,5)", 5);
        let dc = double_coset(&h, &g, &h).unwrap();
        let meet = h.conjugate_by(&g).unwrap().intersection(&h).unwrap();
        assert_eq!(dc.len(), h.order() * h.order() / meet.order());
    }

    #[test]
    fn set_product_intersection_degenerate_cases() {
        let s4 = Group::symmetric(4).unwrap();
        let h = s4.stabilizer(3).unwrap();
        let g = h.elements()[3].clone();
        let (size, flag) = set_product_intersection(&h, &g).unwrap();
        assert_eq!(size, h.order());
        assert!(flag);

        let t = Group::trivial(4);
        let g = cyc(4, &[&[0, 1, 2, 3]]);
        assert_eq!(set_product_intersection(&t, &g).unwrap(), (1, false));
    }

    #[test]
    fn pair_action() {
        let trivial = Group::trivial(5).induced_action_on_pairs().unwrap();
        assert_eq!(trivial.degree(), 10);
        assert_eq!(trivial.order(), 1);
        let s5 = Group::symmetric(5).unwrap();
        let on_pairs = s5.induced_action_on_pairs().unwrap();
        assert_eq!(on_pairs.degree(), 10);
        assert_eq!(on_pairs.order(), 120);
        assert!(on_pairs.is_transitive());
        for (i, (a, b)) in pairs(6).into_iter().enumerate() {
            assert_eq!(pair_index(6, a, b), i);
            assert_eq!(pair_index(6, b, a), i);
        }
    }

    #[test]
    fn normality_centralizer_normalizer() {
        let s4 = Group::symmetric(4).unwrap();
        let a4 = s4.filter(|p| p.is_even());
        assert!(a4.is_normal_in(&s4).unwrap());
        let h = s4.stabilizer(0).unwrap();
        assert!(!h.is_normal_in(&s4).unwrap());
        assert_eq!(s4.normalizer(&h).unwrap(), h);
        assert_eq!(s4.normalizer(&a4).unwrap(), s4);
        let c = cyc(4, &[&[0, 1, 2, 3]]);
        assert_eq!(s4.centralizer(&c).unwrap(), Group::cyclic(&c));
        assert_eq!(s4.centralizer(&Perm::identity(4)).unwrap(), s4);
    }

    #[test]
    fn greedy_generators_regenerate() {
        let s4 = Group::symmetric(4).unwrap();
        let h = s4.stabilizer(1).unwrap();
        let again = Group::closure(4, h.generators(), 100).unwrap();
        assert_eq!(again.elements(), h.elements());
        assert!(h.generators().len() <= 3);
    }
}
