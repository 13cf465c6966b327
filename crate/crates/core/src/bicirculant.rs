//! The F(d) symbol calculus.
//!
//! A symbol `BC(n; b; S)` describes the bicirculant on `u_0..u_{n-1}` (vertex
//! `i`) and `v_0..v_{n-1}` (vertex `n + i`) with
//!
//! * `u_i ~ u_{i+1}`: the u-orbit induces an n-cycle,
//! * `u_i ~ v_{i+s}` for `s ∈ S`,
//! * `v_i ~ v_{i+b}`.
//!
//! Every d-regular bicirculant with an induced cycle on one orbit has this
//! form once the cycle orbit is relabelled to step 1: equal valences force the
//! inner orbit to have exactly the two differences `±b`, and `b = n/2` is
//! excluded. The map `i ↦ i+1` on both orbits is the semiregular automorphism.
//!
//! Symbols describing the same graph through this structure are related by
//! translating the spokes, negating all indices and, when `gcd(b, n) = 1`,
//! swapping the roles of the two orbits. [`canonical_symbol`] picks the least
//! representative under these moves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};
use crate::group::DEFAULT_ELEMENT_CAP;
use crate::named;
use crate::perm::Perm;
use crate::symmetry::{self, automorphism_search, DEFAULT_NODE_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BicirculantSymbol {
    n: usize,
    spokes: Vec<usize>,
    inner: usize,
}

impl BicirculantSymbol {
    /// Validates and normalises: spokes are reduced mod `n` and sorted, `inner`
    /// must lie in `1..=(n-1)/2`.
    pub fn new(n: usize, spokes: &[usize], inner: usize) -> Result<BicirculantSymbol> {
        if n < 3 {
            return Err(Error::InvalidSymbol(format!("half-order {n} < 3")));
        }
        if spokes.is_empty() {
            return Err(Error::InvalidSymbol("no spokes".into()));
        }
        if spokes.len() > n {
            return Err(Error::InvalidSymbol(format!("{} spokes exceed n = {n}", spokes.len())));
        }
        if inner == 0 || 2 * inner >= n {
            return Err(Error::InvalidSymbol(format!(
                "inner step {inner} outside 1..={}",
                (n - 1) / 2
            )));
        }
        let mut s: Vec<usize> = spokes.iter().map(|&x| x % n).collect();
        s.sort_unstable();
        s.dedup();
        if s.len() != spokes.len() {
            return Err(Error::InvalidSymbol("repeated spoke".into()));
        }
        Ok(BicirculantSymbol { n, spokes: s, inner })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spokes(&self) -> &[usize] {
        &self.spokes
    }

    pub fn inner(&self) -> usize {
        self.inner
    }

    pub fn valence(&self) -> usize {
        self.spokes.len() + 2
    }

    pub fn order(&self) -> usize {
        2 * self.n
    }

    pub fn build(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::with_capacity(n * self.valence());
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((n + i, n + (i + self.inner) % n));
            for &s in &self.spokes {
                edges.push((i, n + (i + s) % n));
            }
        }
        Graph::new(2 * n, &edges).expect("symbol edges are simple")
    }

    /// The rotation `u_i ↦ u_{i+1}`, `v_i ↦ v_{i+1}`.
    pub fn rho(&self) -> Perm {
        let n = self.n;
        let images = (0..2 * n)
            .map(|x| if x < n { (x + 1) % n } else { n + (x - n + 1) % n })
            .collect();
        Perm::new(images).expect("rotation is a bijection")
    }

    /// Orbits of the subgroup of order `k` of the rotation group: classes
    /// `{i, i+n/k, ...}` inside each orbit, u-side classes first.
    pub fn rotation_subgroup_orbits(&self, k: usize) -> Result<VertexPartition> {
        if k == 0 || self.n % k != 0 {
            return Err(Error::Precondition(format!("{k} does not divide n = {}", self.n)));
        }
        let m = self.n / k;
        let mut classes = Vec::with_capacity(2 * m);
        for side in 0..2 {
            for r in 0..m {
                classes.push((0..k).map(|j| side * self.n + r + j * m).collect());
            }
        }
        VertexPartition::new(2 * self.n, classes)
    }

    fn swapped(&self) -> Option<BicirculantSymbol> {
        let n = self.n as i64;
        let inv = mod_inverse(self.inner as i64, n)?;
        let spokes: Vec<usize> = self
            .spokes
            .iter()
            .map(|&s| (-(inv * s as i64)).rem_euclid(n) as usize)
            .collect();
        let b = normalize_step(inv as usize, self.n);
        BicirculantSymbol::new(self.n, &spokes, b).ok()
    }
}

fn normalize_step(b: usize, n: usize) -> usize {
    let b = b % n;
    b.min(n - b)
}

fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let (mut old_r, mut r) = (a.rem_euclid(n), n);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(n))
}

impl fmt::Display for BicirculantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spokes: Vec<String> = self.spokes.iter().map(|s| s.to_string()).collect();
        write!(f, "BC({}; {}; {})", self.n, self.inner, spokes.join(","))
    }
}

impl FromStr for BicirculantSymbol {
    type Err = Error;

    /// Parses `BC(n; b; s1,s2,...)`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let body = t
            .strip_prefix("BC(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "expected BC(n; b; s1,...)"))?;
        let offset = text.find("BC(").unwrap_or(0) + 3;
        let parts: Vec<&str> = body.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::parse(offset, "expected three ';'-separated fields"));
        }
        let num = |s: &str, at: usize| -> Result<usize> {
            s.trim()
                .parse()
                .map_err(|_| Error::parse(at, format!("'{}' is not a number", s.trim())))
        };
        let n = num(parts[0], offset)?;
        let b_at = offset + parts[0].len() + 1;
        let b = num(parts[1], b_at)?;
        let s_at = b_at + parts[1].len() + 1;
        let spokes = parts[2]
            .split(',')
            .map(|s| num(s, s_at))
            .collect::<Result<Vec<_>>>()?;
        BicirculantSymbol::new(n, &spokes, b)
    }
}

/// Least translate of `spokes` (its first element is always 0).
fn least_translate(spokes: &[usize], n: usize) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for &t in spokes {
        let mut shifted: Vec<usize> = spokes.iter().map(|&s| (s + n - t) % n).collect();
        shifted.sort_unstable();
        if best.as_ref().is_none_or(|b| shifted < *b) {
            best = Some(shifted);
        }
    }
    best.expect("spokes are non-empty")
}

/// Least equivalent symbol under spoke translation, index negation and (when
/// the inner orbit is a single cycle) the orbit swap.
pub fn canonical_symbol(sym: &BicirculantSymbol) -> BicirculantSymbol {
    let n = sym.n;
    let mut variants = vec![sym.clone()];
    if let Some(sw) = sym.swapped() {
        variants.push(sw);
    }
    let mut best: Option<BicirculantSymbol> = None;
    for v in variants {
        let negated: Vec<usize> = v.spokes.iter().map(|&s| (n - s) % n).collect();
        for spokes in [least_translate(&v.spokes, n), least_translate(&negated, n)] {
            let cand = BicirculantSymbol {
                n,
                spokes,
                inner: v.inner,
            };
            if best.as_ref().is_none_or(|b| cand.cmp_key() < b.cmp_key()) {
                best = Some(cand);
            }
        }
    }
    best.expect("at least one variant")
}

impl BicirculantSymbol {
    fn cmp_key(&self) -> (&[usize], usize) {
        (&self.spokes, self.inner)
    }
}

/// Every canonical symbol of half-order `n` and valence `d`, in ascending
/// `(inner, spokes)` order.
pub fn enumerate_symbols(n: usize, d: usize) -> Vec<BicirculantSymbol> {
    if n < 3 || d < 3 || d - 2 > n {
        return Vec::new();
    }
    let k = d - 2;
    let mut out = Vec::new();
    for b in 1..=(n - 1) / 2 {
        out.extend(enumerate_for_inner(n, k, b));
    }
    out
}

/// Canonical symbols with a fixed inner step.
pub fn enumerate_for_inner(n: usize, k: usize, b: usize) -> Vec<BicirculantSymbol> {
    let mut out = Vec::new();
    if k == 0 || k > n || b == 0 || 2 * b >= n {
        return out;
    }
    // canonical spokes always contain 0; choose the remaining k-1 from 1..n
    let mut rest: Vec<usize> = (1..k).collect();
    loop {
        let mut spokes = Vec::with_capacity(k);
        spokes.push(0);
        spokes.extend_from_slice(&rest);
        let sym = BicirculantSymbol {
            n,
            spokes,
            inner: b,
        };
        if canonical_symbol(&sym) == sym {
            out.push(sym);
        }
        if !next_combination(&mut rest, n - 1) {
            break;
        }
    }
    out
}

/// Advances a strictly increasing sequence over `1..=max` to the next one in
/// lexicographic order.
fn next_combination(c: &mut [usize], max: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < max - (k - 1 - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A semiregular automorphism with two equal orbits, one inducing a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWitness {
    pub rho: Perm,
    pub cycle_orbit: Vec<usize>,
    pub other_orbit: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Witness(FamilyWitness),
    NotInFamily,
    /// The automorphism group could not be enumerated; the reason is attached.
    Undecided(String),
}

impl Membership {
    pub fn witness(&self) -> Option<&FamilyWitness> {
        match self {
            Membership::Witness(w) => Some(w),
            _ => None,
        }
    }
}

/// Searches the automorphism group (in element order) for an F(d) witness.
pub fn in_family_f(g: &Graph, d: usize) -> Membership {
    in_family_f_with_cap(g, d, DEFAULT_ELEMENT_CAP)
}

pub fn in_family_f_with_cap(g: &Graph, d: usize, cap: usize) -> Membership {
    let n2 = g.vertex_count();
    if g.regular_valence() != Some(d) || n2 % 2 != 0 || n2 < 6 {
        return Membership::NotInFamily;
    }
    let aut = match symmetry::automorphism_group(g, cap) {
        Ok(a) => a,
        Err(e) => return Membership::Undecided(e.to_string()),
    };
    for p in aut.elements() {
        if let Some((a, b)) = p.two_equal_orbits() {
            for (cyc, other) in [(&a, &b), (&b, &a)] {
                let induced = g.induced_subgraph(cyc).expect("orbit is non-empty");
                if induced.is_cycle() {
                    return Membership::Witness(FamilyWitness {
                        rho: p.clone(),
                        cycle_orbit: cyc.clone(),
                        other_orbit: other.clone(),
                    });
                }
            }
        }
    }
    Membership::NotInFamily
}

/// Whether "primitive automorphism group ⇒ one of K6, Petersen, its
/// complement, L2(4)" holds for `g`.
pub fn primitive_case_check(g: &Graph) -> Result<bool> {
    let search = automorphism_search(g, DEFAULT_NODE_BUDGET)?;
    if crate::group::orbits_of(g.vertex_count(), &search.generators).len() != 1 {
        return Ok(true);
    }
    if !symmetry::is_primitive_gens(g.vertex_count(), &search.generators)? {
        return Ok(true);
    }
    for candidate in [
        Graph::complete(6),
        named::petersen(),
        named::petersen_complement(),
        named::lattice_l2_4(),
    ] {
        if symmetry::are_isomorphic(g, &candidate)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether the symbol's quotient by the rotation subgroup of order `k` is a
/// 1-cover: differences on each side distinct and non-zero modulo `n / k`.
pub fn is_cyclic_cover_candidate(sym: &BicirculantSymbol, k: usize) -> bool {
    if k <= 1 || sym.n % k != 0 {
        return false;
    }
    let m = sym.n / k;
    if m < 3 {
        return false;
    }
    let distinct = |vals: Vec<usize>| {
        let mut r: Vec<usize> = vals.iter().map(|v| v % m).collect();
        r.sort_unstable();
        r.dedup();
        r.len() == vals.len()
    };
    let n = sym.n;
    distinct(vec![0, 1, n - 1])
        && distinct(vec![0, sym.inner, n - sym.inner])
        && distinct(sym.spokes.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::are_isomorphic;
    use std::collections::BTreeSet;

    fn sym(n: usize, b: usize, s: &[usize]) -> BicirculantSymbol {
        BicirculantSymbol::new(n, s, b).unwrap()
    }

    #[test]
    fn build_petersen_pair() {
        let pc = sym(5, 2, &[1, 2, 3, 4]).build();
        assert!(are_isomorphic(&pc, &named::petersen_complement()).unwrap());
        let p = sym(5, 2, &[0]).build();
        assert!(are_isomorphic(&p, &named::petersen()).unwrap());
    }

    #[test]
    fn build_small_valence_five() {
        let g = sym(3, 1, &[0, 1, 2]).build();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.regular_valence(), Some(5));
    }

    #[test]
    fn invalid_symbols() {
        assert!(BicirculantSymbol::new(2, &[0], 1).is_err());
        assert!(BicirculantSymbol::new(8, &[0], 4).is_err());
        assert!(BicirculantSymbol::new(5, &[0], 0).is_err());
        assert!(BicirculantSymbol::new(5, &[], 1).is_err());
        assert!(BicirculantSymbol::new(3, &[0, 1, 2, 0], 1).is_err());
    }

    #[test]
    fn symbol_text_form() {
        let s = sym(5, 2, &[1, 2, 3, 4]);
        assert_eq!(s.to_string(), "BC(5; 2; 1,2,3,4)");
        assert_eq!("BC(5; 2; 1,2,3,4)".parse::<BicirculantSymbol>().unwrap(), s);
        assert!("BC(5; x; 1)".parse::<BicirculantSymbol>().is_err());
        assert!("CB(5;1;1)".parse::<BicirculantSymbol>().is_err());
    }

    #[test]
    fn rho_is_an_automorphism_with_cycle_orbit() {
        let s = sym(7, 3, &[0, 2, 5]);
        let g = s.build();
        let rho = s.rho();
        assert!(g.is_automorphism(&rho));
        let (u, v) = rho.two_equal_orbits().unwrap();
        assert_eq!(u, (0..7).collect::<Vec<_>>());
        assert_eq!(v.len(), 7);
        assert!(g.induced_subgraph(&u).unwrap().is_cycle());
    }

    /// Orbit of a symbol under the elementary moves, as an independent oracle.
    fn orbit_oracle(s: &BicirculantSymbol) -> BTreeSet<BicirculantSymbol> {
        let mut seen = BTreeSet::from([s.clone()]);
        let mut stack = vec![s.clone()];
        while let Some(x) = stack.pop() {
            let n = x.n;
            let shift: Vec<usize> = x.spokes.iter().map(|&t| (t + 1) % n).collect();
            let neg: Vec<usize> = x.spokes.iter().map(|&t| (n - t) % n).collect();
            let mut next = vec![sym(n, x.inner, &shift), sym(n, x.inner, &neg)];
            if let Some(sw) = x.swapped() {
                next.push(sw);
            }
            for y in next {
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn canonical_matches_orbit_minimum() {
        for n in [5, 6, 7, 8, 9] {
            for b in 1..=(n - 1) / 2 {
                for mask in 1u32..(1 << n) {
                    if mask.count_ones() > 4 {
                        continue;
                    }
                    let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                    let x = sym(n, b, &s);
                    let orbit = orbit_oracle(&x);
                    let least = orbit
                        .iter()
                        .min_by(|a, b| a.cmp_key().cmp(&b.cmp_key()))
                        .unwrap();
                    assert_eq!(&canonical_symbol(&x), least, "{x}");
                }
            }
        }
    }

    #[test]
    fn canonical_is_idempotent_and_sign_symmetric() {
        let x = sym(11, 3, &[0, 1, 4, 9]);
        let c = canonical_symbol(&x);
        assert_eq!(canonical_symbol(&c), c);
        let reflected = sym(11, 3, &[0, 10, 7, 2]);
        assert_eq!(canonical_symbol(&reflected), c);
    }

    #[test]
    fn canonical_preserves_isomorphism_type() {
        for s in [
            sym(7, 2, &[0, 1, 3]),
            sym(9, 4, &[1, 2, 6, 7]),
            sym(8, 3, &[0, 2, 3, 5]),
            sym(5, 2, &[1, 2, 3, 4]),
        ] {
            let c = canonical_symbol(&s);
            assert!(are_isomorphic(&s.build(), &c.build()).unwrap(), "{s} vs {c}");
        }
    }

    #[test]
    fn enumeration_counts_orbits() {
        // |S| = 4 in Z5: one translation class per inner step, and the swap
        // fixes both steps
        let syms = enumerate_symbols(5, 6);
        assert_eq!(syms.len(), 2);
        assert!(enumerate_symbols(3, 6).is_empty());
        for n in [7, 9, 10] {
            for d in [3, 4, 5, 6] {
                let mut oracle: BTreeSet<BicirculantSymbol> = BTreeSet::new();
                let mut raw = 0;
                for b in 1..=(n - 1) / 2 {
                    for mask in 1u32..(1 << n) {
                        if mask.count_ones() as usize != d - 2 {
                            continue;
                        }
                        raw += 1;
                        let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                        let orbit = orbit_oracle(&sym(n, b, &s));
                        oracle.insert(
                            orbit.iter().min_by(|a, b| a.cmp_key().cmp(&b.cmp_key())).unwrap().clone(),
                        );
                    }
                }
                assert_eq!(raw, binomial(n, d - 2) * ((n - 1) / 2));
                let got: BTreeSet<BicirculantSymbol> = enumerate_symbols(n, d).into_iter().collect();
                assert_eq!(got, oracle, "n={n} d={d}");
            }
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn family_membership() {
        let l = named::lattice_l2_4();
        let w = in_family_f(&l, 6).witness().cloned().expect("L2(4) is in F(6)");
        assert_eq!(w.cycle_orbit.len(), 8);
        assert!(l.induced_subgraph(&w.cycle_orbit).unwrap().is_cycle());
        assert_eq!(in_family_f(&Graph::complete(4), 3), Membership::NotInFamily);
        let pc = in_family_f(&named::petersen_complement(), 6);
        assert_eq!(pc.witness().unwrap().rho.order(), 5);
        assert!(matches!(
            in_family_f_with_cap(&named::petersen_complement(), 6, 10),
            Membership::Undecided(_)
        ));
        assert_eq!(in_family_f(&named::petersen(), 6), Membership::NotInFamily);
    }

    #[test]
    fn primitive_cases() {
        assert!(primitive_case_check(&Graph::complete(6)).unwrap());
        assert!(primitive_case_check(&named::petersen_complement()).unwrap());
        assert!(primitive_case_check(&sym(7, 2, &[0, 1, 3]).build()).unwrap());
        // K8 is primitive but not on the list
        assert!(!primitive_case_check(&Graph::complete(8)).unwrap());
    }

    #[test]
    fn cover_candidates() {
        let s = sym(15, 2, &[0, 1, 2, 3]);
        assert!(is_cyclic_cover_candidate(&s, 3));
        assert!(!is_cyclic_cover_candidate(&s, 5));
        assert!(!is_cyclic_cover_candidate(&sym(15, 5, &[0, 1, 2, 3]), 3));
    }
}
