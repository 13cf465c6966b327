//! Permutations of `{0, .., m-1}`.
//!
//! The action is on the right: `x^(pq) = (x^p)^q`, so [`Perm::then`] applies
//! `self` first and its argument second. Conjugation follows the same rule,
//! `p^g = g⁻¹ p g`.
//!
//! Points are 0-indexed everywhere inside the crate. The cycle-notation
//! parser and printer use 1-indexed points, e.g. `(1,2,3)(4,5)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Builds a permutation from its image sequence, validating bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let m = images.len();
        if m == 0 {
            return Err(Error::InvalidPerm("degree must be positive".into()));
        }
        if m > u32::MAX as usize {
            return Err(Error::InvalidPerm("degree too large".into()));
        }
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(Error::InvalidPerm(format!(
                    "image sequence {images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::new(images.iter().map(|&x| x as usize).collect()).is_ok());
        Perm { images }
    }

    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-indexed disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(Error::InvalidPerm(format!(
                        "point {x} appears twice in cycle notation"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::new(images)
    }

    /// Parses 1-indexed cycle notation such as `(1,2,3)(4,5)` or `()`.
    ///
    /// Separators inside a cycle may be commas or whitespace.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'\t' | b'\n' => i += 1,
                b'(' => {
                    i += 1;
                    let mut cycle = Vec::new();
                    loop {
                        while i < bytes.len() && matches!(bytes[i], b' ' | b',' | b'\t') {
                            i += 1;
                        }
                        if i >= bytes.len() {
                            return Err(Error::parse(i, "unterminated cycle"));
                        }
                        if bytes[i] == b')' {
                            i += 1;
                            break;
                        }
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        if start == i {
                            return Err(Error::parse(i, "expected a point number"));
                        }
                        let point: usize = text[start..i]
                            .parse()
                            .map_err(|_| Error::parse(start, "point number overflows"))?;
                        if point == 0 || point > degree {
                            return Err(Error::parse(
                                start,
                                format!("point {point} outside 1..={degree}"),
                            ));
                        }
                        cycle.push(point - 1);
                    }
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                _ => return Err(Error::parse(i, "expected '('")),
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &refs)
    }

    /// 1-indexed cycle notation, fixed points omitted; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.iter().all(|c| c.len() == 1) {
            return "()".to_string();
        }
        let mut out = String::new();
        for c in cycles.iter().filter(|c| c.len() > 1) {
            out.push('(');
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            out.push_str(&parts.join(","));
            out.push(')');
        }
        out
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`; fails on a degree mismatch.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    /// Unchecked [`compose`](Perm::compose). Panics if degrees differ.
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Perm) -> Result<Perm> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        // maps g(i) to g(self(i))
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[x as usize];
        }
        Ok(Perm { images })
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }

    /// All cycles including fixed points, each starting at its least point,
    /// listed by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// All cycles share one length.
    pub fn is_semiregular(&self) -> bool {
        let t = self.cycle_type();
        t.iter().all(|&l| l == t[0])
    }

    /// The two orbits when `self` has exactly two cycles of equal length.
    pub fn two_equal_orbits(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut cycles = self.cycles();
        if cycles.len() != 2 || cycles[0].len() != cycles[1].len() {
            return None;
        }
        let mut second = cycles.pop()?;
        let mut first = cycles.pop()?;
        first.sort_unstable();
        second.sort_unstable();
        Some((first, second))
    }

    /// Image of a point set, sorted.
    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn compose_is_right_action() {
        let p = cyc(3, &[&[0, 1, 2]]);
        let q = cyc(3, &[&[0, 1]]);
        assert_eq!(p.compose(&q).unwrap(), cyc(3, &[&[1, 2]]));
        assert_eq!(p.compose(&Perm::identity(3)).unwrap(), p);
        let inv = cyc(4, &[&[0, 1], &[2, 3]]);
        assert!(inv.then(&inv).is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        assert_eq!(
            Perm::identity(3).compose(&Perm::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn conjugation() {
        let p = cyc(3, &[&[0, 1, 2]]);
        let g = cyc(3, &[&[0, 1]]);
        assert_eq!(p.conjugate(&g).unwrap(), cyc(3, &[&[1, 0, 2]]));
        assert_eq!(p.conjugate(&g).unwrap(), cyc(3, &[&[0, 2, 1]]));
        assert_eq!(p.conjugate(&Perm::identity(3)).unwrap(), p);
        // g⁻¹ p g computed the long way
        assert_eq!(
            p.conjugate(&g).unwrap(),
            g.inverse().then(&p).then(&g)
        );
    }

    #[test]
    fn parse_and_print_cycles() {
        let p = Perm::parse_cycles("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.images(), vec![1, 2, 0, 4, 3]);
        assert_eq!(p.to_cycle_string(), "(1,2,3)(4,5)");
        assert_eq!(Perm::parse_cycles("(1 2)", 3).unwrap().images(), vec![1, 0, 2]);
        assert!(Perm::parse_cycles("()", 4).unwrap().is_identity());
        assert_eq!(Perm::identity(4).to_cycle_string(), "()");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(
            Perm::parse_cycles("(1,2", 3).unwrap_err(),
            Error::parse(4, "unterminated cycle")
        );
        match Perm::parse_cycles("(1,9)", 3).unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 3),
            e => panic!("{e}"),
        }
        assert!(Perm::parse_cycles("x", 3).is_err());
        assert!(Perm::parse_cycles("(1,2)(2,3)", 3).is_err());
    }

    #[test]
    fn new_rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3, 1]).is_err());
        assert!(Perm::new(vec![]).is_err());
    }

    #[test]
    fn semiregularity() {
        let p = cyc(6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert!(p.is_semiregular());
        assert_eq!(
            p.two_equal_orbits(),
            Some((vec![0, 1, 2], vec![3, 4, 5]))
        );
        let q = cyc(5, &[&[0, 1], &[2, 3, 4]]);
        assert!(!q.is_semiregular());
        assert_eq!(q.two_equal_orbits(), None);
        assert!(Perm::identity(3).is_semiregular());
    }

    #[test]
    fn order_and_parity() {
        let p = cyc(5, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(3), cyc(5, &[&[0, 1]]));
        assert_eq!(p.cycle_type(), vec![3, 2]);
    }
}
