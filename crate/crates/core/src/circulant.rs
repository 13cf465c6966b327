//! Circulants `Cay(Z_n, S)` and the four structural cases for connected
//! arc-transitive ones: complete, normal, coset-block quotient, and the
//! coprime product `S = D^# + R`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;
use crate::perm::{gcd, Perm};
use crate::symmetry::{automorphism_search, is_arc_transitive, DEFAULT_NODE_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CirculantSymbol {
    n: usize,
    s: Vec<usize>,
}

impl CirculantSymbol {
    /// `S` is reduced mod `n`; it must avoid 0 and be closed under negation.
    pub fn new(n: usize, s: &[usize]) -> Result<CirculantSymbol> {
        if n < 2 {
            return Err(Error::InvalidSymbol(format!("n = {n} < 2")));
        }
        let mut set: Vec<usize> = s.iter().map(|&x| x % n).collect();
        set.sort_unstable();
        set.dedup();
        if set.first() == Some(&0) {
            return Err(Error::InvalidSymbol("0 in the connection set".into()));
        }
        if let Some(&x) = set.iter().find(|&&x| set.binary_search(&(n - x)).is_err()) {
            return Err(Error::InvalidSymbol(format!("{x} in S but -{x} is not")));
        }
        Ok(CirculantSymbol { n, s: set })
    }

    /// Parses a comma-separated connection set.
    pub fn parse(n: usize, list: &str) -> Result<CirculantSymbol> {
        let mut s = Vec::new();
        let mut offset = 0;
        for part in list.split(',') {
            let t = part.trim();
            if !t.is_empty() {
                s.push(t.parse().map_err(|_| Error::parse(offset, format!("'{t}' is not a number")))?);
            }
            offset += part.len() + 1;
        }
        CirculantSymbol::new(n, &s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn connection_set(&self) -> &[usize] {
        &self.s
    }

    pub fn valence(&self) -> usize {
        self.s.len()
    }

    /// `gcd(S ∪ {n}) = 1`.
    pub fn is_connected(&self) -> bool {
        self.s.iter().fold(self.n as u64, |g, &x| gcd(g, x as u64)) == 1
    }

    /// `S` modulo the subgroup of order `k`, as a symbol on `Z_{n/k}`.
    fn quotient(&self, k: usize) -> Result<CirculantSymbol> {
        let m = self.n / k;
        let s: Vec<usize> = self.s.iter().map(|&x| x % m).filter(|&x| x != 0).collect();
        CirculantSymbol::new(m, &s)
    }
}

impl fmt::Display for CirculantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.s.iter().map(|x| x.to_string()).collect();
        write!(f, "Cay(Z{}, {{{}}})", self.n, s.join(","))
    }
}

pub fn circulant(sym: &CirculantSymbol) -> Graph {
    let n = sym.n;
    let mut edges = Vec::with_capacity(n * sym.s.len() / 2);
    for i in 0..n {
        for &s in &sym.s {
            edges.push((i, (i + s) % n));
        }
    }
    Graph::new(n, &edges).expect("circulant edges are simple")
}

/// `i ↦ i + 1` on `Z_n`.
pub fn rotation(n: usize) -> Perm {
    Perm::new((0..n).map(|i| (i + 1) % n).collect()).expect("rotation is a bijection")
}

/// Whether `p` maps the coset partition of the subgroup of order `k` to itself.
fn preserves_cosets(p: &Perm, n: usize, k: usize) -> bool {
    let step = n / k;
    (0..n).all(|x| p.apply(x) % step == p.apply((x + step) % n) % step)
}

/// Whether `p` normalises the rotation group, i.e. `p(x+1) - p(x)` is constant.
fn normalises_rotations(p: &Perm, n: usize) -> bool {
    let d = (p.apply(1) + n - p.apply(0)) % n;
    (0..n).all(|x| (p.apply((x + 1) % n) + n - p.apply(x)) % n == d)
}

/// Whether the rotation group is normal in the full automorphism group.
pub fn is_normal_circulant(sym: &CirculantSymbol) -> Result<bool> {
    let g = circulant(sym);
    let search = automorphism_search(&g, DEFAULT_NODE_BUDGET)?;
    Ok(search.generators.iter().all(|p| normalises_rotations(p, sym.n)))
}

/// Which reading of "S is a union of D-cosets" a case (c) witness satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CosetReading {
    /// `S + D = S`, so `S` avoids `D`.
    AvoidsD,
    /// `S ∪ {0}` is a union of cosets, so `D ⊆ S ∪ {0}`.
    WithZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CirculantCase {
    Complete,
    Normal,
    /// `D` is the subgroup of the given order.
    CosetBlocks {
        d_order: usize,
        reading: CosetReading,
        quotient: CirculantSymbol,
    },
    /// `Z_n = D × E`, `S = D^# + R`, with `R` given inside `Z_n` and as a
    /// symbol on `E ≅ Z_{|E|}`.
    Tensor {
        d_order: usize,
        e_order: usize,
        r: Vec<usize>,
        e_symbol: CirculantSymbol,
    },
}

impl CirculantCase {
    pub fn letter(&self) -> char {
        match self {
            CirculantCase::Complete => 'a',
            CirculantCase::Normal => 'b',
            CirculantCase::CosetBlocks { .. } => 'c',
            CirculantCase::Tensor { .. } => 'd',
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CirculantCase::Complete => "(a) complete".into(),
            CirculantCase::Normal => "(b) normal".into(),
            CirculantCase::CosetBlocks { d_order, reading, quotient } => {
                format!("(c) |D|={d_order} {reading:?} quotient {quotient}")
            }
            CirculantCase::Tensor { d_order, e_order, e_symbol, .. } => {
                format!("(d) |D|={d_order} |E|={e_order} R-symbol {e_symbol}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub symbol: CirculantSymbol,
    pub cases: Vec<CirculantCase>,
}

impl ClassificationReport {
    pub fn letters(&self) -> String {
        self.cases.iter().map(|c| c.letter()).collect::<std::collections::BTreeSet<_>>().into_iter().collect()
    }
}

/// Connected and arc-transitive, decided by the automorphism engine.
pub fn is_connected_arc_transitive(sym: &CirculantSymbol) -> Result<bool> {
    if !sym.is_connected() || sym.s.is_empty() {
        return Ok(false);
    }
    let g = circulant(sym);
    let search = automorphism_search(&g, DEFAULT_NODE_BUDGET)?;
    is_arc_transitive(&g, &search.generators)
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|k| n % k == 0).collect()
}

/// Every case whose witness conditions verify.
pub fn classify_arc_transitive_circulant(sym: &CirculantSymbol) -> Result<ClassificationReport> {
    let n = sym.n;
    if !sym.is_connected() {
        return Err(Error::Precondition(format!("{sym} is not connected")));
    }
    let g = circulant(sym);
    let gens = automorphism_search(&g, DEFAULT_NODE_BUDGET)?.generators;
    if !is_arc_transitive(&g, &gens)? {
        return Err(Error::Precondition(format!("{sym} is not arc-transitive")));
    }
    let mut cases = Vec::new();
    if sym.s.len() == n - 1 {
        cases.push(CirculantCase::Complete);
    }
    if gens.iter().all(|p| normalises_rotations(p, n)) {
        cases.push(CirculantCase::Normal);
    }
    let in_s = |x: usize| sym.s.binary_search(&(x % n)).is_ok();
    for k in divisors(n) {
        if k == 1 || k == n || !gens.iter().all(|p| preserves_cosets(p, n, k)) {
            continue;
        }
        let step = n / k;
        let closed = |with_zero: bool| {
            let member = |x: usize| in_s(x) || (with_zero && x % n == 0);
            (0..n).filter(|&x| member(x)).all(|x| (0..k).all(|j| member(x + j * step)))
        };
        let reading = if closed(false) {
            Some(CosetReading::AvoidsD)
        } else if closed(true) {
            Some(CosetReading::WithZero)
        } else {
            None
        };
        if let Some(reading) = reading {
            let quotient = sym.quotient(k)?;
            if quotient_is_arc_transitive(&quotient)? {
                cases.push(CirculantCase::CosetBlocks {
                    d_order: k,
                    reading,
                    quotient,
                });
            }
        }
    }
    for a in divisors(n) {
        let b = n / a;
        if a <= 3 || b == 1 || gcd(a as u64, b as u64) != 1 {
            continue;
        }
        if !gens.iter().all(|p| preserves_cosets(p, n, a) && preserves_cosets(p, n, b)) {
            continue;
        }
        if let Some(case) = tensor_witness(sym, a, b)? {
            cases.push(case);
        }
    }
    Ok(ClassificationReport {
        symbol: sym.clone(),
        cases,
    })
}

fn quotient_is_arc_transitive(q: &CirculantSymbol) -> Result<bool> {
    if q.n == 2 {
        return Ok(q.s == [1]);
    }
    is_connected_arc_transitive(q)
}

/// `D` has order `a` (multiples of `b`), `E` order `b` (multiples of `a`).
fn tensor_witness(sym: &CirculantSymbol, a: usize, b: usize) -> Result<Option<CirculantCase>> {
    let n = sym.n;
    // E-component of x under Z_n = D × E: the multiple of a congruent to x mod b
    let e_part = |x: usize| (0..b).map(|j| j * a).find(|e| e % b == x % b).expect("CRT");
    let mut r: Vec<usize> = sym.s.iter().map(|&x| e_part(x)).collect();
    r.sort_unstable();
    r.dedup();
    if r.contains(&0) {
        return Ok(None);
    }
    let mut generated: Vec<usize> = Vec::new();
    for i in 1..a {
        for &e in &r {
            generated.push((i * b + e) % n);
        }
    }
    generated.sort_unstable();
    generated.dedup();
    if generated != sym.s {
        return Ok(None);
    }
    // identify E with Z_b through e ↦ e / a, then invert a mod b
    let inv = (1..b).find(|&u| (u * a) % b == 1 % b).unwrap_or(0);
    let e_set: Vec<usize> = r.iter().map(|&e| (e % b) * inv % b).collect();
    let e_symbol = CirculantSymbol::new(b, &e_set)?;
    if !quotient_is_arc_transitive(&e_symbol)? {
        return Ok(None);
    }
    Ok(Some(CirculantCase::Tensor {
        d_order: a,
        e_order: b,
        r,
        e_symbol,
    }))
}

/// One row of the coverage table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageRow {
    pub n: usize,
    pub s: String,
    pub valence: usize,
    pub cases: String,
    pub witnesses: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub max_n: usize,
    pub rows: Vec<CoverageRow>,
    /// Symbols with an empty case set (the totality claim fails on these).
    pub uncovered: Vec<String>,
}

impl CoverageReport {
    pub fn is_total(&self) -> bool {
        self.uncovered.is_empty() && !self.rows.is_empty()
    }
}

/// Least image of `S` under multiplication by units of `Z_n`.
fn multiplier_canonical(n: usize, s: &[usize]) -> Vec<usize> {
    let mut best = s.to_vec();
    for u in 2..n {
        if gcd(u as u64, n as u64) != 1 {
            continue;
        }
        let mut img: Vec<usize> = s.iter().map(|&x| x * u % n).collect();
        img.sort_unstable();
        if img < best {
            best = img;
        }
    }
    best
}

/// Connection sets of connected circulants on `Z_n`, one per multiplier class.
pub fn connected_symbols_up_to_units(n: usize) -> Vec<CirculantSymbol> {
    let half = n / 2;
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << half) {
        let mut s = Vec::new();
        for i in 0..half {
            if mask & (1 << i) != 0 {
                let x = i + 1;
                s.push(x);
                if n - x != x {
                    s.push(n - x);
                }
            }
        }
        s.sort_unstable();
        if multiplier_canonical(n, &s) != s {
            continue;
        }
        let sym = CirculantSymbol::new(n, &s).expect("inverse-closed by construction");
        if sym.is_connected() {
            out.push(sym);
        }
    }
    out.sort();
    out
}

/// Classifies every connected arc-transitive circulant (up to multipliers)
/// with `2 ≤ n ≤ max_n`.
pub fn exhaustive_case_coverage(max_n: usize) -> Result<CoverageReport> {
    let symbols: Vec<CirculantSymbol> = (2..=max_n).flat_map(connected_symbols_up_to_units).collect();
    let results = par::map(&symbols, |sym| -> Result<Option<ClassificationReport>> {
        if !is_connected_arc_transitive(sym)? {
            return Ok(None);
        }
        classify_arc_transitive_circulant(sym).map(Some)
    });
    let mut rows = Vec::new();
    let mut uncovered = Vec::new();
    for (sym, res) in symbols.iter().zip(results) {
        let Some(report) = res? else { continue };
        if report.cases.is_empty() {
            uncovered.push(sym.to_string());
        }
        rows.push(CoverageRow {
            n: sym.n,
            s: sym.s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            valence: sym.valence(),
            cases: report.letters(),
            witnesses: report.cases.iter().map(|c| c.describe()).collect::<Vec<_>>().join("; "),
        });
    }
    Ok(CoverageReport { max_n, rows, uncovered })
}
