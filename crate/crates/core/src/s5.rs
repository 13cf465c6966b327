//! The reduced A5/S5 computations for an order-5p witness `g = zσ`.
//!
//! Points `1..5` are stored as `0..4`, so `(1,2,3)` is `(0 1 2)` and `(4,5)`
//! is `(3 4)`. `H` is the normaliser of `⟨(1,2,3)⟩` in `L` and `H1 = H ∩ A5`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{double_coset, intersection_size, set_product_with_cyclic, Group};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LVariant {
    A5,
    S5,
}

impl LVariant {
    pub fn name(self) -> &'static str {
        match self {
            LVariant::A5 => "A5",
            LVariant::S5 => "S5",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Section5Context {
    pub variant: LVariant,
    pub l: Group,
    pub h: Group,
    pub h1: Group,
    /// The transposition `(4,5)`.
    pub t45: Perm,
}

fn p5(cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(5, cycles).expect("valid cycles on 5 points")
}

impl Section5Context {
    pub fn new(variant: LVariant) -> Section5Context {
        let gens = match variant {
            LVariant::A5 => vec![p5(&[&[0, 1, 2]]), p5(&[&[0, 1], &[3, 4]])],
            LVariant::S5 => vec![p5(&[&[0, 1, 2]]), p5(&[&[0, 1]]), p5(&[&[3, 4]])],
        };
        let h = Group::closure(5, &gens, 120).expect("subgroup of S5");
        Section5Context::with_h(variant, h).expect("H lies in L")
    }

    /// A context with an arbitrary subgroup in place of the normaliser.
    pub fn with_h(variant: LVariant, h: Group) -> Result<Section5Context> {
        let l = match variant {
            LVariant::A5 => Group::alternating(5)?,
            LVariant::S5 => Group::symmetric(5)?,
        };
        h.require_subgroup_of(&l, "H must lie in L")?;
        let h1 = h.intersection(&Group::alternating(5)?)?;
        Ok(Section5Context {
            variant,
            l,
            h,
            h1,
            t45: p5(&[&[3, 4]]),
        })
    }

    fn check_sigma(&self, sigma: &Perm) -> Result<()> {
        if sigma.degree() != 5 || sigma.cycle_type() != vec![5] {
            return Err(Error::Precondition(format!("{sigma} is not a 5-cycle")));
        }
        Ok(())
    }
}

/// The 24 five-cycles `(0 a b c d)`, with `(a, b, c, d)` in lexicographic order.
pub fn five_cycles() -> Vec<Perm> {
    let mut out = Vec::with_capacity(24);
    for a in 1..5 {
        for b in 1..5 {
            for c in 1..5 {
                for d in 1..5 {
                    let mut seen = [a, b, c, d];
                    seen.sort_unstable();
                    if seen == [1, 2, 3, 4] {
                        out.push(p5(&[&[0, a, b, c, d]]));
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case1Eval {
    pub h_order: usize,
    /// `|H ∩ H^σ|`
    pub meet: usize,
    /// `|H⟨σ⟩ ∩ HσH|`
    pub product_meet: usize,
    pub holds: bool,
}

/// `|H| = 3|H ∩ H^σ| = |H⟨σ⟩ ∩ HσH|`.
pub fn case1_condition(ctx: &Section5Context, sigma: &Perm) -> Result<Case1Eval> {
    ctx.check_sigma(sigma)?;
    let h = &ctx.h;
    let meet = h.intersection(&h.conjugate_by(sigma)?)?.order();
    let product = set_product_with_cyclic(h, sigma)?;
    let dc = double_coset(h, sigma, h)?;
    let product_meet = intersection_size(&product, &dc.members);
    let n = h.order();
    Ok(Case1Eval {
        h_order: n,
        meet,
        product_meet,
        holds: n == 3 * meet && n == product_meet,
    })
}

/// `(λ1′, λ2′) ∈ H1 × H1` with `σ⁻¹ = (4,5)λ1′σ(4,5)λ2′`, least in element order.
pub fn case2_inverse_in_double_coset(ctx: &Section5Context, sigma: &Perm) -> Result<Option<(Perm, Perm)>> {
    ctx.check_sigma(sigma)?;
    let target = sigma.inverse();
    for l1 in ctx.h1.elements() {
        let prefix = ctx.t45.then(l1).then(sigma).then(&ctx.t45);
        // prefix·λ2′ = σ⁻¹ pins λ2′ down
        let l2 = prefix.inverse().then(&target);
        if ctx.h1.contains(&l2) {
            return Ok(Some((l1.clone(), l2)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case2Eval {
    pub h_order: usize,
    /// `|H ∩ H1^σ|`
    pub meet_h1_conjugate: usize,
    /// `|H⟨σ⟩ ∩ H1σH|`
    pub product_meet_even: usize,
    /// `|H⟨σ⟩ ∩ (4,5)H1σH|`
    pub product_meet_odd: usize,
    pub eq1: bool,
    pub eq2: bool,
}

/// `|H| = 6|H ∩ H1^σ|` and `|H⟨σ⟩ ∩ H1σH| + |H⟨σ⟩ ∩ (4,5)H1σH| = 2|H|`.
pub fn case2_equalities(ctx: &Section5Context, sigma: &Perm) -> Result<Case2Eval> {
    ctx.check_sigma(sigma)?;
    let h = &ctx.h;
    let meet = h.intersection(&ctx.h1.conjugate_by(sigma)?)?.order();
    let product = set_product_with_cyclic(h, sigma)?;
    let even = double_coset(&ctx.h1, sigma, h)?.members;
    let mut odd: Vec<Perm> = even.iter().map(|x| ctx.t45.then(x)).collect();
    odd.sort_unstable();
    let a = intersection_size(&product, &even);
    let b = intersection_size(&product, &odd);
    let n = h.order();
    Ok(Case2Eval {
        h_order: n,
        meet_h1_conjugate: meet,
        product_meet_even: a,
        product_meet_odd: b,
        eq1: n == 6 * meet,
        eq2: a + b == 2 * n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section5Row {
    pub claim: String,
    pub sigma: String,
    pub cardinalities: BTreeMap<String, usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub statement: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section5Report {
    pub claims: Vec<ClaimSummary>,
    pub rows: Vec<Section5Row>,
}

impl Section5Report {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

pub const CLAIM_CASE1: &str = "case1-no-sigma";
pub const CLAIM_CASE2_INVERSE: &str = "case2-inverse-witness";
pub const CLAIM_CASE2_EQUALITIES: &str = "case2-equalities-never-both";

/// All three checks over the 24 five-cycles with the standard subgroups.
pub fn run_section5() -> Section5Report {
    run_with_contexts(
        &[Section5Context::new(LVariant::A5), Section5Context::new(LVariant::S5)],
        &Section5Context::new(LVariant::S5),
    )
    .expect("standard contexts are valid")
}

/// Case 1 runs in every context of `case1`; Case 2 runs in `case2` (an S5 context).
pub fn run_with_contexts(case1: &[Section5Context], case2: &Section5Context) -> Result<Section5Report> {
    let cycles = five_cycles();
    let mut rows = Vec::new();
    let mut c1_pass = true;
    for ctx in case1 {
        for s in &cycles {
            let e = case1_condition(ctx, s)?;
            let pass = !e.holds;
            c1_pass &= pass;
            rows.push(Section5Row {
                claim: format!("{CLAIM_CASE1}[L={}]", ctx.variant.name()),
                sigma: s.to_cycle_string(),
                cardinalities: BTreeMap::from([
                    ("|H|".to_string(), e.h_order),
                    ("|H∩H^σ|".to_string(), e.meet),
                    ("|H<σ>∩HσH|".to_string(), e.product_meet),
                ]),
                pass,
            });
        }
    }
    let mut c2_pass = true;
    let mut c3_pass = true;
    for s in &cycles {
        let w = case2_inverse_in_double_coset(case2, s)?;
        let pass = w.is_some();
        c2_pass &= pass;
        rows.push(Section5Row {
            claim: CLAIM_CASE2_INVERSE.to_string(),
            sigma: s.to_cycle_string(),
            cardinalities: BTreeMap::from([("witnesses_found".to_string(), usize::from(pass))]),
            pass,
        });
    }
    for s in &cycles {
        let e = case2_equalities(case2, s)?;
        let pass = !(e.eq1 && e.eq2);
        c3_pass &= pass;
        rows.push(Section5Row {
            claim: CLAIM_CASE2_EQUALITIES.to_string(),
            sigma: s.to_cycle_string(),
            cardinalities: BTreeMap::from([
                ("|H|".to_string(), e.h_order),
                ("|H∩H1^σ|".to_string(), e.meet_h1_conjugate),
                ("|H<σ>∩H1σH|".to_string(), e.product_meet_even),
                ("|H<σ>∩(4,5)H1σH|".to_string(), e.product_meet_odd),
            ]),
            pass,
        });
    }
    Ok(Section5Report {
        claims: vec![
            ClaimSummary {
                claim: CLAIM_CASE1.into(),
                statement: "no 5-cycle satisfies |H| = 3|H∩H^σ| = |H<σ>∩HσH| (L = A5 and L = S5)".into(),
                pass: c1_pass,
            },
            ClaimSummary {
                claim: CLAIM_CASE2_INVERSE.into(),
                statement: "every 5-cycle admits λ1', λ2' in H1 with σ⁻¹ = (4,5)λ1'σ(4,5)λ2'".into(),
                pass: c2_pass,
            },
            ClaimSummary {
                claim: CLAIM_CASE2_EQUALITIES.into(),
                statement: "no 5-cycle satisfies both cardinality equalities".into(),
                pass: c3_pass,
            },
        ],
        rows,
    })
}
