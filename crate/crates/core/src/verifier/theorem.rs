//! Replay of the case analysis showing that `A_n` (`7 <= n <= 20` or
//! `n in {23, 24}`) is the only group with its order and largest element
//! order.
//!
//! For each degree the candidate simple sections `S <= G/M <= Aut(S)` come
//! from the reference table. A candidate equal to `A_n` ends the case. Every
//! other candidate is refuted by a short chain of arithmetic facts, encoded
//! below as [`Fact`] descriptors and evaluated by [`replay_theorem_with`].
//! The chain typically pins down `|M|_p`, shows that some element order
//! `x > m1(A_n)` is forced in `G`, and so contradicts `m1(G) = m1(A_n)`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::arith::{alt_order, compare_factored, factor, gl_order, lcm_factored, Factorization};
use crate::error::{Error, Result};
use crate::groupdata::{alternating_degree, NamedGroup, ReferenceData, TABLE_DEGREES};
use crate::spectrum::{cost, in_spectrum_alt, in_spectrum_sym, MaxOrderTable};
use crate::verifier::{CaseReport, CheckResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fact {
    /// `S` is `A_n` itself; equal orders give `M = 1` and `G = A_n`.
    Identification,
    /// `|S| = |A_n|` forces `G = S`, whose largest element order `m1_of_s`
    /// differs from `m1(A_n)`.
    SameOrderOtherMaximum { m1_of_s: u64 },
    /// The possible values of `|M|`.
    ResidualOrder { expected: &'static [u64] },
    /// The possible values of `|M|_p`.
    ResidualPart { p: u64, expected: &'static [u64] },
    /// `|M|` is coprime to `m1(A_n)`, so an element of that order maps to
    /// one of the same order in `G/M`; neither `S = A_k` nor `S_k` has one.
    MaximumMissingFromQuotient,
    /// `p` divides `|M|`, `q` divides `|S|` and `q` does not divide
    /// `|M|_p - 1`. A Frobenius action would need `q | |M|_p - 1`, so `p` and
    /// `q` are adjacent and `pq` is an element order of `G`.
    ForcedAdjacency { p: u64, q: u64 },
    /// `r` divides `|M|`, `a` is an element order of `S`, and `|S|` does not
    /// divide `|GL(k, r)|` for `r^k = |M|_r`; so `S` centralizes a Sylow
    /// `r`-subgroup of `M` and `lcm(r, a)` is an element order of `G`.
    SylowLift { r: u64, a: u64 },
}

#[derive(Clone, Copy, Debug)]
pub struct CandidateCase {
    pub candidate: &'static str,
    pub facts: &'static [Fact],
}

#[derive(Clone, Copy, Debug)]
pub struct TheoremCase {
    pub n: u32,
    pub candidates: &'static [CandidateCase],
}

use Fact::*;

const fn ident(candidate: &'static str) -> CandidateCase {
    CandidateCase { candidate, facts: &[Identification] }
}

const CASES: [TheoremCase; 16] = [
    TheoremCase { n: 7, candidates: &[ident("A7")] },
    TheoremCase {
        n: 8,
        candidates: &[
            ident("A8"),
            CandidateCase { candidate: "L3(4)", facts: &[SameOrderOtherMaximum { m1_of_s: 7 }] },
            CandidateCase {
                candidate: "A7",
                facts: &[ResidualOrder { expected: &[4, 8] }, MaximumMissingFromQuotient],
            },
        ],
    },
    TheoremCase {
        n: 9,
        candidates: &[
            ident("A9"),
            CandidateCase {
                candidate: "A8",
                facts: &[ResidualPart { p: 3, expected: &[9] }, ForcedAdjacency { p: 3, q: 7 }],
            },
            CandidateCase {
                candidate: "L3(4)",
                facts: &[ResidualPart { p: 3, expected: &[3, 9] }, ForcedAdjacency { p: 3, q: 7 }],
            },
            CandidateCase {
                candidate: "A7",
                facts: &[ResidualPart { p: 3, expected: &[9] }, ForcedAdjacency { p: 3, q: 7 }],
            },
        ],
    },
    TheoremCase {
        n: 10,
        candidates: &[
            ident("A10"),
            CandidateCase {
                candidate: "J2",
                facts: &[ResidualOrder { expected: &[3] }, SylowLift { r: 3, a: 10 }],
            },
        ],
    },
    TheoremCase {
        n: 11,
        candidates: &[
            ident("A11"),
            CandidateCase {
                candidate: "M22",
                facts: &[ResidualPart { p: 3, expected: &[9] }, ForcedAdjacency { p: 3, q: 11 }],
            },
        ],
    },
    TheoremCase {
        n: 12,
        candidates: &[
            ident("A12"),
            CandidateCase {
                candidate: "A11",
                facts: &[ResidualPart { p: 3, expected: &[3] }, SylowLift { r: 3, a: 20 }],
            },
            CandidateCase {
                candidate: "M22",
                facts: &[ResidualPart { p: 5, expected: &[5] }, SylowLift { r: 5, a: 11 }],
            },
        ],
    },
    TheoremCase { n: 13, candidates: &[ident("A13")] },
    TheoremCase {
        n: 14,
        candidates: &[
            CandidateCase {
                candidate: "A13",
                facts: &[ResidualPart { p: 7, expected: &[7] }, SylowLift { r: 7, a: 30 }],
            },
            ident("A14"),
        ],
    },
    TheoremCase {
        n: 15,
        candidates: &[
            CandidateCase {
                candidate: "A13",
                facts: &[ResidualPart { p: 5, expected: &[5] }, SylowLift { r: 5, a: 28 }],
            },
            CandidateCase {
                candidate: "A14",
                facts: &[ResidualPart { p: 5, expected: &[5] }, SylowLift { r: 5, a: 28 }],
            },
            ident("A15"),
        ],
    },
    TheoremCase {
        n: 16,
        candidates: &[
            CandidateCase {
                candidate: "A13",
                facts: &[ResidualPart { p: 5, expected: &[5] }, SylowLift { r: 5, a: 28 }],
            },
            CandidateCase {
                candidate: "A14",
                facts: &[ResidualPart { p: 5, expected: &[5] }, SylowLift { r: 5, a: 28 }],
            },
            CandidateCase {
                candidate: "A15",
                facts: &[ResidualOrder { expected: &[8, 16] }, SylowLift { r: 2, a: 105 }],
            },
            ident("A16"),
        ],
    },
    TheoremCase { n: 17, candidates: &[ident("A17")] },
    TheoremCase {
        n: 18,
        candidates: &[
            ident("A18"),
            CandidateCase {
                candidate: "A17",
                facts: &[ResidualPart { p: 3, expected: &[9] }, SylowLift { r: 3, a: 70 }],
            },
        ],
    },
    TheoremCase { n: 19, candidates: &[ident("A19")] },
    TheoremCase {
        n: 20,
        candidates: &[
            CandidateCase {
                candidate: "A19",
                facts: &[ResidualPart { p: 5, expected: &[5] }, SylowLift { r: 5, a: 77 }],
            },
            ident("A20"),
        ],
    },
    TheoremCase { n: 23, candidates: &[ident("A23")] },
    TheoremCase {
        n: 24,
        candidates: &[
            CandidateCase {
                candidate: "A23",
                facts: &[ResidualPart { p: 3, expected: &[3] }, SylowLift { r: 3, a: 385 }],
            },
            ident("A24"),
        ],
    },
];

pub fn theorem_cases() -> &'static [TheoremCase] {
    &CASES
}

/// Possible orders of `M` when `|G| = |A_n|` and `S <= G/M <= Aut(S)`:
/// `|A_n| / (|S| d)` for each `d` dividing both `|Out(S)|` and `|A_n| / |S|`.
/// `None` when `|S|` does not divide `|A_n|`.
pub fn residual_orders(
    group_order: &Factorization,
    s_order: &Factorization,
    out_order: u64,
) -> Option<Vec<Factorization>> {
    let quotient = group_order.checked_div(s_order)?;
    let out = factor(out_order.max(1)).expect("nonzero");
    let common = quotient.gcd(&out);
    let mut values: Vec<Factorization> = divisors(&common)
        .iter()
        .map(|d| quotient.checked_div(d).expect("divisor of the quotient"))
        .collect();
    values.sort_by(compare_factored);
    values.dedup();
    Some(values)
}

fn divisors(f: &Factorization) -> Vec<Factorization> {
    let mut out = vec![Factorization::one()];
    for &(p, e) in f.factors() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            for k in 0..=e {
                next.push(d.mul(&Factorization::prime_power(p, k).expect("prime")));
            }
        }
        out = next;
    }
    out
}

pub fn replay_theorem(n: u32) -> Result<CaseReport> {
    replay_theorem_with(&ReferenceData::embedded(), n)
}

pub fn replay_all() -> Vec<CaseReport> {
    replay_all_with(&ReferenceData::embedded())
}

pub fn replay_all_with(data: &ReferenceData) -> Vec<CaseReport> {
    TABLE_DEGREES
        .iter()
        .map(|&n| replay_theorem_with(data, n).expect("table degree"))
        .collect()
}

struct Context<'a> {
    n: u32,
    prefix: String,
    an_order: &'a Factorization,
    m1: &'a Factorization,
    s: std::result::Result<NamedGroup, Error>,
    residuals: Option<Vec<Factorization>>,
}

pub fn replay_theorem_with(data: &ReferenceData, n: u32) -> Result<CaseReport> {
    let case = CASES.iter().find(|c| c.n == n).ok_or_else(|| {
        Error::OutOfRange(format!("degree {n} is outside the recognition range {TABLE_DEGREES:?}"))
    })?;
    let an_order = alt_order(n)?;
    let m1 = MaxOrderTable::new(n).max_alternating(n);
    let mut checks = vec![coverage_check(data, case)];
    for cand in case.candidates {
        let s = data.named_group(cand.candidate);
        let residuals = s
            .as_ref()
            .ok()
            .and_then(|s| residual_orders(&an_order, &s.order, s.out_order));
        let ctx = Context {
            n,
            prefix: format!("theorem.n={n}.{}", cand.candidate),
            an_order: &an_order,
            m1: &m1,
            s,
            residuals,
        };
        for fact in cand.facts {
            checks.extend(evaluate(&ctx, fact));
        }
    }
    Ok(CaseReport::new(n, checks))
}

fn coverage_check(data: &ReferenceData, case: &TheoremCase) -> CheckResult {
    let handled: BTreeSet<&str> = case.candidates.iter().map(|c| c.candidate).collect();
    let listed: Option<BTreeSet<&str>> = data
        .row(case.n)
        .map(|r| r.candidates.iter().map(String::as_str).collect());
    let passed = listed.as_ref() == Some(&handled)
        && data.row(case.n).is_some_and(|r| r.candidates.len() == handled.len());
    CheckResult::new(
        format!("theorem.n={}.coverage", case.n),
        format!("the replayed candidates {handled:?} are exactly the table candidates"),
        passed,
    )
    .with("replayed", handled.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    .with(
        "listed",
        listed.map_or(Value::Null, |l| l.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()),
    )
}

fn evaluate(ctx: &Context<'_>, fact: &Fact) -> Vec<CheckResult> {
    let s = match &ctx.s {
        Ok(s) => s,
        Err(e) => {
            return vec![CheckResult::new(
                format!("{}.resolve", ctx.prefix),
                "candidate group resolves",
                false,
            )
            .with("error", e.to_string())]
        }
    };
    match *fact {
        Identification => vec![identification(ctx, s)],
        SameOrderOtherMaximum { m1_of_s } => same_order_other_maximum(ctx, s, m1_of_s),
        ResidualOrder { expected } => vec![residual_order(ctx, s, expected)],
        ResidualPart { p, expected } => vec![residual_part(ctx, s, p, expected)],
        MaximumMissingFromQuotient => maximum_missing(ctx, s),
        ForcedAdjacency { p, q } => forced_adjacency(ctx, s, p, q),
        SylowLift { r, a } => sylow_lift(ctx, s, r, a),
    }
}

fn residual_values(ctx: &Context<'_>) -> Value {
    match &ctx.residuals {
        Some(v) => v.iter().map(super::number).collect::<Vec<_>>().into(),
        None => Value::Null,
    }
}

fn identification(ctx: &Context<'_>, s: &NamedGroup) -> CheckResult {
    let n = ctx.n;
    let is_an = alternating_degree(&s.name) == Some(n);
    CheckResult::new(
        format!("{}.identification", ctx.prefix),
        format!("S = A{n} and |S| = |A{n}|, so M = 1 and G = A{n}"),
        is_an && &s.order == ctx.an_order,
    )
    .with("s", s.name.clone())
    .with_factored("s_order", &s.order)
    .with_factored("an_order", ctx.an_order)
}

fn same_order_other_maximum(ctx: &Context<'_>, s: &NamedGroup, m1_of_s: u64) -> Vec<CheckResult> {
    let n = ctx.n;
    let same = CheckResult::new(
        format!("{}.same_order", ctx.prefix),
        format!("|{}| = |A{n}|, so G = {}", s.name, s.name),
        &s.order == ctx.an_order,
    )
    .with_factored("s_order", &s.order)
    .with_factored("an_order", ctx.an_order);
    let actual = s.m1();
    let differs = CheckResult::new(
        format!("{}.largest_order_differs", ctx.prefix),
        format!("m1({}) = {m1_of_s} differs from m1(A{n}) = {}", s.name, ctx.m1.value_string()),
        actual == m1_of_s && ctx.m1.to_u64() != Some(actual),
    )
    .with("m1_s", actual)
    .with("expected_m1_s", m1_of_s)
    .with_factored("m1_an", ctx.m1);
    vec![same, differs]
}

fn residual_order(ctx: &Context<'_>, s: &NamedGroup, expected: &[u64]) -> CheckResult {
    let actual: Option<Vec<u64>> = ctx
        .residuals
        .as_ref()
        .map(|v| v.iter().map(|f| f.to_u64().unwrap_or(u64::MAX)).collect());
    CheckResult::new(
        format!("{}.residual_order", ctx.prefix),
        format!("|M| is one of {expected:?}"),
        actual.as_deref() == Some(expected),
    )
    .with("quotient", quotient_value(ctx, s))
    .with("out_order", s.out_order)
    .with("possible_residual_orders", residual_values(ctx))
    .with("expected", expected.to_vec())
}

fn residual_part(ctx: &Context<'_>, s: &NamedGroup, p: u64, expected: &[u64]) -> CheckResult {
    let parts = p_parts(ctx, p);
    let quotient = ctx.an_order.checked_div(&s.order);
    // Out(S) can only blur |M|_p when p divides both |Out(S)| and the quotient
    let out_coprime = !s.out_order.is_multiple_of(p);
    CheckResult::new(
        format!("{}.residual_part", ctx.prefix),
        format!("|M|_{p} is one of {expected:?}"),
        parts.as_deref() == Some(expected),
    )
    .with("p", p)
    .with("quotient", quotient_value(ctx, s))
    .with("quotient_p_part", quotient.map_or(Value::Null, |q| super::number(&q.p_part(p))))
    .with("out_order", s.out_order)
    .with("p_coprime_to_out", out_coprime)
    .with("possible_p_parts", parts.map_or(Value::Null, Value::from))
    .with("expected", expected.to_vec())
}

fn quotient_value(ctx: &Context<'_>, s: &NamedGroup) -> Value {
    ctx.an_order
        .checked_div(&s.order)
        .map_or(Value::Null, |q| super::number(&q))
}

/// Distinct `p`-parts over the possible `|M|`, ascending.
fn p_parts(ctx: &Context<'_>, p: u64) -> Option<Vec<u64>> {
    let mut parts: Vec<u64> = ctx
        .residuals
        .as_ref()?
        .iter()
        .map(|m| m.p_part(p).to_u64().unwrap_or(u64::MAX))
        .collect();
    parts.sort_unstable();
    parts.dedup();
    Some(parts)
}

fn maximum_missing(ctx: &Context<'_>, s: &NamedGroup) -> Vec<CheckResult> {
    let n = ctx.n;
    let m = ctx.m1.to_u64().expect("small degree");
    let coprime = ctx.residuals.as_ref().is_some_and(|v| {
        v.iter()
            .all(|r| r.to_u64().is_some_and(|r| r.gcd(&m) == 1))
    });
    let first = CheckResult::new(
        format!("{}.coprime_residual", ctx.prefix),
        format!("every possible |M| is coprime to m1(A{n}) = {m}"),
        coprime,
    )
    .with("m", m)
    .with("possible_residual_orders", residual_values(ctx));
    let k = alternating_degree(&s.name);
    let (in_s, in_aut) = match k {
        Some(k) => (in_spectrum_alt(m, k), in_spectrum_sym(m, k)),
        None => (true, true),
    };
    let second = CheckResult::new(
        format!("{}.missing_from_quotient", ctx.prefix),
        format!("{m} is an element order of neither {} nor its automorphism group", s.name),
        k.is_some() && s.out_order == 2 && !in_s && !in_aut,
    )
    .with("m", m)
    .with("cost", cost(m).expect("m >= 1"))
    .with("degree", k.map_or(Value::Null, Value::from))
    .with("in_s", in_s)
    .with("in_aut_s", in_aut);
    vec![first, second]
}

fn contradiction(ctx: &Context<'_>, forced: &Factorization, how: String) -> CheckResult {
    let n = ctx.n;
    let exceeds = compare_factored(forced, ctx.m1).is_gt();
    CheckResult::new(
        format!("{}.contradiction", ctx.prefix),
        format!(
            "{how} = {} exceeds m1(A{n}) = {}",
            forced.value_string(),
            ctx.m1.value_string()
        ),
        exceeds,
    )
    .with_factored("forced_order", forced)
    .with_factored("m1", ctx.m1)
}

fn forced_adjacency(ctx: &Context<'_>, s: &NamedGroup, p: u64, q: u64) -> Vec<CheckResult> {
    let parts = p_parts(ctx, p);
    let q_in_s = s.order.exponent(q) > 0;
    let mut tests = Vec::new();
    let mut ok = q_in_s && parts.as_ref().is_some_and(|v| !v.is_empty());
    for &part in parts.iter().flatten() {
        let p_in_m = part > 1;
        let divides = part > 0 && (part - 1) % q == 0;
        ok &= p_in_m && !divides;
        tests.push(json!({ "m_p": part, "m_p_minus_1": part.saturating_sub(1), "q_divides": divides }));
    }
    let adjacency = CheckResult::new(
        format!("{}.forced_adjacency", ctx.prefix),
        format!("{p} divides |M|, {q} divides |{}| and {q} does not divide |M|_{p} - 1, so {} is an element order of G", s.name, p * q),
        ok,
    )
    .with("p", p)
    .with("q", q)
    .with("q_divides_s", q_in_s)
    .with("tests", tests);
    let forced = factor(p * q).expect("nonzero");
    vec![adjacency, contradiction(ctx, &forced, format!("{p} * {q}"))]
}

fn sylow_lift(ctx: &Context<'_>, s: &NamedGroup, r: u64, a: u64) -> Vec<CheckResult> {
    let element = CheckResult::new(
        format!("{}.element_of_s", ctx.prefix),
        format!("{} has an element of order {a}", s.name),
        s.spectrum.contains(a),
    )
    .with("a", a);

    let exponents: Option<Vec<u32>> = ctx
        .residuals
        .as_ref()
        .map(|v| {
            let mut e: Vec<u32> = v.iter().map(|m| m.exponent(r)).collect();
            e.sort_unstable();
            e.dedup();
            e
        });
    let nontrivial = CheckResult::new(
        format!("{}.sylow_nontrivial", ctx.prefix),
        format!("{r} divides every possible |M|"),
        exponents.as_ref().is_some_and(|e| !e.is_empty() && e.iter().all(|&k| k > 0)),
    )
    .with("r", r)
    .with("possible_residual_orders", residual_values(ctx));

    let mut bounds = Vec::new();
    let mut excluded = exponents.is_some();
    for &k in exponents.iter().flatten() {
        match gl_order(k, r) {
            Ok(gl) => {
                let divides = s.order.divides(&gl);
                excluded &= !divides;
                bounds.push(json!({ "k": k, "gl_order": super::number(&gl), "s_divides": divides }));
            }
            Err(e) => {
                excluded = false;
                bounds.push(json!({ "k": k, "error": e.to_string() }));
            }
        }
    }
    let aut = CheckResult::new(
        format!("{}.aut_excluded", ctx.prefix),
        format!("|{}| does not divide |GL(k, {r})| for |M|_{r} = {r}^k, so it cannot divide |Aut(R)|", s.name),
        excluded,
    )
    .with_factored("s_order", &s.order)
    .with("bounds", bounds);

    let forced = lcm_factored(&factor(r).expect("nonzero"), &factor(a.max(1)).expect("nonzero"));
    vec![element, nontrivial, aut, contradiction(ctx, &forced, format!("lcm({r}, {a})"))]
}
