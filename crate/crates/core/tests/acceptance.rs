//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
//! status 1 if any criterion fails. Every criterion runs even when an
//! earlier one fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

use alt_recognition::arith::{alt_order, compare_factored, factor, sieve_primes, Factorization};
use alt_recognition::groupdata::{ReferenceData, Table1Row, TABLE_DEGREES};
use alt_recognition::spectrum::{landau, max_order, spectrum, GroupFamilyPoint, MaxOrderTable};
use alt_recognition::verifier::{
    check_analytic_bound, check_corollary34, check_independence_forcing, replay_all,
    replay_all_with, replay_theorem, verify_lemma41, verify_reference_data, verify_table1_with,
    REQUIRED_RELATIVE_MARGIN,
};

/// The m1 column as printed.
const PRINTED_M1: [u64; 16] = [7, 15, 15, 21, 21, 35, 35, 60, 105, 105, 105, 140, 210, 210, 420, 420];

/// The |A_n| column as printed, independent of the data file.
const PRINTED_ORDERS: [(u32, &str); 16] = [
    (7, "2^3 * 3^2 * 5 * 7"),
    (8, "2^6 * 3^2 * 5 * 7"),
    (9, "2^6 * 3^4 * 5 * 7"),
    (10, "2^7 * 3^4 * 5^2 * 7"),
    (11, "2^7 * 3^4 * 5^2 * 7 * 11"),
    (12, "2^9 * 3^5 * 5^2 * 7 * 11"),
    (13, "2^9 * 3^5 * 5^2 * 7 * 11 * 13"),
    (14, "2^10 * 3^5 * 5^2 * 7^2 * 11 * 13"),
    (15, "2^10 * 3^6 * 5^3 * 7^2 * 11 * 13"),
    (16, "2^14 * 3^6 * 5^3 * 7^2 * 11 * 13"),
    (17, "2^14 * 3^6 * 5^3 * 7^2 * 11 * 13 * 17"),
    (18, "2^15 * 3^8 * 5^3 * 7^2 * 11 * 13 * 17"),
    (19, "2^15 * 3^8 * 5^3 * 7^2 * 11 * 13 * 17 * 19"),
    (20, "2^17 * 3^8 * 5^4 * 7^2 * 11 * 13 * 17 * 19"),
    (23, "2^18 * 3^9 * 5^4 * 7^3 * 11^2 * 13 * 17 * 19 * 23"),
    (24, "2^21 * 3^9 * 5^4 * 7^3 * 11^2 * 13 * 17 * 19 * 23"),
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

// Oracles.

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Element orders from cycle types: every partition of `n`, its lcm, and
/// the parity `sum(part - 1) mod 2` for the alternating group.
fn cycle_type_orders(n: u32) -> (BTreeSet<u64>, BTreeSet<u64>) {
    fn walk(rest: u32, max_part: u32, order: u64, parity: u32, sym: &mut BTreeSet<u64>, alt: &mut BTreeSet<u64>) {
        if rest == 0 {
            sym.insert(order);
            if parity.is_multiple_of(2) {
                alt.insert(order);
            }
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            walk(rest - part, part, lcm(order, u64::from(part)), parity + part - 1, sym, alt);
        }
    }
    let mut sym = BTreeSet::new();
    let mut alt = BTreeSet::new();
    walk(n, n, 1, 0, &mut sym, &mut alt);
    (sym, alt)
}

/// Scan in the style of a direct search: the largest `m` with `m` odd and
/// cost at most `n`, or `m` even and cost at most `n - 2`. Costs come from a
/// smallest-prime-factor sieve; the scan bound is Landau(n).
fn appendix_scan(n: u32, spf: &[u32], bound: usize) -> u64 {
    let cost_of = |mut m: usize| -> u64 {
        let mut total = 0u64;
        while m > 1 {
            let p = spf[m] as usize;
            let mut pe = 1usize;
            while m.is_multiple_of(p) {
                m /= p;
                pe *= p;
            }
            total += pe as u64;
        }
        total
    };
    let n = u64::from(n);
    (1..=bound)
        .rev()
        .find(|&m| {
            let c = cost_of(m);
            if m % 2 == 1 { c <= n } else { c + 2 <= n }
        })
        .expect("1 always qualifies") as u64
}

fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

fn two_largest_primes(n: u64) -> (u64, u64) {
    let primes = sieve_primes(n);
    (primes[primes.len() - 1], primes[primes.len() - 2])
}

fn collect_numbers(value: &Value, out: &mut BTreeSet<u64>) {
    match value {
        Value::Number(n) => {
            if let Some(v) = n.as_u64() {
                out.insert(v);
            }
        }
        Value::String(s) => {
            if let Ok(v) = s.parse::<u64>() {
                out.insert(v);
            }
        }
        Value::Array(items) => items.iter().for_each(|v| collect_numbers(v, out)),
        Value::Object(map) => map.values().for_each(|v| collect_numbers(v, out)),
        _ => {}
    }
}

// Criteria.

fn criterion_1() -> Outcome {
    let (values, elapsed) = timed(|| {
        TABLE_DEGREES
            .iter()
            .map(|&n| max_order(GroupFamilyPoint::alternating(n)).to_u64().expect("small"))
            .collect::<Vec<_>>()
    });
    let mismatches: Vec<String> = TABLE_DEGREES
        .iter()
        .zip(values.iter().zip(PRINTED_M1))
        .filter(|(_, (got, want))| **got != *want)
        .map(|(n, (got, want))| format!("n={n}: {got} != {want}"))
        .collect();
    let fast = within(elapsed, Duration::from_secs(1));
    outcome(
        mismatches.is_empty() && fast,
        format!("m1 column, 16 rows, {} mismatches {:?}, {elapsed:?}", mismatches.len(), mismatches),
    )
}

fn criterion_2() -> Outcome {
    let data = ReferenceData::embedded();
    let ((mismatches, transcribed), elapsed) = timed(|| {
        let mut mismatches = Vec::new();
        let mut transcribed = true;
        for (n, printed) in PRINTED_ORDERS {
            let printed: Factorization = printed.parse().expect("printed factorization");
            transcribed &= data.row(n).is_some_and(|r| r.order == printed);
            let computed = alt_order(n).expect("n >= 3");
            if computed != printed {
                mismatches.push(format!("n={n}: computed {computed}, printed {printed}"));
            }
        }
        (mismatches, transcribed)
    });
    let fast = within(elapsed, Duration::from_secs(1));
    outcome(
        mismatches.is_empty() && transcribed && fast,
        format!(
            "order column, {} of 16 rows match exactly {:?}, data file matches print: {transcribed}, {elapsed:?}",
            16 - mismatches.len(),
            mismatches
        ),
    )
}

fn criterion_3() -> Outcome {
    let (bad, elapsed) = timed(|| {
        let mut bad = Vec::new();
        for n in 1..=14u32 {
            let (sym, alt) = cycle_type_orders(n);
            let got_sym: BTreeSet<u64> = spectrum(GroupFamilyPoint::symmetric(n)).unwrap().iter().collect();
            if got_sym != sym {
                bad.push(format!("S{n}"));
            }
            if n >= 3 {
                let got_alt: BTreeSet<u64> =
                    spectrum(GroupFamilyPoint::alternating(n)).unwrap().iter().collect();
                if got_alt != alt {
                    bad.push(format!("A{n}"));
                }
            }
        }
        bad
    });
    let fast = within(elapsed, Duration::from_secs(10));
    outcome(
        bad.is_empty() && fast,
        format!("spectra for n <= 14 equal cycle-type oracle, mismatches {bad:?}, {elapsed:?}"),
    )
}

fn criterion_4() -> Outcome {
    let (bad, elapsed) = timed(|| {
        let bound = landau(40).to_u64().expect("small") as usize;
        let spf = smallest_prime_factors(bound);
        let table = MaxOrderTable::new(40);
        (3..=40u32)
            .filter(|&n| {
                let scan = appendix_scan(n, &spf, bound);
                table.max_alternating(n).to_u64() != Some(scan)
            })
            .collect::<Vec<_>>()
    });
    let fast = within(elapsed, Duration::from_secs(60));
    outcome(
        bad.is_empty() && fast,
        format!("m1(A_n) equals direct scan for 3 <= n <= 40, mismatches {bad:?}, {elapsed:?}"),
    )
}

fn criterion_5() -> Outcome {
    let (checks, elapsed) = timed(|| verify_lemma41(905).expect("n_max >= 25"));
    let table = MaxOrderTable::new(905);
    let mut failures = 0usize;
    for c in &checks {
        let n = c.evidence["n"].as_u64().unwrap();
        let (p, q) = two_largest_primes(n);
        let pq = factor(p * q).unwrap();
        let m1 = table.max_alternating(n as u32);
        let recheck = compare_factored(&m1, &pq).is_ge();
        if !c.passed || !recheck {
            failures += 1;
        }
    }
    let expected = 2 + (25..=905).count();
    let fast = within(elapsed, Duration::from_secs(120));
    outcome(
        failures == 0 && checks.len() == expected && fast,
        format!("{} degrees in {{21,22}} u [25,905], {failures} failures, {elapsed:?}", checks.len()),
    )
}

fn criterion_6() -> Outcome {
    let data = ReferenceData::embedded();
    let mut notes = Vec::new();
    let mut ok = true;
    for row in &data.rows {
        let c = check_independence_forcing(row);
        ok &= c.passed;
        if row.n == 23 {
            notes.push(format!("n=23 min product {}", c.evidence["min_product"]));
        }
    }
    let hypothetical = |n: u32, rho: Vec<u64>| Table1Row {
        n,
        order: alt_order(n).unwrap(),
        m1: 420,
        rho,
        candidates: vec![],
    };
    // Below 25 only n = 21, 22 lack a forcing pair: the two largest primes
    // multiply to 17 * 19 = 323 < 420 at both degrees.
    for n in [21, 22] {
        let c = check_independence_forcing(&hypothetical(n, vec![17, 19]));
        ok &= !c.passed && c.evidence["min_product"] == 323;
        notes.push(format!("n={n} {{17,19}} fails: {}", !c.passed));
    }
    // {19, 23} forces at 23 and 24 but is not available at 22: 23 does not
    // divide |A22|.
    let at22 = check_corollary34(&[19, 23], &alt_order(22).unwrap());
    ok &= !at22.passed;
    notes.push(format!("{{19,23}} at n=22 rejected: {}", !at22.passed));
    outcome(ok, format!("forcing holds on all 16 rows; {}", notes.join("; ")))
}

fn criterion_7() -> Outcome {
    let data = ReferenceData::embedded();
    let mut ok = true;
    let mut mutated_fail = 0;
    for row in &data.rows {
        let order = alt_order(row.n).unwrap();
        ok &= check_corollary34(&row.rho, &order).passed;
        let mut rho: BTreeSet<u64> = row.rho.iter().copied().collect();
        rho.extend([2, 3]);
        let rho: Vec<u64> = rho.into_iter().collect();
        if !check_corollary34(&rho, &order).passed {
            mutated_fail += 1;
        }
    }
    outcome(
        ok && mutated_fail == 16,
        format!("preconditions pass on 16 rows; adding {{2,3}} fails on {mutated_fail}/16"),
    )
}

fn criterion_8() -> Outcome {
    let ((reports, single), elapsed) = timed(|| {
        let single: Vec<bool> = TABLE_DEGREES.iter().map(|&n| replay_theorem(n).unwrap().passed()).collect();
        (replay_all(), single)
    });
    let mut numbers = BTreeSet::new();
    let mut failing = Vec::new();
    for r in &reports {
        for c in &r.checks {
            c.evidence.values().for_each(|v| collect_numbers(v, &mut numbers));
            if !c.passed {
                failing.push(c.check_id.clone());
            }
        }
    }
    let required = [15u64, 21, 30, 33, 55, 60, 210, 140, 385, 1155, 35, 105, 420, 7, 9, 5, 3, 28, 77, 70, 20];
    let missing: Vec<u64> = required.iter().copied().filter(|v| !numbers.contains(v)).collect();
    let fast = within(elapsed, Duration::from_secs(5));
    outcome(
        failing.is_empty() && single.iter().all(|&p| p) && missing.is_empty() && fast,
        format!(
            "16 cases replayed, failing checks {failing:?}, missing evidence {missing:?}, {elapsed:?}"
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [906u64, 10_000, 1_000_000] {
        let c = check_analytic_bound(n).unwrap();
        let margin = c.evidence["relative_margin"].as_f64().unwrap();
        ok &= c.passed && margin >= REQUIRED_RELATIVE_MARGIN;
        parts.push(format!("n={n} margin {margin:.3}"));
    }
    ok &= check_analytic_bound(905).is_err();
    outcome(ok, parts.join(", "))
}

// Mutation robustness.

/// Ids of failing checks across every verifier that reads the data.
fn failing_ids(data: &ReferenceData) -> BTreeSet<String> {
    let mut checks = verify_reference_data(data);
    checks.extend(verify_table1_with(data));
    checks.extend(replay_all_with(data).into_iter().flat_map(|r| r.checks));
    checks.into_iter().filter(|c| !c.passed).map(|c| c.check_id).collect()
}

/// The embedded data with the single misprinted |A24| exponent replaced by
/// the value from 24!/2, so that every check passes before mutation.
fn corrected_baseline() -> ReferenceData {
    let mut data = ReferenceData::embedded();
    let row = data.rows.iter_mut().find(|r| r.n == 24).unwrap();
    row.order = alt_order(24).unwrap();
    data
}

#[derive(Clone, Debug)]
enum Mutation {
    RowExponent { row: usize, prime: usize, delta: i32 },
    GroupExponent { group: usize, prime: usize, delta: i32 },
    SpectrumRemove { group: usize, index: usize },
    SpectrumAdd { group: usize, value: u64 },
    CandidateRemove { row: usize, index: usize },
    CandidateAdd { row: usize, name: String },
    CandidateReplace { row: usize, index: usize, name: String },
    RowM1 { row: usize, delta: i64 },
    OutOrder { group: usize, value: u64 },
    RhoReplace { row: usize, index: usize, prime: u64 },
}

fn with_exponent(f: &Factorization, index: usize, delta: i32) -> Option<Factorization> {
    let mut pairs: Vec<(u64, u32)> = f.factors().to_vec();
    let e = pairs.get(index)?.1 as i32 + delta;
    if e < 0 {
        return None;
    }
    pairs[index].1 = e as u32;
    Some(Factorization::from_pairs(pairs.into_iter().filter(|&(_, e)| e > 0)).unwrap())
}

/// Applies `m`; `None` when the mutation is a no-op or out of range.
fn apply(base: &ReferenceData, m: &Mutation) -> Option<ReferenceData> {
    let mut d = base.clone();
    match m {
        Mutation::RowExponent { row, prime, delta } => {
            let r = d.rows.get_mut(*row)?;
            r.order = with_exponent(&r.order, *prime, *delta)?;
        }
        Mutation::GroupExponent { group, prime, delta } => {
            let g = d.groups.get_mut(*group)?;
            g.order = with_exponent(&g.order, *prime, *delta)?;
        }
        Mutation::SpectrumRemove { group, index } => {
            let g = d.groups.get_mut(*group)?;
            if *index >= g.spectrum.len() {
                return None;
            }
            g.spectrum.remove(*index);
        }
        Mutation::SpectrumAdd { group, value } => {
            let g = d.groups.get_mut(*group)?;
            if g.spectrum.contains(value) {
                return None;
            }
            g.spectrum.push(*value);
            g.spectrum.sort_unstable();
        }
        Mutation::CandidateRemove { row, index } => {
            let r = d.rows.get_mut(*row)?;
            if *index >= r.candidates.len() {
                return None;
            }
            r.candidates.remove(*index);
        }
        Mutation::CandidateAdd { row, name } => {
            let r = d.rows.get_mut(*row)?;
            if r.candidates.contains(name) {
                return None;
            }
            r.candidates.push(name.clone());
        }
        Mutation::CandidateReplace { row, index, name } => {
            let r = d.rows.get_mut(*row)?;
            if *index >= r.candidates.len() || r.candidates.contains(name) {
                return None;
            }
            r.candidates[*index] = name.clone();
        }
        Mutation::RowM1 { row, delta } => {
            let r = d.rows.get_mut(*row)?;
            let v = r.m1 as i64 + delta;
            if v < 1 || *delta == 0 {
                return None;
            }
            r.m1 = v as u64;
        }
        Mutation::OutOrder { group, value } => {
            let g = d.groups.get_mut(*group)?;
            if g.out_order == *value {
                return None;
            }
            g.out_order = *value;
        }
        Mutation::RhoReplace { row, index, prime } => {
            let r = d.rows.get_mut(*row)?;
            if *index >= r.rho.len() || r.rho.contains(prime) {
                return None;
            }
            r.rho[*index] = *prime;
            r.rho.sort_unstable();
        }
    }
    Some(d)
}

fn candidate_pool(data: &ReferenceData) -> Vec<String> {
    let mut names: Vec<String> = (5..=25).map(|k| format!("A{k}")).collect();
    names.extend(data.groups.iter().map(|g| g.name.clone()));
    names.push("M11".into());
    names
}

/// Every unit flip of every datum.
fn exhaustive_mutations(data: &ReferenceData) -> Vec<Mutation> {
    let mut out = Vec::new();
    let pool = candidate_pool(data);
    for (ri, r) in data.rows.iter().enumerate() {
        for pi in 0..r.order.factors().len() {
            for delta in [-1, 1] {
                out.push(Mutation::RowExponent { row: ri, prime: pi, delta });
            }
        }
        for delta in [-1, 1] {
            out.push(Mutation::RowM1 { row: ri, delta });
        }
        for index in 0..r.candidates.len() {
            out.push(Mutation::CandidateRemove { row: ri, index });
            for name in &pool {
                out.push(Mutation::CandidateReplace { row: ri, index, name: name.clone() });
            }
        }
        for name in &pool {
            out.push(Mutation::CandidateAdd { row: ri, name: name.clone() });
        }
        for index in 0..r.rho.len() {
            for prime in sieve_primes(u64::from(r.n) + 6) {
                out.push(Mutation::RhoReplace { row: ri, index, prime });
            }
        }
    }
    for (gi, g) in data.groups.iter().enumerate() {
        for pi in 0..g.order.factors().len() {
            for delta in [-1, 1] {
                out.push(Mutation::GroupExponent { group: gi, prime: pi, delta });
            }
        }
        for index in 0..g.spectrum.len() {
            out.push(Mutation::SpectrumRemove { group: gi, index });
        }
        let top = g.spectrum.iter().max().copied().unwrap_or(1);
        for value in 1..=2 * top {
            out.push(Mutation::SpectrumAdd { group: gi, value });
        }
        for value in 1..=2 * g.out_order + 2 {
            out.push(Mutation::OutOrder { group: gi, value });
        }
    }
    out
}

fn mutation_strategy(data: &ReferenceData) -> impl Strategy<Value = Mutation> {
    let rows = data.rows.len();
    let groups = data.groups.len();
    let pool = candidate_pool(data);
    let name = proptest::sample::select(pool);
    prop_oneof![
        (0..rows, 0..10usize, prop_oneof![-3..0i32, 1..4i32])
            .prop_map(|(row, prime, delta)| Mutation::RowExponent { row, prime, delta }),
        (0..groups, 0..6usize, prop_oneof![-3..0i32, 1..4i32])
            .prop_map(|(group, prime, delta)| Mutation::GroupExponent { group, prime, delta }),
        (0..groups, 0..12usize).prop_map(|(group, index)| Mutation::SpectrumRemove { group, index }),
        (0..groups, 1..100u64).prop_map(|(group, value)| Mutation::SpectrumAdd { group, value }),
        (0..rows, 0..4usize).prop_map(|(row, index)| Mutation::CandidateRemove { row, index }),
        (0..rows, name.clone()).prop_map(|(row, name)| Mutation::CandidateAdd { row, name }),
        (0..rows, 0..4usize, name)
            .prop_map(|(row, index, name)| Mutation::CandidateReplace { row, index, name }),
        (0..rows, prop_oneof![-50..0i64, 1..50i64]).prop_map(|(row, delta)| Mutation::RowM1 { row, delta }),
        (0..groups, 1..30u64).prop_map(|(group, value)| Mutation::OutOrder { group, value }),
        (0..rows, 0..3usize, proptest::sample::select(sieve_primes(30)))
            .prop_map(|(row, index, prime)| Mutation::RhoReplace { row, index, prime }),
    ]
}

fn criterion_10() -> Outcome {
    let embedded = ReferenceData::embedded();
    let embedded_failures = failing_ids(&embedded);
    let base = corrected_baseline();
    let base_failures = failing_ids(&base);

    // Each undetected rho swap must leave a row that is itself valid: a
    // different independent set meeting every condition. Such swaps are
    // reported, not counted, since the table is still true after them.
    let mut applied = 0usize;
    let mut undetected = Vec::new();
    let mut equivalent_rho = Vec::new();
    for m in exhaustive_mutations(&base) {
        if let Some(d) = apply(&base, &m) {
            applied += 1;
            if failing_ids(&d).is_empty() {
                match m {
                    Mutation::RhoReplace { row, .. } => {
                        let r = &d.rows[row];
                        equivalent_rho.push(format!("n={} {:?}", r.n, r.rho));
                    }
                    _ => undetected.push(format!("{m:?}")),
                }
            }
        }
    }

    let mut runner = TestRunner::new(Config { cases: 512, failure_persistence: None, ..Config::default() });
    let random = runner.run(&mutation_strategy(&base), |m| {
        if matches!(m, Mutation::RhoReplace { .. }) {
            return Ok(());
        }
        if let Some(d) = apply(&base, &m) {
            prop_assert!(!failing_ids(&d).is_empty(), "undetected mutation {:?}", m);
        }
        Ok(())
    });

    let expected_embedded: BTreeSet<String> = ["table1.n=24.order".to_string()].into();
    let ok = base_failures.is_empty()
        && embedded_failures == expected_embedded
        && undetected.is_empty()
        && random.is_ok();
    outcome(
        ok,
        format!(
            "baseline clean: {}, embedded fails only {:?}, {applied} unit flips with {} undetected {:?}, \
             512 random flips: {}; rho swaps giving another valid rho (not counted): {:?}",
            base_failures.is_empty(),
            embedded_failures,
            undetected.len(),
            undetected.iter().take(5).collect::<Vec<_>>(),
            match &random {
                Ok(()) => "all detected".to_string(),
                Err(e) => e.to_string(),
            },
            equivalent_rho,
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let result = run();
        let tag = if result.passed { "PASS" } else { "FAIL" };
        println!("criterion {id}: {tag} {}", result.detail);
        if !result.passed {
            failed += 1;
        }
    }
    println!("acceptance: {}/10 criteria pass", 10 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
