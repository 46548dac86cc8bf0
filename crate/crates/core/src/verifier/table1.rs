use serde_json::{json, Value};

use crate::arith::{alt_order, Factorization};
use crate::groupdata::{ReferenceData, Table1Row};
use crate::primegraph::{build_graph, is_independent};
use crate::spectrum::{in_spectrum_alt, MaxOrderTable};
use crate::verifier::CheckResult;

/// Every product of two distinct primes of `rho` exceeds the row's `m1`.
///
/// Any group `G` with `m1(G) = m1(A_n)` then has no element of order `pq`
/// for `p, q` in `rho`, so `rho` is independent in its prime graph.
pub fn check_independence_forcing(row: &Table1Row) -> CheckResult {
    let pairs = distinct_pairs(&row.rho);
    let products: Vec<Value> = pairs
        .iter()
        .map(|&(p, q)| json!({ "p": p, "q": q, "product": p * q }))
        .collect();
    let min_product = pairs.iter().map(|&(p, q)| p * q).min();
    let passed = !pairs.is_empty() && pairs.iter().all(|&(p, q)| p * q > row.m1);
    CheckResult::new(
        format!("table1.n={}.independence_forcing", row.n),
        format!(
            "every product of two distinct primes of rho = {:?} exceeds m1 = {}",
            row.rho, row.m1
        ),
        passed,
    )
    .with("m1", row.m1)
    .with("pairs", products)
    .with("min_product", min_product.map_or(Value::Null, Value::from))
}

/// For distinct `p, q` in `rho` and every `1 < p^i <= |G|_p`, `q` does not
/// divide `p^i - 1` (and symmetrically).
pub fn check_corollary34(rho: &[u64], order: &Factorization) -> CheckResult {
    let mut tests = Vec::new();
    let mut passed = true;
    let outside: Vec<u64> = rho.iter().copied().filter(|&p| order.exponent(p) == 0).collect();
    if !outside.is_empty() {
        passed = false;
    }
    for &p in rho {
        for &q in rho {
            if p == q || order.exponent(q) == 0 {
                continue;
            }
            for i in 1..=order.exponent(p) {
                let residue = pow_mod(p, i, q);
                let divides = residue == 1 % q;
                passed &= !divides;
                tests.push(json!({ "p": p, "i": i, "q": q, "p^i mod q": residue, "q divides p^i - 1": divides }));
            }
        }
    }
    CheckResult::new(
        "corollary34",
        format!("no prime of {rho:?} divides p^i - 1 for another prime p of the set with p^i dividing {order}"),
        passed,
    )
    .with("rho", rho.to_vec())
    .with("order_factored", order.to_string())
    .with("primes_outside_order", outside)
    .with("tests", tests)
}

pub fn verify_table1() -> Vec<CheckResult> {
    verify_table1_with(&ReferenceData::embedded())
}

/// Six checks per row: recomputed order; recomputed `m1`; `rho` independent
/// in the prime graph of `A_n`; independence forcing; the `p^i - 1`
/// divisibility preconditions; and, per candidate, `|S|` dividing `|A_n|`
/// with `rho` inside `pi(S)`.
pub fn verify_table1_with(data: &ReferenceData) -> Vec<CheckResult> {
    let limit = data.rows.iter().map(|r| r.n).max().unwrap_or(0);
    let table = MaxOrderTable::new(limit);
    let mut out = Vec::with_capacity(data.rows.len() * 6);
    for row in &data.rows {
        let n = row.n;
        let prefix = format!("table1.n={n}");
        let actual_order = alt_order(n).ok();

        out.push(
            CheckResult::new(
                format!("{prefix}.order"),
                format!("listed |A{n}| = {} equals n!/2", row.order),
                actual_order.as_ref() == Some(&row.order),
            )
            .with("listed", row.order.to_string())
            .with("recomputed", actual_order.as_ref().map_or(Value::Null, |o| o.to_string().into())),
        );

        let m1 = table.max_alternating(n);
        out.push(
            CheckResult::new(
                format!("{prefix}.m1"),
                format!("listed m1(A{n}) = {} equals the computed maximum element order", row.m1),
                m1.to_u64() == Some(row.m1),
            )
            .with("listed", row.m1)
            .with_factored("recomputed", &m1),
        );

        out.push(check_rho_independent(row, actual_order.as_ref()));

        out.push(check_independence_forcing(row));

        let mut c34 = match &actual_order {
            Some(order) => check_corollary34(&row.rho, order),
            None => CheckResult::new("corollary34", format!("A{n} has no order"), false),
        };
        c34.check_id = format!("{prefix}.corollary34");
        out.push(c34);

        out.push(check_candidates(data, row, actual_order.as_ref()));
    }
    out
}

fn check_rho_independent(row: &Table1Row, order: Option<&Factorization>) -> CheckResult {
    let n = row.n;
    let id = format!("table1.n={n}.rho_independent");
    let statement = format!("rho = {:?} is an independent set of size >= 2 in the prime graph of A{n}", row.rho);
    let Some(order) = order else {
        return CheckResult::new(id, statement, false);
    };
    let graph = build_graph(order, |m| in_spectrum_alt(m, n));
    let independent = is_independent(&graph, &row.rho);
    let adjacent_pairs: Vec<Value> = distinct_pairs(&row.rho)
        .into_iter()
        .filter(|&(p, q)| graph.adjacent(p, q))
        .map(|(p, q)| json!([p, q]))
        .collect();
    let distinct = distinct_pairs(&row.rho).len() == row.rho.len() * (row.rho.len().saturating_sub(1)) / 2;
    let passed = row.rho.len() >= 2 && distinct && independent == Ok(true);
    CheckResult::new(id, statement, passed)
        .with("vertices", graph.vertices().to_vec())
        .with("rho_in_vertices", independent.is_ok())
        .with("adjacent_pairs", adjacent_pairs)
}

fn check_candidates(data: &ReferenceData, row: &Table1Row, order: Option<&Factorization>) -> CheckResult {
    let n = row.n;
    let mut passed = !row.candidates.is_empty() && order.is_some();
    let mut items = Vec::new();
    for name in &row.candidates {
        match (data.named_group(name), order) {
            (Ok(s), Some(order)) => {
                let divides = s.order.divides(order);
                let missing: Vec<u64> =
                    row.rho.iter().copied().filter(|&p| s.order.exponent(p) == 0).collect();
                passed &= divides && missing.is_empty();
                items.push(json!({
                    "name": name,
                    "order_factored": s.order.to_string(),
                    "divides": divides,
                    "rho_primes_missing": missing,
                }));
            }
            (Err(e), _) => {
                passed = false;
                items.push(json!({ "name": name, "error": e.to_string() }));
            }
            (Ok(_), None) => passed = false,
        }
    }
    let mut seen = row.candidates.clone();
    seen.sort();
    seen.dedup();
    passed &= seen.len() == row.candidates.len();
    CheckResult::new(
        format!("table1.n={n}.candidates"),
        format!("each candidate S in {:?} has |S| dividing |A{n}| and rho inside pi(S)", row.candidates),
        passed,
    )
    .with("candidates", items)
}

fn distinct_pairs(rho: &[u64]) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for (i, &p) in rho.iter().enumerate() {
        for &q in &rho[i + 1..] {
            if p != q {
                pairs.push((p.min(q), p.max(q)));
            }
        }
    }
    pairs
}

fn pow_mod(base: u64, exp: u32, modulus: u64) -> u64 {
    let m = u128::from(modulus);
    let mut acc = 1u128 % m;
    let mut b = u128::from(base) % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}
