use std::cmp::Ordering;

use crate::arith::{compare_factored, sieve_primes, Factorization};
use crate::error::{Error, Result};
use crate::spectrum::MaxOrderTable;
use crate::verifier::CheckResult;

pub const DEFAULT_N_MAX: u32 = 905;

/// `{21, 22}` followed by `25..=n_max`.
pub fn lemma41_degrees(n_max: u32) -> Vec<u32> {
    [21, 22].into_iter().chain(25..=n_max).filter(|&n| n <= n_max).collect()
}

/// For every degree in [`lemma41_degrees`], `m1(A_n) >= p*q` for the two
/// largest primes `p > q` below `n`, which bounds every product of two
/// distinct primes of `|A_n|`.
pub fn verify_lemma41(n_max: u32) -> Result<Vec<CheckResult>> {
    verify_lemma41_sharded(n_max, 1)
}

/// As [`verify_lemma41`], splitting the degrees across `jobs` threads.
/// Results are in ascending `n` for every job count.
pub fn verify_lemma41_sharded(n_max: u32, jobs: usize) -> Result<Vec<CheckResult>> {
    if n_max < 25 {
        return Err(Error::InvalidArgument(format!("n_max must be at least 25, got {n_max}")));
    }
    let table = MaxOrderTable::new(n_max);
    let primes = sieve_primes(u64::from(n_max));
    let degrees = lemma41_degrees(n_max);
    let jobs = jobs.clamp(1, degrees.len());
    let chunk = degrees.len().div_ceil(jobs);
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = degrees
            .chunks(chunk)
            .map(|shard| {
                let (table, primes) = (&table, &primes);
                scope.spawn(move || {
                    shard.iter().map(|&n| check_degree(table, primes, n)).collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("lemma41 shard panicked"))
            .collect::<Vec<_>>()
    });
    Ok(results)
}

fn check_degree(table: &MaxOrderTable, primes: &[u64], n: u32) -> CheckResult {
    let below = primes.partition_point(|&p| p <= u64::from(n));
    let (q, p) = (primes[below - 2], primes[below - 1]);
    let m1 = table.max_alternating(n);
    let pq = Factorization::from_pairs([(q, 1), (p, 1)]).expect("distinct primes");
    let ord = compare_factored(&m1, &pq);
    CheckResult::new(
        format!("lemma41.n={n}"),
        format!("m1(A{n}) >= {p} * {q}"),
        ord != Ordering::Less,
    )
    .with("n", n)
    .with_factored("m1", &m1)
    .with("p", p)
    .with("q", q)
    .with("pq", p * q)
}
