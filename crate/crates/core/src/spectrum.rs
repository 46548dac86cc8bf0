//! Element-order spectra of `S_n` and `A_n`.
//!
//! A natural `m = p1^a1 * ... * ps^as` is the order of a permutation of `n`
//! points iff its cost `p1^a1 + ... + ps^as` is at most `n`. In `A_n` the
//! bound stays `n` for odd `m` and drops to `n - 2` for even `m`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{compare_factored, factor, sieve_primes, Factorization};
use crate::error::{Error, Result};

/// Default degree limit for full spectrum enumeration.
pub const DEFAULT_ENUMERATION_CAP: u32 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Symmetric,
    Alternating,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
        })
    }
}

/// `S_n` or `A_n` for a given degree `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFamilyPoint {
    pub family: Family,
    pub degree: u32,
}

impl GroupFamilyPoint {
    pub fn new(family: Family, degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        Ok(Self { family, degree })
    }

    pub fn symmetric(degree: u32) -> Self {
        Self { family: Family::Symmetric, degree: degree.max(1) }
    }

    pub fn alternating(degree: u32) -> Self {
        Self { family: Family::Alternating, degree: degree.max(1) }
    }

    /// Whether an element of order `m` exists in this group.
    pub fn has_order(&self, m: u64) -> bool {
        match self.family {
            Family::Symmetric => in_spectrum_sym(m, self.degree),
            Family::Alternating => in_spectrum_alt(m, self.degree),
        }
    }
}

impl fmt::Display for GroupFamilyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::Symmetric => 'S',
            Family::Alternating => 'A',
        };
        write!(f, "{letter}{}", self.degree)
    }
}

/// Sum of the prime-power components of `m`; `cost(1) = 0`.
pub fn cost(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("cost of 0 is undefined".into()));
    }
    Ok(cost_of(&factor(m)?))
}

/// Cost of an already factored natural. Saturates instead of overflowing.
pub fn cost_of(f: &Factorization) -> u64 {
    f.factors().iter().fold(0u64, |acc, &(p, e)| {
        acc.saturating_add(p.checked_pow(e).unwrap_or(u64::MAX))
    })
}

pub fn in_spectrum_sym(m: u64, n: u32) -> bool {
    m >= 1 && cost(m).is_ok_and(|c| c <= u64::from(n))
}

pub fn in_spectrum_alt(m: u64, n: u32) -> bool {
    if m == 0 {
        return false;
    }
    let c = cost(m).expect("m >= 1");
    alt_budget_ok(m % 2 == 1, c, n)
}

/// Membership test for a factored order, so huge orders need no expansion.
pub fn in_spectrum_factored(order: &Factorization, point: GroupFamilyPoint) -> bool {
    let c = cost_of(order);
    match point.family {
        Family::Symmetric => c <= u64::from(point.degree),
        Family::Alternating => alt_budget_ok(order.exponent(2) == 0, c, point.degree),
    }
}

fn alt_budget_ok(odd: bool, cost: u64, n: u32) -> bool {
    let n = u64::from(n);
    if odd {
        cost <= n
    } else {
        cost + 2 <= n
    }
}

/// A finite set of element orders.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderSet {
    orders: BTreeSet<u64>,
}

impl OrderSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, m: u64) -> bool {
        self.orders.contains(&m)
    }

    pub fn insert(&mut self, m: u64) -> bool {
        self.orders.insert(m)
    }

    pub fn remove(&mut self, m: u64) -> bool {
        self.orders.remove(&m)
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Ascending.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.orders.iter().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.orders.last().copied()
    }

    /// The `i`-th largest member, 1-based.
    pub fn nth_largest(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|k| self.orders.iter().rev().nth(k).copied())
    }

    pub fn factorization(&self, m: u64) -> Option<Factorization> {
        self.contains(m).then(|| factor(m).expect("members are >= 1"))
    }

    /// Every divisor of every member is itself a member. Checking `m / p`
    /// for each prime `p | m` suffices.
    pub fn is_divisor_closed(&self) -> bool {
        self.orders.iter().all(|&m| {
            m != 0
                && factor(m)
                    .expect("m >= 1")
                    .primes()
                    .all(|p| self.orders.contains(&(m / p)))
        })
    }

    /// Members that divide no other member.
    pub fn maximal_elements(&self) -> Vec<u64> {
        self.orders
            .iter()
            .copied()
            .filter(|&m| !self.orders.iter().any(|&k| k != m && k % m == 0))
            .collect()
    }
}

impl FromIterator<u64> for OrderSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Self { orders: iter.into_iter().collect() }
    }
}

/// Spectrum with the default enumeration cap.
pub fn spectrum(point: GroupFamilyPoint) -> Result<OrderSet> {
    spectrum_with_cap(point, DEFAULT_ENUMERATION_CAP)
}

/// All element orders of the group, by choosing at most one prime power per
/// prime within the cost budget.
pub fn spectrum_with_cap(point: GroupFamilyPoint, cap: u32) -> Result<OrderSet> {
    if point.degree > cap {
        return Err(Error::ResourceLimit(format!(
            "spectrum of {point} exceeds the enumeration cap {cap}"
        )));
    }
    let n = u64::from(point.degree);
    let primes = sieve_primes(n);
    let mut out = OrderSet::new();
    let mut stack = vec![(0usize, 1u64, 0u64)];
    while let Some((idx, value, spent)) = stack.pop() {
        let keep = match point.family {
            Family::Symmetric => true,
            Family::Alternating => alt_budget_ok(value % 2 == 1, spent, point.degree),
        };
        if keep {
            out.insert(value);
        }
        for (j, &p) in primes.iter().enumerate().skip(idx) {
            if spent + p > n {
                break;
            }
            let mut pk = p;
            while spent + pk <= n {
                let next = value.checked_mul(pk).ok_or_else(|| {
                    Error::ResourceLimit(format!("element order in {point} overflows u64"))
                })?;
                stack.push((j + 1, next, spent + pk));
                pk *= p;
            }
        }
    }
    Ok(out)
}

/// Best products of prime powers under every cost budget up to a limit.
///
/// `best[c]` is the largest natural of cost `<= c`, i.e. `Landau(c)`;
/// `best_odd[c]` is the same maximum over odd naturals. Both come from one
/// 0/1 knapsack over primes in descending order, with the odd table captured
/// just before the prime 2 is admitted.
#[derive(Clone, Debug)]
pub struct MaxOrderTable {
    best: Vec<Factorization>,
    best_odd: Vec<Factorization>,
}

impl MaxOrderTable {
    pub fn new(limit: u32) -> Self {
        let size = limit as usize + 1;
        let mut best = vec![Factorization::one(); size];
        let mut best_odd = best.clone();
        let primes = sieve_primes(u64::from(limit));
        for &p in primes.iter().rev() {
            if p == 2 {
                best_odd = best.clone();
            }
            // descending budget keeps each prime used at most once
            for budget in (p as usize..size).rev() {
                let mut pk = p as usize;
                let mut e = 1;
                while pk <= budget {
                    let candidate = best[budget - pk]
                        .mul(&Factorization::prime_power(p, e).expect("sieved prime"));
                    if compare_factored(&candidate, &best[budget]) == Ordering::Greater {
                        best[budget] = candidate;
                    }
                    pk *= p as usize;
                    e += 1;
                }
            }
        }
        if primes.first() != Some(&2) {
            best_odd = best.clone();
        }
        Self { best, best_odd }
    }

    pub fn limit(&self) -> u32 {
        (self.best.len() - 1) as u32
    }

    pub fn landau(&self, n: u32) -> &Factorization {
        &self.best[n as usize]
    }

    pub fn best_odd(&self, n: u32) -> &Factorization {
        &self.best_odd[n as usize]
    }

    /// Largest element order of `A_n`: the better of the best odd product
    /// within `n` and the best product of any parity within `n - 2`.
    pub fn max_alternating(&self, n: u32) -> Factorization {
        let odd = self.best_odd(n);
        if n < 2 {
            return odd.clone();
        }
        let any = self.landau(n - 2);
        match compare_factored(odd, any) {
            Ordering::Less => any.clone(),
            _ => odd.clone(),
        }
    }

    pub fn max_order(&self, point: GroupFamilyPoint) -> Factorization {
        assert!(point.degree <= self.limit(), "degree beyond table limit");
        match point.family {
            Family::Symmetric => self.landau(point.degree).clone(),
            Family::Alternating => self.max_alternating(point.degree),
        }
    }
}

/// `m_1` of the group, by exact dynamic programming.
pub fn max_order(point: GroupFamilyPoint) -> Factorization {
    MaxOrderTable::new(point.degree).max_order(point)
}

/// Landau's function: the maximal order of a permutation of `n` points.
pub fn landau(n: u32) -> Factorization {
    MaxOrderTable::new(n).landau(n).clone()
}

/// The `i`-th largest element order (1-based), from the enumerated spectrum.
pub fn m_i(point: GroupFamilyPoint, i: usize) -> Result<u64> {
    m_i_with_cap(point, i, DEFAULT_ENUMERATION_CAP)
}

pub fn m_i_with_cap(point: GroupFamilyPoint, i: usize, cap: u32) -> Result<u64> {
    let spec = spectrum_with_cap(point, cap)?;
    spec.nth_largest(i).ok_or_else(|| {
        Error::OutOfRange(format!(
            "index {i} out of range: {point} has {} element orders",
            spec.len()
        ))
    })
}
