//! Exact arithmetic on naturals kept in factored form.
//!
//! Element orders of interest here (Landau values near degree 900 are around
//! 10^34) do not fit machine words, so [`Factorization`] is the canonical
//! representation and every comparison is exact.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// All primes `<= limit`, ascending (sieve of Eratosthenes).
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = usize::try_from(limit).expect("sieve limit exceeds address space");
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

const SMALL_PRIME_LIMIT: u64 = 1 << 16;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_primes(SMALL_PRIME_LIMIT))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in small_primes() {
        if p * p > n {
            return true;
        }
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // beyond 2^32: keep dividing by odd numbers
    let mut d = SMALL_PRIME_LIMIT + 1;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A natural number as an ascending list of `(prime, exponent)` pairs.
///
/// The empty list is 1. Construction through [`Factorization::from_pairs`]
/// checks primality, ordering and exponents, so two equal numbers always have
/// structurally equal factorizations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u32)>,
    {
        let factors: Vec<(u64, u32)> = pairs.into_iter().collect();
        for (i, &(p, e)) in factors.iter().enumerate() {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if e == 0 {
                return Err(Error::MalformedFactorization(format!("zero exponent on {p}")));
            }
            if i > 0 && factors[i - 1].0 >= p {
                return Err(Error::MalformedFactorization(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self { factors })
    }

    pub fn prime_power(p: u64, e: u32) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one());
        }
        Self::from_pairs([(p, e)])
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        match self.factors.binary_search_by_key(&p, |&(q, _)| q) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    /// The `p`-part `p^e` of this number.
    pub fn p_part(&self, p: u64) -> Factorization {
        match self.exponent(p) {
            0 => Self::one(),
            e => Self { factors: vec![(p, e)] },
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for &(p, e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| {
            acc.checked_mul(p.checked_pow(e)?)
        })
    }

    /// Decimal expansion of the represented number.
    pub fn value_string(&self) -> String {
        self.to_biguint().to_string()
    }

    pub fn mul(&self, other: &Factorization) -> Factorization {
        self.merge(other, |a, b| a + b)
    }

    pub fn gcd(&self, other: &Factorization) -> Factorization {
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let m = e.min(other.exponent(p));
                (m > 0).then_some((p, m))
            })
            .collect();
        Self { factors }
    }

    pub fn divides(&self, other: &Factorization) -> bool {
        self.factors.iter().all(|&(p, e)| e <= other.exponent(p))
    }

    /// `self / divisor` when the division is exact.
    pub fn checked_div(&self, divisor: &Factorization) -> Option<Factorization> {
        if !divisor.divides(self) {
            return None;
        }
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let r = e - divisor.exponent(p);
                (r > 0).then_some((p, r))
            })
            .collect();
        Some(Self { factors })
    }

    fn merge(&self, other: &Factorization, op: impl Fn(u32, u32) -> u32) -> Factorization {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&(p, e)), Some(&(q, f))) => match p.cmp(&q) {
                    Ordering::Less => {
                        i += 1;
                        (p, op(e, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (q, op(0, f))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (p, op(e, f))
                    }
                },
                (Some(&(p, e)), None) => {
                    i += 1;
                    (p, op(e, 0))
                }
                (None, Some(&(q, f))) => {
                    j += 1;
                    (q, op(0, f))
                }
                (None, None) => unreachable!(),
            };
            if next.1 > 0 {
                out.push(next);
            }
        }
        Factorization { factors: out }
    }
}

impl fmt::Display for Factorization {
    /// `2^6 * 3^2 * 5 * 7`; the number one renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = Error;

    /// Accepts `p^e` terms separated by `*`, `·` or whitespace, in any order;
    /// repeated primes are multiplied together. `"1"` is the empty product.
    fn from_str(s: &str) -> Result<Self> {
        let mut acc = Factorization::one();
        let terms = s
            .split(|c: char| c == '*' || c == '·' || c.is_whitespace())
            .filter(|t| !t.is_empty());
        for term in terms {
            let bad = || Error::MalformedFactorization(format!("bad term {term:?} in {s:?}"));
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
                None => (term, 1),
            };
            let base: u64 = base.parse().map_err(|_| bad())?;
            if base == 1 {
                continue;
            }
            acc = acc.mul(&Factorization::prime_power(base, exp)?);
        }
        Ok(acc)
    }
}

impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Trial division by sieved primes. Rejects 0.
pub fn factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut take = |d: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(d) {
            *rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
    };
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        take(p, &mut rest);
    }
    let mut d = SMALL_PRIME_LIMIT + 1;
    while d.saturating_mul(d) <= rest {
        take(d, &mut rest);
        d += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Exponent of the prime `p` in `n!` (Legendre's formula).
pub fn factorial_valuation(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    Ok(total)
}

/// `n! / 2`, the order of the alternating group of degree `n >= 3`.
pub fn alt_order(n: u32) -> Result<Factorization> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "alternating group order needs degree >= 3, got {n}"
        )));
    }
    let factors = sieve_primes(u64::from(n))
        .into_iter()
        .filter_map(|p| {
            let mut e = factorial_valuation(u64::from(n), p).expect("sieved prime");
            if p == 2 {
                e -= 1;
            }
            (e > 0).then(|| (p, u32::try_from(e).expect("valuation fits in u32")))
        })
        .collect();
    Ok(Factorization { factors })
}

/// Exact comparison of two factored naturals.
///
/// Common prime powers are cancelled first; the cofactors are then expanded
/// with arbitrary precision.
pub fn compare_factored(a: &Factorization, b: &Factorization) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let common = a.gcd(b);
    let ra = a.checked_div(&common).expect("gcd divides");
    let rb = b.checked_div(&common).expect("gcd divides");
    ra.to_biguint().cmp(&rb.to_biguint())
}

pub fn lcm_factored(a: &Factorization, b: &Factorization) -> Factorization {
    a.merge(b, u32::max)
}

/// Order of `GL(k, p)`: `p^(k(k-1)/2) * prod_{i=1..k} (p^i - 1)`, factored.
///
/// Bounds `|Aut(R)|` for any group `R` of order `p^k`.
pub fn gl_order(k: u32, p: u64) -> Result<Factorization> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut acc = Factorization::prime_power(p, k * k.saturating_sub(1) / 2)?;
    for i in 1..=k {
        let term = p
            .checked_pow(i)
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{i} overflows")))?
            - 1;
        acc = acc.mul(&factor(term)?);
    }
    Ok(acc)
}
