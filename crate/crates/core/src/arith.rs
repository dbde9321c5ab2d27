//! Combinatorial and modular primitives.
//!
//! Binomials use the convention `C(n, k) = 0` for `k < 0` or `k > n`, which
//! lets every finite sum run over a plain index range without boundary cases.

use std::sync::{Arc, RwLock};

use crate::error::{usage, Error, Result};
use crate::scalar::Scalar;

/// A strictly positive modulus.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus<T>(T);

impl<T: Scalar> Modulus<T> {
    pub fn new(value: T) -> Result<Self> {
        if value < T::one() {
            return usage(format!("modulus must be positive, got {value}"));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    /// Canonical representative in `[0, M)`.
    pub fn reduce(&self, x: &T) -> T {
        x.mod_floor(&self.0)
    }

    /// Balanced representative in `(-M/2, M/2]`.
    pub fn balanced(&self, x: &T) -> T {
        let r = self.reduce(x);
        let two = T::one() + T::one();
        if r.clone() * two > self.0 {
            r - self.0.clone()
        } else {
            r
        }
    }

    pub fn congruent(&self, a: &T, b: &T) -> bool {
        self.reduce(a) == self.reduce(b)
    }

    pub fn into_inner(self) -> T {
        self.0
    }
}

/// `C(n, k)` by the multiplicative formula with exact division; zero outside `0 <= k <= n`.
pub fn binomial<T: Scalar>(n: u64, k: i64) -> T {
    if k < 0 || k as u64 > n {
        return T::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = T::one();
    for i in 1..=k {
        // acc = C(n - k + i - 1, i - 1) here, so the product is divisible by i
        acc *= &T::from_u64_exact(n - k + i);
        acc = acc.exact_quotient(&T::from_u64_exact(i));
    }
    acc
}

/// `n! / (k_1! ... k_m!)`, built as a product of binomials over the parts.
pub fn multinomial<T: Scalar>(n: u64, parts: &[u64]) -> Result<T> {
    let total: u64 = parts.iter().sum();
    if total != n {
        return usage(format!("parts {parts:?} sum to {total}, expected {n}"));
    }
    let mut remaining = n;
    let mut acc = T::one();
    for &k in parts {
        acc *= &binomial::<T>(remaining, k as i64);
        remaining -= k;
    }
    Ok(acc)
}

/// The inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inverse<T: Scalar>(a: &T, m: &Modulus<T>) -> Result<T> {
    let a = m.reduce(a);
    let eg = a.extended_gcd(m.value());
    if !eg.gcd.is_one() {
        return Err(Error::Arithmetic(format!(
            "{a} is not invertible modulo {} (gcd {})",
            m.value(),
            eg.gcd
        )));
    }
    Ok(m.reduce(&eg.x))
}

/// `a^e mod m`, in `[0, m)`.
pub fn mod_pow<T: Scalar>(a: &T, mut e: u64, m: &Modulus<T>) -> T {
    let mut acc = m.reduce(&T::one());
    let mut base = m.reduce(a);
    while e > 0 {
        if e & 1 == 1 {
            acc = m.reduce(&(acc * base.clone()));
        }
        e >>= 1;
        if e > 0 {
            base = m.reduce(&(base.clone() * base));
        }
    }
    acc
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `<= limit`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Legendre symbol `(p/3)` for a prime `p > 3`.
pub fn legendre3(p: u64) -> Result<i8> {
    require_prime_above_3(p)?;
    Ok(if p % 3 == 1 { 1 } else { -1 })
}

/// `n = 2^a` for some `a >= 0`; `1` counts.
pub fn is_power_of_two(n: u64) -> bool {
    n.is_power_of_two()
}

pub(crate) fn require_prime_above_3(p: u64) -> Result<()> {
    if p <= 3 || !is_prime(p) {
        return usage(format!("expected a prime p > 3, got {p}"));
    }
    Ok(())
}

/// Pascal's triangle, grown row by row on demand and shareable across threads.
///
/// Rows are only ever appended, and a row is computed under the write lock
/// after re-checking the length, so each entry is filled exactly once.
#[derive(Debug)]
pub struct Pascal<T> {
    rows: RwLock<Vec<Arc<[T]>>>,
}

impl<T: Scalar> Default for Pascal<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> Pascal<T> {
    pub fn new() -> Self {
        Self {
            rows: RwLock::new(vec![Arc::from(vec![T::one()])]),
        }
    }

    /// Row `n`: `C(n, 0), ..., C(n, n)`.
    pub fn row(&self, n: usize) -> Arc<[T]> {
        if let Some(r) = self.rows.read().expect("pascal lock poisoned").get(n) {
            return Arc::clone(r);
        }
        let mut rows = self.rows.write().expect("pascal lock poisoned");
        while rows.len() <= n {
            let prev = rows.last().expect("row 0 always present");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(T::one());
            for w in prev.windows(2) {
                let mut s = w[0].clone();
                s += &w[1];
                next.push(s);
            }
            next.push(T::one());
            rows.push(Arc::from(next));
        }
        Arc::clone(&rows[n])
    }

    /// `C(n, k)` with the zero convention for out-of-range `k`.
    pub fn get(&self, n: u64, k: i64) -> T {
        if k < 0 || k as u64 > n {
            return T::zero();
        }
        self.row(n as usize)[k as usize].clone()
    }

    pub fn rows_built(&self) -> usize {
        self.rows.read().expect("pascal lock poisoned").len()
    }
}
