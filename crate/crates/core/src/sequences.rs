//! Franel numbers, binomial power sums `f_n^(r)`, multinomial power sums
//! `M_{m,n}^(r)` and the `M_{3,n}^(2)` sequence (OEIS A002893).
//!
//! The free functions are generic over the scalar. [`SequenceStore`] is the
//! memoized, thread-shareable `BigInt` cache that the verifiers sweep.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::arith::{binomial, Modulus, Pascal};
use crate::error::{usage, Error, Result};
use crate::poly::macmahon_coeff;
use crate::scalar::{pow, Scalar};
use crate::Integer;

/// Largest number of compositions [`multi_power_sum_oracle`] will enumerate by default.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1_000_000;

/// Independent ways of computing a Franel number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FranelMethod {
    /// Sum of cubes of the binomial row.
    Direct,
    /// Three-term recurrence from `f_0 = 1`, `f_1 = 2`.
    Recurrence,
    /// MacMahon's single-sum form with powers of two.
    MacMahon,
}

impl FranelMethod {
    pub const ALL: [FranelMethod; 3] = [Self::Direct, Self::Recurrence, Self::MacMahon];
}

pub fn franel<T: Scalar>(n: u64, method: FranelMethod) -> T {
    match method {
        FranelMethod::Direct => power_sum(n, 3),
        FranelMethod::Recurrence => franel_recurrence::<T>(n as usize + 1)
            .pop()
            .expect("non-empty table"),
        FranelMethod::MacMahon => {
            let two = T::one() + T::one();
            (0..=n / 2).fold(T::zero(), |mut acc, k| {
                acc += &(macmahon_coeff::<T>(n, k) * pow(&two, n - 2 * k));
                acc
            })
        }
    }
}

/// `f_0, ..., f_{count-1}` via
/// `(n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}`.
///
/// Panics if a division by `(n+1)^2` is ever inexact.
pub fn franel_recurrence<T: Scalar>(count: usize) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(count);
    extend_franel(&mut out, count);
    out
}

fn extend_franel<T: Scalar>(out: &mut Vec<T>, count: usize) {
    while out.len() < count {
        let next = match out.len() {
            0 => T::one(),
            1 => T::one() + T::one(),
            len => {
                let n = (len - 1) as u64;
                let a = T::from_u64_exact(7 * n * n + 7 * n + 2) * out[len - 1].clone();
                let b = T::from_u64_exact(8 * n * n) * out[len - 2].clone();
                (a + b).exact_quotient(&T::from_u64_exact((n + 1) * (n + 1)))
            }
        };
        out.push(next);
    }
}

/// `f_n^(r) = sum_k C(n,k)^r`.
pub fn power_sum<T: Scalar>(n: u64, r: u64) -> T {
    (0..=n as i64).fold(T::zero(), |mut acc, k| {
        acc += &pow(&binomial::<T>(n, k), r);
        acc
    })
}

/// `M_{m,0..count}^(r)` by peeling off the first part:
/// `M_{m,n} = sum_j C(n,j)^r M_{m-1,n-j}`, with `M_{1,n} = 1`.
pub fn multi_power_sum_table<T: Scalar>(m: u64, r: u64, count: usize) -> Result<Vec<T>> {
    if m == 0 {
        return usage("multinomial power sums need m >= 1");
    }
    let powered: Vec<Vec<T>> = (0..count as u64)
        .map(|n| (0..=n as i64).map(|j| pow(&binomial::<T>(n, j), r)).collect())
        .collect();
    let mut level = vec![T::one(); count];
    for _ in 1..m {
        level = (0..count).map(|n| convolve_step(&powered[n], &level, n)).collect();
    }
    Ok(level)
}

// sum_j row[j] * prev[n - j]
fn convolve_step<T: Scalar>(row: &[T], prev: &[T], n: usize) -> T {
    let mut acc = T::zero();
    for (j, c) in row.iter().enumerate() {
        acc += &(c.clone() * prev[n - j].clone());
    }
    acc
}

/// `M_{m,n}^(r)`, the sum of `r`-th powers of multinomial coefficients over
/// all `m`-part compositions of `n`.
pub fn multi_power_sum<T: Scalar>(m: u64, n: u64, r: u64) -> Result<T> {
    let mut t = multi_power_sum_table::<T>(m, r, n as usize + 1)?;
    Ok(t.pop().expect("non-empty table"))
}

/// Brute-force `M_{m,n}^(r)`: walks every composition and evaluates each
/// multinomial as a factorial quotient. Refuses when the number of
/// compositions `C(n+m-1, m-1)` exceeds `budget`.
pub fn multi_power_sum_oracle<T: Scalar>(m: u64, n: u64, r: u64, budget: u64) -> Result<T> {
    if m == 0 {
        return usage("multinomial power sums need m >= 1");
    }
    let count = binomial::<Integer>(n + m - 1, m as i64 - 1);
    if count > Integer::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: count.to_string(),
            budget,
        });
    }
    let factorials: Vec<T> = (0..=n).scan(T::one(), |f, i| {
        if i > 0 {
            *f *= &T::from_u64_exact(i);
        }
        Some(f.clone())
    })
    .collect();
    let mut parts = vec![0u64; m as usize];
    let mut total = T::zero();
    enumerate(&mut parts, 0, n, &mut |parts: &[u64]| {
        let denom = parts.iter().fold(T::one(), |acc, &k| acc * factorials[k as usize].clone());
        let coeff = factorials[n as usize].exact_quotient(&denom);
        total += &pow(&coeff, r);
    });
    Ok(total)
}

fn enumerate(parts: &mut [u64], slot: usize, left: u64, visit: &mut dyn FnMut(&[u64])) {
    if slot + 1 == parts.len() {
        parts[slot] = left;
        visit(parts);
        return;
    }
    for k in 0..=left {
        parts[slot] = k;
        enumerate(parts, slot + 1, left - k, visit);
    }
}

/// `sum_k C(n,k)^2 C(2k,k)`.
pub fn a002893<T: Scalar>(n: u64) -> T {
    (0..=n as i64).fold(T::zero(), |mut acc, k| {
        let b = binomial::<T>(n, k);
        acc += &(b.clone() * b * binomial::<T>(2 * k as u64, k));
        acc
    })
}

/// A sequence family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Franel,
    PowerSum { r: u64 },
    Multinomial { m: u64, r: u64 },
    A002893,
}

impl Family {
    /// Builds a family from a name plus optional parameters, rejecting both
    /// missing and superfluous ones.
    pub fn from_parts(name: &str, m: Option<u64>, r: Option<u64>) -> Result<Self> {
        match (name, m, r) {
            ("franel", None, None) => Ok(Self::Franel),
            ("a002893", None, None) => Ok(Self::A002893),
            ("powersum", None, Some(r)) => Ok(Self::PowerSum { r }),
            ("multinomial", Some(0), Some(_)) => usage("multinomial family needs m >= 1"),
            ("multinomial", Some(m), Some(r)) => Ok(Self::Multinomial { m, r }),
            ("franel" | "a002893", _, _) => usage(format!("family {name} takes no m or r")),
            ("powersum", _, _) => usage("family powersum needs r and no m"),
            ("multinomial", _, _) => usage("family multinomial needs both m and r"),
            _ => usage(format!("unknown family {name:?}")),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Franel => "franel",
            Self::PowerSum { .. } => "powersum",
            Self::Multinomial { .. } => "multinomial",
            Self::A002893 => "a002893",
        }
    }

    pub fn m(&self) -> Option<u64> {
        match self {
            Self::Multinomial { m, .. } => Some(*m),
            _ => None,
        }
    }

    pub fn r(&self) -> Option<u64> {
        match self {
            Self::PowerSum { r } | Self::Multinomial { r, .. } => Some(*r),
            _ => None,
        }
    }

    /// The first `count` terms, computed from scratch.
    pub fn compute<T: Scalar>(&self, count: usize) -> Vec<T> {
        match *self {
            Self::Franel => franel_recurrence(count),
            Self::PowerSum { r } => (0..count as u64).map(|n| power_sum(n, r)).collect(),
            Self::Multinomial { m, r } => {
                multi_power_sum_table(m, r, count).expect("validated family parameters")
            }
            Self::A002893 => (0..count as u64).map(a002893).collect(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Franel | Self::A002893 => write!(f, "{}", self.name()),
            Self::PowerSum { r } => write!(f, "powersum(r={r})"),
            Self::Multinomial { m, r } => write!(f, "multinomial(m={m},r={r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRequest {
    pub family: Family,
    pub count: usize,
    /// Applied to the output only; tables are always exact.
    pub modulus: Option<Modulus<Integer>>,
}

impl SequenceRequest {
    pub fn new(family: Family, count: usize) -> Result<Self> {
        if count == 0 {
            return usage("count must be at least 1");
        }
        Ok(Self {
            family,
            count,
            modulus: None,
        })
    }

    pub fn with_modulus(mut self, modulus: Modulus<Integer>) -> Self {
        self.modulus = Some(modulus);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub request: SequenceRequest,
    pub values: Vec<Integer>,
}

/// Computes the requested table from scratch.
pub fn table(request: &SequenceRequest) -> SequenceTable {
    finish(request, &request.family.compute::<Integer>(request.count))
}

fn finish(request: &SequenceRequest, exact: &[Integer]) -> SequenceTable {
    let values = exact[..request.count]
        .iter()
        .map(|v| match &request.modulus {
            Some(m) => m.reduce(v),
            None => v.clone(),
        })
        .collect();
    SequenceTable {
        request: request.clone(),
        values,
    }
}

/// Number of leading entries re-derived before seeded values are accepted.
pub const SEED_CHECK_LEN: usize = 10;

/// Memoized exact sequence tables plus a shared Pascal triangle.
///
/// Tables are only extended. Two threads racing to extend the same table
/// compute identical prefixes, and the longer one wins.
#[derive(Debug, Default)]
pub struct SequenceStore {
    pascal: Pascal<Integer>,
    tables: Mutex<HashMap<Family, Arc<Vec<Integer>>>>,
}

impl SequenceStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pascal(&self) -> &Pascal<Integer> {
        &self.pascal
    }

    /// At least the first `count` exact terms of `family`.
    pub fn values(&self, family: Family, count: usize) -> Arc<Vec<Integer>> {
        let existing = self.lookup(family);
        if let Some(t) = &existing {
            if t.len() >= count {
                return Arc::clone(t);
            }
        }
        let mut values: Vec<Integer> = existing.map(|t| t.as_ref().clone()).unwrap_or_default();
        self.extend(family, &mut values, count);
        self.publish(family, values)
    }

    pub fn table(&self, request: &SequenceRequest) -> SequenceTable {
        finish(request, &self.values(request.family, request.count))
    }

    /// `C(n, k)`, zero outside the row.
    pub fn binomial(&self, n: u64, k: i64) -> Integer {
        self.pascal.get(n, k)
    }

    pub fn franel(&self, n: u64) -> Integer {
        self.values(Family::Franel, n as usize + 1)[n as usize].clone()
    }

    pub fn power_sum(&self, n: u64, r: u64) -> Integer {
        self.values(Family::PowerSum { r }, n as usize + 1)[n as usize].clone()
    }

    /// Accepts externally supplied terms (e.g. from a cache file) once the
    /// first [`SEED_CHECK_LEN`] agree with a fresh computation.
    pub fn seed(&self, family: Family, values: Vec<Integer>) -> Result<()> {
        let check = values.len().min(SEED_CHECK_LEN);
        let fresh: Vec<Integer> = family.compute(check);
        if let Some(i) = (0..check).find(|&i| values[i] != fresh[i]) {
            return Err(Error::Arithmetic(format!(
                "seeded {family} term {i} is {}, expected {}",
                values[i], fresh[i]
            )));
        }
        if !values.is_empty() {
            self.publish(family, values);
        }
        Ok(())
    }

    /// All tables currently held, ordered by family.
    pub fn snapshot(&self) -> Vec<(Family, Arc<Vec<Integer>>)> {
        let mut out: Vec<_> = self
            .tables
            .lock()
            .expect("store lock poisoned")
            .iter()
            .map(|(f, t)| (*f, Arc::clone(t)))
            .collect();
        out.sort_by_key(|(f, _)| *f);
        out
    }

    fn lookup(&self, family: Family) -> Option<Arc<Vec<Integer>>> {
        self.tables.lock().expect("store lock poisoned").get(&family).cloned()
    }

    fn publish(&self, family: Family, values: Vec<Integer>) -> Arc<Vec<Integer>> {
        let mut tables = self.tables.lock().expect("store lock poisoned");
        match tables.get(&family) {
            Some(t) if t.len() >= values.len() => Arc::clone(t),
            _ => {
                let t = Arc::new(values);
                tables.insert(family, Arc::clone(&t));
                t
            }
        }
    }

    fn extend(&self, family: Family, values: &mut Vec<Integer>, count: usize) {
        let start = values.len();
        match family {
            Family::Franel => extend_franel(values, count),
            Family::PowerSum { r } => {
                for n in start..count {
                    let row = self.pascal.row(n);
                    values.push(row.iter().map(|c| pow(c, r)).sum());
                }
            }
            Family::Multinomial { m: 0, .. } => unreachable!("m >= 1 enforced by Family::from_parts"),
            Family::Multinomial { m: 1, .. } => values.resize(count, Integer::from(1)),
            Family::Multinomial { m, r } => {
                let prev = self.values(Family::Multinomial { m: m - 1, r }, count);
                for n in start..count {
                    let row: Vec<Integer> = self.pascal.row(n).iter().map(|c| pow(c, r)).collect();
                    values.push(convolve_step(&row, &prev, n));
                }
            }
            Family::A002893 => {
                for n in start..count {
                    let row = self.pascal.row(n);
                    values.push(
                        row.iter()
                            .enumerate()
                            .map(|(k, c)| c * c * self.binomial(2 * k as u64, k as i64))
                            .sum(),
                    );
                }
            }
        }
    }
}
