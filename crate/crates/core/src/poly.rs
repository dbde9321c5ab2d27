//! Dense univariate polynomials over an exact scalar ring.

use std::fmt;

use crate::arith::binomial;
use crate::scalar::Scalar;

/// Coefficient `i` multiplies `x^i`. The highest stored coefficient is never
/// zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let mut c = self.coeff(i);
            c += &other.coeff(i);
            out.push(c);
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b.clone());
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::constant(T::one());
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_u64_exact(i as u64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |mut acc, c| {
            acc *= x;
            acc += c;
            acc
        })
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `sum_k C(n,k)^3 x^k`.
pub fn foata_lhs<T: Scalar>(n: u64) -> Poly<T> {
    Poly::new(
        (0..=n as i64)
            .map(|k| {
                let b = binomial::<T>(n, k);
                b.clone() * b.clone() * b
            })
            .collect(),
    )
}

/// `sum_{k <= n/2} C(n+k,3k) C(3k,2k) C(2k,k) x^k (1+x)^{n-2k}`.
pub fn foata_rhs<T: Scalar>(n: u64) -> Poly<T> {
    let one_plus_x = Poly::new(vec![T::one(), T::one()]);
    let mut acc = Poly::zero();
    for k in 0..=n / 2 {
        let c = macmahon_coeff::<T>(n, k);
        let term = Poly::monomial(c, k as usize).mul(&one_plus_x.pow(n - 2 * k));
        acc = acc.add(&term);
    }
    acc
}

/// `C(n+k,3k) C(3k,2k) C(2k,k)`.
pub(crate) fn macmahon_coeff<T: Scalar>(n: u64, k: u64) -> T {
    binomial::<T>(n + k, 3 * k as i64)
        * binomial::<T>(3 * k, 2 * k as i64)
        * binomial::<T>(2 * k, k as i64)
}
