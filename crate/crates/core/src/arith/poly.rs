use std::ops::{Add, Mul, Sub};

use super::{Coeff, ExactInt, ExactRat, TruncatedSeries};

/// Dense polynomial with exact coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> ExactPoly<T> {
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

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&T::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc = &acc + &Self::constant(c.clone());
        }
        acc
    }

    /// Substitutes a truncated series into this polynomial. Always exact to
    /// the order of `inner`, whatever its constant term.
    pub fn compose_series(&self, inner: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        let order = inner.order();
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_series(inner);
            acc = &acc + &TruncatedSeries::new(vec![c.clone()], order);
        }
        acc
    }

    /// `self(1 - x)`, computed as a Taylor shift by one followed by
    /// `x -> -x`. Uses additions only, so integer inputs stay integral.
    pub fn substitute_one_minus(&self) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        // a(1 + y): repeated synthetic division by (y - 1)
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = a[j + 1].clone();
                a[j] += &next;
            }
        }
        for (k, c) in a.iter_mut().enumerate() {
            if k % 2 == 1 {
                *c = -c.clone();
            }
        }
        Self::new(a)
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        TruncatedSeries::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }
}

impl ExactPoly<ExactInt> {
    pub fn to_rational(&self) -> ExactPoly<ExactRat> {
        ExactPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| ExactRat::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl<T: Coeff> Add for &ExactPoly<T> {
    type Output = ExactPoly<T>;

    fn add(self, rhs: Self) -> ExactPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = self.coeffs.clone();
        v.resize(n, T::zero());
        for (a, b) in v.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        ExactPoly::new(v)
    }
}

impl<T: Coeff> Sub for &ExactPoly<T> {
    type Output = ExactPoly<T>;

    fn sub(self, rhs: Self) -> ExactPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = self.coeffs.clone();
        v.resize(n, T::zero());
        for (a, b) in v.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        ExactPoly::new(v)
    }
}

impl<T: Coeff> Mul for &ExactPoly<T> {
    type Output = ExactPoly<T>;

    fn mul(self, rhs: Self) -> ExactPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += &a.mul_ref(b);
            }
        }
        ExactPoly::new(v)
    }
}
