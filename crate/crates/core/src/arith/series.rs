use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, ExactInt, ExactRat};
use crate::{Error, Result};

/// A power series known exactly through `q^order`.
///
/// `coeffs.len() == order + 1` always. Binary operations never claim more
/// terms than the shorter operand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
    order: usize,
}

impl<T: Coeff> TruncatedSeries<T> {
    /// Builds a series through `q^order`, padding with zeros or dropping
    /// coefficients past `order`.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![T::one()], order)
    }

    /// `c * q^k`, zero if `k > order`.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `(1 - q)^e` for `e >= 0` via the binomial theorem.
    pub fn one_minus_q_pow(e: u64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = ExactInt::from(1);
        for k in 0..=order as u64 {
            if k > e {
                break;
            }
            let v = if k % 2 == 0 { c.clone() } else { -c.clone() };
            coeffs.push(T::from_int(v));
            c = c * (e - k) / (k + 1);
        }
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Restricts to a lower order. Asking for more terms than are known is
    /// clamped to the current order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
            order,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
            order: self.order,
        }
    }

    /// Cauchy product truncated to the smaller of the two orders.
    pub fn mul_series(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = vec![T::zero(); order + 1];
        let rhs_nz: Vec<(usize, &T)> = rhs.coeffs[..=order]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs_nz {
                if i + j > order {
                    break;
                }
                out[i + j] += &a.mul_ref(b);
            }
        }
        Self { coeffs: out, order }
    }

    /// Formal reciprocal; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or(Error::NonUnitConstantTerm)?;
        let mut out: Vec<T> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for k in 1..=self.order {
            let mut acc = T::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j].mul_ref(&out[k - j]);
                }
            }
            out.push(-acc.mul_ref(&inv0));
        }
        Ok(Self {
            coeffs: out,
            order: self.order,
        })
    }

    /// `self^e`. Negative exponents take the reciprocal first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_series(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul_series(&sq);
            }
        }
        Ok(acc)
    }

    /// `self(inner(q))`, requiring `inner(0) = 0`. For a polynomial outer
    /// function use [`super::ExactPoly::compose_series`], which has no such
    /// restriction.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::IllFormedComposition);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul_series(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order,
        }
    }
}

impl TruncatedSeries<ExactInt> {
    pub fn to_rational(&self) -> TruncatedSeries<ExactRat> {
        self.map(|c| ExactRat::from_integer(c.clone()))
    }
}

impl<T: Coeff> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order.min(rhs.order);
        let mut coeffs = self.coeffs[..=order].to_vec();
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        TruncatedSeries { coeffs, order }
    }
}

impl<T: Coeff> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order.min(rhs.order);
        let mut coeffs = self.coeffs[..=order].to_vec();
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        TruncatedSeries { coeffs, order }
    }
}

impl<T: Coeff> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            order: self.order,
        }
    }
}

impl<T: Coeff> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.mul_series(rhs)
    }
}

// Mixed integer/rational arithmetic promotes to rational.
impl Mul<&TruncatedSeries<ExactRat>> for &TruncatedSeries<ExactInt> {
    type Output = TruncatedSeries<ExactRat>;

    fn mul(self, rhs: &TruncatedSeries<ExactRat>) -> TruncatedSeries<ExactRat> {
        self.to_rational().mul_series(rhs)
    }
}

impl Mul<&TruncatedSeries<ExactInt>> for &TruncatedSeries<ExactRat> {
    type Output = TruncatedSeries<ExactRat>;

    fn mul(self, rhs: &TruncatedSeries<ExactInt>) -> TruncatedSeries<ExactRat> {
        self.mul_series(&rhs.to_rational())
    }
}

impl Add<&TruncatedSeries<ExactRat>> for &TruncatedSeries<ExactInt> {
    type Output = TruncatedSeries<ExactRat>;

    fn add(self, rhs: &TruncatedSeries<ExactRat>) -> TruncatedSeries<ExactRat> {
        &self.to_rational() + rhs
    }
}
