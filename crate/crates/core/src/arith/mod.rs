//! Exact arithmetic substrate: big integers and rationals, truncated power
//! series and polynomials over either.
//!
//! Everything here is exact. Integer and rational coefficient domains share
//! one code path through [`Coeff`]; mixing the two promotes to rationals.

mod poly;
pub mod ser;
mod series;

pub use poly::ExactPoly;
pub use series::TruncatedSeries;

use std::fmt::Debug;
use std::ops::{AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// A coefficient ring usable by [`TruncatedSeries`] and [`ExactPoly`].
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_int(v: ExactInt) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_int(ExactInt::from(v))
    }
}

impl Coeff for ExactInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_int(v: ExactInt) -> Self {
        v
    }
}

impl Coeff for ExactRat {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(v: ExactInt) -> Self {
        ExactRat::from_integer(v)
    }
}

pub fn rat(n: i64, d: i64) -> ExactRat {
    ExactRat::new(ExactInt::from(n), ExactInt::from(d))
}

pub fn int_to_rat(v: &ExactInt) -> ExactRat {
    ExactRat::from_integer(v.clone())
}

/// Returns the integer value of `r`, or `NonIntegralResult`.
pub fn rat_to_int(r: &ExactRat) -> crate::Result<ExactInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(crate::Error::NonIntegralResult(r.to_string()))
    }
}

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for rational `a`.
pub fn rational_binom(a: &ExactRat, k: usize) -> ExactRat {
    let mut acc = ExactRat::one();
    let mut term = a.clone();
    for i in 1..=k {
        acc = acc * &term / ExactRat::from_integer(ExactInt::from(i));
        term -= ExactRat::one();
    }
    acc
}

/// Ordinary binomial coefficient; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, k| acc * k)
}

/// Least nonnegative residue of `v` modulo `p`.
pub fn mod_floor_big(v: &ExactInt, p: u64) -> u64 {
    let m = v.mod_floor(&ExactInt::from(p));
    // m is in [0, p) so it fits
    u64::try_from(m).expect("residue fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_binom_examples() {
        let a = rat(-1, 24);
        assert_eq!(rational_binom(&a, 0), ExactRat::one());
        assert_eq!(rational_binom(&a, 1), rat(-1, 24));
        // (-1/24)(-25/24)/2
        assert_eq!(rational_binom(&a, 2), rat(25, 1152));
    }

    #[test]
    fn rational_binom_matches_integer_binomial() {
        for n in 0..12i64 {
            for k in 0..14u64 {
                let got = rational_binom(&rat(n, 1), k as usize);
                assert_eq!(got, int_to_rat(&binomial(n as u64, k)), "C({n},{k})");
            }
        }
    }

    #[test]
    fn unit_inverses() {
        assert_eq!(ExactInt::from(-1).unit_inverse(), Some(ExactInt::from(-1)));
        assert_eq!(ExactInt::from(2).unit_inverse(), None);
        assert_eq!(rat(2, 3).unit_inverse(), Some(rat(3, 2)));
        assert_eq!(ExactRat::zero().unit_inverse(), None);
    }

    #[test]
    fn rat_to_int_rejects_fractions() {
        assert_eq!(rat_to_int(&rat(6, 3)).unwrap(), ExactInt::from(2));
        assert!(rat_to_int(&rat(1, 2)).is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(mod_floor_big(&ExactInt::from(-1), 5), 4);
        assert_eq!(mod_floor_big(&ExactInt::from(12), 5), 2);
    }
}
