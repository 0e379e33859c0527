//! r-Fishburn numbers: coefficients of `F((1-q)^r)` where
//! `F(q) = sum_n (q;q)_n`.
//!
//! [`xi_r`] is the workhorse: it sums Pochhammer products in the series
//! variable `x = (1-q)^r`. Since `1 - x^j` has q-order exactly one, the
//! n-th product has q-order at least n and summing `n <= N` is exact
//! through `q^N`. [`xi_via_t`] is an independent route through Glaisher
//! T-numbers and Stirling numbers, used as an oracle.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{
    factorial, int_to_rat, rat, rat_to_int, rational_binom, ExactInt, ExactPoly, ExactRat,
    TruncatedSeries,
};
use crate::special::{gen_stirling1, glaisher_t};
use crate::{Error, Result};

/// Default truncation for `r = +-1` verification runs.
pub const DEFAULT_N_UNIT: usize = 500;
/// Default truncation for other `r`.
pub const DEFAULT_N: usize = 200;
/// Default cap for the T-number route, which works over the rationals.
pub const XI_VIA_T_CAP: usize = 60;

/// `xi_r(0..=N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiSequence {
    pub r: i64,
    #[serde(serialize_with = "crate::arith::ser::ints")]
    pub values: Vec<ExactInt>,
}

impl XiSequence {
    /// Largest index held.
    pub fn truncation(&self) -> usize {
        self.values.len() - 1
    }

    /// `xi_r(idx)`, zero for negative indices and `None` past the
    /// truncation.
    pub fn get(&self, idx: i64) -> Option<ExactInt> {
        if idx < 0 {
            return Some(ExactInt::zero());
        }
        self.values.get(idx as usize).cloned()
    }

    /// Prefix through `xi_r(m)`.
    pub fn prefix(&self, m: usize) -> XiSequence {
        XiSequence {
            r: self.r,
            values: self.values[..=m.min(self.truncation())].to_vec(),
        }
    }
}

/// `xi_bar_p(0..=N)`: coefficients of `(1-q)^floor(p/24) F((1-q)^p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiBarSequence {
    pub p: u64,
    #[serde(serialize_with = "crate::arith::ser::ints")]
    pub values: Vec<ExactInt>,
}

/// The partial sum `F(q,N) = sum_{n=0}^{N} (q;q)_n` as an exact polynomial
/// of degree `N(N+1)/2`.
pub fn partial_sum_f_poly(n_terms: usize) -> ExactPoly<ExactInt> {
    let deg = n_terms * (n_terms + 1) / 2;
    let mut sum = vec![ExactInt::zero(); deg + 1];
    let mut poch = vec![ExactInt::zero(); deg + 1];
    poch[0] = ExactInt::one();
    let mut poch_deg = 0;
    for n in 0..=n_terms {
        for (s, c) in sum.iter_mut().zip(&poch[..=poch_deg]) {
            *s += c;
        }
        if n == n_terms {
            break;
        }
        // poch *= (1 - q^(n+1))
        let step = n + 1;
        poch_deg += step;
        for e in (step..=poch_deg).rev() {
            let lower = poch[e - step].clone();
            poch[e] -= &lower;
        }
    }
    ExactPoly::new(sum)
}

/// `F(q,N)` truncated through `q^order`.
pub fn partial_sum_f(n_terms: usize, order: usize) -> TruncatedSeries<ExactInt> {
    let mut sum = TruncatedSeries::zero(order);
    let mut poch = TruncatedSeries::one(order);
    for n in 0..=n_terms {
        sum = &sum + &poch;
        if n == n_terms {
            break;
        }
        let factor = &TruncatedSeries::one(order)
            - &TruncatedSeries::monomial(ExactInt::one(), n + 1, order);
        poch = poch.mul_series(&factor);
    }
    sum
}

/// `(1-q)^e` through `q^order` for any integer `e`.
fn one_minus_q_pow_signed(e: i64, order: usize) -> TruncatedSeries<ExactInt> {
    if e >= 0 {
        return TruncatedSeries::one_minus_q_pow(e as u64, order);
    }
    // (1-q)^(-a) = sum_k binom(a+k-1, k) q^k
    let a = e.unsigned_abs();
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = ExactInt::one();
    for k in 0..order as u64 {
        coeffs.push(c.clone());
        c = c * (a + k) / (k + 1);
    }
    coeffs.push(c);
    TruncatedSeries::new(coeffs, order)
}

/// `xi_r(0..=N)`: coefficients of `F((1-q)^r)`.
pub fn xi_r(r: i64, n_max: usize) -> Result<XiSequence> {
    if r == 0 {
        return Err(Error::ZeroR);
    }
    let order = n_max;
    let one = TruncatedSeries::<ExactInt>::one(order);
    let mut sum = TruncatedSeries::zero(order);
    let mut poch = one.clone();
    for n in 0..=n_max {
        sum = &sum + &poch;
        if n == n_max {
            break;
        }
        let x_pow = one_minus_q_pow_signed(r * (n as i64 + 1), order);
        poch = poch.mul_series(&(&one - &x_pow));
    }
    Ok(XiSequence {
        r,
        values: sum.into_coeffs(),
    })
}

/// Fishburn numbers `xi(0..=N)` from
/// `xi(n) = sum_{m<=n} sum_{k<=m} (-1)^{n-m} binom(-1/24, n-m)
///          s1(m,k) / (m! 24^k) T_k`.
///
/// The sign comes from substituting `t = log(1-q)` in
/// `e^{t/24} sum_n (1-e^t)...(1-e^{nt}) = sum_n T_n/n! (-t/24)^n`; a
/// `(-1)^{n+k}` sign there gives non-integral values from `n = 2` on.
pub fn xi_via_t(n_max: usize) -> Result<XiSequence> {
    let t: Vec<ExactRat> = (0..=n_max)
        .map(|k| glaisher_t(k).map(|v| int_to_rat(&v)))
        .collect::<Result<_>>()?;
    let z = rat(-1, 24);
    // (-1)^d binom(-1/24, d)
    let binoms: Vec<ExactRat> = (0..=n_max)
        .map(|d| {
            let b = rational_binom(&z, d);
            if d % 2 == 1 {
                -b
            } else {
                b
            }
        })
        .collect();

    // inner[m] = sum_k s1(m,k) T_k / (m! 24^k)
    let mut inner = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        let mut acc = ExactRat::zero();
        let mut pow24 = ExactInt::one();
        for (k, tk) in t.iter().enumerate().take(m + 1) {
            let s = gen_stirling1(m, k, 0);
            if !s.is_zero() {
                acc += int_to_rat(&s) * tk / int_to_rat(&pow24);
            }
            pow24 *= 24;
        }
        inner.push(acc / int_to_rat(&factorial(m as u64)));
    }

    let values = (0..=n_max)
        .map(|n| {
            let mut acc = ExactRat::zero();
            for m in 0..=n {
                acc += &binoms[n - m] * &inner[m];
            }
            rat_to_int(&acc)
        })
        .collect::<Result<_>>()?;
    Ok(XiSequence { r: 1, values })
}

/// `xi_bar_p(0..=N)`. For `5 <= p <= 23` this equals `xi_p`.
pub fn xi_bar_p(p: u64, n_max: usize) -> Result<XiBarSequence> {
    crate::check_prime_ge5(p)?;
    let xi = xi_r(p as i64, n_max)?;
    let xi_series = TruncatedSeries::new(xi.values, n_max);
    let factor = TruncatedSeries::one_minus_q_pow(p / 24, n_max);
    Ok(XiBarSequence {
        p,
        values: factor.mul_series(&xi_series).into_coeffs(),
    })
}
