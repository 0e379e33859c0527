//! p-dissections of the partial sums `F(q,N)`.
//!
//! `F(q,N) = sum_{i<p} q^i A_p(N,i,q^p)`, and
//! `A_p(pn-1,i,1-q) = sum_k alpha(p,n,i,k) q^k`. This module builds the
//! components, extracts the alpha coefficients, evaluates the Bernoulli sums
//! `gamma(j,i)` and checks the identities tying them together on concrete
//! instances.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binomial, int_to_rat, ExactInt, ExactPoly, ExactRat};
use crate::congruence::s_set;
use crate::series::{partial_sum_f_poly, xi_bar_p};
use crate::special::{bernoulli_poly, c_array, chi12, gen_stirling1, CArray};
use crate::{check_prime_ge5, Error, Result, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dissection {
    pub p: u64,
    pub n_terms: usize,
    /// `components[i] = A_p(N, i, q)`.
    pub components: Vec<ExactPoly<ExactInt>>,
}

impl Dissection {
    /// `sum_i q^i A_p(N,i,q^p)`.
    pub fn reconstruct(&self) -> ExactPoly<ExactInt> {
        let p = self.p as usize;
        let len = self
            .components
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.degree().map(|d| i + p * d + 1))
            .max()
            .unwrap_or(0);
        let mut out = vec![ExactInt::zero(); len];
        for (i, a) in self.components.iter().enumerate() {
            for (k, c) in a.coeffs().iter().enumerate() {
                out[i + p * k] = c.clone();
            }
        }
        ExactPoly::new(out)
    }
}

/// Splits `F(q,N)` by exponent class mod `p`. With `degree_cap`, each
/// component keeps only its coefficients through that degree (the
/// reconstruction identity then holds only up to `q^(p*cap + p - 1)`).
pub fn dissect(p: u64, n_terms: usize, degree_cap: Option<usize>) -> Result<Dissection> {
    check_prime_ge5(p)?;
    Ok(dissect_poly(
        p,
        n_terms,
        &partial_sum_f_poly(n_terms),
        degree_cap,
    ))
}

fn dissect_poly(
    p: u64,
    n_terms: usize,
    f: &ExactPoly<ExactInt>,
    degree_cap: Option<usize>,
) -> Dissection {
    let p_us = p as usize;
    let components = (0..p_us)
        .map(|i| {
            let coeffs: Vec<ExactInt> = f
                .coeffs()
                .iter()
                .skip(i)
                .step_by(p_us)
                .take(degree_cap.map_or(usize::MAX, |c| c + 1))
                .cloned()
                .collect();
            ExactPoly::new(coeffs)
        })
        .collect();
    Dissection {
        p,
        n_terms,
        components,
    }
}

/// `alpha(p,n,i,k)` for `k <= kmax`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaTable {
    pub p: u64,
    pub n: usize,
    pub i: u64,
    #[serde(serialize_with = "crate::arith::ser::ints")]
    pub coeffs: Vec<ExactInt>,
}

fn alpha_from_component(a: &ExactPoly<ExactInt>, kmax: usize) -> Vec<ExactInt> {
    let shifted = a.substitute_one_minus();
    (0..=kmax).map(|k| shifted.coeff(k)).collect()
}

/// Coefficients of `A_p(pn-1, i, 1-q)` through `q^kmax`.
pub fn alpha(p: u64, n: usize, i: u64, kmax: usize) -> Result<AlphaTable> {
    check_prime_ge5(p)?;
    if n == 0 {
        return Err(Error::BadParams("alpha needs n >= 1 (pn - 1 >= 0)".into()));
    }
    if i >= p {
        return Err(Error::BadParams(format!("residue {i} outside [0, {p})")));
    }
    let d = dissect(p, p as usize * n - 1, None)?;
    Ok(AlphaTable {
        p,
        n,
        i,
        coeffs: alpha_from_component(&d.components[i as usize], kmax),
    })
}

/// `alpha(p,n,i,k)` for every residue `i`, sharing one dissection.
pub fn alpha_all(p: u64, n: usize, kmax: usize) -> Result<Vec<AlphaTable>> {
    check_prime_ge5(p)?;
    if n == 0 {
        return Err(Error::BadParams("alpha needs n >= 1 (pn - 1 >= 0)".into()));
    }
    let d = dissect(p, p as usize * n - 1, None)?;
    Ok(d.components
        .iter()
        .enumerate()
        .map(|(i, a)| AlphaTable {
            p,
            n,
            i: i as u64,
            coeffs: alpha_from_component(a, kmax),
        })
        .collect())
}

/// The residue `i0` in `[1, p-1]` with `24 i0 = -1 (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct I0Residue {
    pub p: u64,
    pub i0: u64,
}

/// `i0 = (p^2 - 1)/24 - floor(p/24) p`, cross-checked against the
/// congruence.
pub fn i0_of(p: u64) -> Result<I0Residue> {
    check_prime_ge5(p)?;
    let i0 = (p * p - 1) / 24 - (p / 24) * p;
    if !(1..p).contains(&i0) || !(24 * i0 + 1).is_multiple_of(p) {
        return Err(Error::InconsistentI0(p));
    }
    Ok(I0Residue { p, i0 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaValue {
    pub j: usize,
    pub i: u64,
    pub p: u64,
    #[serde(serialize_with = "crate::arith::ser::rat")]
    pub value: ExactRat,
    /// Number of `m` contributing to the sum.
    pub terms: usize,
}

/// Indices `1 <= m <= 6p` with `chi(m) != 0` and `(m^2-1)/24 = i (mod p)`.
pub fn gamma_indices(i: u64, p: u64) -> Vec<u64> {
    (1..=6 * p)
        .filter(|&m| chi12(m as i64) != 0 && ((m * m - 1) / 24) % p == i)
        .collect()
}

/// `gamma(j,i) = (-1)^j N^{2j+1}/(2j+2) sum_m chi(m) B_{2j+2}(m/N)` with
/// `N = 12p`.
pub fn gamma(j: usize, i: u64, p: u64) -> Result<GammaValue> {
    check_prime_ge5(p)?;
    if i >= p {
        return Err(Error::BadParams(format!("residue {i} outside [0, {p})")));
    }
    let big_n = 12 * p;
    let b = bernoulli_poly(2 * j + 2);
    let ms = gamma_indices(i, p);
    let mut sum = ExactRat::zero();
    for &m in &ms {
        let v = b.eval(&crate::arith::rat(m as i64, big_n as i64));
        if chi12(m as i64) > 0 {
            sum += v;
        } else {
            sum -= v;
        }
    }
    let mut scale = ExactRat::new(
        num_traits::pow(ExactInt::from(big_n), 2 * j + 1),
        ExactInt::from(2 * j + 2),
    );
    if j % 2 == 1 {
        scale = -scale;
    }
    Ok(GammaValue {
        j,
        i,
        p,
        value: scale * sum,
        terms: ms.len(),
    })
}

/// Closed form of `gamma(j, i0)`:
/// `chi(p) (-1)^j 12^{2j+1} p^{2j+1}/(2j+2) (B_{2j+2}(1/12) - B_{2j+2}(5/12))`.
pub fn gamma_i0_closed(j: usize, p: u64) -> ExactRat {
    let b = bernoulli_poly(2 * j + 2);
    let diff = b.eval(&crate::arith::rat(1, 12)) - b.eval(&crate::arith::rat(5, 12));
    let mut v = ExactRat::new(
        num_traits::pow(ExactInt::from(12 * p), 2 * j + 1),
        ExactInt::from(2 * j + 2),
    ) * diff;
    if j % 2 == 1 {
        v = -v;
    }
    if chi12(p as i64) < 0 {
        v = -v;
    }
    v
}

/// Checks, for each `n <= nmax`,
/// `sum_j C(n,i,j,p) A_p^{(j)}(p(j+1)-1, i, 1) = (-1)^n/24^n sum_j binom(n,j) gamma(j,i)`,
/// where `A^{(j)}` is the j-th derivative in the polynomial's own variable.
pub fn verify_derivative_identity(p: u64, i: u64, nmax: usize) -> Result<VerificationReport> {
    check_prime_ge5(p)?;
    if i >= p {
        return Err(Error::BadParams(format!("residue {i} outside [0, {p})")));
    }
    let derivs: Vec<ExactInt> = (0..=nmax)
        .map(|j| {
            let d = dissect(p, p as usize * (j + 1) - 1, None)?;
            Ok(d.components[i as usize]
                .nth_derivative(j)
                .eval(&ExactInt::one()))
        })
        .collect::<Result<_>>()?;
    let gammas: Vec<ExactRat> = (0..=nmax)
        .map(|j| gamma(j, i, p).map(|g| g.value))
        .collect::<Result<_>>()?;
    let c = c_array(nmax, i, p);

    let mut report = VerificationReport::new(
        format!("A_p derivative identity vs gamma(j,i), p={p} i={i}"),
        format!("0 <= n <= {nmax}"),
    );
    for n in 0..=nmax {
        let lhs: ExactInt = (0..=n).map(|j| c.get(n, j) * &derivs[j]).sum();
        let mut rhs = ExactRat::zero();
        for (j, g) in gammas.iter().enumerate().take(n + 1) {
            rhs += int_to_rat(&binomial(n as u64, j as u64)) * g;
        }
        rhs /= int_to_rat(&num_traits::pow(ExactInt::from(24), n));
        if n % 2 == 1 {
            rhs = -rhs;
        }
        let lhs = int_to_rat(&lhs);
        report.record(lhs == rhs, || format!("n={n} i={i}: lhs={lhs} rhs={rhs}"));
    }
    Ok(report)
}

/// Checks `alpha(p,n,i0,k) = p chi(p) xi_bar_p(k)` for `0 <= k < n <= nmax`.
pub fn verify_alpha_at_i0(p: u64, nmax: usize) -> Result<VerificationReport> {
    let I0Residue { i0, .. } = i0_of(p)?;
    let bar = xi_bar_p(p, nmax.max(1))?;
    let factor = ExactInt::from(p as i64 * chi12(p as i64) as i64);
    let mut report = VerificationReport::new(
        format!("alpha(p,n,i0,k) = p*chi(p)*xibar_p(k), p={p} i0={i0}"),
        format!("1 <= n <= {nmax}, 0 <= k <= n-1"),
    );
    for n in 1..=nmax {
        let a = alpha(p, n, i0, n - 1)?;
        for k in 0..n {
            let expect = &factor * &bar.values[k];
            let got = &a.coeffs[k];
            report.record(got == &expect, || {
                format!("n={n} k={k}: alpha={got} expected={expect}")
            });
        }
    }
    Ok(report)
}

/// Checks `alpha(p,n,i,k) = 0` for every `i` outside `S(p)` and `k < n`.
pub fn verify_alpha_vanishing(p: u64, nmax: usize) -> Result<VerificationReport> {
    let s = s_set(p)?;
    let outside: Vec<u64> = (0..p).filter(|i| !s.members.contains(i)).collect();
    let mut report = VerificationReport::new(
        format!("alpha(p,n,i,k) = 0 for i not in S(p), p={p}"),
        format!("1 <= n <= {nmax}, 0 <= k <= n-1, i in {outside:?}"),
    );
    for n in 1..=nmax {
        let tables = alpha_all(p, n, n - 1)?;
        for &i in &outside {
            for k in 0..n {
                let v = &tables[i as usize].coeffs[k];
                report.record(v.is_zero(), || format!("n={n} i={i} k={k}: alpha={v}"));
            }
        }
    }
    Ok(report)
}

/// Checks `alpha(p,N,j,k) = alpha(p,M,j,k)` for `k <= M-1`, `M < N <= nmax`.
pub fn verify_alpha_stability(p: u64, nmax: usize) -> Result<VerificationReport> {
    let tables: Vec<Vec<AlphaTable>> = (1..=nmax)
        .map(|n| alpha_all(p, n, nmax))
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new(
        format!("alpha prefix stability in n, p={p}"),
        format!("1 <= M < N <= {nmax}, all j, k <= M-1"),
    );
    for big in 2..=nmax {
        for small in 1..big {
            for j in 0..p as usize {
                for k in 0..small {
                    let a = &tables[big - 1][j].coeffs[k];
                    let b = &tables[small - 1][j].coeffs[k];
                    report.record(a == b, || {
                        format!("N={big} M={small} j={j} k={k}: {a} != {b}")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// `A_1(n,m) = (-1)^n sum_{k<=n} sum_{j=k}^{n} binom(j,k) s1(n,j,m) p^{j-2k} X(k) z^j`.
/// Entries of `x` past its length count as zero.
pub fn a1_closed_form(p: u64, z: &ExactRat, m: i64, x: &[ExactRat], n: usize) -> ExactRat {
    let pr = int_to_rat(&ExactInt::from(p));
    let mut acc = ExactRat::zero();
    for (k, xk) in x.iter().enumerate().take(n + 1) {
        if xk.is_zero() {
            continue;
        }
        for j in k..=n {
            let s = gen_stirling1(n, j, m);
            if s.is_zero() {
                continue;
            }
            let pw = pr.pow(j as i32 - 2 * k as i32);
            acc += int_to_rat(&(binomial(j as u64, k as u64) * s)) * pw * xk * z.pow(j as i32);
        }
    }
    if n % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// With `i0 = (p^2-1) z - m p`, checks that the closed form for `A_1(n,m)`
/// solves `sum_l C(n,i0,l,p) A_1(l,m) = (-1)^n z^n sum_k binom(n,k) X(k)`
/// for `n <= nmax`.
pub fn verify_a1_system(
    p: u64,
    z: &ExactRat,
    m: i64,
    x: &[ExactRat],
    nmax: usize,
) -> Result<VerificationReport> {
    if p < 2 {
        return Err(Error::BadParams(format!("p = {p} must be positive")));
    }
    let pi = p as i64;
    let i0 = int_to_rat(&ExactInt::from(pi * pi - 1)) * z - int_to_rat(&ExactInt::from(m * pi));
    let c = CArray::new(nmax, i0.clone(), p);
    let a1: Vec<ExactRat> = (0..=nmax).map(|n| a1_closed_form(p, z, m, x, n)).collect();

    let mut report = VerificationReport::new(
        format!("triangular system for A_1(n,m), p={p} z={z} m={m} i0={i0}"),
        format!("0 <= n <= {nmax}"),
    );
    for n in 0..=nmax {
        let mut lhs = ExactRat::zero();
        for (l, a) in a1.iter().enumerate().take(n + 1) {
            lhs += c.get(n, l) * a;
        }
        let mut rhs = ExactRat::zero();
        for (k, xk) in x.iter().enumerate().take(n + 1) {
            rhs += int_to_rat(&binomial(n as u64, k as u64)) * xk;
        }
        rhs *= z.pow(n as i32);
        if n % 2 == 1 {
            rhs = -rhs;
        }
        report.record(lhs == rhs, || format!("n={n}: lhs={lhs} rhs={rhs}"));
    }
    Ok(report)
}
