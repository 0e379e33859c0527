//! Exact special numbers: Bernoulli polynomials, Glaisher T-numbers,
//! generalized Stirling numbers of the first kind, the `f(x,n,k,m)`
//! polynomials, the `C(n,i,j,p)` array and the small characters.
//!
//! Bernoulli numbers and Stirling tables are memoized per process behind a
//! mutex; cached and uncached evaluation agree exactly.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::{One, Zero};

use crate::arith::{
    binomial, factorial, int_to_rat, rat, rat_to_int, Coeff, ExactInt, ExactPoly, ExactRat,
    TruncatedSeries,
};
use crate::fp;
use crate::Result;

static BERNOULLI: LazyLock<Mutex<Vec<ExactRat>>> =
    LazyLock::new(|| Mutex::new(vec![ExactRat::one()]));

/// Bernoulli number `B_n` with `B_1 = -1/2`, from
/// `sum_{k=0}^{n} binom(n+1, k) B_k = 0`.
pub fn bernoulli_number(n: usize) -> ExactRat {
    let mut cache = BERNOULLI.lock().expect("bernoulli cache poisoned");
    while cache.len() <= n {
        let m = cache.len();
        let mut acc = ExactRat::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += int_to_rat(&binomial(m as u64 + 1, k as u64)) * b;
        }
        let next = -acc / ExactRat::from_integer(ExactInt::from(m + 1));
        cache.push(next);
    }
    cache[n].clone()
}

/// `B_n(x) = sum_k binom(n,k) B_k x^(n-k)`.
pub fn bernoulli_poly(n: usize) -> ExactPoly<ExactRat> {
    let mut coeffs = vec![ExactRat::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = int_to_rat(&binomial(n as u64, k as u64)) * bernoulli_number(k);
    }
    ExactPoly::new(coeffs)
}

/// Glaisher T-number
/// `T_n = 6 (-144)^n / (n+1) [B_{2n+2}(1/12) - B_{2n+2}(5/12)]`.
pub fn glaisher_t(n: usize) -> Result<ExactInt> {
    let b = bernoulli_poly(2 * n + 2);
    let diff = b.eval(&crate::arith::rat(1, 12)) - b.eval(&crate::arith::rat(5, 12));
    let scale = ExactRat::new(
        ExactInt::from(6) * num_traits::pow(ExactInt::from(-144), n),
        ExactInt::from(n + 1),
    );
    rat_to_int(&(scale * diff))
}

/// Coefficients of `e^{t/24} sum_{n<=K} (1-e^t)...(1-e^{nt})` in `t`,
/// converted to `T_k = coeff * k! * (-24)^k`. Independent of the
/// Bernoulli route in [`glaisher_t`]; slow, so meant for small `kmax`.
pub fn glaisher_t_expansion(kmax: usize) -> Result<Vec<ExactInt>> {
    let exp_series = |a: ExactRat| {
        let mut c = Vec::with_capacity(kmax + 1);
        let mut term = rat(1, 1);
        for k in 0..=kmax {
            c.push(term.clone());
            term = term * &a / rat(k as i64 + 1, 1);
        }
        TruncatedSeries::new(c, kmax)
    };
    let mut sum = TruncatedSeries::<ExactRat>::zero(kmax);
    let mut prod = TruncatedSeries::one(kmax);
    for n in 0..=kmax {
        sum = &sum + &prod;
        let factor = &TruncatedSeries::one(kmax) - &exp_series(rat(n as i64 + 1, 1));
        prod = &prod * &factor;
    }
    let lhs = &exp_series(rat(1, 24)) * &sum;
    (0..=kmax)
        .map(|k| {
            let v = lhs.coeff(k).clone()
                * int_to_rat(&factorial(k as u64))
                * int_to_rat(&num_traits::pow(ExactInt::from(-24), k));
            rat_to_int(&v)
        })
        .collect()
}

/// Coefficients of `(x - m)(x - m + 1)...(x - m + n - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    pub n: usize,
    pub m: i64,
    /// `coeffs[j] = s1(n, j, m)` for `0 <= j <= n`.
    pub coeffs: Vec<ExactInt>,
}

impl StirlingTable {
    pub fn new(n: usize, m: i64) -> Self {
        let mut poly = ExactPoly::<ExactInt>::constant(ExactInt::one());
        for t in 0..n as i64 {
            poly = &poly * &ExactPoly::from_i64(&[t - m, 1]);
        }
        let coeffs = (0..=n).map(|j| poly.coeff(j)).collect();
        Self { n, m, coeffs }
    }

    pub fn get(&self, j: usize) -> ExactInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }
}

type StirlingCache = HashMap<(usize, i64), Arc<StirlingTable>>;

static STIRLING: LazyLock<Mutex<StirlingCache>> = LazyLock::new(|| Mutex::new(HashMap::new()));

pub fn stirling_table(n: usize, m: i64) -> Arc<StirlingTable> {
    if let Some(t) = STIRLING
        .lock()
        .expect("stirling cache poisoned")
        .get(&(n, m))
    {
        return Arc::clone(t);
    }
    let table = Arc::new(StirlingTable::new(n, m));
    STIRLING
        .lock()
        .expect("stirling cache poisoned")
        .entry((n, m))
        .or_insert(table)
        .clone()
}

/// Generalized signless Stirling number `s1(n, j, m)`; zero for `j > n`.
/// `m = 0` gives the classical signless Stirling numbers.
pub fn gen_stirling1(n: usize, j: usize, m: i64) -> ExactInt {
    if j > n {
        return ExactInt::zero();
    }
    stirling_table(n, m).get(j)
}

/// `f(x,n,k,m) = (-1)^n sum_{j=k}^n binom(j,k) s1(n,j,m) x^j`, zero unless
/// `k <= n`.
pub fn f_poly(n: usize, k: usize, m: i64) -> ExactPoly<ExactInt> {
    if k > n {
        return ExactPoly::zero();
    }
    let table = stirling_table(n, m);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let coeffs = (0..=n)
        .map(|j| {
            if j < k {
                ExactInt::zero()
            } else {
                binomial(j as u64, k as u64) * &table.coeffs[j] * sign
            }
        })
        .collect();
    ExactPoly::new(coeffs)
}

/// `f(x,n,k,m)` through
/// `f(x,n+1,k,m) = -((x + n - m) f(x,n,k,m) + x f(x,n,k-1,m))`.
pub fn f_poly_rec(n: usize, k: usize, m: i64) -> ExactPoly<ExactInt> {
    if k > n {
        return ExactPoly::zero();
    }
    // row[k'] = f(x, level, k', m)
    let mut row = vec![ExactPoly::constant(ExactInt::one())];
    for level in 0..n {
        let lin = ExactPoly::from_i64(&[level as i64 - m, 1]);
        let x = ExactPoly::from_i64(&[0, 1]);
        let next = (0..=level + 1)
            .map(|kk| {
                let a = row
                    .get(kk)
                    .map(|f| &lin * f)
                    .unwrap_or_else(ExactPoly::zero);
                let b = match kk.checked_sub(1).and_then(|k1| row.get(k1)) {
                    Some(f) => &x * f,
                    None => ExactPoly::zero(),
                };
                let s = &a + &b;
                s.scale(&ExactInt::from(-1))
            })
            .collect();
        row = next;
    }
    row.swap_remove(k)
}

/// The array `C(n,i,j,p)` for `n <= nmax`, with
/// `C(n+1,i,j,p) = (i + jp) C(n,i,j,p) + p C(n,i,j-1,p)` and
/// `C(0,i,0,p) = 1`. The parameter `i` may be any ring element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CArray<T> {
    pub p: u64,
    pub i: T,
    rows: Vec<Vec<T>>,
}

impl<T: Coeff> CArray<T> {
    pub fn new(nmax: usize, i: T, p: u64) -> Self {
        let pt = T::from_i64(p as i64);
        let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
        for n in 0..nmax {
            let prev = &rows[n];
            let next = (0..=n + 1)
                .map(|j| {
                    let mut acc = T::zero();
                    if j <= n {
                        let mut w = i.clone();
                        w += &T::from_i64((j as u64 * p) as i64);
                        acc += &w.mul_ref(&prev[j]);
                    }
                    if j >= 1 {
                        acc += &pt.mul_ref(&prev[j - 1]);
                    }
                    acc
                })
                .collect();
            rows.push(next);
        }
        Self { p, i, rows }
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n,i,j,p)`; zero outside `0 <= j <= n <= nmax`.
    pub fn get(&self, n: usize, j: usize) -> T {
        self.rows
            .get(n)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(T::zero)
    }
}

/// Integer slice of the C-array for residue `i`.
pub fn c_array(nmax: usize, i: u64, p: u64) -> CArray<ExactInt> {
    CArray::new(nmax, ExactInt::from(i), p)
}

/// The character mod 12, equal to the Kronecker symbol `(12/n)`.
pub fn chi12(n: i64) -> i8 {
    match n.rem_euclid(12) {
        1 | 11 => 1,
        5 | 7 => -1,
        _ => 0,
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    let a = fp::reduce_i64(a, p);
    if a == 0 {
        return 0;
    }
    if fp::pow(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}
