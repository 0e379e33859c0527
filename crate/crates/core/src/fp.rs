//! Arithmetic and Gaussian elimination over the prime field `F_p`.
//!
//! Elements are plain `u64` residues in `[0, p)`. Pivoting always takes the
//! first nonzero entry, so results are deterministic.

use num_bigint::BigInt;

pub fn reduce_i64(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

pub fn reduce_big(a: &BigInt, p: u64) -> u64 {
    crate::arith::mod_floor_big(a, p)
}

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse by the extended Euclidean algorithm; `None` if `a == 0 mod p`.
pub fn inv(a: u64, p: u64) -> Option<u64> {
    let (mut old_r, mut r) = ((a % p) as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(p as i128) as u64)
}

/// Reduced row echelon form, built one row at a time.
#[derive(Debug, Clone)]
pub struct Echelon {
    p: u64,
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize, p: u64) -> Self {
        Self {
            p,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut v: Vec<u64> = v.iter().map(|x| x % p).collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = sub(*x, mul(f, r, p), p);
                }
            }
        }
        v
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ncols);
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds a row; returns true if the rank went up.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let p = self.p;
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[pc], p).expect("nonzero pivot is invertible");
        for x in v.iter_mut() {
            *x = mul(*x, s, p);
        }
        for row in &mut self.rows {
            let f = row[pc];
            if f != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = sub(*x, mul(f, r, p), p);
                }
            }
        }
        let at = self.pivots.partition_point(|&c| c < pc);
        self.rows.insert(at, v);
        self.pivots.insert(at, pc);
        true
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free
    /// column, in increasing free-column order.
    pub fn right_nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivots.contains(c)) {
            let mut x = vec![0u64; self.ncols];
            x[free] = 1;
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                x[pc] = sub(0, row[free], p);
            }
            out.push(x);
        }
        out
    }
}

pub fn rank(rows: &[Vec<u64>], ncols: usize, p: u64) -> usize {
    let mut e = Echelon::new(ncols, p);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn dot(a: &[u64], b: &[u64], p: u64) -> u64 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| add(acc, mul(x, y, p), p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverses_mod_small_primes() {
        for p in [5u64, 7, 11, 13, 43] {
            assert_eq!(inv(0, p), None);
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p).unwrap(), p), 1);
            }
        }
    }

    #[test]
    fn nullspace_of_identity_block() {
        let mut e = Echelon::new(3, 5);
        assert!(e.insert(&[1, 2, 0]));
        assert!(!e.insert(&[2, 4, 0]));
        assert!(e.insert(&[0, 0, 3]));
        assert_eq!(e.rank(), 2);
        let ns = e.right_nullspace();
        assert_eq!(ns, vec![vec![3, 1, 0]]);
    }

    #[test]
    fn empty_matrix_has_full_nullspace() {
        let e = Echelon::new(4, 7);
        assert_eq!(e.right_nullspace().len(), 4);
        assert!(e.contains(&[0, 0, 0, 0]));
        assert!(!e.contains(&[0, 1, 0, 0]));
    }

    proptest! {
        #[test]
        fn nullspace_annihilates_rows(
            rows in proptest::collection::vec(proptest::collection::vec(0u64..7, 6), 0..8)
        ) {
            let p = 7;
            let mut e = Echelon::new(6, p);
            for r in &rows {
                e.insert(r);
            }
            let ns = e.right_nullspace();
            prop_assert_eq!(ns.len() + e.rank(), 6);
            for v in &ns {
                for r in &rows {
                    prop_assert_eq!(dot(r, v, p), 0);
                }
            }
            for r in &rows {
                prop_assert!(e.contains(r));
            }
        }
    }
}
