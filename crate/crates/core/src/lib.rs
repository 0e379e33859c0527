//! Exact computation of r-Fishburn numbers and their congruences.
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: big integers/rationals, truncated power series, polynomials
//! - [`special`]: Bernoulli polynomials, Glaisher T-numbers, generalized
//!   Stirling numbers, the `C(n,i,j,p)` array, `chi_12` and Legendre symbols
//! - [`series`]: `xi_r(n)` and related sequences, by two independent routes
//! - [`dissection`]: p-dissections of the partial sums `F(q,N)` and the
//!   identities relating their coefficients to `xi_p`
//! - [`congruence`]: residue sets, congruence checks and the mod-p relation
//!   space
//! - [`fp`]: linear algebra over the prime field used by `congruence`

pub mod arith;
pub mod congruence;
pub mod dissection;
mod error;
pub mod fp;
pub mod report;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use report::VerificationReport;

/// Trial-division primality test; the moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime_ge5(p: u64) -> Result<()> {
    if p >= 5 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadParams(format!("p = {p} must be a prime >= 5")))
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| super::is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
