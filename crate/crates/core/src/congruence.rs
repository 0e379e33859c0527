//! Residue sets, congruence checks for `xi_r` mod p, and the space of
//! linear relations `sum_j a_j xi_r(pn + j) = 0 (mod p)`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{binomial, ExactInt};
use crate::fp::{self, Echelon};
use crate::series::XiSequence;
use crate::special::legendre;
use crate::{check_prime_ge5, Error, Result, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetKind {
    S,
    T,
    SStar,
    TStar,
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetKind::S => "S",
            SetKind::T => "T",
            SetKind::SStar => "S*",
            SetKind::TStar => "T*",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueSet {
    pub p: u64,
    pub r: i64,
    pub s: u64,
    pub kind: SetKind,
    /// Sorted, distinct, all in `[0, p)`.
    pub members: Vec<u64>,
}

impl ResidueSet {
    pub fn contains(&self, j: u64) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `n(3n-1)/2 mod p` for `n` in `0..p`; the map is periodic mod p.
pub fn pentagonal_residues(p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = (0..p)
        .map(|n| {
            let n = n as u128;
            ((n * (3 * n + 2 * p as u128 - 1) / 2) % p as u128) as u64
        })
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Residues strictly above every member of `below`; all residues when
/// `below` is empty.
fn above_max(below: &[u64], p: u64) -> Vec<u64> {
    match below.iter().max() {
        Some(&m) => (m + 1..p).collect(),
        None => (0..p).collect(),
    }
}

pub fn s_set(p: u64) -> Result<ResidueSet> {
    check_prime_ge5(p)?;
    Ok(ResidueSet {
        p,
        r: 1,
        s: 0,
        kind: SetKind::S,
        members: pentagonal_residues(p),
    })
}

pub fn t_set(p: u64) -> Result<ResidueSet> {
    let s = s_set(p)?;
    Ok(ResidueSet {
        kind: SetKind::T,
        members: above_max(&s.members, p),
        ..s
    })
}

fn check_star_params(p: u64, r: i64, s: u64) -> Result<()> {
    check_prime_ge5(p)?;
    if r == 0 || r.rem_euclid(p as i64) == 0 {
        return Err(Error::BadParams(format!(
            "r = {r} must be nonzero and prime to p = {p}"
        )));
    }
    if s >= p {
        return Err(Error::BadParams(format!("s = {s} must lie in [0, {p})")));
    }
    Ok(())
}

/// `j` with `j = r n(3n-1)/2 + s (mod p)` for some `n`, excluding the
/// residue with `24(j - s) = -r (mod p)`.
pub fn s_star(p: u64, r: i64, s: u64) -> Result<ResidueSet> {
    check_star_params(p, r, s)?;
    let rr = fp::reduce_i64(r, p);
    let excluded_shift = fp::reduce_i64(-r, p);
    let inv24 = fp::inv(24 % p, p).expect("gcd(24, p) = 1 for p >= 5");
    // 24(j - s) = -r  <=>  j = s - r/24
    let excluded = fp::add(s, fp::mul(excluded_shift, inv24, p), p);
    let mut members: Vec<u64> = pentagonal_residues(p)
        .into_iter()
        .map(|t| fp::add(fp::mul(rr, t, p), s, p))
        .filter(|&j| j != excluded)
        .collect();
    members.sort_unstable();
    members.dedup();
    Ok(ResidueSet {
        p,
        r,
        s,
        kind: SetKind::SStar,
        members,
    })
}

pub fn t_star(p: u64, r: i64, s: u64) -> Result<ResidueSet> {
    let star = s_star(p, r, s)?;
    Ok(ResidueSet {
        kind: SetKind::TStar,
        members: above_max(&star.members, p),
        ..star
    })
}

/// Checks `sum_{j<=s} binom(s,j) (-1)^j xi_r(pn + m - j) = 0 (mod p)` for
/// every `n >= 0` with `pn + m <= nmax`. Negative indices contribute zero.
///
/// Unless `force` is set, `m` must lie in `T*(p,r,s)`.
pub fn verify_theorem(
    p: u64,
    r: i64,
    s: u64,
    m: u64,
    xi: &XiSequence,
    nmax: usize,
    force: bool,
) -> Result<VerificationReport> {
    let t = t_star(p, r, s)?;
    if m >= p {
        return Err(Error::BadParams(format!("m = {m} must lie in [0, {p})")));
    }
    if !force && !t.contains(m) {
        return Err(Error::NotInTStar { p, r, s, m });
    }
    if xi.r != r {
        return Err(Error::BadParams(format!(
            "sequence is for r = {}, not {r}",
            xi.r
        )));
    }
    if nmax > xi.truncation() {
        return Err(Error::BadParams(format!(
            "nmax = {nmax} exceeds sequence truncation {}",
            xi.truncation()
        )));
    }
    let weights: Vec<ExactInt> = (0..=s)
        .map(|j| {
            let b = binomial(s, j);
            if j % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let pb = ExactInt::from(p);
    let mut report = VerificationReport::new(
        format!("sum_(j<={s}) C({s},j)(-1)^j xi_{r}({p}n+{m}-j) = 0 mod {p}"),
        format!("0 <= {p}n+{m} <= {nmax}"),
    );
    if t.is_empty() || s_star(p, r, s)?.is_empty() {
        report.note("S* is empty, so T* is the full residue set");
    }
    if !t.contains(m) {
        report.note(format!("forced check: {m} is not in T*"));
    }
    let mut idx = m as usize;
    let mut n = 0usize;
    while idx <= nmax {
        let mut acc = ExactInt::zero();
        for (j, w) in weights.iter().enumerate() {
            let v = xi
                .get(idx as i64 - j as i64)
                .expect("index within truncation");
            acc += w * v;
        }
        let ok = (&acc % &pb).is_zero();
        report.record(ok, || format!("n={n}: sum = {acc}"));
        idx += p as usize;
        n += 1;
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Alternating binomial weights of order `s` ending at residue `m`.
    Binomial { s: u64, m: u64 },
    /// Basis vector of a computed nullspace.
    Nullspace,
    /// A relation supplied from outside, with a readable label.
    Given(String),
}

/// `sum_j coeffs[j] xi_r(pn + j) = 0 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceRelation {
    pub p: u64,
    pub r: i64,
    pub coeffs: Vec<u64>,
    pub provenance: Provenance,
}

impl CongruenceRelation {
    /// Weights `(-1)^j binom(s,j)` at residue `m - j`.
    pub fn binomial(p: u64, r: i64, s: u64, m: u64) -> Result<Self> {
        if m >= p || s > m {
            return Err(Error::BadParams(format!(
                "binomial relation needs s <= m < p, got s={s} m={m} p={p}"
            )));
        }
        let mut coeffs = vec![0u64; p as usize];
        for j in 0..=s {
            let b = fp::reduce_big(&binomial(s, j), p);
            coeffs[(m - j) as usize] = if j % 2 == 0 { b } else { fp::sub(0, b, p) };
        }
        Ok(Self {
            p,
            r,
            coeffs,
            provenance: Provenance::Binomial { s, m },
        })
    }

    /// From signed integer weights indexed by residue.
    pub fn given(p: u64, r: i64, weights: &[(u64, i64)], label: impl Into<String>) -> Self {
        let mut coeffs = vec![0u64; p as usize];
        for &(j, w) in weights {
            coeffs[j as usize] = fp::add(coeffs[j as usize], fp::reduce_i64(w, p), p);
        }
        Self {
            p,
            r,
            coeffs,
            provenance: Provenance::Given(label.into()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Human-readable form, e.g. `xi(7n+6) + 5*xi(7n+2)`; coefficients are
    /// shown as residues in `[0, p)`.
    pub fn describe(&self) -> String {
        let name = if self.r == 1 {
            "xi".to_string()
        } else {
            format!("xi_{}", self.r)
        };
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| {
                let t = format!("{name}({}n+{j})", self.p);
                if c == 1 {
                    t
                } else {
                    format!("{c}*{t}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            format!("{} = 0 mod {}", terms.join(" + "), self.p)
        }
    }

    /// Checks the relation on every full block `pn .. pn+p-1 <= nmax`.
    pub fn check(&self, xi: &XiSequence, nmax: usize) -> Result<VerificationReport> {
        if xi.r != self.r {
            return Err(Error::BadParams(format!(
                "sequence is for r = {}, not {}",
                xi.r, self.r
            )));
        }
        if nmax > xi.truncation() {
            return Err(Error::BadParams(format!(
                "nmax = {nmax} exceeds sequence truncation {}",
                xi.truncation()
            )));
        }
        let p = self.p as usize;
        let mut report =
            VerificationReport::new(self.describe(), format!("{p}n+{} <= {nmax}", p - 1));
        let mut base = 0usize;
        while base + p - 1 <= nmax {
            let row = residue_row(xi, self.p, base / p);
            let v = fp::dot(&row, &self.coeffs, self.p);
            report.record(v == 0, || format!("n={}: residue {v}", base / p));
            base += p;
        }
        Ok(report)
    }
}

/// `xi_r(pn + j) mod p` for `j < p`.
pub fn residue_row(xi: &XiSequence, p: u64, n: usize) -> Vec<u64> {
    (0..p as usize)
        .map(|j| fp::reduce_big(&xi.values[p as usize * n + j], p))
        .collect()
}

/// The `(p+1)/2` binomial relations ending at residue `p-1` whose order `s`
/// satisfies `(-24(1+s)/r + 1 | p) in {-1, 0}`.
pub fn binomial_family(p: u64, r: i64) -> Result<Vec<CongruenceRelation>> {
    check_star_params(p, r, 0)?;
    let rbar = fp::inv(fp::reduce_i64(r, p), p).expect("r prime to p");
    let mut out = Vec::new();
    for s in 0..p - 1 {
        let t = fp::mul(fp::reduce_i64(-24 * (1 + s as i64), p), rbar, p);
        let arg = fp::add(t, 1, p);
        if legendre(arg as i64, p) <= 0 {
            out.push(CongruenceRelation::binomial(p, r, s, p - 1)?);
        }
    }
    let rows: Vec<Vec<u64>> = out.iter().map(|c| c.coeffs.clone()).collect();
    assert_eq!(
        fp::rank(&rows, p as usize, p),
        out.len(),
        "binomial relations must be independent"
    );
    Ok(out)
}

/// Right nullspace of the residue matrix `M[n][j] = xi_r(pn+j) mod p`.
#[derive(Debug, Clone, Serialize)]
pub struct RelationSpace {
    pub p: u64,
    pub r: i64,
    pub rows_used: usize,
    pub basis: Vec<CongruenceRelation>,
    pub dimension: usize,
    /// `history[k-1]` is the dimension using the first `k` rows.
    pub history: Vec<usize>,
    /// Row count at which the dimension last dropped (0 if it never did).
    pub last_change: usize,
    #[serde(skip)]
    echelon: Echelon,
}

impl RelationSpace {
    /// `(p+1)/2`, the conjectured exact dimension.
    pub fn conjectured_dimension(&self) -> usize {
        (self.p as usize).div_ceil(2)
    }

    /// Whether the dimension stayed fixed over the last `window` rows.
    pub fn stabilized(&self, window: usize) -> bool {
        self.rows_used >= self.last_change + window
    }
}

/// Largest row count allowed by `rows * p + p - 1 <= nmax`.
pub fn max_rows(p: u64, nmax: usize) -> usize {
    let p = p as usize;
    if nmax + 1 < p {
        0
    } else {
        (nmax + 1 - p) / p
    }
}

pub fn relation_space(p: u64, r: i64, rows: usize, xi: &XiSequence) -> Result<RelationSpace> {
    check_star_params(p, r, 0)?;
    if rows < 1 {
        return Err(Error::InsufficientData);
    }
    if xi.r != r {
        return Err(Error::BadParams(format!(
            "sequence is for r = {}, not {r}",
            xi.r
        )));
    }
    if rows * p as usize + p as usize - 1 > xi.truncation() {
        return Err(Error::BadParams(format!(
            "{rows} rows need xi_r up to {}, have {}",
            rows * p as usize + p as usize - 1,
            xi.truncation()
        )));
    }
    let pu = p as usize;
    let mut e = Echelon::new(pu, p);
    let mut history = Vec::with_capacity(rows);
    let mut last_change = 0;
    for n in 0..rows {
        if e.insert(&residue_row(xi, p, n)) {
            last_change = n + 1;
        }
        history.push(pu - e.rank());
    }
    let basis: Vec<CongruenceRelation> = e
        .right_nullspace()
        .into_iter()
        .map(|coeffs| CongruenceRelation {
            p,
            r,
            coeffs,
            provenance: Provenance::Nullspace,
        })
        .collect();
    let mut nullspace = Echelon::new(pu, p);
    for b in &basis {
        nullspace.insert(&b.coeffs);
    }
    Ok(RelationSpace {
        p,
        r,
        rows_used: rows,
        dimension: basis.len(),
        basis,
        history,
        last_change,
        echelon: nullspace,
    })
}

/// Whether `rel` lies in the span of the space's basis.
pub fn membership(space: &RelationSpace, rel: &CongruenceRelation) -> Result<bool> {
    if rel.p != space.p || rel.coeffs.len() != space.p as usize {
        return Err(Error::DimensionMismatch {
            expected: space.p as usize,
            got: rel.coeffs.len(),
        });
    }
    Ok(space.echelon.contains(&rel.coeffs))
}

/// Whether `rel` lies in the span of `family`.
pub fn in_span(family: &[CongruenceRelation], rel: &CongruenceRelation) -> Result<bool> {
    let p = rel.p;
    let mut e = Echelon::new(p as usize, p);
    for f in family {
        if f.coeffs.len() != p as usize {
            return Err(Error::DimensionMismatch {
                expected: p as usize,
                got: f.coeffs.len(),
            });
        }
        e.insert(&f.coeffs);
    }
    Ok(e.contains(&rel.coeffs))
}

/// Published congruence relations for small cases, as vectors.
pub fn known_relations(p: u64, r: i64) -> Vec<CongruenceRelation> {
    match (p, r) {
        (5, 1) => vec![CongruenceRelation::given(
            5,
            1,
            &[(2, 1), (1, -2)],
            "xi(5n+2) - 2 xi(5n+1)",
        )],
        (7, 1) => vec![
            CongruenceRelation::given(7, 1, &[(6, 1)], "xi(7n+6)"),
            CongruenceRelation::given(7, 1, &[(5, 1), (2, 5)], "xi(7n+5) + 5 xi(7n+2)"),
            CongruenceRelation::given(7, 1, &[(4, 1), (2, 3)], "xi(7n+4) + 3 xi(7n+2)"),
            CongruenceRelation::given(7, 1, &[(3, 1), (2, 1)], "xi(7n+3) + xi(7n+2)"),
        ],
        (11, 1) => vec![CongruenceRelation::given(
            11,
            1,
            &[(7, 1), (4, -3), (3, 2)],
            "xi(11n+7) - 3 xi(11n+4) + 2 xi(11n+3)",
        )],
        (5, -1) => vec![
            CongruenceRelation::given(5, -1, &[(4, 1)], "xi_-1(5n+4)"),
            CongruenceRelation::given(5, -1, &[(3, 1), (2, -3)], "xi_-1(5n+3) - 3 xi_-1(5n+2)"),
            CongruenceRelation::given(5, -1, &[(3, 1), (1, -2)], "xi_-1(5n+3) - 2 xi_-1(5n+1)"),
        ],
        (43, -1) => vec![CongruenceRelation::given(
            43,
            -1,
            &[(42, 1), (41, -2), (40, 1)],
            "xi_-1(43n+42) - 2 xi_-1(43n+41) + xi_-1(43n+40)",
        )],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::xi_r;

    #[test]
    fn s_and_t_small_primes() {
        assert_eq!(s_set(5).unwrap().members, vec![0, 1, 2]);
        assert_eq!(t_set(5).unwrap().members, vec![3, 4]);
        assert_eq!(t_set(7).unwrap().members, vec![6]);
        assert_eq!(t_set(11).unwrap().members, vec![8, 9, 10]);
        assert_eq!(t_set(17).unwrap().members, vec![16]);
        assert_eq!(t_set(19).unwrap().members, vec![17, 18]);
        assert!(t_set(23).unwrap().members.is_empty());
    }

    #[test]
    fn star_sets_from_examples() {
        assert_eq!(s_star(5, -1, 0).unwrap().members, vec![0, 3]);
        assert_eq!(t_star(5, -1, 0).unwrap().members, vec![4]);
        assert_eq!(t_star(5, -1, 2).unwrap().members, vec![3, 4]);
        assert_eq!(t_star(5, -1, 3).unwrap().members, vec![4]);
        assert_eq!(t_star(23, 1, 0).unwrap().members, vec![18, 19, 20, 21, 22]);
        assert!(s_set(23).unwrap().contains(22));
        assert!(!s_star(23, 1, 0).unwrap().contains(22));
        assert_eq!(
            s_star(43, -1, 2).unwrap().members,
            vec![0, 1, 2, 5, 7, 10, 13, 14, 16, 18, 19, 23, 29, 30, 31, 33, 37, 38, 39, 40, 41]
        );
        assert_eq!(t_star(43, -1, 2).unwrap().members, vec![42]);
    }

    #[test]
    fn t_star_empty_for_r_minus_one_above_five() {
        for p in [7u64, 11, 13, 17, 19, 23] {
            assert!(t_star(p, -1, 0).unwrap().is_empty(), "p={p}");
        }
    }

    #[test]
    fn star_params_validated() {
        assert!(s_star(5, 10, 0).is_err());
        assert!(s_star(5, 0, 0).is_err());
        assert!(s_star(5, 1, 5).is_err());
        assert!(s_star(6, 1, 0).is_err());
        assert!(s_set(3).is_err());
    }

    #[test]
    fn pentagonal_over_integers_matches_one_period() {
        for p in [5u64, 7, 11, 13, 43] {
            let mut all: Vec<u64> = (-3 * p as i64..3 * p as i64)
                .map(|n| ((n * (3 * n - 1) / 2).rem_euclid(p as i64)) as u64)
                .collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all, pentagonal_residues(p));
        }
    }

    #[test]
    fn s_star_structure() {
        for p in [5u64, 7, 11, 13, 17] {
            for r in [1i64, -1, 2, 3] {
                for s in 0..p {
                    let star = s_star(p, r, s).unwrap();
                    let shifted: Vec<u64> = pentagonal_residues(p)
                        .iter()
                        .map(|&t| fp::add(fp::mul(fp::reduce_i64(r, p), t, p), s, p))
                        .collect();
                    assert!(star.members.iter().all(|j| shifted.contains(j)));
                    assert!(star
                        .members
                        .iter()
                        .all(|&j| { fp::mul(24, fp::sub(j, s, p), p) != fp::reduce_i64(-r, p) }));
                    let mut distinct = shifted.clone();
                    distinct.sort_unstable();
                    distinct.dedup();
                    assert!(star.members.len() <= distinct.len());
                    assert!(star.members.len() + 1 >= distinct.len());
                }
            }
        }
    }

    #[test]
    fn theorem_small() {
        let xi = xi_r(1, 120).unwrap();
        for m in [3u64, 4] {
            assert!(verify_theorem(5, 1, 0, m, &xi, 120, false).unwrap().pass);
        }
        assert!(matches!(
            verify_theorem(5, 1, 0, 2, &xi, 120, false),
            Err(Error::NotInTStar { .. })
        ));
        let forced = verify_theorem(5, 1, 0, 2, &xi, 120, true).unwrap();
        assert!(!forced.pass);
        assert!(forced.counterexample.is_some());
    }

    #[test]
    fn t_star_sits_at_or_above_s() {
        // s itself is in S* (n = 0), so every m in T* exceeds s
        for r in [1i64, -1, 2] {
            for p in [5u64, 7, 11, 13] {
                for s in 0..p {
                    let star = s_star(p, r, s).unwrap();
                    assert!(star.contains(s));
                    assert!(t_star(p, r, s).unwrap().members.iter().all(|&m| m > s));
                }
            }
        }
    }

    #[test]
    fn forced_check_reads_negative_indices_as_zero() {
        let xi = xi_r(1, 40).unwrap();
        // n = 0 term for s = 3, m = 1: xi(1) - 3 xi(0) = -2
        let rep = verify_theorem(5, 1, 3, 1, &xi, 40, true).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.counterexample.as_deref(), Some("n=0: sum = -2"));
    }

    #[test]
    fn family_p7() {
        let fam = binomial_family(7, 1).unwrap();
        let ss: Vec<u64> = fam
            .iter()
            .map(|c| match c.provenance {
                Provenance::Binomial { s, m } => {
                    assert_eq!(m, 6);
                    s
                }
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(ss, vec![0, 2, 3, 4]);
        assert_eq!(fam[1].coeffs, vec![0, 0, 0, 0, 1, 5, 1]);
    }

    #[test]
    fn family_counts() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            for r in [1i64, -1, 2] {
                assert_eq!(binomial_family(p, r).unwrap().len() as u64, p.div_ceil(2));
            }
        }
        assert_eq!(binomial_family(5, 1).unwrap().len(), 3);
    }

    #[test]
    fn relation_space_small() {
        let xi = xi_r(1, 204).unwrap();
        let sp = relation_space(5, 1, 40, &xi).unwrap();
        assert_eq!(sp.dimension, 3);
        for rel in known_relations(5, 1) {
            assert!(membership(&sp, &rel).unwrap());
        }
        for rel in binomial_family(5, 1).unwrap() {
            assert!(membership(&sp, &rel).unwrap());
        }
        assert!(sp.stabilized(20));
        assert_eq!(sp.history.len(), 40);

        let one = relation_space(5, 1, 1, &xi).unwrap();
        assert_eq!(one.dimension, 4);
        assert!(!one.stabilized(20));
    }

    #[test]
    fn relation_space_errors() {
        let xi = xi_r(1, 30).unwrap();
        assert!(matches!(
            relation_space(5, 1, 0, &xi),
            Err(Error::InsufficientData)
        ));
        assert!(relation_space(5, 1, 6, &xi).is_err());
        assert_eq!(max_rows(5, 30), 5);
        assert!(relation_space(5, 1, 5, &xi).is_ok());
        let sp = relation_space(5, 1, 5, &xi).unwrap();
        let wrong = CongruenceRelation::given(7, 1, &[(0, 1)], "wrong p");
        assert!(matches!(
            membership(&sp, &wrong),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership_full_space() {
        // zero rows of constraint: a matrix of all-zero residues
        let xi = XiSequence {
            r: 1,
            values: vec![ExactInt::from(0); 20],
        };
        let sp = relation_space(5, 1, 3, &xi).unwrap();
        assert_eq!(sp.dimension, 5);
        let v = CongruenceRelation::given(5, 1, &[(0, 3), (2, 4), (4, 1)], "random");
        assert!(membership(&sp, &v).unwrap());
    }

    #[test]
    fn describe_relation() {
        let r = CongruenceRelation::binomial(7, 1, 2, 6).unwrap();
        assert_eq!(r.describe(), "xi(7n+6) + 5*xi(7n+5) + xi(7n+4) = 0 mod 7");
    }
}
