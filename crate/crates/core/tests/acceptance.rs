//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p fishburn --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use fishburn::congruence::{
    binomial_family, in_span, known_relations, max_rows, membership, relation_space, s_star, t_set,
    t_star, verify_theorem, CongruenceRelation, Provenance,
};
use fishburn::dissection::{
    verify_alpha_at_i0, verify_alpha_stability, verify_alpha_vanishing, verify_derivative_identity,
};
use fishburn::series::{xi_r, xi_via_t, XiSequence};
use fishburn::special::{glaisher_t, glaisher_t_expansion};
use fishburn::{Result, VerificationReport};

const N_UNIT: usize = 500;
const N_SHORT: usize = 200;
const WINDOW: usize = 20;

type Criterion<'a> = Box<dyn Fn() -> Result<Outcome> + 'a>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Folds reports into one outcome; the detail names the first failure.
fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let witnesses: usize = reports.iter().map(|r| r.witnesses).sum();
    match reports.iter().find(|r| !r.pass) {
        None => outcome(
            true,
            format!("{} checks, {witnesses} witnesses", reports.len()),
        ),
        Some(r) => outcome(
            false,
            format!(
                "{}: {}",
                r.claim,
                r.counterexample.as_deref().unwrap_or("no witnesses")
            ),
        ),
    }
}

fn c1(xi: &XiSequence) -> Result<Outcome> {
    let mut reports = Vec::new();
    for p in [5u64, 7, 11, 17, 19] {
        for &i in &t_set(p)?.members {
            reports.push(verify_theorem(p, 1, 0, i, xi, N_UNIT, false)?);
        }
    }
    Ok(from_reports(&reports))
}

fn c2(xi: &XiSequence) -> Result<Outcome> {
    let reports = (18..=22)
        .map(|m| verify_theorem(23, 1, 0, m, xi, N_UNIT, false))
        .collect::<Result<Vec<_>>>()?;
    Ok(from_reports(&reports))
}

fn c3(xim: &XiSequence) -> Result<Outcome> {
    Ok(from_reports(&[verify_theorem(
        5, -1, 0, 4, xim, N_SHORT, false,
    )?]))
}

fn c4(xim: &XiSequence) -> Result<Outcome> {
    let printed = [
        0u64, 1, 2, 5, 7, 10, 13, 14, 16, 18, 19, 23, 29, 30, 31, 33, 37, 38, 39, 40, 41,
    ];
    let s = s_star(43, -1, 2)?;
    let t = t_star(43, -1, 2)?;
    let sets_ok = s.members == printed && t.members == [42];
    let triple = verify_theorem(43, -1, 2, 42, xim, N_SHORT, false)?;
    let rel = &known_relations(43, -1)[0];
    let direct = rel.check(xim, N_SHORT)?;
    let mut out = from_reports(&[triple, direct]);
    out.pass &= sets_ok;
    out.detail = format!(
        "|S*|={}, T*={:?}; {}",
        s.members.len(),
        t.members,
        out.detail
    );
    Ok(out)
}

fn c5(xi: &XiSequence) -> Result<Outcome> {
    let fam = binomial_family(7, 1)?;
    let patterns: [&[i64]; 4] = [&[1], &[1, -2, 1], &[1, -3, 3, -1], &[1, -4, 6, -4, 1]];
    let shape_ok = fam.len() == 4
        && fam.iter().zip(patterns).all(|(rel, pat)| {
            let expect: Vec<(u64, i64)> = pat
                .iter()
                .enumerate()
                .map(|(j, &w)| (6 - j as u64, w))
                .collect();
            rel.coeffs == CongruenceRelation::given(7, 1, &expect, "").coeffs
        });
    let reports = fam
        .iter()
        .map(|rel| rel.check(xi, N_UNIT))
        .collect::<Result<Vec<_>>>()?;
    let ss: Vec<u64> = fam
        .iter()
        .filter_map(|r| match r.provenance {
            Provenance::Binomial { s, .. } => Some(s),
            _ => None,
        })
        .collect();
    let mut out = from_reports(&reports);
    out.pass &= shape_ok;
    out.detail = format!("s = {ss:?}; {}", out.detail);
    Ok(out)
}

fn c6(xi: &XiSequence, xim: &XiSequence) -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut spanned = Vec::new();
    let mut in_family = 0;
    for (p, r, seq, nmax) in [
        (5u64, 1i64, xi, N_UNIT),
        (11, 1, xi, N_UNIT),
        (5, -1, xim, N_SHORT),
    ] {
        let space = relation_space(p, r, max_rows(p, nmax), seq)?;
        let fam = binomial_family(p, r)?;
        for rel in known_relations(p, r) {
            // xi_-1(5n+4) belongs to criterion 3
            if rel.coeffs.iter().filter(|&&c| c != 0).count() < 2 {
                continue;
            }
            reports.push(rel.check(seq, nmax)?);
            spanned.push(membership(&space, &rel)?);
            in_family += usize::from(in_span(&fam, &rel)?);
        }
    }
    let mut out = from_reports(&reports);
    let all_in = spanned.iter().all(|&b| b);
    out.pass &= all_in;
    // informational: whether the binomial family alone already spans them
    out.detail = format!(
        "{}; {}/{} in relation space, {in_family}/{} in binomial-family span",
        out.detail,
        spanned.iter().filter(|&&b| b).count(),
        spanned.len(),
        spanned.len()
    );
    Ok(out)
}

fn c7() -> Result<Outcome> {
    let reports = [5u64, 7, 11, 13]
        .iter()
        .map(|&p| verify_alpha_at_i0(p, 6))
        .collect::<Result<Vec<_>>>()?;
    Ok(from_reports(&reports))
}

fn c8() -> Result<Outcome> {
    let mut reports = Vec::new();
    for p in [5u64, 7, 11] {
        reports.push(verify_alpha_vanishing(p, 5)?);
        reports.push(verify_alpha_stability(p, 5)?);
    }
    Ok(from_reports(&reports))
}

fn c9() -> Result<Outcome> {
    let mut reports = Vec::new();
    for p in [5u64, 7] {
        for i in 0..p {
            reports.push(verify_derivative_identity(p, i, 2)?);
        }
    }
    Ok(from_reports(&reports))
}

fn c10(xi: &XiSequence) -> Result<Outcome> {
    let via_t = xi_via_t(40)?;
    let route_ok = via_t == xi.prefix(40);
    let oracle = glaisher_t_expansion(6)?;
    let closed = (0..=6).map(glaisher_t).collect::<Result<Vec<_>>>()?;
    let t_ok = oracle == closed && closed[0] == 1.into() && closed[1] == 23.into();
    Ok(outcome(
        route_ok && t_ok,
        format!("xi via T = xi up to 40: {route_ok}; T_0..T_6 Bernoulli = expansion: {t_ok}"),
    ))
}

fn c11(xi: &XiSequence, xim: &XiSequence) -> Result<Outcome> {
    let mut pass = true;
    let mut parts = Vec::new();
    for (r, seq) in [(1i64, xi), (-1, xim)] {
        for p in [5u64, 7, 11, 13] {
            let rows = max_rows(p, N_UNIT);
            let space = relation_space(p, r, rows, seq)?;
            let fam = binomial_family(p, r)?;
            let lower = (p as usize).div_ceil(2);
            let fam_in = fam
                .iter()
                .map(|rel| membership(&space, rel))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b);
            let stable = space.stabilized(WINDOW);
            pass &= space.dimension >= lower && stable && fam_in;
            let cmp = match space.dimension.cmp(&space.conjectured_dimension()) {
                std::cmp::Ordering::Equal => "= (p+1)/2",
                std::cmp::Ordering::Greater => "> (p+1)/2",
                std::cmp::Ordering::Less => "< (p+1)/2",
            };
            parts.push(format!(
                "p={p} r={r}: dim {} {cmp}, rows {rows}, last change at {}",
                space.dimension, space.last_change
            ));
        }
    }
    Ok(outcome(pass, parts.join("; ")))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let xi = xi_r(1, N_UNIT).expect("xi_1");
    let xim = xi_r(-1, N_UNIT).expect("xi_-1");
    eprintln!("xi tables to {N_UNIT}: {:.1?}", start.elapsed());

    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "xi(pn+i) = 0 mod p, p in {5,7,11,17,19}, i in T(p)",
            Box::new(|| c1(&xi)),
        ),
        ("xi(23n+m) = 0 mod 23, m in 18..=22", Box::new(|| c2(&xi))),
        ("xi_-1(5n+4) = 0 mod 5", Box::new(|| c3(&xim))),
        (
            "S*, T* (43,-1,2) and the order-2 relation mod 43",
            Box::new(|| c4(&xim)),
        ),
        ("p=7 binomial family", Box::new(|| c5(&xi))),
        (
            "mod 5 / mod 11 relations and xi_-1 mod 5 pair",
            Box::new(|| c6(&xi, &xim)),
        ),
        ("alpha(p,n,i0,k) = p chi(p) xibar_p(k)", Box::new(c7)),
        (
            "alpha vanishing outside S(p) and prefix stability",
            Box::new(c8),
        ),
        ("derivative identity against gamma(j,i)", Box::new(c9)),
        ("T-number route and Glaisher oracle", Box::new(|| c10(&xi))),
        (
            "relation-space dimension >= (p+1)/2, stabilized",
            Box::new(|| c11(&xi, &xim)),
        ),
    ];

    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} [{:>2}] {name} ({:.1?}): {}",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            t.elapsed(),
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
