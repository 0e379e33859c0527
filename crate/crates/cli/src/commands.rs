use fishburn::arith::{int_to_rat, ExactRat};
use fishburn::congruence::{
    binomial_family, in_span, known_relations, membership, relation_space, s_set, s_star, t_set,
    t_star, verify_theorem, CongruenceRelation, Provenance, ResidueSet,
};
use fishburn::dissection::{
    i0_of, verify_a1_system, verify_alpha_at_i0, verify_alpha_stability, verify_alpha_vanishing,
    verify_derivative_identity,
};
use fishburn::series::{xi_bar_p, xi_r, xi_via_t, XI_VIA_T_CAP};
use fishburn::VerificationReport;
use serde_json::{json, Map, Value};

use crate::config::{Command, RunConfig, Scope, STABLE_WINDOW};
use crate::CliError;

/// Everything a command produced, ready for any output format.
pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub results: Vec<Value>,
    pub pass: bool,
    pub text: Vec<String>,
    /// Only sequence dumps have a tabular form.
    pub csv: Option<Vec<String>>,
}

impl Report {
    fn new(cfg: &RunConfig, params: Value) -> Self {
        let Value::Object(params) = params else {
            unreachable!("params are built as an object")
        };
        Self {
            command: cfg.command.name(),
            params,
            results: Vec::new(),
            pass: true,
            text: Vec::new(),
            csv: None,
        }
    }

    fn push_check(&mut self, check: &str, rep: &VerificationReport) {
        self.pass &= rep.pass;
        self.results.push(json!({ "check": check, "report": rep }));
        let status = if rep.pass { "PASS" } else { "FAIL" };
        self.text.push(format!(
            "{status} [{check}] {} ({}; {} witnesses)",
            rep.claim, rep.range, rep.witnesses
        ));
        if let Some(c) = &rep.counterexample {
            self.text.push(format!("    counterexample: {c}"));
        }
        for note in &rep.notes {
            self.text.push(format!("    note: {note}"));
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match cfg.command {
        Command::Xi { cross_check } => cmd_xi(cfg, cross_check),
        Command::Sets => cmd_sets(cfg),
        Command::Verify(scope) => cmd_verify(cfg, scope),
        Command::Relations => cmd_relations(cfg),
    }
}

fn cmd_xi(cfg: &RunConfig, cross_check: bool) -> Result<Report, CliError> {
    let mut rep = Report::new(
        cfg,
        json!({ "r": cfg.r, "n": cfg.n, "cross_check": cross_check }),
    );
    let xi = xi_r(cfg.r, cfg.n)?;
    let mut csv = vec!["n,xi".to_string()];
    for (n, v) in xi.values.iter().enumerate() {
        rep.results.push(json!({ "n": n, "value": v.to_string() }));
        rep.text.push(format!("{n}, {v}"));
        csv.push(format!("{n},{v}"));
    }
    rep.csv = Some(csv);
    if cross_check {
        let upto = cfg.n.min(XI_VIA_T_CAP);
        let ok = xi_via_t(upto)? == xi.prefix(upto);
        rep.pass = ok;
        eprintln!(
            "cross-check against the T-number route for n <= {upto}: {}",
            if ok { "agree" } else { "MISMATCH" }
        );
    }
    Ok(rep)
}

fn fmt_set(set: &ResidueSet) -> String {
    let items: Vec<String> = set.members.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn cmd_sets(cfg: &RunConfig) -> Result<Report, CliError> {
    let (p, r, s) = (cfg.prime(), cfg.r, cfg.s);
    let mut rep = Report::new(cfg, json!({ "p": p, "r": r, "s": s }));
    rep.text.push(format!("p = {p}, r = {r}, s = {s}"));
    let star = s_star(p, r, s)?;
    for (name, set) in [
        ("S", s_set(p)?),
        ("T", t_set(p)?),
        ("S*", star.clone()),
        ("T*", t_star(p, r, s)?),
    ] {
        rep.text.push(format!("{name} = {}", fmt_set(&set)));
        rep.results
            .push(json!({ "set": name, "members": set.members }));
    }
    if star.is_empty() {
        rep.text
            .push("note: S* is empty, so T* is every residue".to_string());
    }
    Ok(rep)
}

fn cmd_verify(cfg: &RunConfig, scope: Scope) -> Result<Report, CliError> {
    let (p, r, s) = (cfg.prime(), cfg.r, cfg.s);
    let mut rep = Report::new(
        cfg,
        json!({
            "scope": scope.name(), "p": p, "r": r, "s": s, "m": cfg.m,
            "nmax": cfg.n, "n": cfg.depth, "force": cfg.force,
        }),
    );

    if scope.includes(Scope::Theorem) || scope.includes(Scope::Corollary) {
        let xi = xi_r(r, cfg.n)?;
        if scope.includes(Scope::Theorem) {
            let ms = match cfg.m {
                Some(m) => vec![m],
                None => t_star(p, r, s)?.members,
            };
            if ms.is_empty() {
                let msg = format!("T*({p},{r},{s}) is empty; nothing to check");
                rep.text.push(format!("SKIP [theorem] {msg}"));
                rep.results
                    .push(json!({ "check": "theorem", "skipped": msg }));
            }
            for m in ms {
                let check = verify_theorem(p, r, s, m, &xi, cfg.n, cfg.force)?;
                rep.push_check("theorem", &check);
            }
        }
        if scope.includes(Scope::Corollary) {
            for rel in binomial_family(p, r)? {
                rep.push_check("corollary", &rel.check(&xi, cfg.n)?);
            }
        }
    }

    if scope.includes(Scope::Dissection) {
        let depth = cfg.depth;
        rep.push_check("dissection", &verify_alpha_at_i0(p, depth)?);
        rep.push_check("dissection", &verify_alpha_vanishing(p, depth)?);
        rep.push_check("dissection", &verify_alpha_stability(p, depth)?);
        for i in 0..p {
            rep.push_check("dissection", &verify_derivative_identity(p, i, depth)?);
        }
        // z = 1/24 and m = floor(p/24) make i0 the residue itself
        let i0 = i0_of(p)?;
        let x: Vec<ExactRat> = xi_bar_p(p, depth)?.values.iter().map(int_to_rat).collect();
        let z = ExactRat::new(1.into(), 24.into());
        let mut a1 = verify_a1_system(p, &z, (p / 24) as i64, &x, depth)?;
        a1.note(format!("i0 = {}, X(k) = xibar_p(k)", i0.i0));
        rep.push_check("dissection", &a1);
    }
    let checks = rep.results.len();
    rep.text.push(format!(
        "{}: {checks} checks",
        if rep.pass { "PASS" } else { "FAIL" }
    ));
    Ok(rep)
}

fn relation_json(rel: &CongruenceRelation) -> Value {
    json!({ "coeffs": rel.coeffs, "provenance": rel.provenance, "text": rel.describe() })
}

fn cmd_relations(cfg: &RunConfig) -> Result<Report, CliError> {
    let (p, r) = (cfg.prime(), cfg.r);
    let mut rep = Report::new(
        cfg,
        json!({ "p": p, "r": r, "rows": cfg.rows, "nmax": cfg.n }),
    );
    let xi = xi_r(r, cfg.n)?;
    let space = relation_space(p, r, cfg.rows, &xi)?;
    let stable = space.stabilized(STABLE_WINDOW);
    let conj = space.conjectured_dimension();

    rep.text.push(format!(
        "p = {p}, r = {r}: {} rows, xi_r up to {}",
        cfg.rows, cfg.n
    ));
    rep.text.push(format!(
        "dimension {} (upper bound), conjectured (p+1)/2 = {conj}",
        space.dimension
    ));
    rep.text.push(format!(
        "last change at row {}; stabilized over {STABLE_WINDOW} rows: {}",
        space.last_change,
        if stable {
            "yes"
        } else {
            "NO, dimension is only an upper bound"
        }
    ));
    if stable {
        let cmp = match space.dimension.cmp(&conj) {
            std::cmp::Ordering::Equal => "equals",
            std::cmp::Ordering::Greater => "exceeds",
            std::cmp::Ordering::Less => "is below",
        };
        rep.text.push(format!("observed dimension {cmp} (p+1)/2"));
    }
    rep.text.push("basis:".into());
    for b in &space.basis {
        rep.text.push(format!("  {}", b.describe()));
    }
    rep.results.push(json!({
        "kind": "space",
        "dimension": space.dimension,
        "conjectured_dimension": conj,
        "rows": space.rows_used,
        "history": space.history,
        "last_change": space.last_change,
        "stable_window": STABLE_WINDOW,
        "stabilized": stable,
        "basis": space.basis.iter().map(relation_json).collect::<Vec<_>>(),
    }));

    let family = binomial_family(p, r)?;
    rep.text
        .push(format!("binomial family ({}):", family.len()));
    let mut fam_json = Vec::new();
    for rel in &family {
        let inside = membership(&space, rel)?;
        rep.pass &= inside;
        let s = match rel.provenance {
            Provenance::Binomial { s, .. } => s.to_string(),
            _ => "?".into(),
        };
        rep.text.push(format!(
            "  s={s}: {}  [in space: {}]",
            rel.describe(),
            yes_no(inside)
        ));
        let mut v = relation_json(rel);
        v["in_space"] = json!(inside);
        fam_json.push(v);
    }
    rep.results
        .push(json!({ "kind": "family", "relations": fam_json }));

    let named = known_relations(p, r);
    if !named.is_empty() {
        rep.text.push("named relations:".into());
    }
    let mut named_json = Vec::new();
    for rel in &named {
        let inside = membership(&space, rel)?;
        let in_fam = in_span(&family, rel)?;
        rep.pass &= inside;
        let label = match &rel.provenance {
            Provenance::Given(l) => l.clone(),
            _ => rel.describe(),
        };
        rep.text.push(format!(
            "  {label}: in space {}, in binomial-family span {}",
            yes_no(inside),
            yes_no(in_fam)
        ));
        let mut v = relation_json(rel);
        v["in_space"] = json!(inside);
        v["in_family_span"] = json!(in_fam);
        named_json.push(v);
    }
    rep.results
        .push(json!({ "kind": "named", "relations": named_json }));
    Ok(rep)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
