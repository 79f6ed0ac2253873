//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit status together with the text for stdout and stderr, so
//! it can be driven from tests without spawning a process.
//!
//! Exit status: 0 on success, 1 on usage or validation errors, 2 when an
//! internal consistency check fails.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::actions::{geometric_signature, parse_vector, rh_genus, strata_dimension, GeneratingVector, Signature};
use crate::decomposition::{
    consistency_check, factor_dimensions, identify_factors, quotient_decomposition, quotient_genus_coset,
    reference_checks, DecompositionReport, FactorIdentification, IdentificationKind, WitnessCheck,
};
use crate::equivalence::{
    classify, classify_by_orbit, orbit_classes, ActionLabel, ENUMERATION_SOFT_LIMIT,
};
use crate::error::{DecompositionError, ShimuraError};
use crate::group::{Dihedral, Subgroup};
use crate::models::{affine_model, ModelKind, Param, PlaneModel};
use crate::rep::{dim_fix, omega, rational_irreps, Irrep, RationalIrrep};
use crate::shimura::{analytic_character, shimura_dimension, ShimuraReport};

#[derive(Debug, Parser)]
#[command(name = "dihedral-jac", about = "Dihedral actions of signature (0;2,2,2,2,n) and their Jacobians")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the topological classes of actions, or label one vector.
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vector: Option<String>,
    },
    /// Isotypical decomposition of JX and identification of its factors.
    Decompose {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vector: Option<String>,
        #[arg(long)]
        action: Option<ActionLabel>,
    },
    /// Genus and decomposition of the Jacobian of X/H.
    Quotient {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        action: Option<ActionLabel>,
        #[arg(long)]
        vector: Option<String>,
        #[arg(long)]
        subgroup: String,
    },
    /// Dimension of the Shimura domain.
    Shimura {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        action: Option<ActionLabel>,
        #[arg(long)]
        vector: Option<String>,
    },
    /// Affine plane model; params are (lambda, mu) for type1 and (a, b) otherwise.
    Model {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        action: ActionLabel,
        #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["P", "Q"])]
        params: Vec<String>,
    },
    /// Markdown report with every table for this n.
    Report {
        #[arg(long)]
        n: u32,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Validation(String),
    Consistency(String),
}

impl From<DecompositionError> for Failure {
    fn from(e: DecompositionError) -> Self {
        match e {
            DecompositionError::Action(a) => Failure::Validation(a.to_string()),
            other => Failure::Consistency(other.to_string()),
        }
    }
}

impl From<ShimuraError> for Failure {
    fn from(e: ShimuraError) -> Self {
        match e {
            ShimuraError::InvalidLabel { .. } => Failure::Validation(e.to_string()),
            other => Failure::Consistency(other.to_string()),
        }
    }
}

fn validation<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Validation(e.to_string())
}

/// Pretty JSON with keys in sorted order.
pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut stderr = String::new();
    match dispatch(&cli, &mut stderr) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr },
        Err(Failure::Validation(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            Outcome { code: 1, stdout: String::new(), stderr }
        }
        Err(Failure::Consistency(msg)) => {
            stderr.push_str(&format!("consistency failure: {msg}\n"));
            Outcome { code: 2, stdout: String::new(), stderr }
        }
    }
}

fn context(n: u32, stderr: &mut String) -> Result<Dihedral, Failure> {
    let ctx = Dihedral::new(n).map_err(validation)?;
    if n > ENUMERATION_SOFT_LIMIT {
        let _ = writeln!(
            stderr,
            "warning: n = {n} exceeds {ENUMERATION_SOFT_LIMIT}; exhaustive enumeration may be slow"
        );
    }
    Ok(ctx)
}

/// `--vector` wins over `--action`; an action resolves to its reference vector.
fn resolve_vector(
    ctx: Dihedral,
    vector: Option<&str>,
    action: Option<ActionLabel>,
) -> Result<GeneratingVector, Failure> {
    if let Some(text) = vector {
        return parse_vector(ctx, text).map_err(validation);
    }
    let label = action.ok_or_else(|| Failure::Validation("one of --vector or --action is required".into()))?;
    label.reference_vector(ctx).ok_or_else(|| {
        Failure::Validation(format!("action {label} does not exist for n = {}", ctx.n()))
    })
}

fn dispatch(cli: &Cli, stderr: &mut String) -> Result<String, Failure> {
    match &cli.command {
        Command::Classify { n, vector } => {
            let ctx = context(*n, stderr)?;
            match vector {
                Some(text) => classify_one(ctx, text, cli.json),
                None => Ok(classify_all(ctx, cli.json)),
            }
        }
        Command::Decompose { n, vector, action } => {
            let ctx = context(*n, stderr)?;
            let v = resolve_vector(ctx, vector.as_deref(), *action)?;
            decompose(&v, cli.json)
        }
        Command::Quotient { n, action, vector, subgroup } => {
            let ctx = context(*n, stderr)?;
            let v = resolve_vector(ctx, vector.as_deref(), *action)?;
            let h = ctx.parse_subgroup(subgroup).map_err(validation)?;
            quotient(&v, h, cli.json)
        }
        Command::Shimura { n, action, vector } => {
            let ctx = context(*n, stderr)?;
            let v = resolve_vector(ctx, vector.as_deref(), *action)?;
            let report = shimura_for(&v)?;
            Ok(if cli.json {
                render_json(&shimura_json(&report))
            } else {
                format!(
                    "n = {}, action {}: N = {} (closed form {}, match: {})\n",
                    report.n,
                    report.label,
                    report.dimension,
                    report.closed_form.map_or("-".to_string(), |c| c.to_string()),
                    report.matches()
                )
            })
        }
        Command::Model { n, action, params } => {
            context(*n, stderr)?;
            let p: Param = params[0].parse().map_err(validation)?;
            let q: Param = params[1].parse().map_err(validation)?;
            let model = affine_model(*action, *n, p, q).map_err(validation)?;
            Ok(if cli.json {
                render_json(&model_json(&model))
            } else {
                format!(
                    "{} (genus {}, {})\n",
                    model.equation,
                    model.genus,
                    match model.kind {
                        ModelKind::Hyperelliptic { .. } => "hyperelliptic",
                        ModelKind::EllipticNGonal { .. } => "elliptic n-gonal",
                    }
                )
            })
        }
        Command::Report { n } => {
            let ctx = context(*n, stderr)?;
            if cli.json {
                Ok(render_json(&report_json(ctx)?))
            } else {
                report_markdown(ctx)
            }
        }
    }
}

fn classify_one(ctx: Dihedral, text: &str, json: bool) -> Result<String, Failure> {
    let v = parse_vector(ctx, text).map_err(validation)?;
    let label = classify(&v);
    let by_orbit = classify_by_orbit(&v);
    if label != by_orbit {
        return Err(Failure::Consistency(format!(
            "invariant label {label} disagrees with orbit label {by_orbit}"
        )));
    }
    let geo = geometric_signature(&v);
    Ok(if json {
        render_json(&json!({
            "n": ctx.n(),
            "vector": v.to_string(),
            "label": label.as_str(),
            "geometric_signature": geo.display(ctx),
        }))
    } else {
        format!("{v}: {label}\ngeometric signature {}\n", geo.display(ctx))
    })
}

fn classify_all(ctx: Dihedral, json: bool) -> String {
    let classes = orbit_classes(ctx);
    let total: usize = classes.iter().map(|c| c.size).sum();
    if json {
        let items: Vec<Value> = classes
            .iter()
            .map(|c| {
                json!({
                    "label": c.label.as_str(),
                    "representative": c.representative.to_string(),
                    "reference": c.label.reference_vector(ctx).map(|v| v.to_string()),
                    "size": c.size,
                })
            })
            .collect();
        return render_json(&json!({ "n": ctx.n(), "vectors": total, "classes": items }));
    }
    let mut out = format!("n = {}: {} generating vectors in {} classes\n", ctx.n(), total, classes.len());
    for c in &classes {
        let _ = writeln!(
            out,
            "  {}: {} vectors, canonical {}, reference {}",
            c.label,
            c.size,
            c.representative,
            c.label.reference_vector(ctx).map_or("-".into(), |v| v.to_string())
        );
    }
    out
}

fn factor_name(ctx: Dihedral, rep: RationalIrrep) -> String {
    match rep {
        RationalIrrep::Linear(i) => format!("E{i}"),
        RationalIrrep::W(d) => {
            let _ = ctx;
            format!("B{d}")
        }
    }
}

fn target_json(target: &[(RationalIrrep, u32)]) -> Value {
    Value::Array(target.iter().map(|(r, e)| json!({ "rep": r.to_string(), "exp": e })).collect())
}

fn identification_json(ctx: Dihedral, id: &FactorIdentification) -> Value {
    match &id.kind {
        IdentificationKind::Jacobian { witnesses } => json!({
            "kind": "jacobian",
            "target": target_json(&id.target),
            "headline": witnesses.first().map(|h| h.display(ctx)),
            "witnesses": witnesses.iter().map(|h| h.display(ctx)).collect::<Vec<_>>(),
        }),
        IdentificationKind::Prym { witnesses } => json!({
            "kind": "prym",
            "target": target_json(&id.target),
            "headline": witnesses.first().map(|(h, k)| vec![h.display(ctx), k.display(ctx)]),
            "witnesses": witnesses.iter().map(|(h, k)| vec![h.display(ctx), k.display(ctx)]).collect::<Vec<_>>(),
        }),
        IdentificationKind::Unresolved => json!({
            "kind": "unresolved",
            "target": target_json(&id.target),
        }),
    }
}

fn identification_text(ctx: Dihedral, id: &FactorIdentification) -> String {
    let target: Vec<String> = id
        .target
        .iter()
        .map(|&(r, e)| if e == 1 { factor_name(ctx, r) } else { format!("{}^{e}", factor_name(ctx, r)) })
        .collect();
    let target = target.join(" x ");
    match &id.kind {
        IdentificationKind::Jacobian { witnesses } => {
            let ws: Vec<String> = witnesses.iter().map(|h| format!("J(X/{})", h.display(ctx))).collect();
            format!("{target} ~ {}", ws.join(" ~ "))
        }
        IdentificationKind::Prym { witnesses } => {
            let ws: Vec<String> = witnesses
                .iter()
                .map(|(h, k)| format!("P(X_{} / X_{})", h.display(ctx), k.display(ctx)))
                .collect();
            format!("{target} ~ {}", ws.join(" ~ "))
        }
        IdentificationKind::Unresolved => format!("{target}: unresolved"),
    }
}

fn check_json(c: &WitnessCheck) -> Value {
    json!({ "statement": c.statement, "holds": c.holds, "reason": c.reason })
}

struct Decomposed {
    report: DecompositionReport,
    identifications: Vec<FactorIdentification>,
    checks: Vec<String>,
    witness_checks: Vec<WitnessCheck>,
}

fn decompose_all(v: &GeneratingVector) -> Result<Decomposed, Failure> {
    let report = factor_dimensions(v)?;
    let checks = consistency_check(&report)?;
    let identifications = identify_factors(&report)?;
    let witness_checks = reference_checks(&report)?;
    Ok(Decomposed { report, identifications, checks, witness_checks })
}

fn decomposition_json(d: &Decomposed) -> Value {
    let ctx = d.report.ctx();
    json!({
        "vector": d.report.vector.to_string(),
        "label": d.report.label.as_str(),
        "genus": d.report.genus,
        "factors": d.report.factors.iter().map(|f| json!({
            "rep": f.rep.to_string(),
            "dim": f.dim,
            "mult": f.multiplicity,
        })).collect::<Vec<_>>(),
        "identifications": d.identifications.iter().map(|i| identification_json(ctx, i)).collect::<Vec<_>>(),
        "checks": d.checks,
        "witness_checks": d.witness_checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

fn decompose(v: &GeneratingVector, json: bool) -> Result<String, Failure> {
    let d = decompose_all(v)?;
    if json {
        return Ok(render_json(&decomposition_json(&d)));
    }
    let ctx = v.ctx();
    let mut out = format!(
        "vector {} ({}), genus {}\nJX ~ {}\n",
        v,
        d.report.label,
        d.report.genus,
        d.report
            .nonzero_factors()
            .map(|f| {
                let name = factor_name(ctx, f.rep);
                let base = format!("{name}[dim {}]", f.dim);
                if f.multiplicity == 1 {
                    base
                } else {
                    format!("{base}^{}", f.multiplicity)
                }
            })
            .collect::<Vec<_>>()
            .join(" x ")
    );
    out.push_str("identifications:\n");
    for id in &d.identifications {
        let _ = writeln!(out, "  {}", identification_text(ctx, id));
    }
    out.push_str("witness checks:\n");
    for c in &d.witness_checks {
        let _ = writeln!(out, "  [{}] {}: {}", if c.holds { "holds" } else { "fails" }, c.statement, c.reason);
    }
    let _ = writeln!(out, "consistency: {} identities checked", d.checks.len());
    Ok(out)
}

fn quotient(v: &GeneratingVector, h: Subgroup, json: bool) -> Result<String, Failure> {
    let ctx = v.ctx();
    let report = factor_dimensions(v)?;
    let q = quotient_decomposition(&report, h)?;
    let c = quotient_genus_coset(v, h)?;
    if q.genus != c.genus {
        return Err(Failure::Consistency(format!(
            "genus of X/{}: decomposition gives {}, coset action gives {}",
            h.display(ctx),
            q.genus,
            c.genus
        )));
    }
    if json {
        let exponents: serde_json::Map<String, Value> =
            q.exponents.iter().map(|(r, e)| (r.to_string(), json!(e))).collect();
        return Ok(render_json(&json!({
            "n": ctx.n(),
            "vector": v.to_string(),
            "subgroup": h.display(ctx),
            "genus_decomposition": q.genus,
            "genus_coset": c.genus,
            "degree": c.degree,
            "branch_points": c.branch_points,
            "exponents": exponents,
        })));
    }
    let parts: Vec<String> = q
        .exponents
        .iter()
        .filter(|(r, e)| **e > 0 && report.dim_of(**r) > 0)
        .map(|(r, e)| if *e == 1 { factor_name(ctx, *r) } else { format!("{}^{e}", factor_name(ctx, *r)) })
        .collect();
    Ok(format!(
        "X/{} for {}: genus {} (decomposition) = {} (cosets); degree {} over P^1; X -> X/H branched over {} points\nJ(X/H) ~ {}\n",
        h.display(ctx),
        v,
        q.genus,
        c.genus,
        c.degree,
        c.branch_points,
        if parts.is_empty() { "0".to_string() } else { parts.join(" x ") }
    ))
}

fn shimura_for(v: &GeneratingVector) -> Result<ShimuraReport, Failure> {
    let report = factor_dimensions(v)?;
    consistency_check(&report)?;
    let chi = analytic_character(&report)?;
    Ok(shimura_dimension(&chi)?)
}

fn shimura_json(r: &ShimuraReport) -> Value {
    json!({
        "n": r.n,
        "label": r.label.as_str(),
        "N": r.dimension,
        "closed_form": r.closed_form,
        "match": r.matches(),
    })
}

fn param_json(p: &Param) -> Value {
    json!(p.to_string())
}

fn model_json(m: &PlaneModel) -> Value {
    let (kind, params) = match &m.kind {
        ModelKind::Hyperelliptic { lambda, mu } => {
            ("hyperelliptic", json!({ "lambda": param_json(lambda), "mu": param_json(mu) }))
        }
        ModelKind::EllipticNGonal { a, b } => ("elliptic_n_gonal", json!({ "a": param_json(a), "b": param_json(b) })),
    };
    json!({
        "n": m.n,
        "label": m.label.as_str(),
        "kind": kind,
        "equation": m.equation,
        "genus": m.genus,
        "params": params,
    })
}

/// Nontrivial cyclic subgroups (one per conjugacy class) followed by the
/// dihedral subgroups `<a^n, s>`, `<a^2, s>`, `<a^2, as>`.
fn fixed_space_rows(ctx: Dihedral) -> Vec<Subgroup> {
    let n = ctx.n() as i64;
    let mut rows: Vec<Subgroup> = ctx
        .subgroup_classes()
        .into_iter()
        .map(|c| c.representative)
        .filter(|h| {
            h.order(ctx) > 1
                && match h {
                    Subgroup::Cyclic { .. } => true,
                    Subgroup::Dihedral { d, .. } => *d == ctx.two_n(),
                }
        })
        .collect();
    for gens in [
        [ctx.rotation(n), ctx.reflection(0)],
        [ctx.rotation(2), ctx.reflection(0)],
        [ctx.rotation(2), ctx.reflection(1)],
    ] {
        let h = ctx.subgroup_from_generators(&gens);
        if !rows.contains(&h) {
            rows.push(h);
        }
    }
    rows
}

fn fixed_space_columns(ctx: Dihedral) -> Vec<Irrep> {
    (0..4).map(Irrep::Linear).chain(omega(ctx).into_iter().map(Irrep::TwoDim)).collect()
}

fn report_rows(ctx: Dihedral) -> Result<Vec<(ActionLabel, Decomposed, ShimuraReport)>, Failure> {
    let mut rows = Vec::new();
    for label in ActionLabel::for_n(ctx.n()) {
        let v = label.reference_vector(ctx).expect("label valid for n");
        let d = decompose_all(&v)?;
        let s = shimura_for(&v)?;
        rows.push((label, d, s));
    }
    Ok(rows)
}

fn report_json(ctx: Dihedral) -> Result<Value, Failure> {
    let columns = fixed_space_columns(ctx);
    let fixed: Vec<Value> = fixed_space_rows(ctx)
        .into_iter()
        .map(|h| {
            let cells: serde_json::Map<String, Value> =
                columns.iter().map(|&v| (v.to_string(), json!(dim_fix(ctx, v, h)))).collect();
            json!({ "subgroup": h.display(ctx), "dims": cells })
        })
        .collect();
    let actions: Vec<Value> = report_rows(ctx)?
        .iter()
        .map(|(_, d, s)| json!({ "decomposition": decomposition_json(d), "shimura": shimura_json(s) }))
        .collect();
    Ok(json!({ "n": ctx.n(), "fixed_spaces": fixed, "actions": actions }))
}

fn report_markdown(ctx: Dihedral) -> Result<String, Failure> {
    let n = ctx.n();
    let sig = Signature::dihedral_family(n);
    let genus = rh_genus(ctx.order() as u64, &sig).map_err(validation)?;
    let mut out = format!("# D_{{{}}} with signature {sig}, n = {n}\n\n", 2 * n);
    let _ = writeln!(
        out,
        "Group order {}, genus {genus}, stratum dimension {}.\n",
        ctx.order(),
        strata_dimension(&sig)
    );

    out.push_str("## Actions\n\n");
    if n <= ENUMERATION_SOFT_LIMIT {
        let classes = orbit_classes(ctx);
        out.push_str("| Action | Reference vector | Canonical vector | Vectors in class |\n|---|---|---|---|\n");
        for c in &classes {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                c.label,
                c.label.reference_vector(ctx).map_or("-".into(), |v| v.to_string()),
                c.representative,
                c.size
            );
        }
    } else {
        out.push_str("Orbit enumeration skipped for n above the soft limit.\n");
    }

    out.push_str("\n## Rational irreducible representations\n\n| Rep | Degree | [K:Q] | n_i |\n|---|---|---|---|\n");
    for info in rational_irreps(ctx) {
        let _ = writeln!(out, "| {} | {} | {} | {} |", info.id, info.degree, info.field_degree, info.multiplicity);
    }

    let columns = fixed_space_columns(ctx);
    out.push_str("\n## Dimension of fixed spaces\n\n| Subgroup |");
    for c in &columns {
        let _ = write!(out, " {c} |");
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(columns.len()));
    out.push('\n');
    for h in fixed_space_rows(ctx) {
        let _ = write!(out, "| {} |", h.display(ctx));
        for &c in &columns {
            let _ = write!(out, " {} |", dim_fix(ctx, c, h));
        }
        out.push('\n');
    }

    let rows = report_rows(ctx)?;
    let reps: Vec<RationalIrrep> = rational_irreps(ctx).into_iter().map(|i| i.id).collect();
    out.push_str("\n## Dimensions of the factors\n\n| Action | Vector |");
    for &r in &reps {
        let _ = write!(out, " {} |", factor_name(ctx, r));
    }
    out.push_str("\n|---|---|");
    out.push_str(&"---|".repeat(reps.len()));
    out.push('\n');
    for (label, d, _) in &rows {
        let _ = write!(out, "| {label} | {} |", d.report.vector);
        for &r in &reps {
            let _ = write!(out, " {} |", d.report.dim_of(r));
        }
        out.push('\n');
    }

    out.push_str("\n## Factors as Jacobians and Pryms\n\n");
    for (label, d, _) in &rows {
        let _ = writeln!(out, "### {label}\n");
        for id in &d.identifications {
            let _ = writeln!(out, "- {}", identification_text(ctx, id));
        }
        for c in &d.witness_checks {
            let _ = writeln!(out, "- check `{}`: {} ({})", c.statement, if c.holds { "holds" } else { "fails" }, c.reason);
        }
        out.push('\n');
    }

    out.push_str("## Shimura domain dimensions\n\n| Action | N | Closed form | Match |\n|---|---|---|---|\n");
    for (label, _, s) in &rows {
        let _ = writeln!(
            out,
            "| {label} | {} | {} | {} |",
            s.dimension,
            s.closed_form.map_or("-".into(), |c| c.to_string()),
            s.matches()
        );
    }
    Ok(out)
}
