//! Command-line driver: argument parsing, JSON encoding and exit codes.

pub mod json;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cubica_core::analyzer::{analyze, analyze_on, classify, purely_cubic_closure, resolvent};
use cubica_core::bitwist::{enumerate_classes, FamilyTag};
use cubica_core::descent::{construct, enumerate_descents, twists_descent, twists_descent_with, DescentProblem, DescentResult};
use cubica_core::parshin::explicit::{PHI, PHI_PSI, PSI};
use cubica_core::parshin::{genus1_parshin, parshin_cover, weierstrass_parshin};
use cubica_core::pure_cubic::{bitwist_reps_deg3, count_pure, enumerate_pure, twists_pure, twists_pure_with};
use cubica_core::{acceptance, Field, Place};
use serde_json::{json, Value};

use json::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Domain(#[from] cubica_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Schema(_) | CliError::Io(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cubica", version, about = "Cubic function fields with prescribed ramification")]
pub struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Purely cubic extensions.
    #[command(subcommand)]
    Pure(PureCommand),
    /// Impure extensions with a given purely cubic closure.
    Descend(DescendArgs),
    /// Ramification, genus, closure and resolvent of a cubic model.
    Analyze(AnalyzeArgs),
    /// Representatives of the bi-twist families.
    Bitwists {
        #[arg(long)]
        tag: String,
        #[arg(long)]
        field: String,
    },
    /// Covers of curves branched over a single point.
    #[command(subcommand)]
    Parshin(ParshinCommand),
    /// Run the acceptance checks.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum PureCommand {
    /// One model per geometric class, totally ramified over the given places.
    Enumerate {
        #[arg(long)]
        field: String,
        #[arg(long)]
        places: String,
    },
    /// Number of classes with `t` ramified places, `s` of degree divisible by 3.
    Count { s: i64, t: i64 },
    /// Twists of a purely cubic model.
    Twists {
        #[arg(long)]
        field: String,
        #[arg(long)]
        model: String,
        /// Cube-class representatives to use (required over Q).
        #[arg(long)]
        units: Option<String>,
    },
    /// Bi-twist representatives with branch locus of degree 3.
    Bitwists3 {
        #[arg(long)]
        field: String,
    },
}

#[derive(Debug, Args)]
pub struct DescendArgs {
    #[arg(long)]
    pub field: String,
    /// Purely cubic closure, e.g. {"kummer": ["0", "1"]}.
    #[arg(long)]
    pub closure: String,
    #[arg(long)]
    pub places: String,
    /// One sign (1 or -1) per place; all 1 by default.
    #[arg(long)]
    pub signs: Option<String>,
    /// Emit every descent up to global sign.
    #[arg(long)]
    pub all_signs: bool,
    /// Also emit the twists of the descent.
    #[arg(long)]
    pub twists: bool,
    /// Norm-one elements for twists (required over Q).
    #[arg(long)]
    pub units: Option<String>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub field: String,
    #[arg(long)]
    pub model: String,
    /// Over Q: every zero and pole of alpha and of alpha^2 - 4c^3.
    #[arg(long)]
    pub places: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ParshinCommand {
    /// The genus-one family with parameter lambda.
    Genus1 {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Cover of y^2 = (x^2 - 4c^3) g(x) branched over infinity.
    Weierstrass {
        #[arg(long)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Cover of W / i branched at the image of P, from a point Q on W.
    Cover {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        point: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

/// A bare scalar argument is read as a JSON string when it is not JSON.
fn scalar(k: &Field, arg: &str) -> Result<cubica_core::FieldElement, CliError> {
    let v = serde_json::from_str(arg).unwrap_or_else(|_| Value::String(arg.to_string()));
    element(k, &v)
}

fn count_json(n: &num_bigint::BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn run(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Pure(p) => run_pure(p),
        Command::Descend(d) => run_descend(d),
        Command::Analyze(a) => run_analyze(a),
        Command::Bitwists { tag, field } => {
            let k = parse_field(field)?;
            let tag: FamilyTag = tag.parse()?;
            let (dt, ds, g) = tag.row();
            let mut out = models_json(&enumerate_classes(tag, &k)?);
            out["tag"] = json!(tag.to_string());
            out["row"] = json!({ "deg_total": dt, "deg_partial": ds, "genus": g });
            Ok(out)
        }
        Command::Parshin(p) => run_parshin(p),
        Command::Selftest => Ok(selftest()),
    }
}

fn run_pure(cmd: &PureCommand) -> Result<Value, CliError> {
    match cmd {
        PureCommand::Enumerate { field, places: ps } => {
            let k = parse_field(field)?;
            Ok(models_json(&enumerate_pure(&k, &places(&k, &parse_arg(ps)?)?)?))
        }
        PureCommand::Count { s, t } => Ok(json!({ "s": s, "t": t, "count": count_json(&count_pure(*s, *t)?) })),
        PureCommand::Twists { field, model: m, units } => {
            let k = parse_field(field)?;
            let m = model(&k, &parse_arg(m)?)?;
            let tw = match units {
                Some(u) => twists_pure_with(&m, &elements(&k, &parse_arg(u)?)?)?,
                None => twists_pure(&m)?,
            };
            Ok(models_json(&tw))
        }
        PureCommand::Bitwists3 { field } => Ok(models_json(&bitwist_reps_deg3(&parse_field(field)?)?)),
    }
}

fn descent_json(r: &DescentResult, places: &[Place]) -> Value {
    let report = match analyze(&r.model) {
        Ok(rep) => report_json(&rep),
        Err(_) => match analyze_on(&r.model, places) {
            Ok(rep) => report_json(&rep),
            Err(e) => json!({ "unavailable": e.to_string() }),
        },
    };
    json!({
        "c": element_json(&r.c()),
        "alpha": ratfunc_json(r.alpha()),
        "equation": r.model.equation(),
        "case": r.case.tag(),
        "theta": { "P": ratfunc_json(&r.theta_p), "Q": ratfunc_json(&r.theta_q) },
        "lambda": element_json(&r.lambda),
        "report": report,
    })
}

fn run_descend(d: &DescendArgs) -> Result<Value, CliError> {
    let k = parse_field(&d.field)?;
    let closure = quadratic(&k, &parse_arg(&d.closure)?)?;
    let t = places(&k, &parse_arg(&d.places)?)?;
    let mut ctx = t.clone();
    ctx.extend(closure.branch_places()?);
    ctx.sort();
    ctx.dedup();
    if d.all_signs {
        let all = enumerate_descents(&closure, &t)?;
        return Ok(json!({
            "count": all.len(),
            "descents": all.iter().map(|r| descent_json(r, &ctx)).collect::<Vec<_>>(),
        }));
    }
    let signs: Vec<i8> = match &d.signs {
        Some(s) => serde_json::from_value(parse_arg(s)?)
            .map_err(|e| CliError::Schema(format!("signs must be a list of 1 and -1: {e}")))?,
        None => vec![1; t.len()],
    };
    if signs.iter().any(|s| *s != 1 && *s != -1) {
        return Err(CliError::Schema("signs must be 1 or -1".into()));
    }
    let problem = DescentProblem::new(closure, t, &signs)?;
    let mut out = descent_json(&construct(&problem)?, &ctx);
    if d.twists {
        let tw = match &d.units {
            Some(u) => twists_descent_with(&problem, &elements(&k, &parse_arg(u)?)?)?,
            None => twists_descent(&problem)?,
        };
        out["twists"] = models_json(&tw);
    }
    Ok(out)
}

fn run_analyze(a: &AnalyzeArgs) -> Result<Value, CliError> {
    let k = parse_field(&a.field)?;
    let m = model(&k, &parse_arg(&a.model)?)?;
    let report = match &a.places {
        Some(p) => analyze_on(&m, &places(&k, &parse_arg(p)?)?)?,
        None => analyze(&m)?,
    };
    let mut out = report_json(&report);
    out["model"] = model_json(&m);
    // Closure and resolvent are optional extras; over Q they may need
    // factorizations the caller did not supply.
    let extra = |r: cubica_core::Result<Value>| r.unwrap_or_else(|e| json!({ "unavailable": e.to_string() }));
    out["purely_cubic_closure"] = extra(purely_cubic_closure(&m).map(|c| quad_class_json(&c)));
    out["resolvent"] = extra(resolvent(&m).map(|c| quad_class_json(&c)));
    out["classification"] = extra(classify(&m).map(|c| classification_json(&c)));
    Ok(out)
}

fn ramification_json(r: &cubica_core::parshin::explicit::DoubleCoverRamification) -> Value {
    json!({
        "total_over": places_json(&r.total),
        "partial_over": places_json(&r.partial),
        "genus_base": r.base_genus,
        "genus_cover": r.cover_genus,
    })
}

fn run_parshin(cmd: &ParshinCommand) -> Result<Value, CliError> {
    match cmd {
        ParshinCommand::Genus1 { lambda, field } => {
            let k = parse_field(field)?;
            let g = genus1_parshin(&scalar(&k, lambda)?)?;
            Ok(json!({
                "lambda": element_json(&g.lambda),
                "Z": g.z_equation(),
                "Y": g.y_equation(),
                "X": g.x_equation(),
                "psi": PSI,
                "phi": PHI,
                "phi_psi": PHI_PSI,
                "cover": model_json(&g.cover),
                "ramification": ramification_json(&g.ramification),
            }))
        }
        ParshinCommand::Weierstrass { g, c, field } => {
            let k = parse_field(field)?;
            let w = weierstrass_parshin(&poly(&k, &parse_arg(g)?)?, &scalar(&k, c)?)?;
            Ok(json!({
                "c": element_json(&w.c),
                "X": w.x_equation(),
                "Y": w.y_equation(),
                "map": w.map(),
                "cover": model_json(&w.cover),
                "ramification": ramification_json(&w.ramification),
            }))
        }
        ParshinCommand::Cover { curve, point: p, field } => {
            let k = parse_field(field)?;
            let w = etale_curve(&k, &parse_arg(curve)?)?;
            let qt = point(&k, &parse_arg(p)?)?;
            let c = parshin_cover(&w, &qt)?;
            Ok(json!({
                "W": format!("v^2 = {}", w.rhs().to_string_in("u")),
                "X": format!("y^2 = {}", c.x_rhs.to_string_in("x")),
                "Q_tilde": point_json(&c.q_tilde),
                "E": mumford_json(&c.e),
                "three_E": mumford_json(&c.three_e),
                "P_tilde": point_json(&c.p_tilde),
                "partner": point_json(&c.partner),
                "P": point_json(&c.branch_point),
                "lambda": element_json(&c.lambda),
                "f": { "a": ratfunc_json(&c.f.a), "b": ratfunc_json(&c.f.b) },
                "alpha": {
                    "a": poly_json(&c.alpha.a),
                    "b": poly_json(&c.alpha.b),
                    "c": poly_json(&c.alpha.c),
                    "text": c.alpha.to_string(),
                },
                "equation": c.equation(),
                "genus": c.genus,
            }))
        }
    }
}

/// Runs every acceptance check; the table goes to standard error.
pub fn selftest() -> Value {
    let mut rows = Vec::new();
    let mut all = true;
    for c in acceptance::criteria() {
        let start = Instant::now();
        let outcome = (c.check)();
        let ms = start.elapsed().as_millis() as u64;
        let in_time = c.limit_ms.is_none_or(|l| ms <= l);
        let (passed, detail) = match outcome {
            Ok(d) if in_time => (true, d),
            Ok(_) => (false, format!("over budget of {} ms", c.limit_ms.unwrap_or(0))),
            Err(e) => (false, e.to_string()),
        };
        all &= passed;
        eprintln!("{} {:>2} {:<28} {ms:>6} ms  {detail}", if passed { "PASS" } else { "FAIL" }, c.id, c.name);
        rows.push(json!({ "id": c.id, "name": c.name, "passed": passed, "ms": ms, "limit_ms": c.limit_ms, "detail": detail }));
    }
    json!({ "passed": all, "criteria": rows })
}
