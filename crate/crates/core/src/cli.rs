//! Command-line front end. Every command builds a JSON report; the text
//! format is a rendering of that same JSON.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{classify, iso_bruteforce, iso_tuples, IsoReport, Verdict};
use crate::error::{Error, Result};
use crate::families::{build_family, validate_tuple, Tuple};
use crate::field::Field;
use crate::grid::{acceptance_grid, run_grid, GridOptions};
use crate::hopfcore::{coradical_filtration, group_likes, verify_hopf, FiltrationSummary, HopfAlgebra};
use crate::io::{from_file, read_input, to_file, Input};
use crate::qcomb::{coefficient_sweep, fermat_check, power_identities, vanishing_sweep};
use crate::rep::{
    analyze_seeded, block_identify, blocks_with, cartan_matrix, composition_series, projective_covers, SPLIT_SEED,
};

/// Exit status: every requested check passed.
pub const EXIT_OK: i32 = 0;
/// A check failed, the input violates a hypothesis, or a verdict is negative.
pub const EXIT_FAILED: i32 = 1;
/// Unreadable input, bad usage or an invalid tuple.
pub const EXIT_INPUT: i32 = 2;
/// The answer needs a larger field; the message names the degree.
pub const EXIT_EXTEND: i32 = 3;
/// An enumeration ran over budget or a verdict is undecided.
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "hopfforge", version, about = "Pointed rank-one Hopf algebras over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Resolve tuple inputs over GF(p^d), given as `p,d`.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<(u32, u32)>,
    /// Enumeration budget; overrides HOPFFORGE_BUDGET.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Seed for the random splitting elements of the representation code.
    #[arg(long, global = true, default_value_t = SPLIT_SEED)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the algebra of a tuple file and write it as an algebra file.
    Build {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the Hopf axioms and the coradical filtration.
    Verify { input: PathBuf },
    /// Skew point, type and normalized tuple of a pointed rank-one algebra.
    Classify { input: PathBuf },
    /// Decide whether two inputs give isomorphic Hopf algebras.
    Iso { first: PathBuf, second: PathBuf },
    /// Radical, simples, projective covers, Cartan matrix and blocks.
    Rep {
        input: PathBuf,
        /// Jacobson radical: dimension, nilpotency index and basis.
        #[arg(long)]
        radical: bool,
        /// Simple modules with their central idempotents.
        #[arg(long)]
        simples: bool,
        /// Projective covers with radical layers and socles.
        #[arg(long)]
        projectives: bool,
        /// Block decomposition.
        #[arg(long)]
        blocks: bool,
        /// Cartan matrix.
        #[arg(long)]
        cartan: bool,
    },
    /// Closed-form coefficients, power identities and q-binomial vanishing.
    Selftest {
        /// Primes to check.
        #[arg(short = 'p', value_delimiter = ',', default_values_t = [2u32, 3, 5, 7])]
        primes: Vec<u32>,
        /// Largest exponent; defaults to 2p for each p.
        #[arg(short = 'k')]
        max_k: Option<usize>,
        /// Largest n for the vanishing sweep (run for p = 2 and 3).
        #[arg(long, default_value_t = 64)]
        max_n: usize,
    },
    /// Sweep the acceptance grid of tuples.
    Grid {
        /// Skip the block checks.
        #[arg(long)]
        no_blocks: bool,
    },
}

fn parse_field(s: &str) -> std::result::Result<(u32, u32), String> {
    let (p, d) = s.split_once(',').ok_or_else(|| "expected p,d".to_string())?;
    let p: u32 = p.trim().parse().map_err(|e| format!("p: {e}"))?;
    let d: u32 = d.trim().parse().map_err(|e| format!("d: {e}"))?;
    if d == 0 {
        return Err("d must be positive".into());
    }
    Ok((p, d))
}

/// What the process prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ExtendField { .. } => EXIT_EXTEND,
        Error::Budget(_) => EXIT_BUDGET,
        Error::Precondition(_) => EXIT_FAILED,
        _ => EXIT_INPUT,
    }
}

/// Runs one command. Reports are deterministic for identical inputs.
pub fn run(cli: &Cli) -> Outcome {
    if let Some(b) = cli.budget {
        std::env::set_var("HOPFFORGE_BUDGET", b.to_string());
    }
    match dispatch(cli) {
        Ok((code, report)) => Outcome { code, stdout: render(cli.format, &report), stderr: String::new() },
        Err(e) => {
            let mut report = json!({ "error": e.to_string(), "exit": exit_code(&e) });
            if let Error::ExtendField { min_degree, .. } = &e {
                report["hint"] = json!(format!("for tuple inputs pass --field p,{min_degree}"));
            }
            Outcome { code: exit_code(&e), stdout: String::new(), stderr: render(cli.format, &report) }
        }
    }
}

fn render(format: Format, v: &Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("reports serialize") + "\n",
        Format::Text => {
            let mut out = String::new();
            text(v, 0, &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

/// Flat objects become one `key=value` line; nested values are indented.
fn text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match x {
                    Value::Object(m) if m.values().all(|y| scalar(y).is_some()) => {
                        let parts: Vec<String> = m.iter().map(|(k, y)| format!("{k}={}", scalar(y).unwrap())).collect();
                        out.push_str(&format!("{pad}- {}\n", parts.join(" ")));
                    }
                    _ => match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}-\n"));
                            text(x, depth + 1, out);
                        }
                    },
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// An input file as an algebra, plus its tuple when it was a tuple file.
pub struct Loaded {
    pub hopf: HopfAlgebra,
    pub tuple: Option<Tuple>,
}

pub fn load(path: &Path, field: Option<(u32, u32)>) -> Result<Loaded> {
    match read_input(path)? {
        Input::Tuple(spec) => {
            let mut t = Tuple::from_spec(&spec)?;
            let bad = validate_tuple(&t);
            if !bad.is_empty() {
                let msg: Vec<String> = bad.iter().map(|v| v.to_string()).collect();
                return Err(Error::invalid(msg.join("; ")));
            }
            if let Some((p, d)) = field {
                if p != spec.p {
                    return Err(Error::invalid(format!("--field {p},{d}: the tuple has characteristic {}", spec.p)));
                }
                if d % spec.field_degree != 0 {
                    return Err(Error::invalid(format!(
                        "--field {p},{d}: GF({p}^{}) does not embed in GF({p}^{d})",
                        spec.field_degree
                    )));
                }
                t = t.lift_to(Arc::new(Field::new(p, d)?))?;
            }
            Ok(Loaded { hopf: build_family(&t)?, tuple: Some(t) })
        }
        Input::Algebra(a) => {
            if let Some((p, d)) = field {
                if (p, d) != (a.field.p, a.field.d) {
                    return Err(Error::invalid("--field only changes the field of tuple inputs"));
                }
            }
            Ok(Loaded { hopf: from_file(&a)?, tuple: None })
        }
    }
}

fn field_name(h: &HopfAlgebra) -> String {
    let f = h.field();
    format!("GF({}^{})", f.p(), f.d())
}

fn dispatch(cli: &Cli) -> Result<(i32, Value)> {
    match &cli.command {
        Command::Build { input, output } => build(input, output.as_deref(), cli.field),
        Command::Verify { input } => verify(&load(input, cli.field)?),
        Command::Classify { input } => {
            let l = load(input, cli.field)?;
            let r = classify(&l.hopf)?;
            Ok((EXIT_OK, to_value(&r.summary(&l.hopf))))
        }
        Command::Iso { first, second } => iso(&load(first, cli.field)?, &load(second, cli.field)?),
        Command::Rep { input, radical, simples, projectives, blocks, cartan } => {
            let any = *radical || *simples || *projectives || *blocks || *cartan;
            let sel = RepSelection {
                radical: !any || *radical,
                simples: !any || *simples,
                projectives: !any || *projectives,
                blocks: !any || *blocks,
                cartan: !any || *cartan,
            };
            rep(&load(input, cli.field)?, sel, cli.seed)
        }
        Command::Selftest { primes, max_k, max_n } => selftest(primes, *max_k, *max_n),
        Command::Grid { no_blocks } => grid(!*no_blocks),
    }
}

fn build(input: &Path, output: Option<&Path>, field: Option<(u32, u32)>) -> Result<(i32, Value)> {
    let l = load(input, field)?;
    if l.tuple.is_none() {
        return Err(Error::invalid(format!("{}: build expects a tuple file", input.display())));
    }
    let file = to_value(&to_file(&l.hopf));
    match output {
        None => Ok((EXIT_OK, file)),
        Some(out) => {
            let text = serde_json::to_string_pretty(&file).expect("algebra files serialize") + "\n";
            std::fs::write(out, text).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            Ok((
                EXIT_OK,
                json!({ "output": out.display().to_string(), "dim": l.hopf.dim(), "field": field_name(&l.hopf) }),
            ))
        }
    }
}

fn verify(l: &Loaded) -> Result<(i32, Value)> {
    let h = &l.hopf;
    let report = verify_hopf(h);
    let ok = report.all_passed();
    let mut v = json!({
        "dim": h.dim(),
        "field": field_name(h),
        "axioms": report.checks,
        "all_passed": ok,
    });
    // the filtration only makes sense on a Hopf algebra
    if ok {
        let gl = group_likes(h)?;
        let filt = coradical_filtration(h, &gl);
        v["group_likes"] = json!(gl.elements.len());
        v["group_likes_certified"] = json!(gl.certified);
        v["filtration"] = to_value(&FiltrationSummary { dims: filt.dims(), pointed: filt.pointed, rank: filt.rank });
    }
    if let Some(t) = &l.tuple {
        v["expected_dim"] = json!(t.dim());
    }
    Ok((if ok { EXIT_OK } else { EXIT_FAILED }, v))
}

fn iso_value(r: &IsoReport, names: &[String], field: &Field) -> Value {
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "group_map": w.group_map.iter().enumerate().map(|(g, &m)| json!([names[g], names[m]])).collect::<Vec<_>>(),
            "beta": field.format(w.beta),
            "gamma": field.format(w.gamma),
        })
    });
    json!({
        "verdict": r.verdict,
        "method": r.method,
        "reason": r.reason,
        "flips_over_degree": r.flips_over_degree,
        "witness": witness,
    })
}

/// Tuples go through the criteria; algebra files are classified first and
/// fall back to the bounded search when classification does not apply.
fn iso(a: &Loaded, b: &Loaded) -> Result<(i32, Value)> {
    let tuple_of = |l: &Loaded| -> Result<Option<Tuple>> {
        match &l.tuple {
            Some(t) => Ok(Some(t.clone())),
            None => match classify(&l.hopf) {
                Ok(r) => Ok(Some(r.tuple)),
                Err(Error::Precondition(_)) | Err(Error::Invalid(_)) => Ok(None),
                Err(e) => Err(e),
            },
        }
    };
    let (ta, tb) = (tuple_of(a)?, tuple_of(b)?);
    let (report, names, route) = match (ta, tb) {
        (Some(ta), Some(tb)) => {
            let names = ta.group.names().to_vec();
            (iso_tuples(&ta, &tb)?, names, "tuples")
        }
        _ => {
            let r = iso_bruteforce(&a.hopf, &b.hopf)?;
            let names = group_likes(&a.hopf)?.elements.iter().map(|g| a.hopf.format_vector(g)).collect();
            (r, names, "search")
        }
    };
    let code = match report.verdict {
        Verdict::Isomorphic => EXIT_OK,
        Verdict::NotIsomorphic => EXIT_FAILED,
        Verdict::Undecided => EXIT_BUDGET,
    };
    let mut v = iso_value(&report, &names, a.hopf.field());
    v["route"] = json!(route);
    v["field"] = json!(field_name(&a.hopf));
    Ok((code, v))
}

#[derive(Clone, Copy, Debug)]
struct RepSelection {
    radical: bool,
    simples: bool,
    projectives: bool,
    blocks: bool,
    cartan: bool,
}

fn rep(l: &Loaded, sel: RepSelection, seed: u64) -> Result<(i32, Value)> {
    let h = &l.hopf;
    let f = h.field();
    let alg = &h.alg;
    let data = analyze_seeded(alg, seed)?;
    let mut v = json!({ "dim": h.dim(), "field": field_name(h) });
    if sel.radical {
        v["radical"] = json!({
            "dim": data.radical.dim(),
            "nilpotency_index": data.radical_index,
            "basis": data.radical.basis().iter().map(|b| h.format_vector(b)).collect::<Vec<_>>(),
        });
    }
    if sel.simples {
        v["simples"] = Value::Array(
            data.simples
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    json!({
                        "index": k,
                        "dim": s.module.dim,
                        "central_idempotent": h.format_vector(&s.central),
                        "scalars": s.scalars.as_ref().map(|xs| xs.iter().map(|&e| f.format(e)).collect::<Vec<_>>()),
                    })
                })
                .collect(),
        );
    }
    let covers = projective_covers(alg, &data);
    if sel.projectives {
        v["projectives"] = Value::Array(
            covers
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    let c = composition_series(alg, &data, m);
                    let socle: Vec<String> = c
                        .socle
                        .basis()
                        .iter()
                        .map(|s| m.to_algebra(f, s).map(|x| h.format_vector(&x)).unwrap_or_else(|| "?".into()))
                        .collect();
                    json!({
                        "head": k,
                        "idempotent": h.format_vector(&data.simples[k].primitive),
                        "dim": m.dim,
                        "layers": c.layers,
                        "uniserial": c.uniserial,
                        "socle": socle,
                        "socle_factors": c.socle_factors,
                    })
                })
                .collect(),
        );
    }
    if sel.cartan {
        v["cartan"] = json!(cartan_matrix(alg, &data, &covers));
    }
    if sel.blocks {
        let dec = blocks_with(alg, data)?;
        // blocks of a first-type family are compared with the Taft algebra on χ(a)
        let q = l.tuple.as_ref().filter(|t| t.variant == crate::families::Variant::R).map(|t| t.q());
        let mut list = Vec::new();
        for b in &dec.blocks {
            let tag = match q {
                Some(q) => Some(block_identify(alg, &dec, b, q)?),
                None => None,
            };
            list.push(json!({
                "dim": b.dim,
                "simples": b.simples,
                "cartan": b.cartan,
                "idempotent": h.format_vector(&b.idempotent),
                "tag": tag,
            }));
        }
        v["blocks"] = Value::Array(list);
    }
    Ok((EXIT_OK, v))
}

fn selftest(primes: &[u32], max_k: Option<usize>, max_n: usize) -> Result<(i32, Value)> {
    let mut ok = true;
    let mut rows = Vec::new();
    for &p in primes {
        let k = max_k.unwrap_or(2 * p as usize);
        let sweep = coefficient_sweep(p, k)?;
        let powers = power_identities(p)?;
        let fermat = fermat_check(p)?;
        let powers_ok = powers.iter().all(|c| c.passed);
        ok &= sweep.mismatches.is_empty() && powers_ok && fermat;
        rows.push(json!({
            "p": p,
            "max_k": k,
            "coefficients_checked": sweep.checked,
            "mismatches": sweep.mismatches.len(),
            "power_identities": powers_ok,
            "fermat": fermat,
        }));
    }
    let mut vanishing = Vec::new();
    for &p in primes.iter().filter(|&&p| p == 2 || p == 3) {
        for d in 1..=4 {
            let s = vanishing_sweep(p, d, max_n)?;
            ok &= s.discrepancies.is_empty();
            vanishing.push(json!({ "p": p, "d": d, "checked": s.checked, "discrepancies": s.discrepancies.len() }));
        }
    }
    Ok((if ok { EXIT_OK } else { EXIT_FAILED }, json!({ "primes": rows, "vanishing": vanishing, "all_passed": ok })))
}

fn grid(blocks: bool) -> Result<(i32, Value)> {
    let tuples = acceptance_grid();
    let rows = run_grid(&tuples, GridOptions { blocks, ..GridOptions::default() });
    let failed = rows.iter().filter(|r| !r.passed()).count();
    let v = json!({
        "tuples": rows.len(),
        "failed": failed,
        "rows": rows,
    });
    Ok((if failed == 0 { EXIT_OK } else { EXIT_FAILED }, v))
}
