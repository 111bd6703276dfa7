//! Command-line front end: `check`, `search`, `bivar`, `oracle` and `bounds`.
//!
//! Exit codes: 0 irreducible (or command completed), 2 inconclusive,
//! 3 precondition violated, 4 budget exhausted, 5 oracle contradiction,
//! 64 usage or parse error.

pub mod document;
pub mod parse;

use clap::{Args, Parser, Subcommand, ValueEnum};
use document::{CertificateDocument, TaggedCheck};
use irreducibility::arith::{Int, Rat, DEFAULT_EFFORT};
use irreducibility::bivar::{certify_bivar, BiPoly, BivarCertificate, BivarOptions};
use irreducibility::criteria::{self, Certificate, CertifyOptions, DivisorMode, Verdict};
use irreducibility::fieldpoly::{FactorField, PrimeField, Rationals};
use irreducibility::oracle::{
    exhaustive_bivar_factor, factor_integer_poly, kronecker_factor, OracleStatus, DEFAULT_BIVAR_BUDGET,
    DEFAULT_BUDGET,
};
use irreducibility::unipoly::{best_root_bound, rouche_search, routh_hurwitz, Stability, UniPoly};
use irreducibility::Error;
use parse::{parse_poly, ParseError, PolyExpr};
use num_traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

pub const EXIT_IRREDUCIBLE: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_CONTRADICTION: i32 = 5;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "irred", version, about = "Certify irreducibility of integer and bivariate polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify f from the pair of values f(a), f(b); without --a, try the prime-value route at b.
    Check(CheckArgs),
    /// Scan integer pairs (a, b) for a certificate.
    Search(SearchArgs),
    /// Certify f(x, y) irreducible over K(x) from f(x, a(x)) and f(x, b(x)).
    Bivar(BivarArgs),
    /// Factor with the independent oracle.
    Oracle(OracleArgs),
    /// Root bounds, Eneström–Kakeya and Routh–Hurwitz reports.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Divisors {
    Admissible,
    Unitary,
    Auto,
}

impl From<Divisors> for DivisorMode {
    fn from(d: Divisors) -> Self {
        match d {
            Divisors::Admissible => DivisorMode::Admissible,
            Divisors::Unitary => DivisorMode::Unitary,
            Divisors::Auto => DivisorMode::Auto,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Divisors::Auto)]
    divisors: Divisors,
    /// Emit the JSON certificate document.
    #[arg(long)]
    json: bool,
    /// Cross-check with the oracle; a contradiction exits with 5.
    #[arg(long)]
    verify: bool,
    /// Record phase timings (makes output run-dependent).
    #[arg(long)]
    timings: bool,
    /// Step budget for each integer factorization.
    #[arg(long, default_value_t = DEFAULT_EFFORT)]
    effort: u64,
    /// Oracle budget in divisor tuples or candidates.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    poly: String,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    a: Option<Int>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    b: Int,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    poly: String,
    /// Inclusive range `LO..HI`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-10..10")]
    a_range: (i64, i64),
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-10..10")]
    b_range: (i64, i64),
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug)]
enum FieldSpec {
    Q,
    Gfp(PrimeField),
}

#[derive(Args, Debug)]
struct BivarArgs {
    /// `q` for the rationals or `gfp:P` for a prime field.
    #[arg(long, value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long)]
    poly: String,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// X-degree cap for the exhaustive search under --verify.
    #[arg(long)]
    degx_cap: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    poly: String,
    /// Omit for integer polynomials; `gfp:P` searches bivariate factors over GF(P).
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldSpec>,
    #[arg(long)]
    degx_cap: Option<usize>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    poly: String,
    /// Centers `c` at which to run Routh–Hurwitz on f(x + c).
    #[arg(long = "shift", allow_hyphen_values = true, value_parser = parse_rat)]
    shifts: Vec<Rat>,
    #[arg(long)]
    json: bool,
}

fn parse_int(s: &str) -> Result<Int, String> {
    s.trim().parse().map_err(|_| format!("'{s}' is not an integer"))
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let bad = || format!("'{s}' is not a rational number");
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (Int, Int) = (n.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?);
            if d == Int::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("'{s}' is not a range LO..HI");
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let (lo, hi): (i64, i64) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    match s.trim() {
        "q" | "Q" => Ok(FieldSpec::Q),
        other => {
            let p = other
                .strip_prefix("gfp:")
                .ok_or_else(|| format!("'{s}' is neither 'q' nor 'gfp:P'"))?
                .parse::<u64>()
                .map_err(|_| format!("'{s}': P must be a positive integer"))?;
            PrimeField::new(p).map(FieldSpec::Gfp).map_err(|e| e.to_string())
        }
    }
}

/// Outcome of one command: the exit code plus what to print.
struct Report {
    code: i32,
    text: String,
    doc: Option<CertificateDocument>,
}

enum Failure {
    Parse(String, ParseError),
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PreconditionViolated(_) | Error::ZeroConstantTerm => EXIT_PRECONDITION,
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::Reverify(_) => EXIT_CONTRADICTION,
    }
}

fn parse_expr(text: &str) -> Result<PolyExpr, Failure> {
    parse_poly(text).map_err(|e| Failure::Parse(text.to_string(), e))
}

fn parse_uni(text: &str) -> Result<UniPoly, Failure> {
    parse_expr(text)?
        .to_unipoly()
        .ok_or_else(|| Failure::Usage(format!("'{text}' must be a polynomial in x only")))
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let (json, result) = match cli.command {
        Command::Check(a) => (a.common.json, cmd_check(&a)),
        Command::Search(a) => (a.common.json, cmd_search(&a)),
        Command::Bivar(a) => (a.common.json, cmd_bivar(&a)),
        Command::Oracle(a) => (a.json, cmd_oracle(&a)),
        Command::Bounds(a) => (a.json, cmd_bounds(&a)),
    };
    match result {
        Ok(report) => {
            match (&report.doc, json) {
                (Some(doc), true) => {
                    let _ = writeln!(out, "{}", doc.to_json());
                }
                _ => {
                    let _ = write!(out, "{}", report.text);
                }
            }
            report.code
        }
        Err(Failure::Parse(src, e)) => {
            let _ = writeln!(err, "error: {e}\n  {src}\n  {}^", " ".repeat(e.position));
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Irreducible => EXIT_IRREDUCIBLE,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn tagged(cert: &Certificate) -> Vec<TaggedCheck> {
    let pre = cert.preconditions.iter().map(|c| TaggedCheck { criterion: "precondition".into(), check: c.clone() });
    let rest = cert.attempts.iter().flat_map(|a| {
        a.checks.iter().map(move |c| TaggedCheck { criterion: a.criterion.to_string(), check: c.clone() })
    });
    pre.chain(rest).collect()
}

fn timing(timings: &mut BTreeMap<String, u64>, name: &str, start: Instant) {
    timings.insert(name.into(), start.elapsed().as_micros() as u64);
}

fn uni_document(command: &str, input: BTreeMap<String, String>, cert: &Certificate) -> CertificateDocument {
    let mut doc = CertificateDocument::new(command, input, cert.verdict.to_string(), to_value(cert));
    doc.criterion = cert.criterion.map(|c| c.to_string());
    let winning = cert.criterion.and_then(|c| c.quotient_kind()).and_then(|k| cert.quotient_for(k));
    let quotient = winning.or(cert.quotient.as_ref()).or(cert.quotient_unitary.as_ref());
    doc.q = quotient.map(|q| q.value.to_string());
    doc.divisors = quotient.map(to_value);
    doc.bound = cert.bound.as_ref().map(to_value);
    doc.checks = tagged(cert);
    doc.factorizations = cert.values.as_ref().map(|v| {
        BTreeMap::from([("f(a)".to_string(), v.fact_a.to_string()), ("f(b)".to_string(), v.fact_b.to_string())])
    });
    doc
}

fn describe(cert: &Certificate) -> String {
    let mut s = format!("f = {}\n", cert.poly);
    if let Some(a) = &cert.a {
        s += &format!("a = {a}\n");
    }
    if let Some(b) = &cert.b {
        s += &format!("b = {b}\n");
    }
    if let Some(v) = &cert.values {
        s += &format!("f(a) = {} = {}, f'(a) = {}\n", v.fa, v.fact_a, v.dfa);
        s += &format!("f(b) = {} = {}, f'(b) = {}\n", v.fb, v.fact_b, v.dfb);
    }
    if let Some(p) = &cert.pattern {
        let binds: Vec<String> = p.binding.iter().map(|b| format!("{} = {}", b.name, b.value)).collect();
        s += &format!("pattern: {} ({})\n", p.id.as_str(), binds.join(", "));
    }
    for q in [&cert.quotient, &cert.quotient_unitary].into_iter().flatten() {
        s += &format!("q ({:?}) = {} with d1 = {}, d2 = {}\n", q.kind, q.value, q.d1, q.d2).to_lowercase();
    }
    if let Some(b) = &cert.bound {
        let rel = if b.strict { "<" } else { "<=" };
        s += &format!("root bound: M {rel} {} ({:?})\n", b.value, b.source);
    }
    s += &format!("verdict: {}\n", cert.verdict);
    if let Some(c) = cert.criterion {
        s += &format!("criterion: {c}\n");
    }
    if let Some(c) = cert.corollary {
        s += &format!("via: {c}\n");
    }
    s += "checks:\n";
    for t in tagged(cert) {
        s += &format!("  [{}] {}\n", t.criterion, t.check);
    }
    s
}

/// Runs the Kronecker oracle; returns its JSON summary and whether it refutes `cert`.
fn verify_uni(f: &UniPoly, irreducible: bool, budget: u64, text: &mut String) -> Result<(Value, bool), Failure> {
    if f.degree().unwrap_or(0) < 2 {
        *text += "oracle: degree below 2, nothing to factor\n";
        return Ok((json!({"status": "not_applicable"}), false));
    }
    let r = kronecker_factor(f, budget)?;
    let summary = match &r.status {
        OracleStatus::Irreducible => "irreducible".to_string(),
        OracleStatus::Factored { g, h } => format!("factored ({g})({h})"),
        OracleStatus::BudgetExceeded => "budget exceeded".to_string(),
    };
    *text += &format!("oracle: {summary} [{} tuples]\n", r.stats.tuples_tried);
    let contradiction = irreducible && r.is_factored();
    if contradiction {
        *text += "CONTRADICTION: certificate says irreducible but the oracle found a factor\n";
    }
    Ok((to_value(&r), contradiction))
}

fn finish_uni(
    command: &str,
    input: BTreeMap<String, String>,
    cert: Certificate,
    common: &Common,
    mut timings: BTreeMap<String, u64>,
) -> Result<Report, Failure> {
    let start = Instant::now();
    let rechecked = cert.reverify()?;
    timing(&mut timings, "reverify", start);
    if rechecked != cert.verdict {
        return Err(Failure::Core(Error::Reverify("certificate verdict does not re-derive".into())));
    }
    let mut text = describe(&cert);
    let mut doc = uni_document(command, input, &cert);
    let mut code = verdict_code(cert.verdict);
    if common.verify {
        let start = Instant::now();
        let (value, contradiction) =
            verify_uni(&cert.poly, cert.is_irreducible(), common.budget.unwrap_or(DEFAULT_BUDGET), &mut text)?;
        timing(&mut timings, "oracle", start);
        doc.oracle = Some(value);
        if contradiction {
            code = EXIT_CONTRADICTION;
        }
    }
    if common.timings {
        doc.timings = Some(timings);
    }
    Ok(Report { code, text, doc: Some(doc) })
}

fn cmd_check(args: &CheckArgs) -> Result<Report, Failure> {
    let f = parse_uni(&args.poly)?;
    let options = CertifyOptions { divisors: args.common.divisors.into(), effort: args.common.effort };
    let mut input = BTreeMap::from([
        ("poly".to_string(), PolyExpr::from_unipoly(&f).to_string()),
        ("field".to_string(), "Z".to_string()),
        ("b".to_string(), args.b.to_string()),
        ("divisors".to_string(), format!("{:?}", args.common.divisors).to_lowercase()),
    ]);
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let cert = match &args.a {
        Some(a) => {
            input.insert("a".into(), a.to_string());
            criteria::certify(&f, a, &args.b, options)?
        }
        None => criteria::certify_prime_value(&f, &args.b, options)?,
    };
    timing(&mut timings, "certify", start);
    finish_uni("check", input, cert, &args.common, timings)
}

fn cmd_search(args: &SearchArgs) -> Result<Report, Failure> {
    let f = parse_uni(&args.poly)?;
    let options = CertifyOptions { divisors: args.common.divisors.into(), effort: args.common.effort };
    let input = BTreeMap::from([
        ("poly".to_string(), PolyExpr::from_unipoly(&f).to_string()),
        ("field".to_string(), "Z".to_string()),
        ("a_range".to_string(), format!("{}..{}", args.a_range.0, args.a_range.1)),
        ("b_range".to_string(), format!("{}..{}", args.b_range.0, args.b_range.1)),
        ("divisors".to_string(), format!("{:?}", args.common.divisors).to_lowercase()),
    ]);
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let cert = criteria::search(&f, args.a_range.0..=args.a_range.1, args.b_range.0..=args.b_range.1, options)?;
    timing(&mut timings, "search", start);
    finish_uni("search", input, cert, &args.common, timings)
}

fn describe_bivar(c: &BivarCertificate) -> String {
    let mut s = format!("f = {} over {}\n", c.poly, c.field);
    s += &format!("a = {}, b = {}{}\n", c.a, c.b, if c.swapped { " (swapped)" } else { "" });
    s += &format!("f(x,a) = {} (degree {})\n", c.fa, c.deg_fa);
    s += &format!("f(x,b) = {} (degree {})\n", c.fb, c.deg_fb);
    let lambda = c.lambda.as_ref().map_or("-inf".to_string(), ToString::to_string);
    s += &format!("delta = {}, lambda = {}\n", c.delta, lambda);
    for (name, fac) in [("f(x,a)", &c.factorization_a), ("f(x,b)", &c.factorization_b)] {
        if let Some(fac) = fac {
            s += &format!("{name} = {fac}\n");
        }
    }
    for q in [&c.quotient, &c.quotient_unitary].into_iter().flatten() {
        s += &format!("q ({:?}) = {} with deg d1 = {}, deg d2 = {}\n", q.kind, q.value, q.d1_degree, q.d2_degree)
            .to_lowercase();
    }
    s += &format!("verdict: {}\n", c.verdict);
    if let Some(k) = c.criterion {
        s += &format!("criterion: {k}\n");
    }
    s += "checks:\n";
    for a in &c.attempts {
        for chk in &a.checks {
            s += &format!("  [{}] {chk}\n", a.criterion);
        }
    }
    s
}

fn run_bivar<F: FactorField>(
    field: F,
    args: &BivarArgs,
    expr: &PolyExpr,
    a: &PolyExpr,
    b: &PolyExpr,
) -> Result<(BivarCertificate, BTreeMap<String, u64>), Failure> {
    let f = expr.to_bipoly(field);
    let (Some(pa), Some(pb)) = (a.to_field_poly(field), b.to_field_poly(field)) else {
        return Err(Failure::Usage("--a and --b must be polynomials in x only".into()));
    };
    let options = BivarOptions {
        divisors: args.common.divisors.into(),
        budget: args.common.budget.unwrap_or(DEFAULT_BUDGET),
    };
    let start = Instant::now();
    let cert = certify_bivar(&f, &pa, &pb, options)?;
    let mut timings = BTreeMap::new();
    timing(&mut timings, "certify", start);
    Ok((cert, timings))
}

fn cmd_bivar(args: &BivarArgs) -> Result<Report, Failure> {
    let expr = parse_expr(&args.poly)?;
    let (a, b) = (parse_expr(&args.a)?, parse_expr(&args.b)?);
    let (cert, mut timings) = match args.field {
        FieldSpec::Q => run_bivar(Rationals, args, &expr, &a, &b)?,
        FieldSpec::Gfp(k) => run_bivar(k, args, &expr, &a, &b)?,
    };
    let field_name = match args.field {
        FieldSpec::Q => "Q".to_string(),
        FieldSpec::Gfp(k) => format!("GF({})", k.p()),
    };
    let input = BTreeMap::from([
        ("poly".to_string(), expr.to_string()),
        ("field".to_string(), field_name),
        ("a".to_string(), a.to_string()),
        ("b".to_string(), b.to_string()),
        ("divisors".to_string(), format!("{:?}", args.common.divisors).to_lowercase()),
    ]);
    let mut text = describe_bivar(&cert);
    let mut doc = CertificateDocument::new("bivar", input, cert.verdict.to_string(), to_value(&cert));
    doc.criterion = cert.criterion.map(|c| c.to_string());
    let quotient = match cert.criterion {
        Some(k) if k.as_str().contains('7') || k.as_str().contains('8') => cert.quotient_unitary.as_ref(),
        _ => cert.quotient.as_ref().or(cert.quotient_unitary.as_ref()),
    };
    doc.q = quotient.map(|q| q.value.to_string());
    doc.divisors = quotient.map(to_value);
    doc.bound = Some(json!({
        "delta": cert.delta.to_string(),
        "lambda": cert.lambda.as_ref().map(ToString::to_string),
    }));
    doc.checks = cert
        .attempts
        .iter()
        .flat_map(|a| a.checks.iter().map(|c| TaggedCheck { criterion: a.criterion.to_string(), check: c.clone() }))
        .collect();
    let mut factorizations = BTreeMap::new();
    if let Some(f) = &cert.factorization_a {
        factorizations.insert("f(x,a)".to_string(), f.clone());
    }
    if let Some(f) = &cert.factorization_b {
        factorizations.insert("f(x,b)".to_string(), f.clone());
    }
    doc.factorizations = Some(factorizations);
    let mut code = verdict_code(cert.verdict);
    if args.common.verify {
        match args.field {
            FieldSpec::Gfp(k) => {
                let start = Instant::now();
                let budget = args.common.budget.unwrap_or(DEFAULT_BIVAR_BUDGET);
                let r = exhaustive_bivar_factor(&expr.to_bipoly(k), args.degx_cap, budget)?;
                timing(&mut timings, "oracle", start);
                let status = match &r.status {
                    OracleStatus::Irreducible => "irreducible".to_string(),
                    OracleStatus::Factored { g, h } => format!("factored ({g})({h})"),
                    OracleStatus::BudgetExceeded => "budget exceeded".to_string(),
                };
                text += &format!("oracle: {status} [{} candidates, x-degree cap {}]\n", r.candidates_tried, r.degx_cap);
                if cert.is_irreducible() && matches!(r.status, OracleStatus::Factored { .. }) {
                    text += "CONTRADICTION: certificate says irreducible but the oracle found a factor\n";
                    code = EXIT_CONTRADICTION;
                }
                doc.oracle = Some(to_value(&r));
            }
            FieldSpec::Q => {
                text += "oracle: exhaustive search is only available over gfp:P\n";
                doc.oracle = Some(json!({"status": "not_applicable"}));
            }
        }
    }
    if args.common.timings {
        doc.timings = Some(timings);
    }
    Ok(Report { code, text, doc: Some(doc) })
}

fn cmd_oracle(args: &OracleArgs) -> Result<Report, Failure> {
    let expr = parse_expr(&args.poly)?;
    let input = |field: &str| {
        BTreeMap::from([("poly".to_string(), expr.to_string()), ("field".to_string(), field.to_string())])
    };
    match args.field {
        None | Some(FieldSpec::Q) => {
            let f = expr
                .to_unipoly()
                .ok_or_else(|| Failure::Usage("the integer oracle takes a polynomial in x only".into()))?;
            let fac = factor_integer_poly(&f, args.budget.unwrap_or(DEFAULT_BUDGET))?;
            let mut text = String::new();
            let neg = fac.content < Int::from(0);
            let unit = if neg { -fac.content.clone() } else { fac.content.clone() };
            if neg {
                text.push('-');
            }
            if unit != Int::from(1) || fac.factors.is_empty() {
                text += &unit.to_string();
            }
            for (g, e) in &fac.factors {
                text += &format!("({g})");
                if *e > 1 {
                    text += &format!("^{e}");
                }
            }
            text.push('\n');
            let verdict = if fac.is_irreducible() && fac.content.magnitude() == &1u32.into() {
                "irreducible"
            } else {
                "reducible"
            };
            text += &format!("{verdict}\n");
            let mut doc = CertificateDocument::new("oracle", input("Z"), verdict.into(), to_value(&fac));
            doc.factorizations = Some(BTreeMap::from([("f".to_string(), text.lines().next().unwrap().to_string())]));
            Ok(Report { code: 0, text, doc: Some(doc) })
        }
        Some(FieldSpec::Gfp(k)) => {
            let f: BiPoly<PrimeField> = expr.to_bipoly(k);
            let r = exhaustive_bivar_factor(&f, args.degx_cap, args.budget.unwrap_or(DEFAULT_BIVAR_BUDGET))?;
            let (text, verdict, code) = match &r.status {
                OracleStatus::Irreducible => {
                    let scope = if r.complete { "" } else { " within the x-degree cap" };
                    (format!("irreducible over GF({})(x){scope}\n", k.p()), "irreducible", 0)
                }
                OracleStatus::Factored { g, h } => (format!("({g})({h})\nreducible\n"), "reducible", 0),
                OracleStatus::BudgetExceeded => ("budget exceeded\n".to_string(), "budget_exceeded", EXIT_BUDGET),
            };
            let doc = CertificateDocument::new("oracle", input(&format!("GF({})", k.p())), verdict.into(), to_value(&r));
            Ok(Report { code, text, doc: Some(doc) })
        }
    }
}

fn cmd_bounds(args: &BoundsArgs) -> Result<Report, Failure> {
    let f = parse_uni(&args.poly)?;
    if f.degree().unwrap_or(0) == 0 {
        return Err(Failure::Core(Error::PreconditionViolated("bounds need a nonconstant polynomial".into())));
    }
    let cauchy = f.cauchy_bound();
    let rouche = rouche_search(&f);
    // the flag reports whether the Enestrom-Kakeya route applies, which needs a_0 != 0
    let chain = f.is_enestrom_kakeya() || (-&f).is_enestrom_kakeya();
    let a0_nonzero = !f.coeff(0).is_zero();
    let ek = f.is_enestrom_kakeya() && a0_nonzero;
    let ek_neg = (-&f).is_enestrom_kakeya() && a0_nonzero;
    let best = best_root_bound(&f);
    let mut text = format!("f = {f}\ncauchy: {cauchy}\n");
    match &rouche {
        Some(r) => {
            let tried: Vec<String> =
                r.tried.iter().map(|(x, ok)| format!("{x}:{}", if *ok { "ok" } else { "fails" })).collect();
            text += &format!("rouche: {} (tried {})\n", r.best, tried.join(", "));
        }
        None => text += "rouche: none\n",
    }
    text += &format!("enestrom-kakeya: {ek}\n");
    if ek_neg && !ek {
        text += "enestrom-kakeya (-f): true\n";
    }
    let rel = if best.strict { "<" } else { "<=" };
    text += &format!("best bound: M {rel} {} ({:?})\n", best.value, best.source);
    let mut routh = Vec::new();
    for c in &args.shifts {
        let s = routh_hurwitz(&f.shift(c));
        let name = match s {
            Stability::Stable => "stable",
            Stability::NotStable => "not stable",
            Stability::Inconclusive => "inconclusive",
        };
        text += &format!("routh at shift {c}: {name}\n");
        routh.push(json!({"shift": c.to_string(), "stability": to_value(&s)}));
    }
    let report = json!({
        "cauchy": cauchy.to_string(),
        "rouche": rouche.as_ref().map(|r| json!({
            "best": r.best.to_string(),
            "tried": r.tried.iter().map(|(x, ok)| json!({"radius": x.to_string(), "holds": ok})).collect::<Vec<_>>(),
        })),
        "enestrom_kakeya": ek,
        "enestrom_kakeya_negated": ek_neg,
        "coefficient_chain": chain,
        "best_bound": to_value(&best),
        "routh": routh,
    });
    let input = BTreeMap::from([("poly".to_string(), PolyExpr::from_unipoly(&f).to_string())]);
    let mut doc = CertificateDocument::new("bounds", input, "report".into(), report);
    doc.bound = Some(to_value(&best));
    Ok(Report { code: 0, text, doc: Some(doc) })
}
