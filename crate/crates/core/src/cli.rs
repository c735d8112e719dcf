//! Expression parsing and the `bn-ogs` command line.
//!
//! Accepted element expressions:
//!
//! * a window `[-2,-1,-4,-3]`;
//! * a word `s0 s1 s2` (whitespace separated, empty word not allowed);
//! * a product `tau1^-1*tau2*tau4^-3` or `t3^2*t5^3`, exponents defaulting
//!   to 1 and reduced modulo the generator's order;
//! * `e` for the identity.
//!
//! The rank is the window length, the largest letter plus one, or the
//! largest generator index, unless `--n` asks for a larger one.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::factor::uv_factorize;
use crate::metrics::{descents, greedy_reduce, length, normal_form};
use crate::ogs::{from_product, to_ogs, TauPower};
use crate::oracle;
use crate::perm::{CoxeterWord, SignedPermutation};
use crate::sn::{elementary_factorize, t_apply, tau_to_t};
use crate::{Error, Result};

/// How an expression was written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Window,
    Word,
    Tau,
    T,
    Identity,
}

impl Representation {
    pub fn name(self) -> &'static str {
        match self {
            Self::Window => "window",
            Self::Word => "word",
            Self::Tau => "tau",
            Self::T => "t",
            Self::Identity => "identity",
        }
    }
}

/// A parsed element expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementExpr {
    pub representation: Representation,
    pub rank: usize,
    pub element: SignedPermutation,
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Parses an element expression; `rank` overrides the inferred rank.
pub fn parse(input: &str, rank: Option<usize>) -> Result<ElementExpr> {
    let start = input.len() - input.trim_start().len();
    let text = input.trim();
    if text.is_empty() {
        return Err(perr(0, "empty expression"));
    }
    if rank == Some(0) {
        return Err(perr(0, "rank must be positive"));
    }
    let (representation, inferred, element) = if text.starts_with('[') {
        let w: SignedPermutation = text.parse().map_err(|e| match e {
            Error::Parse { pos, msg } => perr(start + pos, msg),
            other => perr(start, other.to_string()),
        })?;
        (Representation::Window, w.rank(), w)
    } else if text == "e" {
        let n = rank.unwrap_or(1);
        (Representation::Identity, n, SignedPermutation::identity(n))
    } else if text.starts_with('s') {
        let word = parse_word(text, start)?;
        (Representation::Word, word.rank(), word.eval())
    } else {
        parse_product(text, start)?
    };
    let n = rank.unwrap_or(inferred);
    if n < inferred {
        return Err(perr(
            start,
            format!("expression needs rank {inferred}, but --n is {n}"),
        ));
    }
    Ok(ElementExpr {
        representation,
        rank: n,
        element: element.embed(n)?,
    })
}

fn parse_word(text: &str, start: usize) -> Result<CoxeterWord> {
    let mut letters = Vec::new();
    let mut pos = start;
    for tok in text.split(' ') {
        if !tok.is_empty() {
            let digits = tok
                .strip_prefix('s')
                .ok_or_else(|| perr(pos, format!("expected a letter s<k>, found {tok:?}")))?;
            let l = parse_uint(digits, pos + 1)?;
            letters.push(l);
        }
        pos += tok.len() + 1;
    }
    let n = letters.iter().max().map_or(1, |&m| m + 1);
    CoxeterWord::new(n, letters)
}

fn parse_uint(s: &str, pos: usize) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(perr(pos, format!("expected an index, found {s:?}")));
    }
    s.parse()
        .map_err(|_| perr(pos, format!("index {s} is too large")))
}

fn parse_product(text: &str, start: usize) -> Result<(Representation, usize, SignedPermutation)> {
    let mut rep: Option<Representation> = None;
    let mut factors: Vec<(usize, i64)> = Vec::new();
    let mut pos = start;
    for raw in text.split('*') {
        let lead = raw.len() - raw.trim_start().len();
        let tok = raw.trim();
        let p = pos + lead;
        pos += raw.len() + 1;
        if tok.is_empty() {
            return Err(perr(p, "missing factor"));
        }
        if tok == "e" {
            continue;
        }
        let (kind, rest, skip) = if let Some(r) = tok.strip_prefix("tau") {
            (Representation::Tau, r, 3)
        } else if let Some(r) = tok.strip_prefix('t') {
            (Representation::T, r, 1)
        } else {
            return Err(perr(p, format!("unrecognized factor {tok:?}")));
        };
        if let Some(prev) = rep.filter(|&r| r != kind) {
            return Err(perr(
                p,
                format!("cannot mix {} and {} factors", prev.name(), kind.name()),
            ));
        }
        rep = Some(kind);
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (rest, None),
        };
        let k = parse_uint(idx, p + skip)?;
        if k == 0 {
            return Err(perr(p + skip, "generator index must be positive"));
        }
        let e = match exp {
            None => 1,
            Some(e) => {
                let e = e.trim_start_matches('{').trim_end_matches('}');
                e.parse::<i64>().map_err(|_| {
                    perr(p + skip + idx.len() + 1, format!("invalid exponent {e:?}"))
                })?
            }
        };
        factors.push((k, e));
    }
    let n = factors.iter().map(|f| f.0).max().unwrap_or(1);
    let rep = rep.unwrap_or(Representation::Identity);
    let element = match rep {
        Representation::T => {
            let window = (1..=n as i32)
                .map(|j| {
                    factors
                        .iter()
                        .fold(j, |x, &(k, e)| t_apply(k, e.rem_euclid(k as i64) as i32, x))
                })
                .collect();
            SignedPermutation::from_window(window)?
        }
        _ => {
            let powers: Vec<TauPower> = factors
                .iter()
                .map(|&(k, e)| TauPower::normalized(k, e))
                .collect();
            from_product(n, &powers)?.to_permutation()
        }
    };
    Ok((rep, n, element))
}

#[derive(Debug, Parser)]
#[command(
    name = "bn-ogs",
    version,
    about = "Canonical forms, lengths and descents in the hyperoctahedral group B_n"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Rank (embeds the element into a larger B_n; required by `verify`).
    #[arg(long, global = true)]
    n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert an element to another representation.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coxeter length.
    Length {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Left descent set.
    Descents {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Elementary or alternating u·v factorization.
    Factorize {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        check: Check,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Window,
    Word,
    Ogs,
    TOgs,
    Normal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Elementary,
    Uv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Check {
    Bijection,
    Exchange,
    Lengths,
    Descents,
    Factorizations,
    All,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Self::Bijection => "bijection",
            Self::Exchange => "exchange",
            Self::Lengths => "lengths",
            Self::Descents => "descents",
            Self::Factorizations => "factorizations",
            Self::All => "all",
        }
    }
}

/// A command's result: text lines plus the JSON `result` object.
struct Output {
    text: String,
    result: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, result: Value) -> Self {
        Self {
            text: text.into(),
            result,
            ok: true,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

/// Runs the command line on `args` (including the program name).
/// Returns the process exit code: 0 on success, 1 on a domain error or a
/// failed verification, 2 on a parse or usage error.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let (input, rank, representation, output) = match dispatch(&cli) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let written = if cli.json {
        let doc = json!({
            "input": input,
            "rank": rank,
            "representation": representation,
            "result": output.result,
        });
        writeln!(out, "{doc}")
    } else {
        writeln!(out, "{}", output.text)
    };
    if written.is_err() {
        return 1;
    }
    if output.ok {
        0
    } else {
        1
    }
}

fn dispatch(cli: &Cli) -> Result<(String, usize, &'static str, Output)> {
    if let Command::Verify { check } = cli.command {
        let n = cli.n.ok_or_else(|| perr(0, "verify needs --n <rank>"))?;
        let reports = oracle::verify(check.name(), n)?;
        let text = reports
            .iter()
            .map(|r| {
                let mut s = format!(
                    "{} n={}: {} ({} cases)",
                    r.check,
                    r.n,
                    if r.passed() { "pass" } else { "FAIL" },
                    r.cases
                );
                for f in &r.failures {
                    s.push_str(&format!(
                        "\n  {}: expected {}, got {}",
                        f.input, f.expected, f.actual
                    ));
                }
                s
            })
            .collect::<Vec<_>>()
            .join("\n");
        let mut output = Output::new(text, json!({ "reports": reports }));
        output.ok = reports.iter().all(|r| r.passed());
        return Ok((check.name().to_string(), n, "report", output));
    }
    let expr_text = match &cli.command {
        Command::Convert { expr, .. }
        | Command::Length { expr }
        | Command::Descents { expr }
        | Command::Factorize { expr, .. } => expr,
        Command::Verify { .. } => unreachable!(),
    };
    let expr = parse(expr_text, cli.n)?;
    let w = &expr.element;
    let output = match &cli.command {
        Command::Convert { to, .. } => convert(w, *to)?,
        Command::Length { .. } => {
            let l = length(&to_ogs(w));
            Output::new(l.to_string(), json!({ "length": l }))
        }
        Command::Descents { .. } => {
            let d = descents(w);
            Output::new(d.to_string(), json!({ "descents": d.to_vec() }))
        }
        Command::Factorize {
            mode: Mode::Elementary,
            ..
        } => {
            let fz = elementary_factorize(&to_ogs(w))?;
            let factors: Vec<String> = fz.factors.iter().map(|f| f.to_string()).collect();
            let boundaries = fz
                .boundaries
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>();
            Output::new(
                format!(
                    "z: {}\nfactors: {}\nboundaries: {}",
                    fz.z,
                    factors.join("·"),
                    boundaries.join(" ")
                ),
                json!({ "z": fz.z, "factors": factors, "boundaries": fz.boundaries }),
            )
        }
        Command::Factorize { mode: Mode::Uv, .. } => {
            let fz = uv_factorize(&to_ogs(w));
            let us: Vec<String> = fz.us.iter().map(|u| u.to_string()).collect();
            Output::new(
                fz.to_string(),
                json!({ "r": fz.r(), "us": us, "ps": fz.ps, "display": fz.to_string() }),
            )
        }
        Command::Verify { .. } => unreachable!(),
    };
    Ok((
        expr_text.clone(),
        expr.rank,
        expr.representation.name(),
        output,
    ))
}

fn convert(w: &SignedPermutation, to: Target) -> Result<Output> {
    Ok(match to {
        Target::Window => Output::new(w.to_string(), json!({ "window": w.window() })),
        Target::Word => {
            let word = greedy_reduce(w);
            Output::new(
                word.to_string(),
                json!({ "word": word.to_string(), "letters": word.letters() }),
            )
        }
        Target::Ogs => {
            let e = to_ogs(w);
            Output::new(
                e.to_string(),
                json!({ "ogs": e.to_string(), "exponents": e.as_slice() }),
            )
        }
        Target::TOgs => {
            let t = tau_to_t(&to_ogs(w))?;
            Output::new(
                t.to_string(),
                json!({ "t_ogs": t.to_string(), "exponents": t.as_slice() }),
            )
        }
        Target::Normal => {
            let nf = normal_form(w);
            let y =
                nf.y.iter()
                    .map(|y| y.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
            Output::new(
                format!("y: {y}\nword: {}", nf.word),
                json!({ "y": nf.y, "word": nf.word.to_string(), "length": nf.length() }),
            )
        }
    })
}
