//! `pin2`: Manolescu invariants of Brieskorn spheres from the command line.

mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use pin2_core::borel::{abcd, from_abcd};
use pin2_core::gcomplex::{make_t, tensor_all};
use pin2_core::roots::{build_root, delta_tilde, u_module, PositionedDelta, UModule};
use pin2_core::seifert::{
    brieskorn_delta, seifert_invariants_with, BrieskornData, DTable, SeifertInvariants,
};
use pin2_core::sums::{connected_sum_chain, connected_sum_invariants};
use pin2_core::{Error, Result};
use serde_json::{json, Value};

use output::{manolescu_set, rational, Format, Record};

/// Largest complex, in cells, that `chain` will build.
const MAX_CHAIN_CELLS: usize = 600_000;

#[derive(Parser, Debug)]
#[command(
    name = "pin2",
    version,
    about = "Pin(2)-equivariant Manolescu invariants of Brieskorn spheres"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Emit JSON (the default).
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit key,value CSV rows.
    #[arg(long)]
    csv: bool,
    /// JSON array of {p, q, r, d} records overriding the built-in d table.
    #[arg(long = "d-table", value_name = "FILE")]
    d_table: Option<PathBuf>,
}

impl Common {
    fn format(&self) -> Format {
        if self.csv {
            Format::Csv
        } else {
            Format::Json
        }
    }

    fn table(&self) -> Result<DTable> {
        match &self.d_table {
            Some(path) => DTable::from_file(path),
            None => Ok(DTable::builtin()),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Delta sequence, graded root and F[U]-module of Σ(p,q,r).
    Root {
        p: u64,
        q: u64,
        r: u64,
        /// Print the reduced sequence.
        #[arg(long)]
        reduced: bool,
        /// Print the expanded sequence.
        #[arg(long)]
        expanded: bool,
        /// d-invariant, overriding the table.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// α, β, γ, δ, μ̄ and δ̃ of Σ(p,q,r).
    Invariants {
        p: u64,
        q: u64,
        r: u64,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Invariants of a connected sum given as "p,q,r;p,q,r;…".
    Sum {
        spec: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// a, b, c, d and α, β, γ, δ of a tensor product of T_D(t), given as "D:t;D:t;…".
    Chain {
        spec: String,
        m: i64,
        /// Rational, e.g. 0, 1/2 or 0.5.
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Quick)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Formula,
    Chain,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    Quick,
    Full,
}

fn parse_triple(s: &str) -> Result<(u64, u64, u64)> {
    if s.trim().starts_with('-') {
        return Err(Error::Unsupported(format!(
            "{s:?}: orientation-reversed summands are only supported through duality of a whole sum"
        )));
    }
    let xs: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::InvalidInput(format!("expected p,q,r but got {s:?}"));
    if xs.len() != 3 {
        return Err(bad());
    }
    let n: Vec<u64> = xs
        .iter()
        .map(|x| x.parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    Ok((n[0], n[1], n[2]))
}

fn parse_factor(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidInput(format!("expected D:t but got {s:?}"));
    let (d, t) = s.trim().split_once(':').ok_or_else(bad)?;
    Ok((
        d.trim().parse().map_err(|_| bad())?,
        t.trim().parse().map_err(|_| bad())?,
    ))
}

/// Exact rational from "a", "a/b" or a decimal such as "-0.25".
fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let (a, b): (i64, i64) = (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        );
        if b == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(a, b));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let whole: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10i64.pow(frac.len() as u32);
        let num: i64 = frac.parse().map_err(|_| bad())?;
        let f = Rational64::new(num, den);
        return Ok(Rational64::from(whole) + if negative { -f } else { f });
    }
    s.parse::<i64>().map(Rational64::from).map_err(|_| bad())
}

fn positioned(d: &PositionedDelta) -> Value {
    json!({ "values": d.sequence().values(), "positions": d.positions() })
}

fn module_json(m: &UModule, d: Option<i64>) -> Value {
    let finite: Vec<Value> = m
        .finite
        .iter()
        .map(|f| json!({ "bottom": f.bottom, "length": f.length, "multiplicity": f.multiplicity }))
        .collect();
    json!({
        "grading": if d.is_some() { "absolute" } else { "relative" },
        "infinite_bottom": m.infinite_bottom,
        "finite": finite,
    })
}

fn provenance(s: &SeifertInvariants) -> Value {
    let (p, q, r) = s.triple;
    json!({ "space": [p, q, r], "d": s.d, "source": s.d_source })
}

fn invariants_json(s: &SeifertInvariants) -> Value {
    json!({
        "d": s.d,
        "delta_tilde": s.delta_tilde,
        "mu_bar": rational(s.mu_bar),
        "projective": s.projective,
        "manolescu": s.manolescu.as_ref().map(manolescu_set),
    })
}

fn cmd_root(
    p: u64,
    q: u64,
    r: u64,
    reduced: bool,
    expanded: bool,
    d: Option<i64>,
    table: &DTable,
) -> Result<Record> {
    let data = BrieskornData::new(p, q, r)?;
    let exp = brieskorn_delta(p, q, r)?;
    let red = exp.reduce();
    let seq = red.sequence();
    let root = build_root(&seq);
    let dt = delta_tilde(&seq)?;
    let supplied = d;
    let (d, source) = match d {
        Some(d) => (Some(d), Some("supplied".to_string())),
        None => table
            .lookup(p, q, r)
            .map_or((None, None), |l| (Some(l.d), Some(l.source))),
    };
    let module = u_module(&root);
    let module = match d {
        Some(d) => module.anchored(d),
        None => module,
    };
    let (show_reduced, show_expanded) = if reduced || expanded {
        (reduced, expanded)
    } else {
        (true, true)
    };
    let counts: Vec<Value> = root
        .vertex_counts()
        .into_iter()
        .map(|(chi, n)| json!({ "chi": chi, "count": n }))
        .collect();
    let mut result = json!({
        "n": data.n,
        "tau": pin2_core::roots::tau(&seq).values,
        "vertex_counts": counts,
        "u_module": module_json(&module, d),
        "delta_tilde": dt.delta_tilde,
        "projective": dt.projective,
    });
    if show_expanded {
        result["expanded"] = positioned(&exp);
    }
    if show_reduced {
        result["reduced"] = positioned(&red);
    }
    let provenance = match (d, source) {
        (Some(d), Some(source)) => vec![json!({ "space": [p, q, r], "d": d, "source": source })],
        _ => Vec::new(),
    };
    Ok(Record {
        command: "root",
        inputs: json!({ "p": p, "q": q, "r": r, "reduced": reduced, "expanded": expanded, "d": supplied }),
        result,
        provenance,
    })
}

fn cmd_invariants(p: u64, q: u64, r: u64, d: Option<i64>, table: &DTable) -> Result<Record> {
    let s = seifert_invariants_with(p, q, r, d, table)?;
    Ok(Record {
        command: "invariants",
        inputs: json!({ "p": p, "q": q, "r": r, "d": d }),
        result: invariants_json(&s),
        provenance: vec![provenance(&s)],
    })
}

fn cmd_sum(spec: &str, method: Method, table: &DTable) -> Result<Record> {
    let parts: Vec<SeifertInvariants> = spec
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let (p, q, r) = parse_triple(s)?;
            seifert_invariants_with(p, q, r, None, table)
        })
        .collect::<Result<_>>()?;
    let formula = matches!(method, Method::Formula | Method::Both)
        .then(|| connected_sum_invariants(&parts))
        .transpose()?;
    let chain = matches!(method, Method::Chain | Method::Both)
        .then(|| connected_sum_chain(&parts))
        .transpose()?;
    if let (Some(f), Some(c)) = (&formula, &chain) {
        if f != c {
            return Err(Error::Internal(format!(
                "closed form {f} and chain engine {c} disagree"
            )));
        }
    }
    let m = formula.or(chain).expect("at least one method");
    let method_name = match method {
        Method::Formula => "formula",
        Method::Chain => "chain",
        Method::Both => "both",
    };
    Ok(Record {
        command: "sum",
        inputs: json!({ "spec": spec, "method": method_name }),
        result: json!({
            "manolescu": manolescu_set(&m),
            "parts": parts.iter().map(invariants_json).collect::<Vec<_>>(),
            "pipelines_agree": if method == Method::Both { Some(true) } else { None },
        }),
        provenance: parts.iter().map(provenance).collect(),
    })
}

fn cmd_chain(spec: &str, m: i64, n_text: &str) -> Result<Record> {
    let n = parse_rational(n_text)?;
    let factors: Vec<(usize, usize)> = spec
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_factor)
        .collect::<Result<_>>()?;
    if factors.is_empty() {
        return Err(Error::InvalidInput("no factors given".into()));
    }
    let complexes: Vec<_> = factors.iter().map(|&(d, t)| make_t(d, t)).collect();
    let cells = complexes.iter().try_fold(1usize, |acc, z| {
        acc.checked_mul(z.dim()).filter(|&c| c <= MAX_CHAIN_CELLS)
    });
    let Some(cells) = cells else {
        return Err(Error::Resource(format!(
            "tensor product exceeds {MAX_CHAIN_CELLS} cells"
        )));
    };
    let z = tensor_all(&complexes);
    let v = abcd(&z)?;
    let set = from_abcd(v, m, n);
    Ok(Record {
        command: "chain",
        inputs: json!({ "spec": spec, "m": m, "n": rational(n) }),
        result: json!({
            "cells": cells,
            "a": v.a,
            "b": v.b,
            "c": v.c,
            "d": v.d,
            "manolescu": manolescu_set(&set),
        }),
        provenance: Vec::new(),
    })
}

fn cmd_verify(suite: SuiteArg, table: &DTable) -> (Record, bool) {
    let suite = match suite {
        SuiteArg::Quick => verify::Suite::Quick,
        SuiteArg::Full => verify::Suite::Full,
    };
    let results = verify::run(suite, table);
    let ok = results.iter().all(|c| c.passed);
    for c in &results {
        eprintln!(
            "[{}] {}: {}",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let checks: Vec<Value> = results
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let provenance = table
        .overrides()
        .map(|e| json!({ "space": [e.p, e.q, e.r], "d": e.d, "source": "user table" }))
        .collect();
    let record = Record {
        command: "verify",
        inputs: json!({ "suite": if suite == verify::Suite::Quick { "quick" } else { "full" } }),
        result: json!({ "passed": ok, "checks": checks }),
        provenance,
    };
    (record, ok)
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let (record, ok, common) = match cli.command {
        Command::Root {
            p,
            q,
            r,
            reduced,
            expanded,
            d,
            common,
        } => (
            cmd_root(p, q, r, reduced, expanded, d, &common.table()?)?,
            true,
            common,
        ),
        Command::Invariants { p, q, r, d, common } => {
            (cmd_invariants(p, q, r, d, &common.table()?)?, true, common)
        }
        Command::Sum {
            spec,
            method,
            common,
        } => (cmd_sum(&spec, method, &common.table()?)?, true, common),
        Command::Chain { spec, m, n, common } => (cmd_chain(&spec, m, &n)?, true, common),
        Command::Verify { suite, common } => {
            let (record, ok) = cmd_verify(suite, &common.table()?);
            (record, ok, common)
        }
    };
    Ok((record.render(common.format()), ok))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
