//! The `deltan` command line: `ideals`, `classify`, `verify`, `explain`.
//!
//! Exit codes are 0 on success, 1 when a verified claim fails and 2 on
//! usage, parse or binding errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::dsl::{parse_expansion, parse_ideal, parse_ring, ParseError};
use crate::error::Error;
use crate::expansion::{Expansion, Recipe};
use crate::ideal::{enumerate_ideals, Ideal};
use crate::predicates::{
    delta_n_witness, delta_primary_witness, is_delta_n_ideal, n_ideal_witness, DeltaNMethod,
};
use crate::ring::Ring;
use crate::verifier::{self, Corpus, DEFAULT_WITNESS_CAP};

#[derive(Parser, Debug)]
#[command(name = "deltan", version, about = "δ-n-ideals of small commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the ideal lattice with sizes and generators.
    Ideals { ring: String },
    /// Print the classification flags of one ideal.
    Classify {
        ring: String,
        ideal: String,
        /// Expansion for the δ-n and δ-primary tests (default d1).
        #[arg(long)]
        delta: Option<String>,
    },
    /// Run the claim registry over a corpus.
    Verify {
        /// Comma-separated claim ids; default is every theorem and audit.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// `default` or a corpus file.
        #[arg(long, default_value = "default")]
        corpus: String,
        /// Also write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        witness_cap: usize,
    },
    /// Print a claim's statement and anchor.
    Explain { claim: String },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn parse_failure(what: &str, text: &str, e: ParseError) -> Failure {
    let line = text.lines().nth(e.line - 1).unwrap_or("");
    Failure {
        code: 2,
        message: format!("cannot parse {what}: {e}\n  {line}\n  {}^", " ".repeat(e.column - 1)),
    }
}

fn bind_ring(text: &str) -> Result<Ring, Failure> {
    let spec = parse_ring(text).map_err(|e| parse_failure("ring", text, e))?;
    Ok(Ring::new(&spec)?)
}

fn bind_ideal(r: &Ring, text: &str) -> Result<Ideal, Failure> {
    let gens = parse_ideal(text).map_err(|e| parse_failure("ideal", text, e))?;
    let elems = gens.iter().map(|g| r.element(g)).collect::<crate::Result<Vec<_>>>()?;
    Ok(Ideal::from_generators(r, &elems)?)
}

fn bind_expansion(r: &Ring, text: &str) -> Result<Expansion, Failure> {
    let recipe = parse_expansion(text).map_err(|e| parse_failure("expansion", text, e))?;
    Ok(Expansion::new(r, &recipe)?)
}

fn ideals(ring: &str) -> Result<String, Failure> {
    let r = bind_ring(ring)?;
    let all = enumerate_ideals(&r)?;
    let mut out = String::new();
    let _ = writeln!(out, "{r}: {} ideals", all.len());
    for i in &all {
        let _ = writeln!(out, "  {:>4}  {i}", i.len().unwrap_or(0));
    }
    Ok(out)
}

fn pair(w: Option<(crate::Element, crate::Element)>) -> String {
    match w {
        Some((a, b)) => format!(" (witness a={a}, b={b})"),
        None => String::new(),
    }
}

fn classify(ring: &str, ideal: &str, delta: Option<&str>) -> Result<String, Failure> {
    let r = bind_ring(ring)?;
    let i = bind_ideal(&r, ideal)?;
    let d = match delta {
        Some(t) => bind_expansion(&r, t)?,
        None => Expansion::new(&r, &Recipe::Delta1)?,
    };
    let c = i.classify();
    let nw = n_ideal_witness(&i)?;
    let qw = n_ideal_witness(&i.radical())?;
    let mut out = String::new();
    let _ = writeln!(out, "ring: {r}");
    let _ = writeln!(out, "ideal: {i}");
    let _ = writeln!(out, "expansion: {}  delta(I) = {}", d.recipe(), d.apply(&i)?);
    for (name, v) in [
        ("proper", c.is_proper),
        ("prime", c.is_prime),
        ("maximal", c.is_maximal),
        ("primary", c.is_primary),
        ("superfluous", c.is_superfluous),
    ] {
        let _ = writeln!(out, "{name}: {v}");
    }
    let _ = writeln!(out, "n-ideal: {}{}", nw.is_none(), pair(nw));
    let _ = writeln!(out, "quasi n-ideal: {}{}", qw.is_none(), pair(qw));
    for m in DeltaNMethod::ALL {
        let v = match is_delta_n_ideal(&i, &d, m) {
            Ok(v) => v.to_string(),
            Err(Error::Infinite(_)) => "n/a on ZZ".to_string(),
            Err(e) => return Err(e.into()),
        };
        let _ = writeln!(out, "delta-n-ideal [{}]: {v}", m.name());
    }
    let dw = delta_n_witness(&i, &d)?;
    if let Some(w) = &dw {
        let _ = writeln!(out, "delta-n witness: a={}, b={}", w.0, w.1);
    }
    let pw = delta_primary_witness(&i, &d)?;
    let _ = writeln!(out, "delta-primary: {}{}", pw.is_none(), pair(pw));
    Ok(out)
}

fn verify(
    claims: Option<Vec<String>>,
    corpus: &str,
    json: Option<PathBuf>,
    cap: usize,
) -> Result<(String, bool), Failure> {
    let corpus = if corpus == "default" {
        verifier::builtin_corpus()
    } else {
        let text = std::fs::read_to_string(corpus).map_err(|e| Failure {
            code: 2,
            message: format!("cannot read corpus {corpus}: {e}"),
        })?;
        Corpus::from_text(&text)?
    };
    let report = verifier::run(&corpus, claims.as_deref(), cap)?;
    let mut out = report.to_text();
    match json.as_deref() {
        Some(p) if p.as_os_str() == "-" => out = report.to_json(),
        Some(p) => std::fs::write(p, report.to_json()).map_err(|e| Failure {
            code: 2,
            message: format!("cannot write {}: {e}", p.display()),
        })?,
        None => {}
    }
    Ok((out, report.failed_claims() == 0))
}

/// Runs one parsed command; the string goes to stdout.
pub fn execute(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Ideals { ring } => ideals(&ring),
        Command::Classify { ring, ideal, delta } => classify(&ring, &ideal, delta.as_deref()),
        Command::Verify {
            claims,
            corpus,
            json,
            witness_cap,
        } => {
            let (out, ok) = verify(claims, &corpus, json, witness_cap)?;
            if ok {
                Ok(out)
            } else {
                Err(Failure { code: 1, message: out })
            }
        }
        Command::Explain { claim } => Ok(verifier::explain(&claim)?),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code: 1, message }) => {
            print!("{message}");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
