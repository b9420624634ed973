//! `liemult`: invariants, multipliers and classification of Lie algebras
//! given as `lieconst v1` files.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use liemult::catalog::Family;
use liemult::lieconst::{self, ParseError};
use liemult::verify::{run_suite, Suite, VerifyOptions};
use liemult::{classify, fingerprint, schur_multiplier_dim, LieAlgebra, LieError, Status};

const EXIT_FAILURE: u8 = 1;
const EXIT_SYNTAX: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;

#[derive(Parser)]
#[command(name = "liemult", version, about = "Exact invariants of Lie algebras given by structure constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, derived algebra, center, lower central series and multiplier.
    Info { file: PathBuf },
    /// Schur multiplier dimension and the t, s defects.
    Multiplier { file: PathBuf },
    /// Identify a nilpotent algebra with s <= 2.
    Classify { file: PathBuf },
    /// Write a catalog algebra: `catalog NAME [PARAMS] [--plus NAME PARAMS ...] [-o FILE]`.
    #[command(allow_hyphen_values = true)]
    Catalog {
        #[arg(num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
        spec: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// An error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn lie_exit_code(e: &LieError) -> u8 {
    match e {
        LieError::NotAnIdeal | LieError::NotCentral | LieError::NotNilpotent | LieError::Abelian => {
            EXIT_PRECONDITION
        }
        LieError::ComplexNotExact => EXIT_FAILURE,
        _ => EXIT_INVALID,
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::new(lie_exit_code(&e), e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let code = match &e {
            ParseError::Syntax { .. } => EXIT_SYNTAX,
            ParseError::IndexOutOfRange { .. } => EXIT_INVALID,
            ParseError::Algebra(inner) => lie_exit_code(inner),
        };
        Failure::new(code, e.to_string())
    }
}

fn load(path: &PathBuf) -> Result<LieAlgebra, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_SYNTAX, format!("{}: {e}", path.display())))?;
    lieconst::parse(&text).map_err(|e| {
        let f = Failure::from(e);
        Failure::new(f.code, format!("{}: {}", path.display(), f.message))
    })
}

fn info(path: &PathBuf) -> Result<String, Failure> {
    let l = load(path)?;
    let fp = fingerprint(&l)?;
    let class = fp.nilpotency_class.map_or("none".to_string(), |c| c.to_string());
    let lcs: Vec<String> = fp.lcs_dims.iter().map(ToString::to_string).collect();
    Ok(format!(
        "n={}\ndimL2={}\ndimZ={}\nclass={}\nlcs={}\nnilpotent={}\nabelian={}\ndimM={}\nt={}\ns={}\n",
        fp.n,
        fp.derived_dim,
        fp.center_dim,
        class,
        lcs.join(","),
        fp.is_nilpotent(),
        fp.is_abelian(),
        fp.dim_m,
        fp.t,
        fp.s
    ))
}

fn multiplier(path: &PathBuf) -> Result<String, Failure> {
    let l = load(path)?;
    let r = schur_multiplier_dim(&l)?;
    Ok(format!(
        "dimM={} t={} s={}\nn={} rank_d2={} rank_d3={}\n",
        r.dim_m, r.t, r.s, r.n, r.rank_d2, r.rank_d3
    ))
}

fn classify_cmd(path: &PathBuf) -> Result<(String, u8), Failure> {
    let l = load(path)?;
    let r = classify(&l)?;
    let out = format!(
        "family={} s={}\nstatus={}\nparams={}\n{}\nnotes={}\n",
        r.family_id(),
        r.s,
        r.status,
        r.params_string(),
        r.fingerprint,
        r.notes
    );
    let code = if r.status == Status::TheoremViolation { EXIT_FAILURE } else { 0 };
    Ok((out, code))
}

/// Parses `NAME [PARAMS] [--plus NAME PARAMS ...] [-o FILE]` and builds the sum.
fn catalog_cmd(spec: &[String]) -> Result<String, Failure> {
    let usage = |m: String| Failure::new(EXIT_SYNTAX, m);
    let mut output: Option<PathBuf> = None;
    let mut parts: Vec<Vec<&str>> = vec![Vec::new()];
    let mut it = spec.iter();
    while let Some(tok) = it.next() {
        match tok.as_str() {
            "-o" | "--output" => {
                let f = it.next().ok_or_else(|| usage("-o needs a file name".into()))?;
                output = Some(PathBuf::from(f));
            }
            "--plus" => parts.push(Vec::new()),
            t => parts.last_mut().expect("non-empty").push(t),
        }
    }

    let mut algebra: Option<LieAlgebra> = None;
    for part in parts {
        let (name, params) = part
            .split_first()
            .ok_or_else(|| usage("expected a family name".into()))?;
        let family: Family = name.parse().map_err(|e: liemult::catalog::UnknownFamily| usage(e.to_string()))?;
        let params: Vec<usize> = params
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| usage(format!("invalid parameter `{p}`"))))
            .collect::<Result<_, _>>()?;
        if params.len() != family.arity() {
            return Err(usage(format!(
                "{family} takes {} parameter(s), got {}",
                family.arity(),
                params.len()
            )));
        }
        let entry = family.entry(&params).ok_or_else(|| {
            Failure::new(EXIT_PRECONDITION, format!("invalid parameters for {family}: {params:?}"))
        })?;
        algebra = Some(match algebra {
            None => entry.algebra,
            Some(a) => a.direct_sum(&entry.algebra),
        });
    }
    let text = lieconst::render(&algebra.expect("at least one part"));
    match output {
        Some(path) => {
            fs::write(&path, &text)
                .map_err(|e| Failure::new(EXIT_FAILURE, format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(String, u8), Failure> = match &cli.command {
        Command::Info { file } => info(file).map(|s| (s, 0)),
        Command::Multiplier { file } => multiplier(file).map(|s| (s, 0)),
        Command::Classify { file } => classify_cmd(file),
        Command::Catalog { spec } => catalog_cmd(spec).map(|s| (s, 0)),
        Command::Verify {
            suite,
            max_m,
            max_k,
            max_n,
            seed,
        } => {
            let opts = VerifyOptions {
                max_m: *max_m,
                max_k: *max_k,
                max_n: *max_n,
                seed: *seed,
            };
            let report = run_suite(*suite, &opts);
            let code = if report.passed() { 0 } else { EXIT_FAILURE };
            Ok((report.render(), code))
        }
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
