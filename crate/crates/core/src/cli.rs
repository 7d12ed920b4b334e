//! Batch front end: one request in, one JSON document out.
//!
//! Exit status is 0 on success, 2 when the request was well formed but the
//! mathematics refused it (e.g. `NotSemistable`), and 1 when the request
//! itself could not be parsed.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chamber::{self, DivisorCombo, NMode};
use crate::conic::{conic_degree, envelope, modify_family, plucker_conic};
use crate::json;
use crate::kronecker::{classify_stability, stratify};
use crate::motivic::{poincare, SpaceId};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "conic-mori", version, about = "Exact computations for conics in Gr(n-1, n+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON document here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Virtual Poincaré polynomial, ascending coefficients.
    Poincare {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// GIT stability of a Kronecker module.
    Stability(Input),
    /// Stratum of a Kronecker module.
    Stratify(Input),
    /// Plücker conic, envelope dimension and degree of a Kronecker module.
    Conic(Input),
    /// Elementary modification of a λ-family at λ = 0.
    Modify(Input),
    /// Birational model of a divisor combination.
    Chamber {
        /// Coefficient map, e.g. '{"T":"1","Delta":"1"}'.
        #[arg(long, conflicts_with_all = ["input", "json"])]
        coeffs: Option<String>,
        #[command(flatten)]
        doc: OptionalInput,
        #[arg(long = "n-mode", value_enum)]
        n_mode: Option<Mode>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Path to a JSON document.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Inline JSON document.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Args, Debug)]
pub struct OptionalInput {
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    #[value(name = "Pn")]
    Pn,
    #[value(name = "Gr")]
    Gr,
    #[value(name = "MbarP")]
    MbarP,
    #[value(name = "MbarGr")]
    MbarGr,
    #[value(name = "Sym2")]
    Sym2,
    #[value(name = "T4")]
    T4,
    #[value(name = "MP2-4m+2")]
    Mp2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Eq3,
    Gt3,
}

impl From<Mode> for NMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Eq3 => NMode::Eq3,
            Mode::Gt3 => NMode::Gt3,
        }
    }
}

fn read_doc(input: &Option<PathBuf>, inline: &Option<String>) -> Result<Value> {
    let text = match (input, inline) {
        (Some(p), _) => fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        (None, Some(s)) => s.clone(),
        (None, None) => return Err(Error::Parse("no input document given".into())),
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for this space")))
}

fn space_id(space: Space, n: Option<usize>, k: Option<usize>) -> Result<SpaceId> {
    Ok(match space {
        Space::Pn => SpaceId::ProjSpace(need(n, "n")?),
        Space::Gr => SpaceId::Grassmannian { k: need(k, "k")?, n: need(n, "n")? },
        Space::MbarP => SpaceId::KontsevichProj(need(n, "n")?),
        Space::MbarGr => SpaceId::MbarGr(need(n, "n")?),
        Space::Sym2 => SpaceId::Sym2Of(Box::new(SpaceId::ProjSpace(need(n, "n")?))),
        Space::T4 => SpaceId::T4(need(n, "n")?),
        Space::Mp2 => SpaceId::MP2FourMPlusTwo,
    })
}

/// Executes a parsed command.
pub fn execute(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Poincare { space, n, k } => {
            let id = space_id(*space, *n, *k)?;
            let p = poincare(&id)?;
            Ok(json::versioned(json!({ "space": id.to_string(), "poly": json::qpoly_to_json(&p) })))
        }
        Command::Stability(i) => {
            let m = json::module_from_json(&read_doc(&i.input, &i.json)?)?;
            Ok(json::stability_to_json(&classify_stability(&m)))
        }
        Command::Stratify(i) => {
            let m = json::module_from_json(&read_doc(&i.input, &i.json)?)?;
            Ok(json::stratum_to_json(stratify(&m)))
        }
        Command::Conic(i) => {
            let m = json::module_from_json(&read_doc(&i.input, &i.json)?)?;
            let c = plucker_conic(&m);
            let env = envelope(&c)?;
            let mut doc = json::conic_to_json(&c);
            doc["envelope_dim"] = json!(env.dim());
            doc["degree"] = json!(conic_degree(&c)?);
            Ok(doc)
        }
        Command::Modify(i) => {
            let f = json::family_from_json(&read_doc(&i.input, &i.json)?)?;
            Ok(json::modification_to_json(&modify_family(&f)?))
        }
        Command::Chamber { coeffs, doc, n_mode } => {
            let combo = match coeffs {
                Some(text) => {
                    let v: Value =
                        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
                    DivisorCombo::new(json::coeffs_from_json(&v)?, n_mode.map(Into::into).unwrap_or_default())?
                }
                None => {
                    let d = json::combo_from_json(&read_doc(&doc.input, &doc.json)?)?;
                    match n_mode {
                        Some(m) => DivisorCombo::new(d.coeffs().clone(), (*m).into())?,
                        None => d,
                    }
                }
            };
            Ok(json::verdict_to_json(&chamber::resolve(&combo)?))
        }
    }
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    /// The JSON document, or clap's usage text for `--help`/`--version`.
    pub output: String,
}

/// Parses `args` (including the program name), runs the command and writes
/// `--out` if given. The returned output is what belongs on the terminal.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return Outcome {
                status: if info { 0 } else { 1 },
                output: if info {
                    e.to_string()
                } else {
                    render(&json::error_to_json(&Error::Parse(e.kind().to_string())))
                },
            };
        }
    };
    let (status, doc) = match execute(&cli.command) {
        Ok(doc) => (0, doc),
        Err(e) => (if e.is_domain() { 2 } else { 1 }, json::error_to_json(&e)),
    };
    let text = render(&doc);
    if let (Some(path), 0) = (&cli.out, status) {
        if let Err(e) = fs::write(path, &text) {
            let err = Error::Parse(format!("{}: {e}", path.display()));
            return Outcome { status: 1, output: render(&json::error_to_json(&err)) };
        }
        return Outcome { status, output: String::new() };
    }
    Outcome { status, output: text }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
