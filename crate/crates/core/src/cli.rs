//! The `schubert` command line: argument parsing, engine dispatch and the
//! result document.
//!
//! One document is written to stdout per invocation; diagnostics go to
//! stderr. In JSON output every integer is a decimal string.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::grassmannian::Instance;
use crate::hilbert::{hilbert_function, hilbert_series};
use crate::paths::{count_families, enumerate_families, lgv_multiplicity};
use crate::reflections::{admissible_reflections, enumerate_s1s2_sets};
use crate::verify::{verify_all, VerifyOptions, VerifyStats, MAX_VERIFY_N};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_ON_VARIETY: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Default cap on the number of admissible reflections the reflection-set
/// engine will search over.
pub const DEFAULT_BUDGET: usize = 32;

/// Wraps an integer so that it serializes as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dec<T>(pub T);

impl<T: fmt::Display> Serialize for Dec<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de, T: FromStr> Deserialize<'de> for Dec<T>
where
    T::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map(Dec).map_err(serde::de::Error::custom)
    }
}

fn decs<T: Clone>(v: &[T]) -> Vec<Dec<T>> {
    v.iter().cloned().map(Dec).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Determinant,
    Paths,
    Reflections,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Determinant => "determinant",
            Method::Paths => "paths",
            Method::Reflections => "reflections",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Instance as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct InstanceSpec {
    #[arg(long)]
    pub n: usize,
    /// Defaults to the number of entries of `--w`.
    #[arg(long)]
    pub d: Option<usize>,
    /// Increasing entries of w, comma separated (e.g. 2,4).
    #[arg(long, allow_hyphen_values = true)]
    pub w: String,
    /// Increasing entries of tau, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: String,
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    NotOnVariety,
    Budget { needed: usize, budget: usize },
    Mismatch(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::NotOnVariety => write!(f, "{}", Error::NotOnVariety),
            CliError::Budget { needed, budget } => write!(
                f,
                "reflection search needs {needed} admissible reflections, above the budget of {budget} (raise --budget)"
            ),
            CliError::Mismatch(m) => write!(f, "verification mismatch: {m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::NotOnVariety => EXIT_NOT_ON_VARIETY,
            CliError::Budget { .. } => EXIT_BUDGET,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotOnVariety => CliError::NotOnVariety,
            other => CliError::Parse(other.to_string()),
        }
    }
}

fn parse_entries(s: &str) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| CliError::Parse(format!("bad entry {t:?}: {e}"))))
        .collect()
}

impl InstanceSpec {
    pub fn to_instance(&self) -> Result<Instance, CliError> {
        let w = parse_entries(&self.w)?;
        let tau = parse_entries(&self.tau)?;
        let d = self.d.unwrap_or(w.len());
        Ok(Instance::from_entries(self.n, d, &w, &tau)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    pub n: Dec<usize>,
    pub d: Dec<usize>,
    pub w: Vec<Dec<usize>>,
    pub tau: Vec<Dec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub value: Dec<BigUint>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyListing {
    /// Step words over `{N, E}`, one per path, indexed by start point.
    pub paths: Vec<String>,
    pub en_turns: Dec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub instance: InstanceEcho,
    pub kappa: Vec<Dec<usize>>,
    /// 1-based: path `l` ends at `E_{sigma[l]}`.
    pub sigma: Vec<Dec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Multiplicity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerator: Option<Vec<Dec<BigUint>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pole_order: Option<Dec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expansion: Option<Vec<Dec<BigUint>>>,
    pub conjectural: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<FamilyListing>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<Dec<u128>>,
}

impl ResultDocument {
    fn for_instance(command: &str, inst: &Instance) -> Self {
        ResultDocument {
            command: command.to_string(),
            instance: InstanceEcho {
                n: Dec(inst.n()),
                d: Dec(inst.d()),
                w: decs(inst.w().entries()),
                tau: decs(inst.tau().entries()),
            },
            kappa: decs(inst.kappa()),
            sigma: decs(&inst.sigma_one_based()),
            multiplicity: None,
            numerator: None,
            pole_order: None,
            expansion: None,
            conjectural: false,
            families: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let join = |v: &[Dec<usize>]| v.iter().map(|x| x.0.to_string()).collect::<Vec<_>>().join(",");
        let joinb = |v: &[Dec<BigUint>]| v.iter().map(|x| x.0.to_string()).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        out += &format!(
            "instance: n={} d={} w=({}) tau=({})\n",
            self.instance.n.0,
            self.instance.d.0,
            join(&self.instance.w),
            join(&self.instance.tau)
        );
        out += &format!("kappa: ({})\n", join(&self.kappa));
        out += &format!("sigma: ({})\n", join(&self.sigma));
        if let Some(m) = &self.multiplicity {
            out += &format!("multiplicity: {} [{}]\n", m.value.0, m.method);
        }
        if let Some(num) = &self.numerator {
            let poly = crate::hilbert::IntPolynomial::new(num.iter().map(|c| c.0.clone()).collect());
            let t = self.pole_order.as_ref().map(|t| t.0).unwrap_or(0);
            out += &format!("hilbert series{}: ({poly})/(1-z)^{t}\n", if self.conjectural { " (conjectural)" } else { "" });
            out += &format!("numerator: [{}]\n", joinb(num));
        }
        if let Some(t) = &self.pole_order {
            out += &format!("pole order: {}\n", t.0);
        }
        if let Some(e) = &self.expansion {
            out += &format!("hilbert function: {}\n", joinb(e));
        }
        if let Some(fams) = &self.families {
            out += &format!("families: {}\n", fams.len());
            for f in fams {
                let words: Vec<&str> = f.paths.iter().map(|p| if p.is_empty() { "-" } else { p.as_str() }).collect();
                out += &format!("  {}  EN={}\n", words.join(" "), f.en_turns.0);
            }
        }
        if let Some(t) = &self.timing_ms {
            out += &format!("time: {} ms\n", t.0);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub command: String,
    pub max_n: Dec<usize>,
    pub passed: bool,
    pub instances: Dec<usize>,
    pub families: Dec<usize>,
    pub maximal_sets: Dec<usize>,
    pub chain_subsets: Dec<usize>,
    pub hilbert_values: Dec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl VerifyReport {
    fn new(max_n: usize, stats: VerifyStats, failure: Option<String>) -> Self {
        VerifyReport {
            command: "verify".into(),
            max_n: Dec(max_n),
            passed: failure.is_none(),
            instances: Dec(stats.instances),
            families: Dec(stats.families),
            maximal_sets: Dec(stats.maximal_sets),
            chain_subsets: Dec(stats.chain_subsets),
            hilbert_values: Dec(stats.hilbert_values),
            failure,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "verify n <= {}: {}\ninstances: {}\nfamilies: {}\nmaximal sets: {}\nchain-condition subsets: {}\nhilbert values: {}\n",
            self.max_n.0,
            if self.passed { "pass" } else { "FAIL" },
            self.instances.0,
            self.families.0,
            self.maximal_sets.0,
            self.chain_subsets.0,
            self.hilbert_values.0
        );
        if let Some(f) = &self.failure {
            out += &format!("first failure: {f}\n");
        }
        out
    }
}

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Multiplicities and tangent-cone Hilbert series of Grassmannian Schubert varieties")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiplicity of the point tau on X(w).
    Mult {
        #[command(flatten)]
        spec: InstanceSpec,
        #[arg(long, value_enum, default_value = "determinant")]
        method: Method,
        /// Also list every nonintersecting family.
        #[arg(long)]
        list_families: bool,
        /// Maximum number of admissible reflections for the reflections engine.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        timing: bool,
    },
    /// Conjectural Hilbert series of the tangent cone.
    Hilbert {
        #[command(flatten)]
        spec: InstanceSpec,
        /// Also emit the Hilbert function for m = 0..=M.
        #[arg(long, value_name = "M")]
        expand: Option<usize>,
        #[arg(long)]
        list_families: bool,
        #[arg(long)]
        timing: bool,
    },
    /// List every nonintersecting family with its EN-turn count.
    Paths {
        #[command(flatten)]
        spec: InstanceSpec,
        #[arg(long)]
        timing: bool,
    },
    /// Exhaustively cross-check all engines for every pair with n <= max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
    },
}

fn family_listings(inst: &Instance) -> Vec<FamilyListing> {
    enumerate_families(inst)
        .iter()
        .map(|f| FamilyListing { paths: f.paths().iter().map(|p| p.letters()).collect(), en_turns: Dec(f.en_turns()) })
        .collect()
}

pub fn cmd_mult(inst: &Instance, method: Method, budget: usize) -> Result<ResultDocument, CliError> {
    let value = match method {
        Method::Determinant => lgv_multiplicity(inst),
        Method::Paths => BigUint::from(count_families(inst)),
        Method::Reflections => {
            let needed = admissible_reflections(inst).len();
            if needed > budget {
                return Err(CliError::Budget { needed, budget });
            }
            BigUint::from(enumerate_s1s2_sets(inst).len())
        }
    };
    let mut doc = ResultDocument::for_instance("mult", inst);
    doc.multiplicity = Some(Multiplicity { value: Dec(value), method });
    Ok(doc)
}

pub fn cmd_hilbert(inst: &Instance, expand: Option<usize>) -> ResultDocument {
    let hs = hilbert_series(inst);
    let mut doc = ResultDocument::for_instance("hilbert", inst);
    doc.expansion = expand.map(|max_m| (0..=max_m).map(|m| Dec(hilbert_function(&hs, m))).collect());
    doc.numerator = Some(decs(hs.numerator.coefficients()));
    doc.pole_order = Some(Dec(hs.pole_order));
    doc.conjectural = hs.conjectural;
    doc
}

pub fn cmd_paths(inst: &Instance) -> ResultDocument {
    let listing = family_listings(inst);
    let mut doc = ResultDocument::for_instance("paths", inst);
    doc.multiplicity = Some(Multiplicity { value: Dec(BigUint::from(listing.len())), method: Method::Paths });
    doc.families = Some(listing);
    doc
}

pub fn cmd_verify(max_n: usize) -> Result<VerifyReport, CliError> {
    if max_n > MAX_VERIFY_N {
        return Err(CliError::Parse(format!("--max-n {max_n} is above the ceiling of {MAX_VERIFY_N}")));
    }
    Ok(match verify_all(VerifyOptions::up_to(max_n)) {
        Ok(stats) => VerifyReport::new(max_n, stats, None),
        Err(m) => VerifyReport::new(max_n, VerifyStats::default(), Some(m.to_string())),
    })
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((body, code)) => {
            let _ = out.write_all(body.as_bytes());
            if !body.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "schubert: {e}");
            e.exit_code()
        }
    }
}

fn render(doc: &ResultDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Text => doc.to_text(),
    }
}

fn dispatch(cli: &Cli) -> Result<(String, i32), CliError> {
    let started = Instant::now();
    let stamp = |doc: &mut ResultDocument, timing: bool| {
        if timing {
            doc.timing_ms = Some(Dec(started.elapsed().as_millis()));
        }
    };
    match &cli.command {
        Command::Mult { spec, method, list_families, budget, timing } => {
            let inst = spec.to_instance()?;
            let mut doc = cmd_mult(&inst, *method, *budget)?;
            if *list_families {
                doc.families = Some(family_listings(&inst));
            }
            stamp(&mut doc, *timing);
            Ok((render(&doc, cli.format), EXIT_OK))
        }
        Command::Hilbert { spec, expand, list_families, timing } => {
            let inst = spec.to_instance()?;
            let mut doc = cmd_hilbert(&inst, *expand);
            if *list_families {
                doc.families = Some(family_listings(&inst));
            }
            stamp(&mut doc, *timing);
            Ok((render(&doc, cli.format), EXIT_OK))
        }
        Command::Paths { spec, timing } => {
            let inst = spec.to_instance()?;
            let mut doc = cmd_paths(&inst);
            stamp(&mut doc, *timing);
            Ok((render(&doc, cli.format), EXIT_OK))
        }
        Command::Verify { max_n } => {
            let report = cmd_verify(*max_n)?;
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
                Format::Text => report.to_text(),
            };
            let code = if report.passed { EXIT_OK } else { EXIT_MISMATCH };
            Ok((body, code))
        }
    }
}
