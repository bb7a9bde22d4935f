//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modpovm_core::geometry::{gq22_axioms, mermin_square, recognize, recognize_graph, tuple_lines};
use modpovm_core::modgroup::enumerate_index;
use modpovm_core::povm::{verify, Orbit};
use modpovm_core::search::{same_entry_type, search_ic_with, SearchBudget};
use modpovm_core::{CycloVector, DimFactorization, Error, PermPair};
use serde::Serialize;

use crate::exec::RayonExecutor;
use crate::formats::{self, CertificateJson, PairJson, SignatureJson, StructureJson};
use crate::report::{build_table, distinct_products};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "modpovm", version, about = "IC-POVMs from permutation representations of the modular group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List conjugacy classes of subgroups of a given index.
    Enumerate {
        #[arg(long)]
        index: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Search eigenvector candidates of one or all classes for IC fiducials.
    Search(SearchArgs),
    /// Certify a single fiducial.
    Verify {
        #[arg(long, alias = "certificate")]
        fiducial: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Incidence structure of k-tuples whose cyclic trace hits a target.
    Geometry(GeometryArgs),
    /// Per-dimension summary compared with the reference summary.
    #[command(alias = "reproduce-table")]
    Table {
        /// Largest dimension to report, at most 9.
        #[arg(long, default_value_t = 7)]
        max_dim: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BudgetArgs {
    /// Comma-separated coefficients; must contain 0 and 1.
    #[arg(long)]
    pub entry_set: Option<String>,
    /// Most eigenspace basis vectors combined in one candidate [default: 3].
    #[arg(long)]
    pub max_support: Option<usize>,
    /// Most group elements used for joint eigenspaces [default: 256].
    #[arg(long)]
    pub group_element_cap: Option<usize>,
    /// Most candidates screened per class [default: 500000].
    #[arg(long)]
    pub candidate_cap: Option<usize>,
    /// Allow coefficients outside the eigenspace and Pauli field.
    #[arg(long)]
    pub widen_field: bool,
}

impl BudgetArgs {
    pub fn budget(&self) -> Result<SearchBudget, Error> {
        let mut b = SearchBudget::default();
        if let Some(s) = &self.entry_set {
            b.entry_set = formats::parse_number_list(s)?;
        }
        if let Some(m) = self.max_support {
            b.max_support = m;
        }
        if let Some(c) = self.group_element_cap {
            b.group_element_cap = c;
        }
        if let Some(c) = self.candidate_cap {
            b.candidate_cap = c;
        }
        b.widen_field = self.widen_field;
        b.validate()?;
        Ok(b)
    }
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Search every class of this index.
    #[arg(long, conflicts_with = "pair")]
    pub index: Option<usize>,
    /// Search the class given by a permutation-pair file.
    #[arg(long)]
    pub pair: Option<PathBuf>,
    /// Pauli factorization such as `2x2`; defaults to the index.
    #[arg(long)]
    pub dims: Option<String>,
    /// Keep only candidates whose nonzero entries match this vector up to a factor.
    #[arg(long = "type")]
    pub entry_type: Option<String>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct GeometryArgs {
    /// Fiducial file, or a certificate JSON holding one.
    #[arg(long, alias = "certificate")]
    pub fiducial: PathBuf,
    /// Tuple size.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Comma-separated target traces; may be empty.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub targets: String,
    /// Keep only tuples whose operator product is `±I`.
    #[arg(long)]
    pub pm_identity: bool,
    /// Shared-point count for the intersection graph in DOT output.
    #[arg(long, default_value_t = 1)]
    pub shared: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::DivisionByZero => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        };
        CliError { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_INVALID, message: message.into() }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &out.out {
        Some(p) => fs::write(p, text).map_err(|e| invalid(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() }),
    }
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(v).map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() })
}

fn no_dot(out: &OutputArgs) -> Result<(), CliError> {
    if out.format == Format::Dot {
        return Err(invalid("dot output is only available for geometry"));
    }
    Ok(())
}

fn executor(workers: usize) -> Result<RayonExecutor, CliError> {
    RayonExecutor::new(workers).map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() })
}

#[derive(Serialize)]
struct ClassJson {
    signature: SignatureJson,
    pair: PairJson,
}

#[derive(Serialize)]
struct EnumerateJson {
    index: usize,
    classes: Vec<ClassJson>,
}

fn enumerate(index: usize, out: &OutputArgs) -> Result<i32, CliError> {
    no_dot(out)?;
    let classes = enumerate_index(index)?
        .iter()
        .map(|p| Ok(ClassJson { signature: SignatureJson::new(&p.signature()?), pair: PairJson::new(p) }))
        .collect::<Result<Vec<_>, Error>>()?;
    let text = match out.format {
        Format::Json => json(&EnumerateJson { index, classes })?,
        _ => classes.iter().map(|c| format!("{}  e={} v={}", c.signature.label, c.pair.e, c.pair.v)).collect::<Vec<_>>().join("\n"),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SearchClassJson {
    signature: SignatureJson,
    pair: PairJson,
    candidates: usize,
    ic_candidates: usize,
    truncated: bool,
    certificates: Vec<CertificateJson>,
}

#[derive(Serialize)]
struct SearchJson {
    dims: String,
    classes: Vec<SearchClassJson>,
}

fn search(a: &SearchArgs) -> Result<i32, CliError> {
    no_dot(&a.out)?;
    let pairs: Vec<PermPair> = match (&a.index, &a.pair) {
        (Some(i), None) => enumerate_index(*i)?,
        (None, Some(p)) => vec![formats::parse_pair(&read(p)?)?],
        _ => return Err(invalid("give exactly one of --index or --pair")),
    };
    let index = pairs.first().map_or(0, |p| p.index());
    let dims: DimFactorization = match &a.dims {
        Some(d) => d.parse()?,
        None => DimFactorization::single(index as u32)?,
    };
    let budget = a.budget.budget()?;
    let pattern: Option<CycloVector> = match &a.entry_type {
        Some(s) => Some(CycloVector::new(formats::parse_number_list(s.trim_matches(|c| c == '(' || c == ')'))?)?),
        None => None,
    };
    let exec = executor(a.workers)?;
    let filter = |v: &CycloVector| pattern.as_ref().is_none_or(|p| same_entry_type(v, p));
    let mut classes = Vec::new();
    for pair in &pairs {
        let out = search_ic_with(pair, &dims, &budget, &exec, &filter)?;
        classes.push(SearchClassJson {
            signature: SignatureJson::new(&pair.signature()?),
            pair: PairJson::new(pair),
            candidates: out.candidates,
            ic_candidates: out.ic_candidates,
            truncated: out.truncated,
            certificates: out.certificates.iter().map(CertificateJson::new).collect(),
        });
    }
    let truncated = classes.iter().any(|c| c.truncated);
    let text = match a.out.format {
        Format::Json => json(&SearchJson { dims: dims.to_string(), classes })?,
        _ => {
            let mut s = String::new();
            for c in &classes {
                s.push_str(&format!(
                    "{}  candidates={} ic={} truncated={}\n",
                    c.signature.label, c.candidates, c.ic_candidates, c.truncated
                ));
                for cert in &c.certificates {
                    let vals: Vec<String> = cert.trace_spectrum.iter().map(|v| format!("{}x{}", v.value, v.multiplicity)).collect();
                    s.push_str(&format!("    pp={} angles={} sic={} traces=[{}]\n", cert.pp, cert.angle_count, cert.is_sic, vals.join(", ")));
                }
            }
            s
        }
    };
    emit(&a.out, &text)?;
    Ok(if truncated { EXIT_TRUNCATED } else { EXIT_OK })
}

fn verify_cmd(path: &PathBuf, out: &OutputArgs) -> Result<i32, CliError> {
    no_dot(out)?;
    let f = formats::parse_fiducial(&read(path)?)?;
    let c = verify(&f);
    let cj = CertificateJson::new(&c);
    let text = match out.format {
        Format::Json => json(&cj)?,
        _ => {
            let angles: Vec<String> = cj.angle_spectrum.iter().map(|v| format!("{}x{}", v.value, v.multiplicity)).collect();
            let traces: Vec<String> = cj.trace_spectrum.iter().map(|v| format!("{}x{}", v.value, v.multiplicity)).collect();
            format!(
                "d={} conductor={} povm_sum_ok={} gram_rank={} is_ic={} is_sic={} pp={}\ntraces: {}\nangles: {}",
                cj.d,
                cj.conductor,
                cj.povm_sum_ok,
                cj.gram_rank,
                cj.is_ic,
                cj.is_sic,
                distinct_products(&c),
                traces.join(", "),
                angles.join(", ")
            )
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GraphJson {
    shared: usize,
    within: Option<usize>,
    components: usize,
    label: String,
}

#[derive(Serialize)]
struct GeometryJson {
    k: usize,
    targets: Vec<String>,
    pm_identity: bool,
    structure: StructureJson,
    gq22_axioms: bool,
    mermin_square: Option<MerminJson>,
    graphs: Vec<GraphJson>,
}

#[derive(Serialize)]
struct MerminJson {
    rows: Vec<usize>,
    columns: Vec<usize>,
    minus_lines: usize,
}

fn geometry(a: &GeometryArgs) -> Result<i32, CliError> {
    let f = formats::parse_fiducial(&read(&a.fiducial)?)?;
    let targets = formats::parse_number_list(&a.targets)?;
    if a.k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    let orbit = Orbit::new(&f);
    let s = tuple_lines(&orbit, a.k, &targets, a.pm_identity);
    let label = recognize(&s);
    let mut graphs = Vec::new();
    for shared in 1..a.k {
        let g = s.intersection_graph(shared);
        graphs.push(GraphJson { shared, within: None, components: g.components().len(), label: recognize_graph(&g).to_string() });
        for within in 1..shared {
            let g = s.split_intersection_graph(shared, within);
            graphs.push(GraphJson { shared, within: Some(within), components: g.components().len(), label: recognize_graph(&g).to_string() });
        }
    }
    let square = if gq22_axioms(&s) { mermin_square(&s) } else { None };
    let text = match a.out.format {
        Format::Dot => s.intersection_graph(a.shared).to_dot("intersections"),
        Format::Json => json(&GeometryJson {
            k: a.k,
            targets: targets.iter().map(|t| t.reduce_conductor().to_text()).collect(),
            pm_identity: a.pm_identity,
            structure: StructureJson::new(&s, &label),
            gq22_axioms: gq22_axioms(&s),
            mermin_square: square.as_ref().map(|q| MerminJson { rows: q.rows.to_vec(), columns: q.cols.to_vec(), minus_lines: q.minus_count() }),
            graphs,
        })?,
        Format::Text => {
            let mut t = format!("{} points, {} blocks: {}\n", s.num_points(), s.num_blocks(), label);
            for g in &graphs {
                let w = g.within.map_or(String::new(), |w| format!(" within {w}"));
                t.push_str(&format!("graph shared={}{}: {} components, {}\n", g.shared, w, g.components, g.label));
            }
            if let Some(q) = &square {
                t.push_str(&format!("Mermin square: {} lines with -I\n", q.minus_count()));
            }
            t
        }
    };
    emit(&a.out, &text)?;
    Ok(EXIT_OK)
}

fn table(max_dim: usize, budget: &BudgetArgs, workers: usize, out: &OutputArgs) -> Result<i32, CliError> {
    no_dot(out)?;
    if !(2..=9).contains(&max_dim) {
        return Err(invalid("--max-dim must be between 2 and 9"));
    }
    let exec = executor(workers)?;
    let t = build_table(max_dim, &budget.budget()?, &exec)?;
    let text = match out.format {
        Format::Json => json(&t)?,
        _ => t.to_text(),
    };
    emit(out, &text)?;
    Ok(if t.truncated() { EXIT_TRUNCATED } else { EXIT_OK })
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Enumerate { index, out } => enumerate(*index, out),
        Command::Search(a) => search(a),
        Command::Verify { fiducial, out } => verify_cmd(fiducial, out),
        Command::Geometry(a) => geometry(a),
        Command::Table { max_dim, budget, workers, out } => table(*max_dim, budget, *workers, out),
    }
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {}", e.message);
            e.code
        }
        Err(_) => EXIT_INTERNAL,
    }
}
