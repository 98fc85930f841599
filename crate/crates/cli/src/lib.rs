//! Command-line front end for `moonshine-core`.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage, 3 dataset error,
//! 4 verification failure (a gl2 relation or a non-triviality row).

mod table;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use moonshine_core::data::{load_dataset, DataError, Dataset};
use moonshine_core::gl2::{
    cartan_entry, normalize_partner, verify_relations, FormalNaturalVector, Gl2Error, NaturalSymbol, RelationGroup,
};
use moonshine_core::qseries::{euler_product, j_coefficients, primary_dims, QSeriesError};
use moonshine_core::replication::{
    multiplicity, nontriviality_report, replicate_extend, replicate_extend_parallel, CoefficientTable,
    ReplicationError, MIN_ORDER,
};
use num_rational::BigRational;

pub use table::{Format, OutputTable};

pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATASET: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "moonshine", version, about = "Exact tables for the Monster Lie algebra and moonshine module")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Largest index j to print.
    #[arg(long = "max", global = true, default_value_t = 100)]
    max: usize,
    /// Conjugacy-class dataset (JSON).
    #[arg(long, global = true, value_name = "PATH")]
    data: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the table here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Extend the classes of a dataset in parallel.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients c(j) of J(q) = 1/q + 196884q + ...
    Jcoeffs,
    /// dim P_{j+1} of the primary vectors in each weight.
    Dims,
    /// Coefficients of the Euler product prod (1 - q^n).
    Eta,
    /// Cartan matrix entries for the simple roots (1, i), with block sizes c(i).
    Cartan {
        #[arg(long, default_value_t = 3)]
        depth: i64,
    },
    /// McKay-Thompson coefficients C(g, j) of every class.
    Replicate,
    /// Multiplicity of an irreducible in V_{j+1}.
    Mult {
        /// Index of the irreducible; 1 is the trivial module.
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Compare dim P_{j+1} with the trivial multiplicity for 1 <= j <= max.
    CheckNontrivial,
    /// Check the gl2 relations for the simple root (1, j).
    VerifyGl2 {
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        #[arg(long, value_enum, default_value_t = PairingSign::Auto)]
        pairing_sign: PairingSign,
    },
    /// Load and validate a dataset, listing every violation.
    ValidateData,
}

/// How the partner `v` of `u` is chosen, with `(u, u) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PairingSign {
    /// Scale `v` so that `u_{2j+1} v = 1`.
    Auto,
    /// `v = u`.
    Plus,
    /// `v = -u`.
    Minus,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl fmt::Display) -> Self {
        Failure { code, message: message.to_string() }
    }
}

impl From<DataError> for Failure {
    fn from(e: DataError) -> Self {
        Failure::new(EXIT_DATASET, e)
    }
}

impl From<QSeriesError> for Failure {
    fn from(e: QSeriesError) -> Self {
        Failure::new(EXIT_INTERNAL, e)
    }
}

impl From<ReplicationError> for Failure {
    fn from(e: ReplicationError) -> Self {
        match e {
            ReplicationError::Series(_) | ReplicationError::IndexOutOfRange { .. } => Failure::new(EXIT_INTERNAL, e),
            _ => Failure::new(EXIT_DATASET, e),
        }
    }
}

/// A table, trailing summary lines, and an optional failure raised after
/// the table was built.
struct Output {
    table: OutputTable,
    notes: Vec<String>,
    failure: Option<Failure>,
}

impl From<OutputTable> for Output {
    fn from(table: OutputTable) -> Self {
        Output { table, notes: Vec::new(), failure: None }
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(f) => {
            let _ = writeln!(stderr, "moonshine: {}", f.message);
            return f.code;
        }
    };
    let common = &cli.common;
    let rendered = output.table.render(common.format);
    let written = match &common.out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(rendered.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "moonshine: {e}");
        return EXIT_INTERNAL;
    }
    // summaries stay out of machine-readable streams
    let notes: &mut dyn Write = if common.format == Format::Table && common.out.is_none() { stdout } else { stderr };
    for n in &output.notes {
        let _ = writeln!(notes, "{n}");
    }
    match output.failure {
        Some(f) => {
            let _ = writeln!(stderr, "moonshine: {}", f.message);
            f.code
        }
        None => 0,
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let c = &cli.common;
    let max = c.max as i64;
    match &cli.command {
        Command::Jcoeffs => {
            let coeffs = j_coefficients(max)?;
            let mut t = OutputTable::new(["j", "c(j)"]);
            for (j, x) in (-1..).zip(&coeffs) {
                t.push([j.to_string(), x.to_string()]);
            }
            Ok(t.into())
        }
        Command::Dims => {
            let dims = primary_dims(max + 1)?;
            let mut t = OutputTable::new(["j", "dim P(j+1)"]);
            for (j, x) in (-1..).zip(&dims) {
                t.push([j.to_string(), x.to_string()]);
            }
            Ok(t.into())
        }
        Command::Eta => {
            let series = euler_product(max + 1)?;
            let mut t = OutputTable::new(["n", "coefficient"]);
            for n in 0..=max {
                let x = series.integer_coeff(n).ok_or_else(|| Failure::new(EXIT_INTERNAL, format!("no integral coefficient of q^{n}")))?;
                t.push([n.to_string(), x.to_string()]);
            }
            Ok(t.into())
        }
        Command::Cartan { depth } => cartan(*depth),
        Command::Replicate => {
            let d = dataset(c)?;
            let table = extend(c, &d)?;
            let mut t = OutputTable::new(std::iter::once("j".to_string()).chain(d.classes.iter().map(|k| k.name.clone())));
            let seeds: Option<Vec<String>> = d.classes.iter().map(|k| k.seed(-1).map(|x| x.to_string())).collect();
            if let Some(seeds) = seeds {
                t.push(std::iter::once("-1".to_string()).chain(seeds));
            }
            for j in 0..=c.max {
                let cells: Vec<String> = d.classes.iter().map(|k| table.get(&k.name, j).expect("extended").to_string()).collect();
                t.push(std::iter::once(j.to_string()).chain(cells));
            }
            Ok(t.into())
        }
        Command::Mult { k } => {
            let d = dataset(c)?;
            let table = extend(c, &d)?;
            let mut t = OutputTable::new(["j".to_string(), format!("mult_{k}(j+1)")]);
            for j in -1..=max {
                t.push([j.to_string(), multiplicity(&d, &table, *k, j)?.to_string()]);
            }
            Ok(t.into())
        }
        Command::CheckNontrivial => {
            let d = dataset(c)?;
            let table = extend(c, &d)?;
            let rows = nontriviality_report(&d, &table, c.max)?;
            let mut t = OutputTable::new(["j", "dim P(j+1)", "mult_1(j+1)", "status"]);
            for r in &rows {
                let status = if r.nontrivial { "non-trivial" } else { "trivial" };
                t.push([r.j.to_string(), r.primary_dim.to_string(), r.trivial_mult.to_string(), status.to_string()]);
            }
            let bad: Vec<String> = rows.iter().filter(|r| !r.nontrivial).map(|r| r.j.to_string()).collect();
            let mut out = Output::from(t);
            out.notes.push(format!("{}/{} rows non-trivial", rows.len() - bad.len(), rows.len()));
            if !bad.is_empty() {
                out.failure = Some(Failure::new(EXIT_VERIFICATION, format!("dim P(j+1) <= mult_1(j+1) at j = {}", bad.join(", "))));
            }
            Ok(out)
        }
        Command::VerifyGl2 { j, pairing_sign } => verify_gl2(*j, *pairing_sign),
        Command::ValidateData => validate_data(c),
    }
}

fn dataset(c: &Common) -> Result<Dataset, Failure> {
    let path = c.data.as_ref().ok_or_else(|| Failure::new(EXIT_USAGE, "this command needs --data PATH"))?;
    Ok(load_dataset(path)?)
}

fn extend(c: &Common, d: &Dataset) -> Result<CoefficientTable, Failure> {
    let order = c.max.max(MIN_ORDER);
    let table = if c.parallel { replicate_extend_parallel(d, order) } else { replicate_extend(d, order) };
    Ok(table?)
}

fn cartan(depth: i64) -> Result<Output, Failure> {
    if depth < 1 {
        return Err(Failure::new(EXIT_USAGE, format!("--depth must be at least 1, got {depth}")));
    }
    let indices: Vec<i64> = std::iter::once(-1).chain(1..=depth).collect();
    let c = j_coefficients(depth)?;
    let header = ["i".to_string(), "c(i)".to_string()].into_iter().chain(indices.iter().map(i64::to_string));
    let mut t = OutputTable::new(header);
    for &i in &indices {
        let mut row = vec![i.to_string(), c[(i + 1) as usize].to_string()];
        for &k in &indices {
            row.push(cartan_entry(i, k).map_err(|e| Failure::new(EXIT_INTERNAL, e))?.to_string());
        }
        t.push(row);
    }
    Ok(t.into())
}

fn verify_gl2(j: i64, sign: PairingSign) -> Result<Output, Failure> {
    if j != -1 && j < 1 {
        return Err(Failure::new(EXIT_USAGE, Gl2Error::InvalidIndex(j)));
    }
    let one = BigRational::from_integer(1.into());
    let u = if j == -1 {
        FormalNaturalVector::vacuum()
    } else {
        let symbol = NaturalSymbol::new("u", (j + 1) as u32, true).map_err(|e| Failure::new(EXIT_INTERNAL, e))?;
        symbol.with_pairing("u", one.clone()).into()
    };
    let v = match sign {
        PairingSign::Auto if j == -1 => u.clone(),
        PairingSign::Auto => normalize_partner(j, &u, &one).map_err(|e| Failure::new(EXIT_INTERNAL, e))?,
        PairingSign::Plus => u.clone(),
        PairingSign::Minus => u.scaled(&-one),
    };
    let report = verify_relations(j, &u, &v).map_err(|e| Failure::new(EXIT_VERIFICATION, e))?;
    let mut t = OutputTable::new(["group", "relation", "result"]);
    for check in &report.checks {
        let result = match &check.actual {
            Ok(_) if check.passed() => "pass".to_string(),
            Ok(x) => format!("FAIL: got {x}"),
            Err(e) => format!("FAIL: {e}"),
        };
        t.push([check.group.to_string(), check.name.clone(), result]);
    }
    let mut out = Output::from(t);
    for group in [RelationGroup::Gl2, RelationGroup::RealSl2, RelationGroup::RealRoot, RelationGroup::Cross] {
        let (passed, total) = report.tally(group);
        match (group, total) {
            (_, 0) => {}
            (RelationGroup::Gl2, _) => out.notes.push(format!("{passed}/{total} relations pass")),
            _ => out.notes.push(format!("{passed}/{total} {group} relations pass")),
        }
    }
    if !report.all_passed() {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        out.failure = Some(Failure::new(EXIT_VERIFICATION, format!("failed relations: {}", names.join(", "))));
    }
    Ok(out)
}

fn validate_data(c: &Common) -> Result<Output, Failure> {
    let path = c.data.as_ref().ok_or_else(|| Failure::new(EXIT_USAGE, "this command needs --data PATH"))?;
    match load_dataset(path) {
        Ok(d) => {
            let mut t = OutputTable::new(["classes", "group order", "status"]);
            t.push([d.classes.len().to_string(), d.group_order.to_string(), "valid".to_string()]);
            Ok(t.into())
        }
        Err(DataError::Invalid(violations)) => {
            let mut t = OutputTable::new(["violation"]);
            for v in &violations {
                t.push([v.to_string()]);
            }
            let mut out = Output::from(t);
            out.failure = Some(Failure::new(EXIT_DATASET, format!("{} violation(s) in {}", violations.len(), path.display())));
            Ok(out)
        }
        Err(e) => Err(e.into()),
    }
}
