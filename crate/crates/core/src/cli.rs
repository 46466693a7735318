//! The `kummer-chern` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch (or an internal consistency
//! failure), 2 invalid configuration, 3 no generic torus weights.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::assembly::{hilbert_chern_numbers, kummer_results, KummerResult};
use crate::error::Error;
use crate::localization::{build_surface_model, default_weights, fixed_point_count, generic_model, SurfaceKind, SurfaceModel};
use crate::reference::ReferenceTable;
use crate::symfun::{chern_key, evaluate_genus, ChernTable, GenusPreset};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_GENERICITY: i32 = 3;

/// Largest `n` covered by the embedded reference table.
pub const VERIFY_MAX: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "kummer-chern", version, about = "Exact Chern numbers of generalised Kummer varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chern numbers of A^[[n]] for n up to --n-max.
    Compute {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recompute and compare against the published table.
    Verify {
        #[arg(long, default_value_t = VERIFY_MAX as u32, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[command(flatten)]
        model: ModelArgs,
        /// CSV file (n,partition_key,value) to compare against instead of the embedded table.
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Chern numbers of the Hilbert scheme of k points on the surface.
    Hilbert {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a genus on A^[[n]] for n up to --n-max.
    Genus {
        #[arg(long)]
        name: GenusName,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value_t = Surface::P2)]
    pub surface: Surface,
    /// Torus parameters `A,B`; defaults to (1, n^2 + n + 1) with automatic retry.
    #[arg(long, value_parser = parse_weights)]
    pub weights: Option<(i64, i64)>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Surface {
    P2,
    P1xp1,
}

impl From<Surface> for SurfaceKind {
    fn from(s: Surface) -> Self {
        match s {
            Surface::P2 => SurfaceKind::P2,
            Surface::P1xp1 => SurfaceKind::P1xP1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenusName {
    Todd,
    Euler,
    Signature,
}

impl From<GenusName> for GenusPreset {
    fn from(g: GenusName) -> Self {
        match g {
            GenusName::Todd => GenusPreset::Todd,
            GenusName::Euler => GenusPreset::Euler,
            GenusName::Signature => GenusPreset::Signature,
        }
    }
}

fn parse_weights(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected A,B but got `{s}`"))?;
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("`{x}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// One Kummer result in the JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KummerRecord {
    pub n: usize,
    pub dimension: usize,
    pub surface: String,
    pub chern_numbers: IndexMap<String, String>,
}

impl KummerRecord {
    pub fn from_result(result: &KummerResult) -> Self {
        Self {
            n: result.n,
            dimension: result.dimension,
            surface: result.surface.name().to_string(),
            chern_numbers: result.even_entries().map(|(mu, v)| (chern_key(mu), v.to_string())).collect(),
        }
    }
}

/// Pretty-printed JSON array with a trailing newline.
pub fn render_json(records: &[KummerRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> serde_json::Result<Vec<KummerRecord>> {
    serde_json::from_str(text)
}

fn render_csv<'a>(rows: impl Iterator<Item = (usize, String, String)> + 'a, first_column: &str) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([first_column, "partition_key", "value"]).expect("in-memory write");
    for (n, key, value) in rows {
        w.write_record([n.to_string(), key, value]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn render_rows<'a>(out: &mut String, rows: impl Iterator<Item = (String, String)> + 'a) {
    for (key, value) in rows {
        let _ = writeln!(out, "{key} | {value}");
    }
}

pub fn render_kummer(results: &[KummerResult], format: Format) -> String {
    match format {
        Format::Json => render_json(&results.iter().map(KummerRecord::from_result).collect::<Vec<_>>()),
        Format::Csv => render_csv(
            results.iter().flat_map(|r| r.even_entries().map(move |(mu, v)| (r.n, chern_key(mu), v.to_string()))),
            "n",
        ),
        Format::Table => {
            let mut out = String::new();
            for (i, r) in results.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "n = {} (dimension {}, surface {})", r.n, r.dimension, r.surface);
                render_rows(&mut out, r.even_entries().map(|(mu, v)| (chern_key(mu), v.to_string())));
                for note in &r.advisories {
                    let _ = writeln!(out, "note: {note}");
                }
            }
            out
        }
    }
}

fn render_hilbert(k: usize, model: &SurfaceModel, table: &ChernTable, points: usize, format: Format) -> String {
    let euler_ok = table.top_chern_number() == num_rational::BigRational::from_integer(points.into());
    let verdict = if euler_ok { "ok" } else { "FAILED" };
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "k": k,
                "dimension": 2 * k,
                "surface": model.kind.name(),
                "fixed_points": points,
                "euler_check": verdict,
                "chern_numbers": table.iter().map(|(mu, v)| (chern_key(mu), v.to_string())).collect::<IndexMap<_, _>>(),
            });
            let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(table.iter().map(|(mu, v)| (k, chern_key(mu), v.to_string())), "k"),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "k = {k} (dimension {}, surface {})", 2 * k, model.kind);
            render_rows(&mut out, table.iter().map(|(mu, v)| (chern_key(mu), v.to_string())));
            let _ = writeln!(out, "fixed points: {points}");
            let _ = writeln!(out, "euler check: {verdict} (top Chern number {})", table.top_chern_number());
            out
        }
    }
}

fn render_genus(preset: GenusPreset, values: &[(usize, String)], format: Format) -> String {
    match format {
        Format::Json => {
            let map: IndexMap<String, &String> = values.iter().map(|(n, v)| (n.to_string(), v)).collect();
            let mut s = serde_json::to_string_pretty(&serde_json::json!({ "genus": preset.name(), "values": map }))
                .expect("json value serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = format!("n,{}\n", preset.name());
            for (n, v) in values {
                let _ = writeln!(out, "{n},{v}");
            }
            out
        }
        Format::Table => {
            let mut out = format!("n | {}\n", preset.name());
            for (n, v) in values {
                let _ = writeln!(out, "{n} | {v}");
            }
            out
        }
    }
}

/// `n` values reported for `--n-max`: just the point for 1, else `2..=n_max`.
pub fn reported_range(n_max: usize) -> std::ops::RangeInclusive<usize> {
    if n_max == 1 {
        1..=1
    } else {
        2..=n_max
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateWeights { .. } | Error::GenericityExhausted { .. } => EXIT_GENERICITY,
            Error::UnknownSurface(_) | Error::UnknownPreset(_) | Error::Reference(_) | Error::BadChernKey(_) => {
                EXIT_CONFIG
            }
            _ => EXIT_MISMATCH,
        };
        Failure { code, message: e.to_string() }
    }
}

fn config_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_CONFIG, message: message.into() }
}

fn model_for(args: &ModelArgs, k_max: usize) -> Result<SurfaceModel, Failure> {
    let kind = SurfaceKind::from(args.surface);
    let model = match args.weights {
        Some((a, b)) => {
            let model = build_surface_model(kind, a, b)?;
            model.check_generic(k_max)?;
            model
        }
        None => generic_model(kind, k_max, default_weights(k_max))?,
    };
    Ok(model)
}

fn emit(text: &str, out_path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out_path {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(|e| config_error(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure { code: EXIT_MISMATCH, message: e.to_string() }),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                EXIT_CONFIG
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Compute { n_max, model, output } => {
            let n_max = n_max as usize;
            let surface = model_for(&model, n_max)?;
            let results = kummer_results(&surface, n_max)?;
            let shown: Vec<KummerResult> = reported_range(n_max).map(|n| results[n - 1].clone()).collect();
            emit(&render_kummer(&shown, output.format), output.out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { n_max, model, reference } => {
            let n_max = n_max as usize;
            if n_max > VERIFY_MAX {
                return Err(config_error(format!("verify covers n ≤ {VERIFY_MAX}, got {n_max}")));
            }
            let table = match reference {
                Some(path) => {
                    let file = File::open(&path).map_err(|e| config_error(format!("{}: {e}", path.display())))?;
                    ReferenceTable::from_reader(io::BufReader::new(file))?
                }
                None => ReferenceTable::embedded(),
            };
            let surface = model_for(&model, n_max)?;
            let results = kummer_results(&surface, n_max)?;
            let report = verify_against(&results, &table, n_max);
            emit(&report.render(), None, stdout)?;
            Ok(if report.mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Hilbert { k, model, output } => {
            let k = k as usize;
            let surface = model_for(&model, k)?;
            let table = hilbert_chern_numbers(&surface, k)?;
            let points = fixed_point_count(&surface, k);
            emit(&render_hilbert(k, &surface, &table, points, output.format), output.out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Genus { name, n_max, model, output } => {
            let n_max = n_max as usize;
            let preset = GenusPreset::from(name);
            let surface = model_for(&model, n_max)?;
            let results = kummer_results(&surface, n_max)?;
            let ell = preset.log_coefficients(2 * n_max);
            let values = reported_range(n_max)
                .map(|n| Ok((n, evaluate_genus(&results[n - 1].chern, &ell)?.to_string())))
                .collect::<Result<Vec<_>, Error>>()?;
            emit(&render_genus(preset, &values, output.format), output.out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// One disagreement between the computed and the reference table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub key: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: usize,
    pub matched: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for m in &self.mismatches {
            let _ = writeln!(out, "mismatch: n={} {} expected {} got {}", m.n, m.key, m.expected, m.got);
        }
        let _ = writeln!(out, "{} of {} entries match", self.matched, self.checked);
        out
    }
}

/// Compares every reference entry with `n ≤ n_max`, and flags computed nonzero
/// entries absent from the reference.
pub fn verify_against(results: &[KummerResult], table: &ReferenceTable, n_max: usize) -> VerifyReport {
    let mut report = VerifyReport { checked: 0, matched: 0, mismatches: Vec::new() };
    for (n, mu, expected) in table.up_to(n_max) {
        report.checked += 1;
        let got = results.get(n - 1).map(|r| r.chern.value(mu));
        let got_str = got.as_ref().map_or_else(|| "nothing".to_string(), |v| v.to_string());
        if got.as_ref().is_some_and(|v| v.is_integer() && &v.to_integer() == expected) {
            report.matched += 1;
        } else {
            report.mismatches.push(Mismatch { n, key: chern_key(mu), expected: expected.to_string(), got: got_str });
        }
    }
    for r in results.iter().filter(|r| r.n >= 2 && r.n <= n_max.min(table.max_n())) {
        for (mu, v) in r.chern.iter() {
            if table.get(r.n, mu).is_none() && !num_traits::Zero::is_zero(v) {
                report.mismatches.push(Mismatch { n: r.n, key: chern_key(mu), expected: "0".into(), got: v.to_string() });
            }
        }
    }
    report
}
