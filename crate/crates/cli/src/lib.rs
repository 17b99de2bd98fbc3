//! Command-line driver for the graph-entropy library.
//!
//! Every subcommand writes to a caller-supplied sink so the binary and the
//! tests exercise the same code.

use std::fmt;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_entropy::families::{
    make_broom, make_complete, make_cycle, make_diam_tree, make_gnkj, make_path, make_star, make_t3,
    make_t5,
};
use graph_entropy::graph::{degree_entropy, distance_profile};
use graph_entropy::io::{parse_edge_list_bytes, write_edge_list};
use graph_entropy::search::{
    self, gnkj_curve, min_iw_gnkj, min_iw_tree, GnkjSearch, KRange, Report, Witness,
};
use graph_entropy::{GnkjSpec, Graph};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Orders sampled for the `j = 1` check beyond the sporadic range.
pub const J_ONE_SAMPLES: [usize; 3] = [1270, 1300, 1500];
/// Orders of the sporadic `j > 1` rows checked by default.
pub const TABLE_3A_SPOT: [usize; 5] = [1003, 1029, 1080, 1133, 1269];
pub const TABLE_3B_DEFAULT: [usize; 8] = [16, 32, 64, 128, 256, 512, 1024, 2048];
pub const TABLE_3B_LONG: [usize; 2] = [4096, 8192];

#[derive(Debug, Parser)]
#[command(name = "graph-entropy", version, about = "Entropy measures of graphs and their extremal families")]
pub struct Cli {
    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Decimal places for floating-point output.
    #[arg(long, global = true, default_value_t = 10)]
    pub precision: usize,
    /// Output format (default: csv, json for `verify`).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy of a graph read from an edge-list file (`-` for stdin).
    Entropy {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "wiener")]
        measure: MeasureArg,
    },
    /// Regenerate one of the extremal tables.
    Table {
        #[arg(long, value_enum)]
        table: TableId,
        /// Scan every k in [1, n-1] instead of the restricted range.
        #[arg(long)]
        full_k: bool,
        /// Include the long-running rows.
        #[arg(long)]
        unbounded: bool,
    },
    /// Wiener-entropy of G(n,k,j) as a function of j.
    Plot {
        #[arg(long, value_enum, default_value = "gnkj")]
        family: PlotFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite; exits 1 on any failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Minimum Wiener-entropy over G(n,k,j) for each given order.
    Sweep {
        #[arg(long, required = true, num_args = 1..)]
        n: Vec<usize>,
        #[arg(long)]
        full_k: bool,
        /// Upper end of an explicit k range.
        #[arg(long, conflicts_with = "full_k")]
        k: Option<usize>,
    },
    /// Print a family member as an edge list.
    DumpFamily(DumpArgs),
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    /// Diameter for `diam-tree`.
    #[arg(long)]
    pub d: Option<usize>,
    /// Leaf eccentricity for `diam-tree`.
    #[arg(long)]
    pub b: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Wiener,
    Ecc,
    Degree,
}

impl fmt::Display for MeasureArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeasureArg::Wiener => "wiener",
            MeasureArg::Ecc => "ecc",
            MeasureArg::Degree => "degree",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableId {
    #[value(name = "1a")]
    T1a,
    #[value(name = "1b")]
    T1b,
    /// Both blocks of the power-of-two and sporadic tables.
    #[value(name = "2")]
    T2,
    #[value(name = "3a")]
    T3a,
    #[value(name = "3b")]
    T3b,
    #[value(name = "4")]
    T4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFamily {
    Gnkj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Conjectures,
    Lemmas,
    Props,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Star,
    Cycle,
    Complete,
    Broom,
    Gnkj,
    T3,
    T5,
    DiamTree,
}

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<graph_entropy::Error> for CliError {
    fn from(e: graph_entropy::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// One row of a G(n,k,j) table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GnkjRow {
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub value: f64,
    /// The minimizing k hit the top of a restricted range.
    pub k_boundary: bool,
}

impl From<&GnkjSearch> for GnkjRow {
    fn from(s: &GnkjSearch) -> Self {
        GnkjRow { n: s.record.n, k: s.k, j: s.j, value: s.record.value.value(), k_boundary: s.touches_boundary }
    }
}

/// One row of the minimum Wiener-entropy tree table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeRow {
    pub n: usize,
    pub value: f64,
    /// Number of non-isomorphic minimizers.
    pub ties: usize,
    /// Edges of the first minimizer as `u-v` pairs.
    pub edges: String,
    #[serde(skip)]
    pub tree: Graph,
}

/// Rows of a regenerated table plus whether the output is truncated.
#[derive(Debug, Clone, PartialEq)]
pub enum TableRows {
    Gnkj { rows: Vec<GnkjRow>, partial: bool },
    Trees(Vec<TreeRow>),
}

fn k_range(full_k: bool) -> KRange {
    if full_k {
        KRange::Full
    } else {
        KRange::Heuristic
    }
}

/// Minimum over G(n,k,j) for each order, in the given order.
pub fn gnkj_rows(ns: &[usize], range: KRange) -> graph_entropy::Result<Vec<GnkjRow>> {
    ns.iter().map(|&n| min_iw_gnkj(n, range).map(|s| GnkjRow::from(&s))).collect()
}

/// The `j > 1` rows in `lo..=hi`.
pub fn sporadic_rows(lo: usize, hi: usize, range: KRange) -> graph_entropy::Result<Vec<GnkjRow>> {
    let mut rows = Vec::new();
    for n in lo..=hi {
        let s = min_iw_gnkj(n, range)?;
        if s.j > 1 {
            rows.push(GnkjRow::from(&s));
        }
    }
    Ok(rows)
}

/// Minimum Wiener-entropy trees for `3 <= n <= 16`.
pub fn tree_rows() -> graph_entropy::Result<Vec<TreeRow>> {
    (3..=16)
        .map(|n| {
            let rec = min_iw_tree(n)?;
            let Witness::Graph(tree) = rec.witnesses[0].clone() else {
                unreachable!("tree search witnesses are graphs")
            };
            let edges: Vec<String> = tree.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            Ok(TreeRow { n, value: rec.value.value(), ties: rec.witnesses.len(), edges: edges.join(" "), tree })
        })
        .collect()
}

pub fn table_rows(id: TableId, full_k: bool, unbounded: bool) -> graph_entropy::Result<TableRows> {
    let range = k_range(full_k);
    let sporadic = |unbounded: bool| -> graph_entropy::Result<(Vec<GnkjRow>, bool)> {
        if unbounded {
            Ok((sporadic_rows(1000, 2540, range)?, false))
        } else {
            Ok((gnkj_rows(&TABLE_3A_SPOT, range)?, true))
        }
    };
    let powers = |unbounded: bool| -> graph_entropy::Result<Vec<GnkjRow>> {
        let mut ns = TABLE_3B_DEFAULT.to_vec();
        if unbounded {
            ns.extend(TABLE_3B_LONG);
        }
        gnkj_rows(&ns, range)
    };
    Ok(match id {
        TableId::T1a => TableRows::Gnkj { rows: gnkj_rows(&(32..=46).collect::<Vec<_>>(), range)?, partial: false },
        TableId::T1b => TableRows::Gnkj { rows: gnkj_rows(&(208..=222).collect::<Vec<_>>(), range)?, partial: false },
        TableId::T3a => {
            let (rows, partial) = sporadic(unbounded)?;
            TableRows::Gnkj { rows, partial }
        }
        TableId::T3b => TableRows::Gnkj { rows: powers(unbounded)?, partial: false },
        TableId::T2 => {
            let (mut rows, partial) = sporadic(unbounded)?;
            rows.extend(powers(unbounded)?);
            TableRows::Gnkj { rows, partial }
        }
        TableId::T4 => TableRows::Trees(tree_rows()?),
    })
}

fn fixed(v: f64, precision: usize) -> String {
    format!("{v:.precision$}")
}

#[derive(Serialize)]
struct GnkjCsv {
    n: usize,
    k: usize,
    j: usize,
    value: String,
    k_boundary: u8,
}

#[derive(Serialize)]
struct TreeCsv<'a> {
    n: usize,
    value: String,
    ties: usize,
    edges: &'a str,
}

fn write_table(out: &mut dyn Write, rows: &TableRows, format: Format, precision: usize) -> CliResult<()> {
    match (rows, format) {
        (TableRows::Gnkj { rows, partial }, Format::Csv) => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in rows {
                w.serialize(GnkjCsv {
                    n: r.n,
                    k: r.k,
                    j: r.j,
                    value: fixed(r.value, precision),
                    k_boundary: r.k_boundary as u8,
                })?;
            }
            w.flush()?;
            drop(w);
            if *partial {
                writeln!(out, "# partial: spot-check orders only; pass --unbounded for 1000..=2540")?;
            }
        }
        (TableRows::Trees(rows), Format::Csv) => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in rows {
                w.serialize(TreeCsv { n: r.n, value: fixed(r.value, precision), ties: r.ties, edges: &r.edges })?;
            }
            w.flush()?;
        }
        (TableRows::Gnkj { rows, partial }, Format::Json) => {
            let doc = serde_json::json!({ "partial": partial, "rows": rows });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        (TableRows::Trees(rows), Format::Json) => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn read_input(path: &PathBuf) -> CliResult<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Entropy of `g` under the chosen measure.
pub fn measure_value(g: &Graph, measure: MeasureArg) -> graph_entropy::Result<f64> {
    Ok(match measure {
        MeasureArg::Wiener => distance_profile(g).wiener_entropy()?.value(),
        MeasureArg::Ecc => distance_profile(g).eccentricity_entropy()?.value(),
        MeasureArg::Degree => degree_entropy(g)?.value(),
    })
}

fn cmd_entropy(out: &mut dyn Write, cli: &Cli, file: &PathBuf, measure: MeasureArg) -> CliResult<()> {
    let g = parse_edge_list_bytes(&read_input(file)?)?;
    let value = measure_value(&g, measure)?;
    let log_n = (g.order() as f64).log2();
    let p = cli.precision;
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(out, "n,measure,value,log2_n")?;
            writeln!(out, "{},{measure},{},{}", g.order(), fixed(value, p), fixed(log_n, p))?;
        }
        Format::Json => {
            let doc = serde_json::json!({
                "n": g.order(), "measure": measure.to_string(), "value": value, "log2_n": log_n
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_plot(out: &mut dyn Write, cli: &Cli, n: usize, k: usize) -> CliResult<()> {
    let curve = gnkj_curve(n, k)?;
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(out, "j,value,local_min")?;
            for p in &curve {
                writeln!(out, "{},{},{}", p.j, fixed(p.value, cli.precision), p.local_min as u8)?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &curve)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Radius-1 closed form, star bound and lower-bound trend checks that do
/// not need enumeration.
pub fn closed_form_report() -> graph_entropy::Result<Report> {
    let mut report = Report::new("closed-forms");
    let mut checks = Vec::new();
    for n in 2..=3000 {
        checks.push((n, search::min_iecc_radius1(n).is_ok()));
    }
    let all = checks.iter().all(|c| c.1);
    let bad: Vec<usize> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    report.checks.push(search::CheckOutcome {
        check: "radius-one-argmin-full-scan".into(),
        n: None,
        pass: all,
        detail: format!("2 <= n <= 3000; failures at {bad:?}"),
        witness: None,
    });
    let mut bound_fail = Vec::new();
    for n in 4..=1_000_000 {
        if search::star_iecc(n)? <= search::star_iecc_lower_bound(n) {
            bound_fail.push(n);
        }
    }
    report.checks.push(search::CheckOutcome {
        check: "star-iecc-lower-bound".into(),
        n: None,
        pass: bound_fail.is_empty(),
        detail: format!("4 <= n <= 1000000; failures at {:?}", &bound_fail[..bound_fail.len().min(10)]),
        witness: None,
    });
    Ok(report)
}

/// Runs one of the verification suites.
pub fn run_suite(suite: Suite) -> graph_entropy::Result<Report> {
    Ok(match suite {
        Suite::Lemmas => search::verify_distance_lemmas(2..=7)?,
        Suite::Conjectures => {
            let mut r = search::verify_conjecture_star_iw(5..=16)?;
            r.suite = "conjectures".into();
            r.extend(search::verify_gnkj_j_one(&J_ONE_SAMPLES)?);
            r
        }
        Suite::Props => {
            let mut r = search::verify_min_iecc(2..=7)?;
            r.suite = "props".into();
            r.extend(search::verify_top3(8..=14)?);
            r.extend(search::verify_diam_trees(5..=14)?);
            r.extend(closed_form_report()?);
            r.extend(search::lower_bound_trend(&TABLE_3B_DEFAULT)?.1);
            r
        }
    })
}

fn cmd_verify(out: &mut dyn Write, err: &mut dyn Write, cli: &Cli, suite: Suite) -> CliResult<bool> {
    let report = run_suite(suite)?;
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["suite", "check", "n", "result", "detail"])?;
            for c in &report.checks {
                let n = c.n.map(|n| n.to_string()).unwrap_or_default();
                let result = if c.pass { "PASS" } else { "FAIL" };
                w.write_record([report.suite.as_str(), &c.check, &n, result, &c.detail])?;
            }
            w.flush()?;
        }
    }
    for c in report.checks.iter().filter(|c| !c.pass) {
        writeln!(err, "FAIL {} n={:?}: {}", c.check, c.n, c.detail)?;
        if let Some(wit) = &c.witness {
            writeln!(err, "{wit}")?;
        }
    }
    Ok(report.all_pass())
}

fn cmd_sweep(out: &mut dyn Write, cli: &Cli, ns: &[usize], full_k: bool, k: Option<usize>) -> CliResult<()> {
    let range = match k {
        Some(hi) => KRange::Explicit { lo: 1, hi },
        None => k_range(full_k),
    };
    let rows = gnkj_rows(ns, range)?;
    write_table(out, &TableRows::Gnkj { rows, partial: false }, cli.format.unwrap_or(Format::Csv), cli.precision)
}

fn need(v: Option<usize>, name: &str, family: Family) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required for {family:?}")))
}

/// Builds the requested family member.
pub fn build_family(a: &DumpArgs) -> CliResult<Graph> {
    let n = a.n;
    Ok(match a.family {
        Family::Path => make_path(n)?,
        Family::Star => make_star(n)?,
        Family::Cycle => make_cycle(n)?,
        Family::Complete => make_complete(n)?,
        Family::Broom => make_broom(n, need(a.k, "k", a.family)?)?,
        Family::Gnkj => make_gnkj(GnkjSpec::new(n, need(a.k, "k", a.family)?, need(a.j, "j", a.family)?)?)?,
        Family::T3 => make_t3(n)?,
        Family::T5 => make_t5(n)?,
        Family::DiamTree => {
            let d = need(a.d, "d", a.family)?;
            let b = if n == d + 1 { a.b.unwrap_or(0) } else { need(a.b, "b", a.family)? };
            make_diam_tree(n, d, b)?
        }
    })
}

/// Executes a parsed command line and returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(t) = cli.threads {
        // a pool may already exist when `run` is called more than once
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let result: CliResult<bool> = match &cli.command {
        Command::Entropy { file, measure } => cmd_entropy(out, cli, file, *measure).map(|_| true),
        Command::Table { table, full_k, unbounded } => {
            if *unbounded {
                let _ = writeln!(err, "warning: --unbounded runs can take hours");
            }
            table_rows(*table, *full_k, *unbounded)
                .map_err(CliError::from)
                .and_then(|rows| write_table(out, &rows, cli.format.unwrap_or(Format::Csv), cli.precision))
                .map(|_| true)
        }
        Command::Plot { family: PlotFamily::Gnkj, n, k } => cmd_plot(out, cli, *n, *k).map(|_| true),
        Command::Verify { suite } => cmd_verify(out, err, cli, *suite),
        Command::Sweep { n, full_k, k } => cmd_sweep(out, cli, n, *full_k, *k).map(|_| true),
        Command::DumpFamily(a) => build_family(a).and_then(|g| {
            out.write_all(write_edge_list(&g).as_bytes())?;
            Ok(true)
        }),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
