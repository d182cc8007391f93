use std::process::ExitCode;

use cayley_core::octonion::multiplication_table;
use cayley_core::suites::{self, Options, Report, Suite};
use cayley_core::{jordan, symmetry::cache};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cayley", version, about = "Exact verification suites for isometric actions on the Cayley plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for all sampled points.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Random points per cohomogeneity estimate (at least 20).
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,

    /// Height bound for rational sample coordinates.
    #[arg(long, global = true, default_value_t = cayley_core::samplers::DEFAULT_HEIGHT)]
    height: i64,

    /// Parameters n for the classical table rows.
    #[arg(long = "n", global = true, value_delimiter = ',', default_values_t = [2usize, 3])]
    ns: Vec<usize>,

    /// Recompute the f4 basis instead of reading the disk cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Record per-check wall-clock times (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Totally geodesic submanifolds: Z, N, cohomogeneity and slice polarity.
    VerifyTable4,
    /// Orbit dimensions along a geodesic for the cohomogeneity-one actions.
    VerifyTable3Cohom1,
    /// The so3 + g2 action and its section.
    VerifyG2so3,
    /// Singular orbit dimensions of slice representations.
    VerifySliceArcs,
    /// Maximal subalgebras from the extended Dynkin diagram.
    VerifyBds,
    /// Cohomogeneity and non-polarity of the classical table rows.
    VerifyTables12,
    /// Fixed sets of g2 > su3 > sp1 at the basepoint.
    VerifyChain,
    /// Dimensions of g2, f4 and spin9.
    VerifyAlgebras,
    /// Principal isotropy fixed dimensions.
    VerifyAsystatic,
    /// Non-polar restrictions of the spin representation.
    VerifyNonpolar,
    /// Every suite.
    All,
    /// Octonion multiplication table and Jordan Gram matrix as JSON.
    DumpTables,
}

impl Command {
    fn suite(self) -> Option<Suite> {
        Some(match self {
            Command::VerifyTable4 => Suite::Table4,
            Command::VerifyTable3Cohom1 => Suite::Table3Cohom1,
            Command::VerifyG2so3 => Suite::G2So3,
            Command::VerifySliceArcs => Suite::SliceArcs,
            Command::VerifyBds => Suite::Bds,
            Command::VerifyTables12 => Suite::Tables12,
            Command::VerifyChain => Suite::Chain,
            Command::VerifyAlgebras => Suite::Algebras,
            Command::VerifyAsystatic => Suite::Asystatic,
            Command::VerifyNonpolar => Suite::NonPolar,
            Command::All | Command::DumpTables => return None,
        })
    }
}

fn dump_tables() -> serde_json::Value {
    let table: Vec<Vec<String>> = multiplication_table()
        .iter()
        .map(|row| row.iter().map(|&(s, k)| format!("{}e{k}", if s < 0 { "-" } else { "" })).collect())
        .collect();
    let gram = jordan::gram();
    let gram: Vec<Vec<String>> = (0..gram.rows()).map(|i| gram.row(i).iter().map(|x| x.to_string()).collect()).collect();
    json!({ "octonion_multiplication": table, "jordan_gram": gram })
}

fn markdown(report: &Report) -> String {
    let mut out = format!("## {} (seed {}, samples {}, height {})\n\n", report.suite, report.seed, report.samples, report.height);
    out.push_str("| check | anchor | basis | expected | computed | result |\n|---|---|---|---|---|---|\n");
    for c in &report.checks {
        let basis = serde_json::to_value(c.basis).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        let result = if c.pass { "pass" } else { "FAIL" };
        let ms = c.runtime_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
        out.push_str(&format!("| {} | {} | {basis} | {} | {} | {result}{ms} |\n", c.id, c.anchor, c.expected, c.computed));
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    out.push_str(&format!("\n{passed}/{} checks passed\n", report.checks.len()));
    for e in &report.errors {
        out.push_str(&format!("\nerror: {e}"));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.no_cache {
        cache::set_enabled(false);
    }
    if cli.samples < 20 {
        eprintln!("error: --samples must be at least 20");
        return ExitCode::from(2);
    }
    if let Some(&n) = cli.ns.iter().find(|&&n| n < 2) {
        eprintln!("error: table rows need n >= 2, got {n}");
        return ExitCode::from(2);
    }
    if let Command::DumpTables = cli.command {
        println!("{}", serde_json::to_string_pretty(&dump_tables()).expect("json"));
        return ExitCode::SUCCESS;
    }
    let opts = Options { seed: cli.seed, samples: cli.samples, height: cli.height, table_ns: cli.ns.clone(), timings: cli.timings };
    let report = match cli.command.suite() {
        Some(s) => s.run(&opts),
        None => suites::run_all(&opts),
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("json")),
        Format::Markdown => println!("{}", markdown(&report)),
    }
    if !report.errors.is_empty() {
        ExitCode::from(2)
    } else if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
