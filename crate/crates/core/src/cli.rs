//! Command-line surface. Parsing lives here so the binary stays a thin
//! wrapper and every command can be exercised from tests.
//!
//! Exit statuses: 0 on success or all checks passing, 1 when a verification
//! check fails, 2 for usage errors (bad flags, unsupported format, limits).

use std::sync::LazyLock;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::alt_order;
use crate::groupdata::{reference_checksum, TABLE_DEGREES};
use crate::primegraph::build_graph;
use crate::spectrum::{
    in_spectrum_alt, m_i_with_cap, spectrum_with_cap, Family, GroupFamilyPoint, MaxOrderTable,
    DEFAULT_ENUMERATION_CAP,
};
use crate::verifier::{
    check_analytic_bound, replay_all, replay_theorem, verify_lemma41_sharded, verify_reference_data,
    verify_table1, Section, VerificationReport, DEFAULT_N_MAX,
};
use crate::groupdata::ReferenceData;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Degrees at which `verify all` evaluates the analytic bound.
pub const ANALYTIC_SAMPLE_DEGREES: [u64; 3] = [906, 10_000, 1_000_000];

static VERSION: LazyLock<String> = LazyLock::new(|| {
    format!("{} (reference data sha256 {})", env!("CARGO_PKG_VERSION"), reference_checksum())
});

#[derive(Debug, Parser)]
#[command(name = "altrec", about = "Element orders, prime graphs and recognition checks for alternating groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every element order of S_n or A_n.
    Spectrum {
        family: FamilyArg,
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Largest degree for which full enumeration is allowed.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u32,
    },
    /// Largest element order, with its factorization.
    M1 {
        family: FamilyArg,
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The i-th largest element order.
    Mi {
        family: FamilyArg,
        n: u32,
        i: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u32,
    },
    /// Prime graph of A_n.
    Graph {
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run verification checks; exit status 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub which: Which,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Upper end of the range for the lemma41 sweep.
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub n_max: u32,
    /// Replay a single degree of the theorem instead of all of them.
    #[arg(long)]
    pub n: Option<u32>,
    /// Worker threads for the lemma41 sweep.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(alias = "alternating")]
    Alt,
    #[value(alias = "symmetric")]
    Sym,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Alt => Family::Alternating,
            FamilyArg::Sym => Family::Symmetric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Table1,
    Lemma41,
    Theorem,
    All,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: EXIT_USAGE }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let command = Cli::command().version(VERSION.as_str());
    let matches = match command.try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match Cli::from_arg_matches(&matches) {
        Ok(cli) => run(cli),
        Err(e) => Outcome::usage(e.to_string()),
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Spectrum { family, n, format, cap } => cmd_spectrum(family.into(), n, format, cap),
        Command::M1 { family, n, format } => cmd_m1(family.into(), n, format),
        Command::Mi { family, n, i, format, cap } => cmd_mi(family.into(), n, i, format, cap),
        Command::Graph { n, format } => cmd_graph(n, format),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn point(family: Family, n: u32) -> Result<GroupFamilyPoint, Outcome> {
    GroupFamilyPoint::new(family, n).map_err(|e| Outcome::usage(e.to_string()))
}

pub fn cmd_spectrum(family: Family, n: u32, format: OutputFormat, cap: u32) -> Outcome {
    let point = match point(family, n) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let orders = match spectrum_with_cap(point, cap) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(format!("{e} (raise it with --cap)")),
    };
    match format {
        OutputFormat::Text => {
            let line: Vec<String> = orders.iter().map(|m| m.to_string()).collect();
            Outcome::ok(format!("{}\n", line.join(" ")))
        }
        OutputFormat::Json => Outcome::ok(format!("{}\n", serde_json::to_string(&orders).expect("serializable"))),
        OutputFormat::Dot => Outcome::usage("--format dot is only available for graph"),
    }
}

pub fn cmd_m1(family: Family, n: u32, format: OutputFormat) -> Outcome {
    let point = match point(family, n) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let m1 = MaxOrderTable::new(n).max_order(point);
    match format {
        OutputFormat::Text => Outcome::ok(format!("{} = {m1}\n", m1.value_string())),
        OutputFormat::Json => {
            let value = json!({
                "group": point.to_string(),
                "family": family,
                "degree": n,
                "m1": m1.value_string(),
                "factorization": m1.to_string(),
            });
            Outcome::ok(format!("{}\n", serde_json::to_string(&value).expect("serializable")))
        }
        OutputFormat::Dot => Outcome::usage("--format dot is only available for graph"),
    }
}

pub fn cmd_mi(family: Family, n: u32, i: usize, format: OutputFormat, cap: u32) -> Outcome {
    let point = match point(family, n) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let value = match m_i_with_cap(point, i, cap) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    match format {
        OutputFormat::Text => Outcome::ok(format!("{value}\n")),
        OutputFormat::Json => Outcome::ok(format!(
            "{}\n",
            json!({ "group": point.to_string(), "i": i, "value": value })
        )),
        OutputFormat::Dot => Outcome::usage("--format dot is only available for graph"),
    }
}

pub fn cmd_graph(n: u32, format: OutputFormat) -> Outcome {
    let order = match alt_order(n) {
        Ok(o) => o,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let graph = build_graph(&order, |m| in_spectrum_alt(m, n));
    match format {
        OutputFormat::Dot => Outcome::ok(graph.to_dot(&format!("A{n}"))),
        OutputFormat::Json => Outcome::ok(format!(
            "{}\n",
            serde_json::to_string(&graph.to_json()).expect("serializable")
        )),
        OutputFormat::Text => {
            let vertices: Vec<String> = graph.vertices().iter().map(u64::to_string).collect();
            let edges: Vec<String> = graph.edges().map(|(p, q)| format!("{p}-{q}")).collect();
            Outcome::ok(format!("vertices: {}\nedges: {}\n", vertices.join(" "), edges.join(" ")))
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Outcome {
    if args.format == OutputFormat::Dot {
        return Outcome::usage("--format dot is only available for graph");
    }
    if args.jobs == 0 {
        return Outcome::usage("--jobs must be at least 1");
    }
    let mut sections = Vec::new();
    let lemma41 = |sections: &mut Vec<Section>| -> Result<(), Outcome> {
        let checks = verify_lemma41_sharded(args.n_max, args.jobs).map_err(|e| Outcome::usage(e.to_string()))?;
        sections.push(Section::new("lemma41", checks));
        Ok(())
    };
    let theorem = |sections: &mut Vec<Section>| -> Result<(), Outcome> {
        match args.n {
            Some(n) => {
                let case = replay_theorem(n).map_err(|e| Outcome::usage(e.to_string()))?;
                sections.push(case.into());
            }
            None => sections.extend(replay_all().into_iter().map(Section::from)),
        }
        Ok(())
    };
    let result = match args.which {
        Which::Table1 => {
            sections.push(Section::new("table1", verify_table1()));
            Ok(())
        }
        Which::Lemma41 => lemma41(&mut sections),
        Which::Theorem => theorem(&mut sections),
        Which::All => {
            sections.push(Section::new("refdata", verify_reference_data(&ReferenceData::embedded())));
            sections.push(Section::new("table1", verify_table1()));
            let analytic = ANALYTIC_SAMPLE_DEGREES
                .iter()
                .map(|&n| check_analytic_bound(n).expect("sample degrees are in range"))
                .collect();
            lemma41(&mut sections)
                .and_then(|_| {
                    sections.push(Section::new("analytic", analytic));
                    theorem(&mut sections)
                })
        }
    };
    if let Err(outcome) = result {
        return outcome;
    }
    let report = VerificationReport::new(sections);
    let stdout = match args.format {
        OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")),
        _ => {
            let mut text = report.render_text();
            if let Some(table) = report.sections.iter().find(|s| s.name == "table1") {
                let rows_ok = TABLE_DEGREES
                    .iter()
                    .filter(|n| {
                        let prefix = format!("table1.n={n}.");
                        table.checks.iter().filter(|c| c.check_id.starts_with(&prefix)).all(|c| c.passed)
                    })
                    .count();
                text.push_str(&format!("table1 rows: {rows_ok}/{} pass\n", TABLE_DEGREES.len()));
            }
            text
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if report.passed { EXIT_OK } else { EXIT_FAILED },
    }
}

pub fn version() -> &'static str {
    VERSION.as_str()
}
