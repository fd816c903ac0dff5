//! Command-line surface over the library: witness generation, language
//! operations, semigroup and atom measurements, the OCFP check, and the full
//! verification grid.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ufc::atoms::{atom_with_cap, atoms_report_with, AtomIndex, AtomLimits};
use ufc::dfa::Dfa;
use ufc::error::Error;
use ufc::interchange;
use ufc::ops::{self, BoolOp, Mode, OpResult};
use ufc::report::{run_verify, ComplexityReport, GridSpec, ReportFormat};
use ufc::transform::{transition_semigroup_size, DEFAULT_CLOSURE_CAP};
use ufc::witness::{make_witness, ocfp_check, DialectSpec};

#[derive(Parser)]
#[command(
    name = "ufc",
    version,
    about = "State-complexity laboratory for deterministic union-free regular languages"
)]
struct Cli {
    /// Report format for tabular output.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Md)]
    format: FormatArg,
    /// Write the primary output (automaton or report) to this file instead
    /// of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Suppress summary lines.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Md,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> ReportFormat {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Md => ReportFormat::Markdown,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a witness automaton for a dialect.
    Witness {
        /// Number of states (at least 3).
        #[arg(long)]
        n: usize,
        /// Dialect in the `a,b,-,c` notation.
        #[arg(long, default_value = "a,b,c,d")]
        dialect: String,
    },
    /// Apply a language operation to automaton files and emit the minimal
    /// result.
    Op {
        #[arg(value_enum)]
        name: OpName,
        #[command(flatten)]
        inputs: OpInputs,
        /// Alphabet discipline for binary operations.
        #[arg(long, value_enum, default_value_t = ModeArg::Restricted)]
        mode: ModeArg,
    },
    /// Size of the transition semigroup (= syntactic semigroup) of a
    /// minimal automaton.
    Semigroup {
        #[arg(long = "in")]
        input: PathBuf,
        /// Closure cap; defaults to UFC_MAX_CLOSURE or 2000000.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Atom complexities: the full per-subset table, or one atom's minimal
    /// automaton with --set.
    Atoms {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated state list selecting one atom, e.g. "0,2"; empty
        /// string for the empty subset.
        #[arg(long)]
        set: Option<String>,
        /// Allow sweeps on automata with up to this many states.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Check the one-cycle-free-path property.
    Ocfp {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Sweep the witness grids and verify every complexity bound.
    Verify {
        #[arg(long, default_value_t = 3)]
        m_min: usize,
        #[arg(long, default_value_t = 6)]
        m_max: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Comma-separated item numbers (1-7); default all.
        #[arg(long)]
        items: Option<String>,
        /// Cap for the per-subset atom sweeps of item 4.
        #[arg(long, default_value_t = 5)]
        atoms_max_n: usize,
        /// Cap for the semigroup closures of item 1.
        #[arg(long, default_value_t = 7)]
        semigroup_max_n: usize,
        /// Include per-cell timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpName {
    Reverse,
    Star,
    Concat,
    Union,
    Intersect,
    Diff,
    Symdiff,
}

#[derive(Args)]
struct OpInputs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Second operand for concat and boolean operations.
    #[arg(long = "in2")]
    input2: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Restricted,
    Unrestricted,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Restricted => Mode::Restricted,
            ModeArg::Unrestricted => Mode::Unrestricted,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn closure_cap(explicit: Option<usize>) -> Result<usize, Error> {
    if let Some(cap) = explicit {
        return Ok(cap);
    }
    match std::env::var("UFC_MAX_CLOSURE") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::Interchange(format!("UFC_MAX_CLOSURE=\"{text}\" is not a number"))),
        Err(_) => Ok(DEFAULT_CLOSURE_CAP),
    }
}

fn load_dfa(path: &Path) -> Result<Dfa, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    interchange::automaton_from_json(&text)?.into_dfa()
}

/// Primary output goes to --out when given, otherwise to stdout.
fn emit(cli: &Cli, payload: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => {
            fs::write(path, payload).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
        }
        None => println!("{payload}"),
    }
    Ok(())
}

fn summary(cli: &Cli, line: &str) {
    if !cli.quiet {
        // keep stdout clean for piped payloads
        if cli.out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Witness { n, dialect } => {
            let spec: DialectSpec = dialect.parse()?;
            let d = make_witness(*n, &spec)?;
            let ocfp = ocfp_check(&d);
            emit(cli, &interchange::dfa_to_json(&d))?;
            summary(
                cli,
                &format!(
                    "witness L_{n}({spec}): complexity {}, minimal: {}, ocfp: {ocfp}",
                    d.complexity(),
                    if d.is_minimal() { "yes" } else { "no" },
                ),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Op { name, inputs, mode } => {
            let first = load_dfa(&inputs.input)?;
            let result = apply_op(*name, &first, inputs, (*mode).into())?;
            emit(cli, &interchange::dfa_to_json(&result.result))?;
            summary(
                cli,
                &format!(
                    "{}: complexity {} (raw {})",
                    result.construction,
                    result.complexity(),
                    result.raw_states
                ),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Semigroup { input, cap } => {
            let d = load_dfa(input)?;
            let report = transition_semigroup_size(&d, closure_cap(*cap)?)?;
            let rendered = match cli.format {
                FormatArg::Json => serde_json::json!({
                    "size": report.size,
                    "complete": report.complete,
                })
                .to_string(),
                FormatArg::Csv => format!("size,complete\n{},{}", report.size, report.complete),
                FormatArg::Md => {
                    if report.complete {
                        format!("semigroup size: {}", report.size)
                    } else {
                        format!("semigroup size: exceeded cap at {} elements", report.size)
                    }
                }
            };
            emit(cli, &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Atoms { input, set, max_n } => {
            let d = load_dfa(input)?;
            let limits = AtomLimits {
                max_states: *max_n,
                closure_cap: closure_cap(None)?,
            };
            match set {
                Some(list) => {
                    let subset = parse_state_set(list)?;
                    match atom_with_cap(&d, subset, limits.closure_cap)? {
                        Some(atom) => {
                            emit(cli, &interchange::dfa_to_json(&atom))?;
                            summary(
                                cli,
                                &format!("atom {subset}: complexity {}", atom.state_count()),
                            );
                        }
                        None => summary(cli, &format!("atom {subset}: empty")),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    let report = atoms_report_with(&d, limits)?;
                    emit(cli, &render_atom_report(&report, cli.format))?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Ocfp { input } => {
            let d = load_dfa(input)?;
            let report = ocfp_check(&d);
            let rendered = match cli.format {
                FormatArg::Json => serde_json::json!({
                    "pass": report.passed(),
                    "violations": report
                        .violations
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>(),
                })
                .to_string(),
                _ => format!("ocfp: {report}"),
            };
            emit(cli, &rendered)?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            m_min,
            m_max,
            n_min,
            n_max,
            items,
            atoms_max_n,
            semigroup_max_n,
            timings,
        } => {
            let items: BTreeSet<u8> = match items {
                Some(list) => {
                    let mut set = BTreeSet::new();
                    for piece in list.split(',') {
                        let item: u8 = piece.trim().parse().map_err(|_| {
                            Error::GridRange(format!("item \"{piece}\" is not a number"))
                        })?;
                        if !(1..=7).contains(&item) {
                            return Err(Error::GridRange(format!(
                                "item {item} out of range 1..=7"
                            )));
                        }
                        set.insert(item);
                    }
                    set
                }
                None => (1..=7).collect(),
            };
            let grid = GridSpec {
                m_min: *m_min,
                m_max: *m_max,
                n_min: *n_min,
                n_max: *n_max,
                items,
                atoms_max_n: *atoms_max_n,
                semigroup_max_n: *semigroup_max_n,
                closure_cap: closure_cap(None)?,
                timings: *timings,
            };
            let report = run_verify(&grid)?;
            emit(cli, &report.render(cli.format.into(), *timings))?;
            let (passed, failed, reported) = tally(&report);
            summary(
                cli,
                &format!("verify: {passed} pass, {failed} fail, {reported} reported"),
            );
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn tally(report: &ComplexityReport) -> (usize, usize, usize) {
    let mut passed = 0;
    let mut failed = 0;
    let mut reported = 0;
    for row in &report.rows {
        match row.pass {
            Some(true) => passed += 1,
            Some(false) => failed += 1,
            None => reported += 1,
        }
    }
    (passed, failed, reported)
}

fn apply_op(name: OpName, first: &Dfa, inputs: &OpInputs, mode: Mode) -> Result<OpResult, Error> {
    let second = || -> Result<Dfa, Error> {
        let path = inputs.input2.as_ref().ok_or_else(|| {
            Error::Interchange("this operation needs a second input (--in2)".into())
        })?;
        load_dfa(path)
    };
    match name {
        OpName::Reverse => ops::reverse(&first.complete_over_self()),
        OpName::Star => ops::star(&first.complete_over_self()),
        OpName::Concat => ops::concat(first, &second()?, mode),
        OpName::Union => ops::boolean(first, &second()?, BoolOp::UNION, mode),
        OpName::Intersect => ops::boolean(first, &second()?, BoolOp::INTERSECTION, mode),
        OpName::Diff => ops::boolean(first, &second()?, BoolOp::DIFFERENCE, mode),
        OpName::Symdiff => ops::boolean(first, &second()?, BoolOp::SYMMETRIC_DIFFERENCE, mode),
    }
}

fn parse_state_set(list: &str) -> Result<AtomIndex, Error> {
    let trimmed = list.trim();
    if trimmed.is_empty() || trimmed == "{}" {
        return Ok(AtomIndex::empty());
    }
    let mut states = Vec::new();
    for piece in trimmed.split(',') {
        let q: usize = piece.trim().parse().map_err(|_| {
            Error::Interchange(format!("state \"{piece}\" in --set is not a number"))
        })?;
        if q >= 64 {
            return Err(Error::AtomWidth(q + 1));
        }
        states.push(q);
    }
    Ok(AtomIndex::from_states(states))
}

fn render_atom_report(report: &ufc::atoms::AtomReport, format: FormatArg) -> String {
    match format {
        FormatArg::Json => {
            let rows: Vec<serde_json::Value> = report
                .rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "set": r.subset.states().collect::<Vec<_>>(),
                        "nonempty": r.nonempty,
                        "complexity": r.complexity,
                        "formula": r.formula,
                        "matches": r.matches_formula,
                    })
                })
                .collect();
            serde_json::json!({
                "states": report.state_count,
                "atom_count": report.atom_count,
                "atoms": rows,
            })
            .to_string()
        }
        FormatArg::Csv => {
            let mut out = String::from("set,nonempty,complexity,formula,matches\n");
            for r in &report.rows {
                out.push_str(&format!(
                    "\"{}\",{},{},{},{}\n",
                    r.subset,
                    r.nonempty,
                    r.complexity.map_or(String::new(), |c| c.to_string()),
                    r.formula,
                    r.matches_formula.map_or(String::new(), |m| m.to_string()),
                ));
            }
            out
        }
        FormatArg::Md => {
            let mut out = String::from("| S | nonempty | complexity | formula | matches |\n");
            out.push_str("|---|---|---|---|---|\n");
            for r in &report.rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    r.subset,
                    if r.nonempty { "yes" } else { "no" },
                    r.complexity.map_or(String::from("-"), |c| c.to_string()),
                    r.formula,
                    r.matches_formula.map_or(String::from("-"), |m| if m {
                        "yes".into()
                    } else {
                        "no".into()
                    }),
                ));
            }
            out.push_str(&format!("\natoms: {}\n", report.atom_count));
            out
        }
    }
}
