//! `mbnf`: decide entailment of a query from a theory file.
//!
//! Exit codes: 0 entailed, 1 not entailed, 2 error.

use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::TypedValueParser;
use clap::{Parser, ValueEnum};
use mbnf_core::oracle::{DEFAULT_CAP, MAX_CAP};
use mbnf_core::report::{render_models, render_verdict};
use mbnf_core::{entails, parse, parse_theory, Config, Formula, Mode, TheoryQuery, Universe};

#[derive(Parser, Debug)]
#[command(
    name = "mbnf",
    version,
    about = "Entailment in the logic of minimal belief and negation as failure"
)]
struct Args {
    /// Theory file: one formula per line, `#` starts a comment.
    #[arg(long)]
    theory: PathBuf,

    /// Positive query formula.
    #[arg(long, required_unless_present = "models")]
    query: Option<String>,

    #[arg(long, value_enum, default_value_t = Engine::Auto)]
    engine: Engine,

    /// Largest alphabet the brute-force oracle accepts.
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u8).range(1..=MAX_CAP as i64).map(usize::from))]
    oracle_cap: usize,

    /// Print the refuting partition, its objective knowledge and an initial
    /// world when the query is not entailed.
    #[arg(long)]
    witness: bool,

    /// List every model family (oracle only).
    #[arg(long)]
    models: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Auto,
    General,
    Flat,
    Oracle,
}

impl From<Engine> for Mode {
    fn from(e: Engine) -> Mode {
        match e {
            Engine::Auto => Mode::Auto,
            Engine::General => Mode::General,
            Engine::Flat => Mode::Flat,
            Engine::Oracle => Mode::Oracle,
        }
    }
}

/// The parsed contents of a theory file. Lines are implicitly conjoined.
struct TheoryFile {
    path: PathBuf,
    formulas: Vec<Formula>,
}

impl TheoryFile {
    fn read(path: &Path) -> Result<TheoryFile, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let formulas = parse_theory(&text).map_err(|e| format!("{}:{e}", path.display()))?;
        Ok(TheoryFile { path: path.to_owned(), formulas })
    }

    fn alphabet(&self) -> Vec<String> {
        mbnf_core::formula::alphabet_of(&self.formulas)
    }
}

fn fail(message: impl Display) -> String {
    message.to_string()
}

fn run(args: &Args, out: &mut impl Write) -> Result<ExitCode, String> {
    if args.models && !matches!(args.engine, Engine::Auto | Engine::Oracle) {
        return Err("--models needs the oracle engine".into());
    }
    if args.oracle_cap == MAX_CAP && (args.models || args.engine == Engine::Oracle) {
        eprintln!("warning: an oracle cap of {MAX_CAP} enumerates 2^16 world sets and can be slow");
    }
    let theory = TheoryFile::read(&args.theory)?;
    let query = match &args.query {
        Some(q) => Some(parse(q).map_err(|e| format!("query: {e}"))?),
        None => None,
    };
    let mut code = ExitCode::SUCCESS;
    let mut report = String::new();

    if let Some(query) = &query {
        let mode = if args.models { Mode::Oracle } else { args.engine.into() };
        let config = Config { mode, oracle_cap: args.oracle_cap };
        let verdict = entails(&TheoryQuery::new(&theory.formulas, query.clone()), &config).map_err(fail)?;
        if !verdict.entailed {
            code = ExitCode::from(1);
        }
        report.push_str(&render_verdict(&verdict, args.witness));
    }

    if args.models {
        let sigma = Formula::conjunction(theory.formulas.iter().cloned());
        let mut alphabet = theory.alphabet();
        if let Some(q) = &query {
            alphabet.extend(q.atoms());
            alphabet.sort();
            alphabet.dedup();
        }
        let universe = Universe::new(alphabet, args.oracle_cap)
            .map_err(|e| format!("{}: {e}", theory.path.display()))?;
        let families = universe.mbnf_models(&sigma).map_err(fail)?;
        let listing = render_models(&families);
        if query.is_none() {
            // No verdict line, so the count line carries the engine name.
            report.push_str(&format!("models={} engine=oracle\n", families.len()));
            listing.lines().skip(1).for_each(|l| report.push_str(&format!("{l}\n")));
        } else {
            report.push_str(&listing);
        }
    }

    out.write_all(report.as_bytes()).map_err(fail)?;
    Ok(code)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args, &mut io::stdout().lock()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
