//! `autoseq`: build, transform and inspect automatic sequences from the shell.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use autoseq::automaton::{combine, equivalent, minimize, reverse};
use autoseq::dekking::{transduce_dfao, transduce_lsd};
use autoseq::dot::{dfao_to_dot, transducer_to_dot};
use autoseq::expr::Expr;
use autoseq::extension::transduce_numeration;
use autoseq::format::{parse_dfao, parse_morphism, parse_transducer, write_dfao};
use autoseq::fractal::render_fractal;
use autoseq::library::{self, CorpusObject};
use autoseq::{symbol_to_string, Dfao, Equivalence, NumerationSystem, Order, Symbol, Transducer};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "autoseq",
    version,
    about = "Transduction of automatic sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a transducer to the sequence of a DFAO and save the result.
    Transduce {
        out: PathBuf,
        transducer: String,
        dfao: String,
    },
    /// Save the minimal DFAO reading the reversed representations.
    Reverse { out: PathBuf, dfao: String },
    /// Save the minimal equivalent DFAO.
    Minimize { out: PathBuf, dfao: String },
    /// Save the 0/1 DFAO of a boolean expression over several DFAOs.
    Combine {
        out: PathBuf,
        expr: String,
        #[arg(required = true)]
        dfaos: Vec<String>,
    },
    /// Print the first N terms.
    Eval { dfao: String, n: usize },
    /// Decide whether two DFAOs agree on every input word.
    Equiv { a: String, b: String },
    /// Print the number of states.
    States { dfao: String },
    /// Print a DOT graph of a DFAO or transducer.
    Dot { object: String },
    /// Render iterated transductions as a PBM bitmap.
    Fractal {
        dfao: String,
        transducer: String,
        rows: usize,
        cols: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the representation of n (`msd_2`, `lsd_3`, `msd_fib`, ...).
    Repr { n: u64, system: String },
    /// Inspect the built-in corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// List every entry with its kind and description.
    List,
    /// Write every entry to `<dir>/<NAME>.txt`.
    Export { dir: PathBuf },
}

enum Failure {
    Usage(String),
    Parse(String),
    Semantic(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Semantic(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Semantic(m) => m,
        }
    }
}

impl From<autoseq::Error> for Failure {
    fn from(e: autoseq::Error) -> Self {
        use autoseq::Error::*;
        match e {
            Parse { .. } | MissingTransition { .. } | UnknownNumeration(_) => {
                Failure::Parse(e.to_string())
            }
            UnknownName(_) => Failure::Usage(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Transduce {
            out,
            transducer,
            dfao,
        } => {
            let t = load_transducer(&transducer)?;
            let m = load_dfao(&dfao)?;
            let result = if m.numeration().is_fibonacci() || !m.is_complete() {
                transduce_numeration(&m, &t)?
            } else if m.numeration().order == Order::Lsd {
                transduce_lsd(&m, &t)?
            } else {
                transduce_dfao(&m, &t)?
            };
            save(&out, &write_dfao(&result))
        }
        Command::Reverse { out, dfao } => save(&out, &write_dfao(&reverse(&load_dfao(&dfao)?)?)),
        Command::Minimize { out, dfao } => save(&out, &write_dfao(&minimize(&load_dfao(&dfao)?)?)),
        Command::Combine { out, expr, dfaos } => {
            let e = Expr::parse(&expr)?;
            if e.arity() > dfaos.len() {
                return Err(Failure::Usage(format!(
                    "expression uses {} automata but {} were given",
                    e.arity(),
                    dfaos.len()
                )));
            }
            let ms = dfaos
                .iter()
                .map(|d| load_dfao(d))
                .collect::<CliResult<Vec<_>>>()?;
            let refs: Vec<&Dfao> = ms.iter().collect();
            let combined = combine(&refs, |xs: &[Symbol]| Symbol::from(e.eval(xs)))?;
            save(&out, &write_dfao(&minimize(&combined)?))
        }
        Command::Eval { dfao, n } => {
            let m = load_dfao(&dfao)?;
            let terms = (0..n as u64)
                .map(|i| m.eval(i))
                .collect::<autoseq::Result<Vec<_>>>()?;
            println!("{}", join_symbols(&terms));
            Ok(())
        }
        Command::Equiv { a, b } => {
            match equivalent(&load_dfao(&a)?, &load_dfao(&b)?)? {
                Equivalence::Equivalent => println!("equivalent"),
                Equivalence::Differ { witness } => {
                    println!("differ on {}", word_to_string(&witness))
                }
            }
            Ok(())
        }
        Command::States { dfao } => {
            println!("{}", load_dfao(&dfao)?.state_count());
            Ok(())
        }
        Command::Dot { object } => {
            let text = match load(&object)? {
                Loaded::Dfao(m) => dfao_to_dot(&m),
                Loaded::Transducer(t) => transducer_to_dot(&t),
                Loaded::Morphism => {
                    return Err(Failure::Usage(format!("`{object}` is a morphism")))
                }
            };
            print!("{text}");
            Ok(())
        }
        Command::Fractal {
            dfao,
            transducer,
            rows,
            cols,
            output,
        } => {
            let pbm = render_fractal(
                &load_dfao(&dfao)?,
                &load_transducer(&transducer)?,
                rows,
                cols,
            )?;
            match output {
                Some(path) => fs::write(&path, pbm).map_err(|e| io_failure(&path, e)),
                None => std::io::stdout()
                    .write_all(pbm.as_bytes())
                    .map_err(|e| Failure::Semantic(e.to_string())),
            }
        }
        Command::Repr { n, system } => {
            let sys: NumerationSystem = system.parse()?;
            println!("{}", word_to_string(&sys.digits(n)));
            Ok(())
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for name in library::NAMES {
                    let e = library::get(name)?;
                    println!(
                        "{:<12} {:<10} {}",
                        e.name,
                        format!("{:?}", e.kind).to_lowercase(),
                        e.provenance
                    );
                }
                Ok(())
            }
            CorpusAction::Export { dir } => {
                fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;
                for name in library::NAMES {
                    let e = library::get(name)?;
                    let path = dir.join(e.file_name());
                    fs::write(&path, library::shipped_text(&e))
                        .map_err(|err| io_failure(&path, err))?;
                }
                Ok(())
            }
        },
    }
}

enum Loaded {
    Dfao(Dfao),
    Transducer(Transducer),
    Morphism,
}

/// Resolves `arg` as a file, then `arg.txt`, then a corpus name.
fn load(arg: &str) -> CliResult<Loaded> {
    for path in [PathBuf::from(arg), PathBuf::from(format!("{arg}.txt"))] {
        if path.is_file() {
            let text = fs::read_to_string(&path).map_err(|e| io_failure(&path, e))?;
            return parse_any(&text).map_err(|f| match f {
                Failure::Parse(m) => Failure::Parse(format!("{}: {m}", path.display())),
                other => other,
            });
        }
    }
    match library::get(arg) {
        Ok(e) => Ok(match e.object {
            CorpusObject::Dfao(m) => Loaded::Dfao(m),
            CorpusObject::Transducer(t) => Loaded::Transducer(t),
            CorpusObject::Morphism(_) => Loaded::Morphism,
        }),
        Err(_) => Err(Failure::Usage(format!(
            "`{arg}` is neither a file nor a corpus entry"
        ))),
    }
}

/// Transducer files open with `{`, morphism files with `morphism`.
fn parse_any(text: &str) -> CliResult<Loaded> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !(l.starts_with('#') && !l.contains("->")))
        .unwrap_or("");
    if first.starts_with('{') {
        Ok(Loaded::Transducer(parse_transducer(text)?))
    } else if first == "morphism" {
        parse_morphism(text)?;
        Ok(Loaded::Morphism)
    } else {
        Ok(Loaded::Dfao(parse_dfao(text)?))
    }
}

fn load_dfao(arg: &str) -> CliResult<Dfao> {
    match load(arg)? {
        Loaded::Dfao(m) => Ok(m),
        _ => Err(Failure::Usage(format!("`{arg}` is not a DFAO"))),
    }
}

fn load_transducer(arg: &str) -> CliResult<Transducer> {
    match load(arg)? {
        Loaded::Transducer(t) => Ok(t),
        _ => Err(Failure::Usage(format!("`{arg}` is not a transducer"))),
    }
}

/// Writes to `out`, adding `.txt` when it has no extension.
fn save(out: &Path, text: &str) -> CliResult<()> {
    let path = if out.extension().is_some() {
        out.to_path_buf()
    } else {
        out.with_extension("txt")
    };
    fs::write(&path, text).map_err(|e| io_failure(&path, e))
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn join_symbols(xs: &[Symbol]) -> String {
    let wide = xs.iter().any(|&x| x > 9);
    let parts: Vec<String> = xs.iter().map(|&x| symbol_to_string(x)).collect();
    parts.join(if wide { " " } else { "" })
}

fn word_to_string(w: &[u32]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        join_symbols(w)
    }
}
