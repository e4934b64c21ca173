use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jumpomega::automata::{decompose_omega, BuchiAutomaton, Nfa, UpWord};
use jumpomega::io::{
    automaton_from_json, automaton_to_json, masked_from_json, masked_to_json, semilinear_to_json,
    to_dot,
};
use jumpomega::jumping::{
    jumping_closure, jumping_decide, jumping_member_up, jumping_parikh, masked_to_dba, ClosureKind,
    DecisionProblem,
};
use jumpomega::semilinear::parikh_of_nfa;
use jumpomega::windows::{
    ewindow_construct, ewindow_member_bounded, kwindow_construct, kwindow_member_up, WindowSearch,
};
use jumpomega::{oracle, Error, Limits};

/// Jumping automata over infinite words.
///
/// Automata and sets are read as JSON from the given files, or from standard
/// input when a path is `-` or omitted. Decisions print `true` or `false` and
/// exit with 0 or 1; malformed input exits with 2 and an exceeded resource
/// cap with 3.
#[derive(Parser)]
#[command(name = "jumpomega", version)]
struct Cli {
    /// Overrides every resource cap with the same value.
    #[arg(long, global = true, env = "JUMPOMEGA_CAP")]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parikh image of the jumping language, as a masked semilinear set.
    Parikh {
        /// Parikh image of the automaton read over finite words instead.
        #[arg(long)]
        finite: bool,
        file: Option<PathBuf>,
    },
    /// Canonical oblivious form of a masked semilinear set.
    Canonize { file: Option<PathBuf> },
    /// Membership of `u;v` in the jumping language.
    Member {
        #[arg(long)]
        word: String,
        file: Option<PathBuf>,
    },
    /// Membership of `u;v` in the k-window jumping language.
    Kmember {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        word: String,
        file: Option<PathBuf>,
    },
    /// Searches the least window size up to `--kmax` that admits `u;v`.
    Emember {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        word: String,
        file: Option<PathBuf>,
    },
    /// Automaton constructions.
    #[command(subcommand)]
    Build(Build),
    /// Decision procedures on jumping languages.
    #[command(subcommand)]
    Decide(Decide),
    /// Splits a Büchi automaton into pairs `(S_q, T_q)` with `L = ⋃ S_q·T_q^ω`.
    Decompose { file: Option<PathBuf> },
    /// Graphviz rendering of an automaton.
    ExportDot { file: Option<PathBuf> },
    /// Brute-force baselines.
    #[command(subcommand, hide = true)]
    Oracle(Oracle),
}

#[derive(Subcommand)]
enum Build {
    /// Deterministic automaton for a masked semilinear set.
    Dba {
        file: Option<PathBuf>,
    },
    /// Automaton for the k-window jumping language.
    Bk {
        #[arg(long)]
        k: usize,
        file: Option<PathBuf>,
    },
    /// Automaton whose ∃-window language is the jumping language of the input.
    Ewindow {
        file: Option<PathBuf>,
    },
    Intersect {
        a: PathBuf,
        b: PathBuf,
    },
    Union {
        a: PathBuf,
        b: PathBuf,
    },
    Complement {
        file: Option<PathBuf>,
    },
    Determinize {
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Decide {
    Empty {
        file: Option<PathBuf>,
    },
    /// Whether J(a) ⊆ J(b).
    Contains {
        a: PathBuf,
        b: PathBuf,
    },
    Equiv {
        a: PathBuf,
        b: PathBuf,
    },
    Universal {
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Oracle {
    /// Parikh vectors of accepted finite words up to a length.
    Parikh {
        #[arg(long)]
        maxlen: usize,
        file: Option<PathBuf>,
    },
    /// k-window membership by explicit window permutations.
    Window {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 4)]
        unroll: usize,
        file: Option<PathBuf>,
    },
}

/// What a command produced.
enum Outcome {
    Text(String),
    Decision(bool),
    /// A decision with extra output; the flag selects the exit code.
    Report(String, bool),
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Io(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn buchi(path: Option<&PathBuf>) -> Result<BuchiAutomaton, Error> {
    Ok(BuchiAutomaton::new(automaton_from_json(&read_input(
        path,
    )?)?))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let limits = cli.cap.map(Limits::uniform).unwrap_or_default();
    let json = |a: &BuchiAutomaton| Outcome::Text(automaton_to_json(a));
    Ok(match cli.command {
        Command::Parikh { finite, file } => {
            let a = buchi(file.as_ref())?;
            if finite {
                let s = parikh_of_nfa(&Nfa::new(a.automaton().clone()), &limits)?;
                Outcome::Text(semilinear_to_json(a.alphabet(), &s))
            } else {
                Outcome::Text(masked_to_json(&jumping_parikh(&a, &limits)?))
            }
        }
        Command::Canonize { file } => Outcome::Text(masked_to_json(
            &masked_from_json(&read_input(file.as_ref())?)?.canonicalize(),
        )),
        Command::Member { word, file } => {
            let a = buchi(file.as_ref())?;
            let w = UpWord::parse(&word, a.alphabet())?;
            Outcome::Decision(jumping_member_up(&a, &w, &limits)?)
        }
        Command::Kmember { k, word, file } => {
            let a = buchi(file.as_ref())?;
            let w = UpWord::parse(&word, a.alphabet())?;
            Outcome::Decision(kwindow_member_up(&a, k, &w, &limits)?)
        }
        Command::Emember { kmax, word, file } => {
            let a = buchi(file.as_ref())?;
            let w = UpWord::parse(&word, a.alphabet())?;
            match ewindow_member_bounded(&a, &w, kmax)? {
                WindowSearch::MemberAt(k) => Outcome::Report(format!("member-at {k}"), true),
                WindowSearch::NotFoundUpTo(k) => {
                    Outcome::Report(format!("not-found-up-to {k}"), false)
                }
            }
        }
        Command::Build(b) => match b {
            Build::Dba { file } => json(&masked_to_dba(
                &masked_from_json(&read_input(file.as_ref())?)?,
                &limits,
            )?),
            Build::Bk { k, file } => json(&kwindow_construct(&buchi(file.as_ref())?, k, &limits)?),
            Build::Ewindow { file } => json(&ewindow_construct(&buchi(file.as_ref())?, &limits)?),
            Build::Intersect { a, b } => json(&jumping_closure(
                ClosureKind::Intersection,
                &buchi(Some(&a))?,
                Some(&buchi(Some(&b))?),
                &limits,
            )?),
            Build::Union { a, b } => json(&jumping_closure(
                ClosureKind::Union,
                &buchi(Some(&a))?,
                Some(&buchi(Some(&b))?),
                &limits,
            )?),
            Build::Complement { file } => json(&jumping_closure(
                ClosureKind::Complement,
                &buchi(file.as_ref())?,
                None,
                &limits,
            )?),
            Build::Determinize { file } => json(&jumping_closure(
                ClosureKind::Determinize,
                &buchi(file.as_ref())?,
                None,
                &limits,
            )?),
        },
        Command::Decide(d) => {
            let (problem, a, b) = match d {
                Decide::Empty { file } => (DecisionProblem::Empty, buchi(file.as_ref())?, None),
                Decide::Universal { file } => {
                    (DecisionProblem::Universality, buchi(file.as_ref())?, None)
                }
                Decide::Contains { a, b } => (
                    DecisionProblem::Containment,
                    buchi(Some(&a))?,
                    Some(buchi(Some(&b))?),
                ),
                Decide::Equiv { a, b } => (
                    DecisionProblem::Equivalence,
                    buchi(Some(&a))?,
                    Some(buchi(Some(&b))?),
                ),
            };
            Outcome::Decision(jumping_decide(problem, &a, b.as_ref(), &limits)?)
        }
        Command::Decompose { file } => {
            let a = buchi(file.as_ref())?;
            let parts: Vec<serde_json::Value> = decompose_omega(&a)
                .iter()
                .map(|(s, t)| {
                    let parse = |x: &Nfa| {
                        serde_json::from_str::<serde_json::Value>(&automaton_to_json(x))
                            .expect("valid json")
                    };
                    serde_json::json!({ "prefix": parse(s), "loop": parse(t) })
                })
                .collect();
            Outcome::Text(serde_json::to_string_pretty(&parts).expect("serializable"))
        }
        Command::ExportDot { file } => {
            Outcome::Text(to_dot(&automaton_from_json(&read_input(file.as_ref())?)?))
        }
        Command::Oracle(o) => match o {
            Oracle::Parikh { maxlen, file } => {
                let a = buchi(file.as_ref())?;
                let vectors =
                    oracle::enum_parikh_language(&Nfa::new(a.automaton().clone()), maxlen);
                Outcome::Text(
                    vectors
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join("\n"),
                )
            }
            Oracle::Window {
                k,
                word,
                unroll,
                file,
            } => {
                let a = buchi(file.as_ref())?;
                let w = UpWord::parse(&word, a.alphabet())?;
                Outcome::Decision(oracle::brute_window_member(&a, k, &w, unroll)?)
            }
        },
    })
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Text(t)) => {
            emit(t.trim_end());
            ExitCode::SUCCESS
        }
        Ok(Outcome::Decision(b)) => {
            emit(&b.to_string());
            ExitCode::from(if b { 0 } else { 1 })
        }
        Ok(Outcome::Report(t, b)) => {
            emit(&t);
            ExitCode::from(if b { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(if e.is_resource_cap() { 3 } else { 2 })
        }
    }
}
