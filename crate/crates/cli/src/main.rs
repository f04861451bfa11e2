use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand, ValueEnum};

use altdet::{parse_document, parse_word, render_word, to_dot, Document, Machine};
use altdet_core::{
    afa_accepts, determinize_afa, determinize_nfa, dfa_accepts, dfa_equiv,
    nfa_accepts_existential, nfa_accepts_universal, suite_passes, CheckConfig, Determinized,
    PowAlgebra, StateDecode, StateSet, SuiteItem,
};

// exit codes: 0 accept/success, 1 reject/inequivalent/laws-violated,
// 2 usage or parse error, 3 capacity exceeded
const EXIT_REJECT: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_CAPACITY: i32 = 3;

#[derive(Parser)]
#[command(name = "altdet", version, about = "Run, determinize, and compare automata; check the algebraic laws behind the construction")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algebra {
    /// existential acceptance (some run accepts)
    Max,
    /// universal acceptance (every run accepts)
    Min,
}

impl From<Algebra> for PowAlgebra {
    fn from(a: Algebra) -> PowAlgebra {
        match a {
            Algebra::Max => PowAlgebra::Max,
            Algebra::Min => PowAlgebra::Min,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Monad,
    Distlaw,
    Negative,
    Lemma,
    Semantics,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the automaton accepts a word
    Accept {
        file: PathBuf,
        /// the word; `eps` or an empty string for the empty word
        word: String,
        /// start state, or comma-separated set for an nfa (default: first state)
        #[arg(long)]
        start: Option<String>,
        /// acceptance mode for nfa state sets
        #[arg(long, value_enum, default_value = "max")]
        algebra: Algebra,
    },
    /// Print an equivalent deterministic automaton
    Determinize {
        file: PathBuf,
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum, default_value = "max")]
        algebra: Algebra,
        /// abort once this many macro-states have been discovered
        #[arg(long, default_value_t = 50_000)]
        state_cap: usize,
        /// emit graphviz instead of the text format
        #[arg(long)]
        dot: bool,
    },
    /// Compare the languages of two automata (after determinizing)
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        start1: Option<String>,
        #[arg(long)]
        start2: Option<String>,
        #[arg(long, value_enum, default_value = "max")]
        algebra: Algebra,
        #[arg(long, default_value_t = 50_000)]
        state_cap: usize,
    },
    /// Run the bundled law-check suites and print one line per diagram
    CheckLaws {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteName,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// seed for sampled checks (decimal or 0x-prefixed hex)
        #[arg(long, default_value = "0xC0A1", value_parser = parse_seed)]
        seed: u64,
    },
    /// Print the automaton as graphviz
    ExportDot { file: PathBuf },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let r = if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16)
    } else {
        s.parse()
    };
    r.map_err(|e| e.to_string())
}

fn die(code: i32, msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    exit(code)
}

fn core_exit_code(e: &altdet_core::Error) -> i32 {
    match e {
        altdet_core::Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

fn load(path: &PathBuf) -> (Document, Machine) {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => die(EXIT_USAGE, format!("{}: {e}", path.display())),
    };
    let doc = match parse_document(&text) {
        Ok(d) => d,
        Err(e) => die(EXIT_USAGE, format!("{}: {e}", path.display())),
    };
    let machine = match doc.build() {
        Ok(m) => m,
        Err(e) => die(EXIT_USAGE, format!("{}: {e}", path.display())),
    };
    (doc, machine)
}

fn start_single(doc: &Document, start: &Option<String>) -> usize {
    let name = start.as_deref().unwrap_or(&doc.states[0]);
    match doc.states.iter().position(|s| s == name) {
        Some(i) => i,
        None => die(EXIT_USAGE, format!("unknown start state `{name}`")),
    }
}

fn start_set(doc: &Document, start: &Option<String>) -> StateSet {
    let names: Vec<&str> = match start {
        Some(s) => s.split(',').map(str::trim).collect(),
        None => vec![&doc.states[0]],
    };
    let mut out = match StateSet::empty(doc.states.len()) {
        Ok(s) => s,
        Err(e) => die(core_exit_code(&e), e),
    };
    for name in names {
        match doc.states.iter().position(|s| s == name) {
            Some(i) => out = out.with(i),
            None => die(EXIT_USAGE, format!("unknown start state `{name}`")),
        }
    }
    out
}

fn run_word(doc: &Document, machine: &Machine, start: &Option<String>, alg: Algebra, w: &[usize]) -> bool {
    let res = match machine {
        Machine::Dfa(d) => dfa_accepts(d, start_single(doc, start), w),
        Machine::Nfa(n) => {
            let s = start_set(doc, start);
            match alg {
                Algebra::Max => nfa_accepts_existential(n, &s, w),
                Algebra::Min => nfa_accepts_universal(n, &s, w),
            }
        }
        Machine::Afa(a) => afa_accepts(a, start_single(doc, start), w),
    };
    match res {
        Ok(b) => b,
        Err(e) => die(core_exit_code(&e), e),
    }
}

/// Human name of a macro-state, through the original state names.
fn describe_macro(doc: &Document, decode: &StateDecode, i: usize) -> String {
    let name = |q: usize| doc.states[q].clone();
    match decode {
        StateDecode::Pow(v) => {
            let names: Vec<String> = v[i].iter().map(name).collect();
            format!("{{{}}}", names.join(" "))
        }
        StateDecode::Alt(v) => {
            let forks: Vec<String> = v[i]
                .forks()
                .iter()
                .map(|f| {
                    let names: Vec<String> = f.iter().map(name).collect();
                    format!("{{{}}}", names.join(" "))
                })
                .collect();
            format!("{{{}}}", forks.join(" "))
        }
    }
}

fn determinize(
    doc: &Document,
    machine: &Machine,
    start: &Option<String>,
    alg: Algebra,
    cap: usize,
) -> Determinized {
    let res = match machine {
        Machine::Dfa(d) => Ok(Determinized {
            dfa: d.clone(),
            start: start_single(doc, start),
            decode: StateDecode::Pow(
                (0..d.states())
                    .map(|q| StateSet::singleton(d.states(), q))
                    .collect::<altdet_core::Result<_>>()
                    .unwrap_or_else(|e| die(core_exit_code(&e), e)),
            ),
        }),
        Machine::Nfa(n) => determinize_nfa(n, alg.into(), &start_set(doc, start), cap),
        Machine::Afa(a) => determinize_afa(a, start_single(doc, start), cap),
    };
    res.unwrap_or_else(|e| die(core_exit_code(&e), e))
}

fn main() {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Accept {
            file,
            word,
            start,
            algebra,
        } => {
            let (doc, machine) = load(&file);
            let w = parse_word(&doc, &word).unwrap_or_else(|e| die(EXIT_USAGE, e));
            if run_word(&doc, &machine, &start, algebra, &w) {
                println!("accept");
            } else {
                println!("reject");
                exit(EXIT_REJECT);
            }
        }
        Cmd::Determinize {
            file,
            start,
            algebra,
            state_cap,
            dot,
        } => {
            let (doc, machine) = load(&file);
            let det = determinize(&doc, &machine, &start, algebra, state_cap);
            let names: Vec<String> = (0..det.dfa.states()).map(|i| format!("s{i}")).collect();
            let out_doc = Document::from_dfa(&det.dfa, &doc.alphabet, &names);
            if dot {
                let built = out_doc.build().unwrap_or_else(|e| die(EXIT_USAGE, e));
                print!("{}", to_dot(&out_doc, &built));
            } else {
                for (i, name) in names.iter().enumerate() {
                    println!("# {name} = {}", describe_macro(&doc, &det.decode, i));
                }
                println!("# start: {}", names[det.start]);
                print!("{}", out_doc.to_text());
            }
        }
        Cmd::Equiv {
            file1,
            file2,
            start1,
            start2,
            algebra,
            state_cap,
        } => {
            let (doc1, m1) = load(&file1);
            let (doc2, m2) = load(&file2);
            if doc1.alphabet != doc2.alphabet {
                die(
                    EXIT_USAGE,
                    format!(
                        "alphabets differ: [{}] vs [{}]",
                        doc1.alphabet.join(" "),
                        doc2.alphabet.join(" ")
                    ),
                );
            }
            let d1 = determinize(&doc1, &m1, &start1, algebra, state_cap);
            let d2 = determinize(&doc2, &m2, &start2, algebra, state_cap);
            match dfa_equiv(&d1.dfa, d1.start, &d2.dfa, d2.start) {
                Ok(None) => println!("equivalent"),
                Ok(Some(w)) => {
                    println!("inequivalent witness={}", render_word(&doc1.alphabet, &w));
                    exit(EXIT_REJECT);
                }
                Err(e) => die(core_exit_code(&e), e),
            }
        }
        Cmd::CheckLaws {
            suite,
            samples,
            seed,
        } => {
            let cfg = CheckConfig {
                sample_count: samples,
                seed,
                ..CheckConfig::default()
            };
            let items = run_suite(suite, &cfg);
            for item in &items {
                let marker = match item.expectation {
                    Some(false) => " expected=fail",
                    _ => "",
                };
                println!("{}{marker}", item.report);
            }
            let ok = suite_passes(&items);
            println!(
                "SUITE {} items={}",
                if ok { "pass" } else { "fail" },
                items.len()
            );
            if !ok {
                exit(EXIT_REJECT);
            }
        }
        Cmd::ExportDot { file } => {
            let (doc, machine) = load(&file);
            print!("{}", to_dot(&doc, &machine));
        }
    }
}

fn run_suite(which: SuiteName, cfg: &CheckConfig) -> Vec<SuiteItem> {
    let res = match which {
        SuiteName::Monad => altdet_core::monad_suite(cfg),
        SuiteName::Distlaw => altdet_core::distlaw_suite(cfg),
        SuiteName::Negative => altdet_core::negative_suite(cfg),
        SuiteName::Lemma => altdet_core::lemma_suite(),
        SuiteName::Semantics => altdet_core::semantics_suite(cfg),
        SuiteName::All => altdet_core::full_suite(cfg),
    };
    res.unwrap_or_else(|e| die(core_exit_code(&e), e))
}
