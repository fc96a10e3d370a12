//! Command-line front end. `main.rs` only forwards to [`run`].

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::crystal::{self, CrystalOp};
use crate::ctree::{self, CTree};
use crate::insertion::{decorated_product, insert_pair, normal_form};
use crate::rewriting::{self, Variant};
use crate::text::{format_columns, format_decorated, format_plain, parse_column, parse_decorated, parse_plain};
use crate::words::{self, Rank};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "placticc", version, about = "Symplectic plactic monoid toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RankArg {
    /// Rank n of the alphabet 1 < … < n < -n < … < -1.
    #[arg(long = "n")]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insert column B into column A and print the resulting pair.
    Insert {
        #[command(flatten)]
        rank: RankArg,
        col_a: String,
        col_b: String,
    },
    /// Print the normal form of a word of columns.
    Normalize {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the normal form of the product of two words of columns.
    Product {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        word_a: String,
        #[arg(allow_hyphen_values = true)]
        word_b: String,
    },
    /// Apply a Kashiwara operator.
    Crystal {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long)]
        i: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the highest-weight word of the component.
    Hw {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// C-tree conversions.
    Tree {
        #[command(subcommand)]
        command: TreeCommand,
    },
    /// Check every critical branching and write a JSON report.
    Branchings {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, value_enum, default_value = "acol")]
        variant: VariantArg,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Largest rank accepted.
        #[arg(long, default_value_t = rewriting::DEFAULT_RANK_CAP)]
        cap: usize,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = rewriting::DEFAULT_RANK_CAP)]
        cap: usize,
        /// Largest tree rank for the trees suite.
        #[arg(long, default_value_t = 3)]
        max_tree_rank: usize,
    },
}

#[derive(Subcommand, Debug)]
enum TreeCommand {
    /// Tree of a highest-weight word of columns, as JSON.
    Encode {
        #[command(flatten)]
        rank: RankArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Reading of a tree given as a JSON file (`-` for standard input).
    Decode {
        #[command(flatten)]
        rank: RankArg,
        path: String,
    },
    /// Every valid tree of the given rank, one JSON object per line.
    Enumerate {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long = "rank")]
        tree_rank: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OpArg {
    E,
    F,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    Acol,
    AcolBullet,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Acol => Variant::ACol,
            VariantArg::AcolBullet => Variant::AColBullet,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Suite {
    /// Shape bound, confluence and highest-weight invariance, both variants.
    Shapes,
    /// Tree normal forms and the tree/word bijection.
    Trees,
    /// Bracket rule against the tensor-product rule on words of length ≤ 4.
    Signature,
    /// Block criterion against the full admissibility scan.
    Blocks,
}

/// Failure of a command, mapped to an exit code.
enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 2, with the offending input echoed.
    Parse { input: String, error: Error },
    /// Exit 1.
    Violations,
    /// Exit 2.
    Other(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Other(e)
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn parse_with<T>(input: &str, f: impl FnOnce(&str) -> crate::Result<T>) -> std::result::Result<T, Failure> {
    f(input).map_err(|error| Failure::Parse {
        input: input.to_string(),
        error,
    })
}

fn rank_of(arg: &RankArg) -> std::result::Result<Rank, Failure> {
    Rank::new(arg.n).map_err(|e| Failure::Usage(e.to_string()))
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Violations) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Parse { input, error }) => {
            let _ = writeln!(err, "error: {error}");
            if let Error::Parse { position, .. } = error {
                let _ = writeln!(err, "  {input}");
                let pad = input.get(..position).map_or(position, |p| p.chars().count());
                let _ = writeln!(err, "  {}^", " ".repeat(pad));
            }
            2
        }
        Err(Failure::Other(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Insert { rank, col_a, col_b } => {
            let n = rank_of(&rank)?;
            let a = parse_with(&col_a, |s| parse_column(s, n))?;
            let b = parse_with(&col_b, |s| parse_column(s, n))?;
            let (d1, d2) = insert_pair(&a, &b, n)?;
            emit(out, &format_columns(&[d1, d2]))
        }
        Command::Normalize { rank, word } => {
            let n = rank_of(&rank)?;
            let w = parse_with(&word, |s| parse_decorated(s, n))?;
            emit(out, &format_decorated(&normal_form(&w, n)?.to_word()))
        }
        Command::Product { rank, word_a, word_b } => {
            let n = rank_of(&rank)?;
            let a = parse_with(&word_a, |s| parse_decorated(s, n))?;
            let b = parse_with(&word_b, |s| parse_decorated(s, n))?;
            let p = decorated_product(&normal_form(&a, n)?, &normal_form(&b, n)?)?;
            emit(out, &format_decorated(&p.to_word()))
        }
        Command::Crystal { rank, op, i, word } => {
            let n = rank_of(&rank)?;
            let op = match op {
                OpArg::E => CrystalOp::E,
                OpArg::F => CrystalOp::F,
            };
            let result = if is_bracketed(&word) {
                let w = parse_with(&word, |s| parse_decorated(s, n))?;
                crystal::apply(&w, op, i, n)?.map(|w| format_decorated(&w))
            } else {
                let w = parse_with(&word, |s| parse_plain(s, n))?;
                crystal::apply(&w, op, i, n)?.map(|w| format_plain(&w))
            };
            emit(out, result.as_deref().unwrap_or("undefined"))
        }
        Command::Hw { rank, word } => {
            let n = rank_of(&rank)?;
            let text = if is_bracketed(&word) {
                let w = parse_with(&word, |s| parse_decorated(s, n))?;
                format_decorated(&crystal::highest_weight(&w, n))
            } else {
                let w = parse_with(&word, |s| parse_plain(s, n))?;
                format_plain(&crystal::highest_weight(&w, n))
            };
            emit(out, &text)
        }
        Command::Tree { command } => tree_command(command, out),
        Command::Branchings {
            rank,
            variant,
            out: path,
            jobs,
            cap,
        } => {
            let n = rank_of(&rank)?;
            let report = rewriting::verify_coherence(n, variant.into(), jobs, cap)?;
            let text = report.to_json();
            match path {
                Some(path) => std::fs::write(&path, format!("{text}\n"))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => emit(out, &text)?,
            }
            if report.is_ok() {
                Ok(())
            } else {
                Err(Failure::Violations)
            }
        }
        Command::Verify {
            rank,
            suite,
            jobs,
            cap,
            max_tree_rank,
        } => {
            let n = rank_of(&rank)?;
            let (report, ok) = run_suite(suite, n, jobs, cap, max_tree_rank)?;
            emit(out, &serde_json::to_string_pretty(&report).expect("report serializes"))?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Violations)
            }
        }
    }
}

fn tree_command(command: TreeCommand, out: &mut dyn Write) -> CmdResult {
    match command {
        TreeCommand::Encode { rank, word } => {
            let n = rank_of(&rank)?;
            let w = parse_with(&word, |s| parse_decorated(s, n))?;
            emit(out, &ctree::encode(&w, n)?.to_json())
        }
        TreeCommand::Decode { rank, path } => {
            let n = rank_of(&rank)?;
            let src = if path == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(&path)
            }
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
            let tree = parse_with(&src, CTree::from_json)?;
            if tree.n() != n {
                return Err(Failure::Usage(format!("tree has n = {} but --n is {n}", tree.n())));
            }
            let violations = tree.validate();
            if !violations.is_empty() {
                for v in &violations {
                    emit(out, &format!("violation: {v}"))?;
                }
                return Err(Failure::Violations);
            }
            emit(out, &format_decorated(&tree.reading()?))
        }
        TreeCommand::Enumerate { rank, tree_rank } => {
            let n = rank_of(&rank)?;
            if tree_rank == 0 {
                return Err(Failure::Usage("--rank must be at least 1".into()));
            }
            for t in ctree::enumerate_trees(tree_rank, n) {
                emit(out, &t.to_json())?;
            }
            Ok(())
        }
    }
}

fn run_suite(
    suite: Suite,
    n: Rank,
    jobs: usize,
    cap: usize,
    max_tree_rank: usize,
) -> std::result::Result<(serde_json::Value, bool), Failure> {
    match suite {
        Suite::Shapes => {
            let mut reports = Vec::new();
            for variant in [Variant::ACol, Variant::AColBullet] {
                reports.push(rewriting::verify_coherence(n, variant, jobs, cap)?);
            }
            let ok = reports.iter().all(|r| r.is_ok());
            Ok((json!({ "suite": "shapes", "reports": reports }), ok))
        }
        Suite::Trees => {
            let mut rows = Vec::new();
            let mut violations = Vec::new();
            for k in 1..=max_tree_rank {
                let trees = ctree::enumerate_trees(k, n);
                for t in &trees {
                    let w = t.reading()?;
                    if t.tree_normal_form()? != normal_form(&w, n)?.to_word() {
                        violations.push(format!("{}: tree normal form disagrees with insertion", t.to_json()));
                    }
                    match ctree::encode(&w, n) {
                        Ok(e) if &e == t => {}
                        _ => violations.push(format!("{}: encode does not invert the reading", t.to_json())),
                    }
                }
                rows.push(json!({ "rank": k, "trees": trees.len() }));
            }
            let ok = violations.is_empty();
            Ok((
                json!({ "suite": "trees", "n": n.get(), "counts": rows, "violations": violations }),
                ok,
            ))
        }
        Suite::Signature => {
            let alphabet = n.alphabet();
            let mut words: Vec<Vec<words::Letter>> = vec![vec![]];
            let mut checked = 0usize;
            let mut violations = Vec::new();
            for _ in 0..4 {
                words = words
                    .iter()
                    .flat_map(|w| {
                        alphabet.iter().map(move |&x| {
                            let mut v = w.clone();
                            v.push(x);
                            v
                        })
                    })
                    .collect();
                for w in &words {
                    for i in 1..=n.get() {
                        for op in [CrystalOp::E, CrystalOp::F] {
                            let fast = crystal::apply(&words::PlainWord(w.clone()), op, i, n)?.map(|p| p.0);
                            let slow = crystal::apply_by_tensor_rule(w, op, i, n)?;
                            checked += 1;
                            if fast != slow {
                                violations.push(format!("{} {op:?}_{i}", format_plain(&words::PlainWord(w.clone()))));
                            }
                        }
                    }
                }
            }
            let ok = violations.is_empty();
            Ok((
                json!({ "suite": "signature", "n": n.get(), "checked": checked, "violations": violations }),
                ok,
            ))
        }
        Suite::Blocks => {
            let (checked, violations) = block_sweep(n)?;
            let ok = violations.is_empty();
            Ok((
                json!({ "suite": "blocks", "n": n.get(), "checked": checked, "violations": violations }),
                ok,
            ))
        }
    }
}

/// Compares the block criterion with the full scan on every product of an
/// unbarred run of blocks followed by a barred run that forms a column.
fn block_sweep(n: Rank) -> crate::Result<(usize, Vec<String>)> {
    let mut checked = 0;
    let mut violations = Vec::new();
    for blocks in words::block_products(n) {
        let letters: Vec<_> = blocks.iter().flat_map(|b| b.letters().iter().copied()).collect();
        let full = words::Column::new(letters)?.is_admissible(n);
        let fast = words::block_admissible(&blocks, n)?;
        checked += 1;
        if full != fast {
            violations.push(format_columns(&blocks));
        }
    }
    Ok((checked, violations))
}

fn is_bracketed(word: &str) -> bool {
    word.trim_start().starts_with('[')
}

fn emit(out: &mut dyn Write, line: &str) -> CmdResult {
    writeln!(out, "{line}").map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}
