//! `invavoid` command-line entry point.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use invavoid_core::search::DEFAULT_MAX_LEN;
use invavoid_core::verify::{DEFAULT_PREFIX_LEN, DEFAULT_SEARCH_DEPTH};
use invavoid_core::{
    classify_index, enumerate_involutions, expand, format_word, parse_word, prefix, prove_unavoidable,
    run_verify_lemmas, Alphabet, Detector, Involution, InvolutionKind, Outcome, Pattern, VerifyConfig, WordKind,
};

use crate::config::Config;

/// Environment variable capping the number of worker threads.
const THREADS_ENV: &str = "INVAVOID_THREADS";

#[derive(Debug, Parser)]
#[command(name = "invavoid", version)]
#[command(about = "Avoidance of unary patterns with involution")]
struct Cli {
    /// key = value file supplying defaults for any long flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a prefix of tm, w, v, u or periodic:<base>.
    Generate {
        kind: String,
        #[arg(long)]
        len: Option<usize>,
    },
    /// List every involution of the alphabet in cycle notation.
    Involutions {
        #[arg(short = 'k', long)]
        alphabet: Option<usize>,
        /// m (morphic) or a (antimorphic).
        #[arg(long)]
        kind: Option<String>,
    },
    /// Substitute a word for x in a pattern.
    Expand {
        #[arg(long)]
        pattern: Option<String>,
        /// The word substituted for x.
        #[arg(long)]
        y: String,
        /// Involution in cycle notation, e.g. "(01)" or "id/a".
        #[arg(long, default_value = "id")]
        inv: String,
        #[arg(long)]
        kind: Option<String>,
        #[arg(short = 'k', long)]
        alphabet: Option<usize>,
    },
    /// Look for an instance of a pattern in a word.
    Scan {
        /// Literal word.
        #[arg(long, conflicts_with_all = ["word_file", "word_gen"])]
        word: Option<String>,
        /// File holding the word.
        #[arg(long, conflicts_with = "word_gen")]
        word_file: Option<PathBuf>,
        /// Generated word kind (with --len).
        #[arg(long)]
        word_gen: Option<String>,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(short = 'k', long)]
        alphabet: Option<usize>,
        /// Exit with status 1 if an instance is found.
        #[arg(long)]
        expect_none: bool,
    },
    /// Exhaustive search for the longest avoiding word.
    Search {
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(short = 'k', long)]
        alphabet: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Avoidance index of a pattern.
    Classify {
        pattern: String,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Run the full battery of checks behind the index table.
    VerifyLemmas {
        #[arg(long)]
        prefix_len: Option<usize>,
        #[arg(long)]
        search_depth: Option<usize>,
        /// json or text.
        #[arg(long)]
        format: Option<String>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status of a command that ran to completion.
enum Status {
    Ok,
    CheckFailed,
}

fn kind_arg(config: &Config, flag: Option<String>) -> Result<InvolutionKind> {
    let text = config.resolve_or(flag, "kind", "m".to_string())?;
    Ok(text.parse()?)
}

fn alphabet_arg(config: &Config, flag: Option<usize>) -> Result<Alphabet> {
    Ok(Alphabet::new(config.resolve_or(flag, "alphabet", 2)?)?)
}

fn pattern_arg(config: &Config, flag: Option<String>) -> Result<Pattern> {
    let text = config
        .resolve(flag, "pattern")?
        .ok_or_else(|| anyhow!("--pattern is required"))?;
    Ok(Pattern::parse(&text)?)
}

fn emit(value: &serde_json::Value) {
    println!("{value}");
}

fn run(cli: Cli) -> Result<Status> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Generate { kind, len } => {
            let kind: WordKind = kind.parse()?;
            let len = config
                .resolve(len, "len")?
                .ok_or_else(|| anyhow!("--len is required"))?;
            println!("{}", format_word(&prefix(&kind, len), 2));
        }
        Command::Involutions { alphabet, kind } => {
            let alphabet = alphabet_arg(&config, alphabet)?;
            for g in enumerate_involutions(alphabet, kind_arg(&config, kind)?) {
                println!("{g}");
            }
        }
        Command::Expand {
            pattern,
            y,
            inv,
            kind,
            alphabet,
        } => {
            let alphabet = alphabet_arg(&config, alphabet)?;
            let pattern = pattern_arg(&config, pattern)?;
            let involution = Involution::parse(&inv, alphabet, kind_arg(&config, kind)?)?;
            let y = parse_word(&y, alphabet.size())?;
            println!("{}", format_word(&expand(&pattern, &y, &involution)?, alphabet.size()));
        }
        Command::Scan {
            word,
            word_file,
            word_gen,
            len,
            pattern,
            kind,
            alphabet,
            expect_none,
        } => {
            let alphabet = alphabet_arg(&config, alphabet)?;
            let pattern = pattern_arg(&config, pattern)?;
            let kind = kind_arg(&config, kind)?;
            let letters = match (word, word_file, config.resolve(word_gen, "word-gen")?) {
                (Some(text), _, _) => parse_word(&text, alphabet.size())?,
                (None, Some(path), _) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    parse_word(&text, alphabet.size())?
                }
                (None, None, Some(generator)) => {
                    let generator: WordKind = generator.parse()?;
                    let len = config
                        .resolve(len, "len")?
                        .ok_or_else(|| anyhow!("--word-gen needs --len"))?;
                    prefix(&generator, len)
                }
                (None, None, None) => bail!("one of --word, --word-file or --word-gen is required"),
            };
            let expect_none = expect_none || config.resolve_or(None, "expect-none", false)?;
            let detector = Detector::new(&pattern, alphabet, kind);
            match detector.find_instance(&letters)? {
                None => emit(&json!({ "found": false, "pattern": pattern, "kind": kind })),
                Some(occ) => {
                    emit(&json!({
                        "found": true,
                        "pattern": pattern,
                        "kind": kind,
                        "start": occ.start,
                        "m": occ.block_len,
                        "involution": occ.involution.to_string(),
                        "y": format_word(&occ.substituted(&letters), alphabet.size()),
                        "factor": format_word(occ.factor(&letters), alphabet.size()),
                    }));
                    if expect_none {
                        return Ok(Status::CheckFailed);
                    }
                }
            }
        }
        Command::Search {
            pattern,
            kind,
            alphabet,
            max_len,
        } => {
            let alphabet = alphabet_arg(&config, alphabet)?;
            let pattern = pattern_arg(&config, pattern)?;
            let kind = kind_arg(&config, kind)?;
            let max_len = config.resolve_or(max_len, "max-len", DEFAULT_MAX_LEN)?;
            let verdict = prove_unavoidable(&pattern, alphabet, kind, max_len);
            let mut report = json!({
                "pattern": pattern,
                "kind": kind,
                "alphabet": alphabet,
                "max_len": max_len,
                "nodes": verdict.nodes_explored,
                "leaves": verdict.leaf_count,
            });
            match &verdict.outcome {
                Outcome::Unavoidable { longest_avoider_len } => {
                    report["outcome"] = json!("unavoidable");
                    report["longest"] = json!(longest_avoider_len);
                    report["example"] = json!(format_word(&verdict.longest_example, alphabet.size()));
                }
                Outcome::AvoiderFound { witness } => {
                    report["outcome"] = json!("avoider_found");
                    report["longest"] = json!(witness.len());
                    report["witness"] = json!(format_word(witness, alphabet.size()));
                }
            }
            emit(&report);
        }
        Command::Classify { pattern, kind } => {
            let pattern = Pattern::parse(&pattern)?;
            let kind = kind_arg(&config, kind)?;
            let index = classify_index(&pattern, kind);
            emit(&json!({ "pattern": pattern, "kind": kind, "index": index }));
        }
        Command::VerifyLemmas {
            prefix_len,
            search_depth,
            format,
            out,
        } => {
            let prefix_len = config.resolve_or(prefix_len, "prefix-len", DEFAULT_PREFIX_LEN)?;
            if prefix_len == 0 {
                bail!("--prefix-len must be at least 1");
            }
            let threads = match std::env::var(THREADS_ENV) {
                Ok(value) => Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .with_context(|| format!("{THREADS_ENV}={value:?}"))?,
                ),
                Err(_) => None,
            };
            let verify = VerifyConfig {
                prefix_len,
                search_depth: config.resolve_or(search_depth, "search-depth", DEFAULT_SEARCH_DEPTH)?,
                threads,
            };
            let format = config.resolve_or(format, "format", "json".to_string())?;
            let report = run_verify_lemmas(&verify);
            let rendered = match format.as_str() {
                "json" => serde_json::to_string_pretty(&report)? + "\n",
                "text" => report.render_text(),
                other => bail!("unknown format {other:?} (expected json or text)"),
            };
            match config.resolve(out, "out")? {
                Some(path) => std::fs::write(&path, rendered).with_context(|| format!("writing {}", path.display()))?,
                None => std::io::stdout().write_all(rendered.as_bytes())?,
            }
            if !report.passed() {
                return Ok(Status::CheckFailed);
            }
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
