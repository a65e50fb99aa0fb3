//! The fixed battery of checks behind the avoidance-index table: avoidance
//! of each mixed length-4 pattern by an explicit binary word, overlap-freeness
//! of Thue-Morse, binary unavoidability of the length-3 patterns, and a
//! cross-check of [`classify_index`] against exhaustive search.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::detector::{find_instance, find_overlap};
use crate::involution::{Alphabet, InvolutionKind};
use crate::pattern::{classify_index, AvoidanceIndex, Pattern};
use crate::search::{prove_unavoidable, LongestAvoider};
use crate::words::{format_word, prefix, WordKind};

pub const REPORT_SCHEMA: u32 = 1;
pub const DEFAULT_PREFIX_LEN: usize = 10_000;
pub const DEFAULT_SEARCH_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub prefix_len: usize,
    pub search_depth: usize,
    /// Worker threads; `None` lets rayon decide.
    pub threads: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            prefix_len: DEFAULT_PREFIX_LEN,
            search_depth: DEFAULT_SEARCH_DEPTH,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl CheckStatus {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// Which claim of the index table the check supports.
    pub claim: &'static str,
    pub word: Option<String>,
    pub prefix_len: Option<usize>,
    pub pattern: Option<Pattern>,
    pub kind: Option<InvolutionKind>,
    pub result: CheckStatus,
    pub detail: String,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub pattern: Pattern,
    pub orbit: Vec<Pattern>,
    pub morphic: AvoidanceIndex,
    pub antimorphic: AvoidanceIndex,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub status: CheckStatus,
    pub prefix_len: usize,
    pub search_depth: usize,
    pub checks: Vec<CheckRecord>,
    pub table: Vec<TableRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Aligned plain-text rendering of the checks and the table.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = |s: CheckStatus| match s {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
        };
        let name_width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{}  {:<name_width$}  {:>9.1} ms  {}",
                status(c.result),
                c.name,
                c.elapsed_ms,
                c.detail
            );
        }
        let _ = writeln!(out, "\n{:<12} {:>4} {:>4}  orbit", "pattern", "A_m", "A_a");
        for row in &self.table {
            let orbit: Vec<String> = row.orbit.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(
                out,
                "{:<12} {:>4} {:>4}  {}",
                row.pattern.to_string(),
                row.morphic.to_string(),
                row.antimorphic.to_string(),
                orbit.join(" ")
            );
        }
        let _ = writeln!(out, "\noverall: {}", status(self.status));
        out
    }
}

enum Check {
    OverlapFree {
        word: WordKind,
    },
    Avoids {
        claim: &'static str,
        word: WordKind,
        pattern: &'static str,
        kind: InvolutionKind,
    },
    BinaryLowerBounds,
    Classifier,
}

fn pattern(text: &str) -> Pattern {
    Pattern::parse(text).expect("built-in pattern")
}

fn check_list() -> Vec<Check> {
    use InvolutionKind::{Antimorphic, Morphic};
    let periodic = WordKind::Periodic(vec![0, 0, 0, 1]);
    let avoid = |claim, word: &WordKind, pattern, kind| Check::Avoids {
        claim,
        word: word.clone(),
        pattern,
        kind,
    };
    vec![
        Check::OverlapFree {
            word: WordKind::ThueMorse,
        },
        avoid("w-morphic", &WordKind::W, "xxg(x)x", Morphic),
        avoid("w-antimorphic", &WordKind::W, "xxg(x)x", Antimorphic),
        avoid("v-morphic", &WordKind::V, "g(x)xxg(x)", Morphic),
        avoid("u-morphic", &WordKind::U, "xxg(x)g(x)", Morphic),
        avoid("u-morphic", &WordKind::U, "xg(x)xg(x)", Morphic),
        avoid("periodic-antimorphic", &periodic, "xxg(x)g(x)", Antimorphic),
        avoid("periodic-antimorphic", &periodic, "xg(x)xg(x)", Antimorphic),
        avoid("periodic-antimorphic", &periodic, "g(x)xxg(x)", Antimorphic),
        avoid("cube-factor", &WordKind::ThueMorse, "xxxg(x)", Morphic),
        avoid("cube-factor", &WordKind::ThueMorse, "xxxg(x)", Antimorphic),
        Check::BinaryLowerBounds,
        Check::Classifier,
    ]
}

fn blank_record(name: String, claim: &'static str) -> CheckRecord {
    CheckRecord {
        name,
        claim,
        word: None,
        prefix_len: None,
        pattern: None,
        kind: None,
        result: CheckStatus::Fail,
        detail: String::new(),
        elapsed_ms: 0.0,
    }
}

fn run_check(check: &Check, config: &VerifyConfig) -> CheckRecord {
    let started = Instant::now();
    let mut record = match check {
        Check::OverlapFree { word } => {
            let letters = prefix(word, config.prefix_len);
            let mut r = blank_record(format!("{word} overlap-free"), "tm-overlap-free");
            r.word = Some(word.to_string());
            r.prefix_len = Some(config.prefix_len);
            match find_overlap(&letters) {
                None => {
                    r.result = CheckStatus::Pass;
                    r.detail = "no overlap".into();
                }
                Some(o) => {
                    r.detail = format!("overlap at {} with period {}", o.start, o.period);
                }
            }
            r
        }
        Check::Avoids {
            claim,
            word,
            pattern: text,
            kind,
        } => {
            let p = pattern(text);
            let letters = prefix(word, config.prefix_len);
            let mut r = blank_record(format!("{word} avoids {p} /{kind}"), claim);
            r.word = Some(word.to_string());
            r.prefix_len = Some(config.prefix_len);
            r.kind = Some(*kind);
            match find_instance(&letters, Alphabet::BINARY, &p, *kind).expect("binary word") {
                None => {
                    r.result = CheckStatus::Pass;
                    r.detail = "no instance".into();
                }
                Some(o) => {
                    r.detail = format!(
                        "instance at {} with |y| = {} under {}: {}",
                        o.start,
                        o.block_len,
                        o.involution,
                        format_word(o.factor(&letters), 2)
                    );
                }
            }
            r.pattern = Some(p);
            r
        }
        Check::BinaryLowerBounds => {
            let mut r = blank_record("length-3 patterns unavoidable over 2 letters".into(), "length-3-lower-bounds");
            let mut ok = true;
            let mut parts = Vec::new();
            for p in Pattern::all_of_length(3).into_iter().filter(Pattern::is_mixed) {
                for kind in InvolutionKind::BOTH {
                    let verdict = prove_unavoidable(&p, Alphabet::BINARY, kind, config.search_depth);
                    ok &= verdict.is_unavoidable();
                    parts.push(format!("{p}/{kind}={}", verdict.longest()));
                }
            }
            r.result = CheckStatus::from_bool(ok);
            r.detail = format!("longest binary avoiders: {}", parts.join(" "));
            r
        }
        Check::Classifier => {
            let mut r = blank_record("classifier agrees with search".into(), "classifier");
            let failures = classifier_failures(config.search_depth);
            r.result = CheckStatus::from_bool(failures.is_empty());
            r.detail = if failures.is_empty() {
                "all patterns of length <= 4 consistent".into()
            } else {
                failures.join("; ")
            };
            r
        }
    };
    record.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    record
}

/// Compares the index table with the symmetries and with search, for every
/// pattern of length at most four. A finite index `n` needs an exhausted
/// search over `n - 1` letters and a depth-`depth` avoider over `n` letters;
/// an infinite index needs exhausted searches over 2, 3 and 4 letters.
fn classifier_failures(depth: usize) -> Vec<String> {
    let mut failures = Vec::new();
    let alphabet = |k: usize| Alphabet::new(k).expect("small alphabet");
    for len in 1..=4 {
        for p in Pattern::all_of_length(len) {
            for kind in InvolutionKind::BOTH {
                let index = classify_index(&p, kind);
                let images = [p.swap_symbols(), p.reverse(), p.canonical()];
                if images.iter().any(|q| classify_index(q, kind) != index) {
                    failures.push(format!("{p}/{kind}: index not symmetric"));
                }
                match index {
                    AvoidanceIndex::Finite(n) => {
                        let n = n as usize;
                        if !prove_unavoidable(&p, alphabet(n - 1), kind, depth).is_unavoidable() {
                            failures.push(format!("{p}/{kind}: no bound over {} letters", n - 1));
                        }
                        let above = prove_unavoidable(&p, alphabet(n), kind, depth).longest();
                        if above != LongestAvoider::AtLeast(depth) {
                            failures.push(format!("{p}/{kind}: longest avoider over {n} letters is {above}"));
                        }
                    }
                    AvoidanceIndex::Infinite => {
                        for k in 2..=4 {
                            if !prove_unavoidable(&p, alphabet(k), kind, depth).is_unavoidable() {
                                failures.push(format!("{p}/{kind}: no bound over {k} letters"));
                            }
                        }
                    }
                }
            }
        }
    }
    failures
}

fn summary_table() -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = Vec::new();
    for len in 1..=4 {
        for p in Pattern::all_of_length(len) {
            if p.canonical() != p {
                continue;
            }
            let mut orbit = vec![p.clone(), p.reverse(), p.swap_symbols(), p.reverse().swap_symbols()];
            orbit.sort();
            orbit.dedup();
            rows.push(TableRow {
                morphic: classify_index(&p, InvolutionKind::Morphic),
                antimorphic: classify_index(&p, InvolutionKind::Antimorphic),
                pattern: p,
                orbit,
            });
        }
    }
    rows
}

/// Runs every check. Checks may run in parallel; records keep the fixed
/// check order.
pub fn run_verify_lemmas(config: &VerifyConfig) -> VerificationReport {
    let checks = check_list();
    let run_all = || -> Vec<CheckRecord> { checks.par_iter().map(|c| run_check(c, config)).collect() };
    let records = match config.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build() {
            Ok(pool) => pool.install(run_all),
            Err(_) => checks.iter().map(|c| run_check(c, config)).collect(),
        },
        None => run_all(),
    };
    let status = CheckStatus::from_bool(records.iter().all(|r| r.result == CheckStatus::Pass));
    VerificationReport {
        schema: REPORT_SCHEMA,
        status,
        prefix_len: config.prefix_len,
        search_depth: config.search_depth,
        checks: records,
        table: summary_table(),
    }
}
