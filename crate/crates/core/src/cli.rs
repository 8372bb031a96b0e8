//! Command-line front end. JSON goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 verification or fuzz failure, 2 parse error,
//! 3 input not 2K2-free, 4 not 2-tough (certificate emitted), 5 no walk
//! found after fallback, 6 size limit exceeded.

use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    clique_number, find_2k2, toughness_exact, toughness_witness, AnalysisError, ToughnessValue,
    DEFAULT_FALLBACK_LIMIT, DEFAULT_TOUGHNESS_LIMIT,
};
use crate::decomposition::{clique_tower, validate_tower};
use crate::first_class::ToughnessCertificate;
use crate::gamma::validate_gamma;
use crate::generators::{GenError, GenSpec, StreamRng};
use crate::graph::Graph;
use crate::io::{read_graph_file, serialize_graph};
use crate::multigraph::MultiGraph;
use crate::pipeline::{two_walk, PipelineError, TwoWalkOutcome, WalkOptions, WalkPath};
use crate::trace::{CertificateJson, TraceJson, WalkJson};
use crate::verifier::{verify_certificate, verify_h, verify_two_walk, VerdictReport};
use crate::walk::Walk;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_2K2_FREE: i32 = 3;
pub const EXIT_NOT_TWO_TOUGH: i32 = 4;
pub const EXIT_NO_WALK: i32 = 5;
pub const EXIT_TOO_LARGE: i32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "twowalk",
    version,
    about = "2-walks in 2-tough 2K2-free graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report 2K2-freeness, clique number and connectivity.
    Check { path: PathBuf },
    /// Build a 2-walk, or a certificate that the graph is not 2-tough.
    Walk {
        path: PathBuf,
        /// Include the tower, first-class edges, auxiliary graph and H.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = DEFAULT_FALLBACK_LIMIT)]
        fallback_limit: usize,
    },
    /// Exact toughness by exhaustive search.
    Toughness {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOUGHNESS_LIMIT)]
        limit: usize,
    },
    /// Print the clique tower.
    Decompose { path: PathBuf },
    /// Check a walk or certificate JSON document against a graph.
    Verify { graph: PathBuf, document: PathBuf },
    /// Write a generated graph in edge-list format.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        clique_size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        indep_size: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        /// Fixed graph name (G1 or G2).
        #[arg(long)]
        name: Option<String>,
    },
    /// Run the pipeline and every checker on seeded random instances.
    ///
    /// Instance `i` draws `n = range(a, b)` and a 64-bit seed from the stream
    /// seeded with `--seed`; split instances then draw the independent size
    /// and attachment probability, co-chordal ones the edge probability.
    Fuzz {
        #[arg(long, value_enum)]
        family: FuzzFamily,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Inclusive vertex-count range, `a..b`.
        #[arg(long, default_value = "8..16", value_parser = parse_size_range)]
        size_range: RangeInclusive<usize>,
        #[arg(long, default_value_t = DEFAULT_FALLBACK_LIMIT)]
        fallback_limit: usize,
        /// Directory receiving one JSON trace per failing instance.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Split,
    #[value(name = "co_chordal")]
    CoChordal,
    #[value(name = "filtered_2tough")]
    Filtered2Tough,
    Fixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FuzzFamily {
    Split,
    #[value(name = "co_chordal")]
    CoChordal,
    #[value(name = "filtered_2tough")]
    Filtered2Tough,
}

fn parse_size_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got `{s}`"))?;
    let a: usize = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: usize = b
        .trim_start_matches('=')
        .trim()
        .parse()
        .map_err(|e| format!("{b}: {e}"))?;
    if a == 0 || a > b {
        return Err(format!("empty or zero-based range {a}..{b}"));
    }
    Ok(a..=b)
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Check { path } => with_graph(&path, cmd_check),
        Command::Walk {
            path,
            trace,
            fallback_limit,
        } => with_graph(&path, |g| cmd_walk(g, trace, fallback_limit)),
        Command::Toughness { path, limit } => with_graph(&path, |g| cmd_toughness(g, limit)),
        Command::Decompose { path } => with_graph(&path, cmd_decompose),
        Command::Verify { graph, document } => with_graph(&graph, |g| cmd_verify(g, &document)),
        Command::Gen {
            family,
            seed,
            n,
            clique_size,
            indep_size,
            prob,
            max_attempts,
            name,
        } => {
            let spec = match family {
                GenFamily::Split => GenSpec::Split {
                    clique_size: clique_size.or(n).unwrap_or(4),
                    indep_size,
                    attach_prob: prob,
                    seed,
                },
                GenFamily::CoChordal => GenSpec::CoChordal {
                    n: n.unwrap_or(10),
                    edge_prob: prob,
                    seed,
                },
                GenFamily::Filtered2Tough => GenSpec::Filtered2Tough {
                    n: n.unwrap_or(10),
                    seed,
                    max_attempts,
                },
                GenFamily::Fixed => GenSpec::Fixed {
                    name: name.unwrap_or_else(|| "G1".into()),
                },
            };
            cmd_gen(&spec)
        }
        Command::Fuzz {
            family,
            count,
            seed,
            size_range,
            fallback_limit,
            out_dir,
        } => cmd_fuzz(
            family,
            count,
            seed,
            size_range,
            fallback_limit,
            out_dir.as_deref(),
        ),
    }
}

fn emit<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn with_graph(path: &Path, f: impl FnOnce(&Graph) -> i32) -> i32 {
    match read_graph_file(path) {
        Ok(g) => f(&g),
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            EXIT_PARSE
        }
    }
}

fn not_2k2_free(w: &crate::analysis::TwoK2Witness) -> i32 {
    eprintln!(
        "input contains an induced 2K2: {}-{} and {}-{}",
        w.a, w.b, w.c, w.d
    );
    emit(&json!({ "two_k2_free": false, "witness": w.vertices() }));
    EXIT_NOT_2K2_FREE
}

/// 2K2-freeness with witness, clique number, connectivity.
pub fn cmd_check(g: &Graph) -> i32 {
    let witness = find_2k2(g);
    emit(&json!({
        "n": g.n(),
        "m": g.m(),
        "two_k2_free": witness.is_none(),
        "witness": witness.map(|w| w.vertices()),
        "omega": clique_number(g),
        "connected": g.is_connected(),
    }));
    if witness.is_some() {
        EXIT_NOT_2K2_FREE
    } else {
        EXIT_OK
    }
}

pub fn cmd_walk(g: &Graph, trace: bool, fallback_limit: usize) -> i32 {
    match two_walk(g, &WalkOptions { fallback_limit }) {
        Ok(TwoWalkOutcome::Walk(r)) => {
            if let Some(reason) = &r.fallback_reason {
                eprintln!("constructive path abandoned: {reason}");
            }
            emit(&WalkJson::of(&r, trace));
            EXIT_OK
        }
        Ok(TwoWalkOutcome::NotTwoTough {
            certificate,
            trace: t,
        }) => {
            eprintln!(
                "graph is not 2-tough: |S| / c(G - S) = {}",
                certificate.ratio
            );
            emit(&CertificateJson {
                certificate,
                trace: trace.then(|| TraceJson::of(&t)),
            });
            EXIT_NOT_TWO_TOUGH
        }
        Err(PipelineError::NotTwoK2Free(w)) => not_2k2_free(&w),
        Err(e @ PipelineError::NoWalkFound { .. }) => {
            eprintln!("{e}");
            emit(&json!({ "error": "no_walk_found", "detail": e.to_string() }));
            EXIT_NO_WALK
        }
        Err(e @ PipelineError::TooLarge { .. }) => {
            eprintln!("{e}");
            emit(&json!({ "error": "too_large", "detail": e.to_string() }));
            EXIT_TOO_LARGE
        }
    }
}

pub fn cmd_toughness(g: &Graph, limit: usize) -> i32 {
    match toughness_witness(g, limit) {
        Ok(Some(w)) => {
            emit(&json!({
                "toughness": ToughnessValue::Finite(w.ratio).to_string(),
                "cut": w.cut,
                "components": w.components,
            }));
            EXIT_OK
        }
        Ok(None) => {
            emit(&json!({ "toughness": ToughnessValue::Infinite.to_string() }));
            EXIT_OK
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_TOO_LARGE
        }
    }
}

pub fn cmd_decompose(g: &Graph) -> i32 {
    if let Some(w) = find_2k2(g) {
        return not_2k2_free(&w);
    }
    match clique_tower(g) {
        Ok(t) => {
            eprint!("{}", t.serialize());
            emit(&t);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_FAILURE
        }
    }
}

/// Accepts walk JSON (an object with `walk`, or a bare id array) or
/// certificate JSON (an object with `cut`).
pub fn cmd_verify(g: &Graph, document: &Path) -> i32 {
    let parsed: Result<Value, String> = fs::read_to_string(document)
        .map_err(|e| e.to_string())
        .and_then(|text| serde_json::from_str(&text).map_err(|e| e.to_string()));
    let value = match parsed {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{}: {e}", document.display());
            return EXIT_PARSE;
        }
    };
    let report = if value.get("cut").is_some() {
        match serde_json::from_value::<ToughnessCertificate>(value) {
            Ok(c) => verify_certificate(g, &c),
            Err(e) => {
                eprintln!("{}: {e}", document.display());
                return EXIT_PARSE;
            }
        }
    } else {
        let ids = value.get("walk").cloned().unwrap_or(value);
        match serde_json::from_value::<Walk>(ids) {
            Ok(w) => verify_two_walk(g, &w),
            Err(e) => {
                eprintln!("{}: {e}", document.display());
                return EXIT_PARSE;
            }
        }
    };
    if !report.ok {
        eprintln!("{}", report.summary());
    }
    emit(&report);
    if report.ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

pub fn cmd_gen(spec: &GenSpec) -> i32 {
    match spec.generate() {
        Ok(g) => {
            print!("{}\n{}", spec.comment(), serialize_graph(&g));
            EXIT_OK
        }
        Err(e @ GenError::Analysis(AnalysisError::TooLarge { .. })) => {
            eprintln!("{e}");
            EXIT_TOO_LARGE
        }
        Err(e @ (GenError::UnknownFixed(_) | GenError::InvalidParameter(_))) => {
            eprintln!("{e}");
            EXIT_PARSE
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_FAILURE
        }
    }
}

/// The recipe for fuzz instance number `i`, drawn from `rng`.
pub fn fuzz_spec(
    family: FuzzFamily,
    range: &RangeInclusive<usize>,
    rng: &mut StreamRng,
) -> GenSpec {
    let n = rng.range(*range.start() as u64, *range.end() as u64) as usize;
    let seed = rng.next_u64();
    match family {
        FuzzFamily::Split => {
            let indep = (rng.range(1, (n as u64 / 3).max(1)) as usize).min(n.saturating_sub(1));
            GenSpec::Split {
                clique_size: n - indep,
                indep_size: indep,
                attach_prob: rng.unit(),
                seed,
            }
        }
        FuzzFamily::CoChordal => GenSpec::CoChordal {
            n,
            edge_prob: rng.unit(),
            seed,
        },
        FuzzFamily::Filtered2Tough => GenSpec::Filtered2Tough {
            n,
            seed,
            max_attempts: 10_000,
        },
    }
}

#[derive(Debug, Default, Serialize)]
struct FuzzSummary {
    family: String,
    count: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    constructive: usize,
    fallback: usize,
    certificates: usize,
    /// Not 2-tough and without a 2-walk.
    no_walk: usize,
}

enum Passed {
    Walk(WalkPath),
    Certificate,
    NoWalk,
}

/// Every check for one instance; `Err` carries the reasons it failed.
fn fuzz_one(
    g: &Graph,
    expect_two_tough: bool,
    fallback_limit: usize,
) -> (Result<Passed, Vec<String>>, Option<TraceJson>) {
    let mut problems = Vec::new();
    if let Some(w) = find_2k2(g) {
        problems.push(format!(
            "generated graph has an induced 2K2 {:?}",
            w.vertices()
        ));
        return (Err(problems), None);
    }
    let small = g.n() <= DEFAULT_TOUGHNESS_LIMIT;
    let two_tough = |g: &Graph| -> Option<bool> {
        small.then(|| {
            toughness_exact(g, DEFAULT_TOUGHNESS_LIMIT).is_ok_and(|t| t.at_least(2.into()))
        })
    };
    let outcome = two_walk(g, &WalkOptions { fallback_limit });
    match outcome {
        Ok(TwoWalkOutcome::Walk(r)) => {
            let trace = TraceJson::of(&r.trace);
            collect(&mut problems, "walk", verify_two_walk(g, &r.walk));
            if let (Some(t), Some(h)) = (&r.trace.tower, &r.trace.h) {
                if let Err(e) = validate_tower(g, t) {
                    problems.push(format!("tower: {e}"));
                }
                if let Some(gamma) = &r.trace.gamma {
                    collect(&mut problems, "gamma", validate_gamma(gamma));
                }
                if r.path == WalkPath::Constructive {
                    collect(&mut problems, "h", verify_h(g, h));
                    problems.extend(euler_problems(h, &r.walk));
                }
            }
            if expect_two_tough && r.path == WalkPath::Fallback {
                problems.push(format!(
                    "2-tough input needed the fallback: {}",
                    r.fallback_reason.as_deref().unwrap_or("")
                ));
            }
            let result = if problems.is_empty() {
                Ok(Passed::Walk(r.path))
            } else {
                Err(problems)
            };
            (result, Some(trace))
        }
        Ok(TwoWalkOutcome::NotTwoTough { certificate, trace }) => {
            collect(
                &mut problems,
                "certificate",
                verify_certificate(g, &certificate),
            );
            if expect_two_tough || two_tough(g) == Some(true) {
                problems.push("certificate issued for a 2-tough graph".into());
            }
            let result = if problems.is_empty() {
                Ok(Passed::Certificate)
            } else {
                Err(problems)
            };
            (result, Some(TraceJson::of(&trace)))
        }
        Err(PipelineError::NotTwoK2Free(w)) => {
            problems.push(format!(
                "pipeline found a 2K2 {:?} the check missed",
                w.vertices()
            ));
            (Err(problems), None)
        }
        Err(e) => {
            if expect_two_tough || two_tough(g) != Some(false) {
                problems.push(e.to_string());
                (Err(problems), None)
            } else {
                (Ok(Passed::NoWalk), None)
            }
        }
    }
}

fn collect(problems: &mut Vec<String>, what: &str, report: VerdictReport) {
    problems.extend(
        report
            .violations
            .into_iter()
            .map(|v| format!("{what} {}: {}", v.check, v.detail)),
    );
}

/// Each vertex appears `degree / 2` times and the walk has one step per edge.
pub fn euler_problems(h: &MultiGraph, walk: &Walk) -> Vec<String> {
    let mut problems = Vec::new();
    if walk.len() != h.edge_count() {
        problems.push(format!(
            "walk has {} steps, H has {} edges",
            walk.len(),
            h.edge_count()
        ));
    }
    let counts = walk.visit_counts();
    for v in 0..h.n() {
        let seen = counts.get(&v).copied().unwrap_or(0);
        if 2 * seen != h.degree(v) {
            problems.push(format!(
                "vertex {v} visited {seen} times with H-degree {}",
                h.degree(v)
            ));
        }
    }
    problems
}

pub fn cmd_fuzz(
    family: FuzzFamily,
    count: usize,
    seed: u64,
    range: RangeInclusive<usize>,
    fallback_limit: usize,
    out_dir: Option<&Path>,
) -> i32 {
    if family == FuzzFamily::Filtered2Tough && *range.end() > DEFAULT_TOUGHNESS_LIMIT {
        eprintln!("filtered_2tough needs n <= {DEFAULT_TOUGHNESS_LIMIT}");
        return EXIT_TOO_LARGE;
    }
    let mut rng = StreamRng::new(seed);
    let mut summary = FuzzSummary {
        family: family
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string(),
        count,
        ..Default::default()
    };
    for i in 0..count {
        let spec = fuzz_spec(family, &range, &mut rng);
        let g = match spec.generate() {
            Ok(g) => g,
            Err(e) => {
                eprintln!("instance {i}: {e}");
                summary.skipped += 1;
                continue;
            }
        };
        let (result, trace) = fuzz_one(&g, family == FuzzFamily::Filtered2Tough, fallback_limit);
        match result {
            Ok(path) => {
                summary.passed += 1;
                match path {
                    Passed::Walk(WalkPath::Constructive) => summary.constructive += 1,
                    Passed::Walk(WalkPath::Fallback) => summary.fallback += 1,
                    Passed::Certificate => summary.certificates += 1,
                    Passed::NoWalk => summary.no_walk += 1,
                }
            }
            Err(problems) => {
                summary.failed += 1;
                eprintln!("instance {i} failed ({}):", spec.comment());
                for p in &problems {
                    eprintln!("  {p}");
                }
                if let Some(dir) = out_dir {
                    let record = json!({
                        "index": i,
                        "spec": spec,
                        "graph": serialize_graph(&g),
                        "problems": problems,
                        "trace": trace,
                    });
                    let file = dir.join(format!("fail-{i}.json"));
                    let written = fs::create_dir_all(dir).and_then(|_| {
                        fs::write(
                            &file,
                            serde_json::to_string_pretty(&record).expect("serializable"),
                        )
                    });
                    if let Err(e) = written {
                        eprintln!("cannot write {}: {e}", file.display());
                    }
                }
            }
        }
    }
    emit(&summary);
    if summary.failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_ranges() {
        assert_eq!(parse_size_range("8..16"), Ok(8..=16));
        assert_eq!(parse_size_range("5..=5"), Ok(5..=5));
        assert!(parse_size_range("9..3").is_err());
        assert!(parse_size_range("x").is_err());
    }

    #[test]
    fn fuzz_specs_are_reproducible() {
        let draw = |seed| {
            let mut rng = StreamRng::new(seed);
            (0..5)
                .map(|_| fuzz_spec(FuzzFamily::Split, &(6..=12), &mut rng))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        for spec in draw(3) {
            let GenSpec::Split {
                clique_size,
                indep_size,
                ..
            } = spec
            else {
                unreachable!()
            };
            assert!((6..=12).contains(&(clique_size + indep_size)) && indep_size >= 1);
        }
    }
}
