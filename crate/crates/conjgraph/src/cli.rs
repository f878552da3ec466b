//! Command-line surface tying the library together.
//!
//! Six subcommands cover the workflow end to end: `invariants` prints a value
//! table for a corpus, `check` evaluates one registered statement on every
//! corpus graph, `family` emits a constructed graph as graph6, `conjecture`
//! searches a corpus for candidate inequalities on a target invariant,
//! `verify-corpus` runs every proved statement and fails on any violation,
//! and `selftest` compares the optimized solvers against the brute-force
//! oracles on the embedded corpus of connected graphs up to seven vertices.
//!
//! Exit codes: 0 on success, 1 when a violation or mismatch is found, 2 on
//! usage or input errors. Identical inputs produce byte-identical stdout once
//! the trailing `# elapsed_ms=` footer is suppressed with `--no-timing`. The
//! `GF_JOBS` environment variable bounds the worker thread count; rows and
//! records are emitted in a fixed order regardless of how the computation
//! was scheduled.

use crate::bruteforce;
use crate::conjecture::{self, EngineConfig};
use crate::corpus::{self, Corpus, CorpusCache};
use crate::families;
use crate::graph6::encode_graph6;
use crate::invariants::{self, InvariantId};
use crate::theorems::{self, TheoremError, TheoremId, TheoremReport};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use std::error::Error;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(
    name = "conjgraph",
    version,
    about = "Exact graph invariants, theorem checking, and conjecture search over graph6 corpora"
)]
struct Cli {
    /// Suppress the trailing `# elapsed_ms=` footer so reruns are
    /// byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one row of invariant values per corpus graph, in input order.
    Invariants(InvariantsArgs),
    /// Evaluate one statement on every corpus graph and report violations.
    Check(CheckArgs),
    /// Emit a constructed family member as graph6.
    Family(FamilyArgs),
    /// Search a corpus for inequalities bounding a target invariant.
    Conjecture(ConjectureArgs),
    /// Run every proved statement over a corpus; any violation fails.
    VerifyCorpus(VerifyCorpusArgs),
    /// Compare optimized solvers against brute-force oracles on the
    /// embedded corpus.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
struct InvariantsArgs {
    /// Corpus file of graph6 lines; stdin when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Comma-separated invariants, written as `alpha`, `gamma_k:2`, ...
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = [
            InvariantId::Alpha,
            InvariantId::Mu,
            InvariantId::Gamma,
            InvariantId::GammaTotal,
            InvariantId::GammaConnected,
            InvariantId::GammaEdge,
        ]
    )]
    invariants: Vec<InvariantId>,
    /// TSV cache file, read before computing and appended to afterwards.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Statement id, written as `THM_3_2` or `THM_2_4(3,1)`.
    #[arg(long)]
    theorem: TheoremId,
    /// Corpus file of graph6 lines.
    #[arg(long)]
    corpus: PathBuf,
    /// Print only the `#` summary line, not the per-graph records.
    #[arg(long)]
    summary: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("constructor")
    .required(true)
    .args(["g_r", "claw_free", "one_r_tree"]))]
struct FamilyArgs {
    /// r-regular example on r^2 + r vertices with alpha = (r/2) gamma_t.
    #[arg(long = "G-r", value_name = "R")]
    g_r: Option<usize>,
    /// Claw-free chain of ELL diamonds with alpha = gamma_2 = ELL + 1.
    #[arg(long, value_name = "ELL")]
    claw_free: Option<usize>,
    /// Tree whose vertices all have degree 1 or R, grown from a star.
    #[arg(long, value_name = "R")]
    one_r_tree: Option<usize>,
    /// Comma-separated leaf indices expanded in order while growing the tree.
    #[arg(
        long,
        value_delimiter = ',',
        requires = "one_r_tree",
        value_name = "LEAVES"
    )]
    expand: Vec<usize>,
}

#[derive(Debug, Args)]
struct ConjectureArgs {
    /// Corpus file of graph6 lines.
    #[arg(long)]
    corpus: PathBuf,
    /// Invariant the emitted inequalities must bound.
    #[arg(long)]
    target: InvariantId,
    /// Relax each hypothesis to the weakest one the corpus still supports.
    #[arg(long)]
    minimize: bool,
    /// Keep only conjectures that sharpen a kept bound on some graph.
    #[arg(long)]
    dalmatian: bool,
    /// Number of conjectures to print after filtering.
    #[arg(long, default_value_t = 20)]
    top: usize,
}

#[derive(Debug, Args)]
struct VerifyCorpusArgs {
    /// Corpus file of graph6 lines.
    #[arg(long)]
    corpus: PathBuf,
    /// Also run the two statements that are still open.
    #[arg(long)]
    include_conjectures: bool,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// Check only the first LIMIT graphs of the embedded corpus.
    #[arg(long, value_name = "LIMIT")]
    limit: Option<usize>,
}

/// Parses `argv` and runs the selected subcommand, returning the process
/// exit code: 0 clean, 1 when violations or mismatches were found, 2 for
/// usage and input errors.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    configure_jobs();
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Invariants(args) => cmd_invariants(args),
        Command::Check(args) => cmd_check(args),
        Command::Family(args) => cmd_family(args),
        Command::Conjecture(args) => cmd_conjecture(args),
        Command::VerifyCorpus(args) => cmd_verify_corpus(args),
        Command::Selftest(args) => cmd_selftest(args),
    };
    match outcome {
        Ok(violations) => {
            if !cli.no_timing {
                println!("# elapsed_ms={}", start.elapsed().as_millis());
            }
            i32::from(violations)
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

/// Applies `GF_JOBS` to the global worker pool. A pool can only be sized
/// once per process, so later calls quietly keep the existing pool.
fn configure_jobs() {
    let Ok(raw) = std::env::var("GF_JOBS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(jobs) if jobs >= 1 => {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build_global();
        }
        _ => eprintln!("warning: ignoring GF_JOBS={raw:?}, expected a positive integer"),
    }
}

/// Column label used by the `invariants` table. The three long domination
/// names get the compact forms `gamma_t`, `gamma_c`, `gamma_e`; everything
/// else reuses the id's display form.
fn short_label(id: InvariantId) -> String {
    match id {
        InvariantId::GammaTotal => "gamma_t".to_string(),
        InvariantId::GammaConnected => "gamma_c".to_string(),
        InvariantId::GammaEdge => "gamma_e".to_string(),
        other => other.to_string(),
    }
}

fn warn_duplicates(corpus: &Corpus) {
    for graph6 in &corpus.duplicates {
        eprintln!("warning: duplicate corpus line {graph6} ignored");
    }
}

fn load(path: &Path) -> Result<Corpus, Box<dyn Error>> {
    let corpus = corpus::load_corpus(path)?;
    warn_duplicates(&corpus);
    Ok(corpus)
}

fn cmd_invariants(args: &InvariantsArgs) -> Result<bool, Box<dyn Error>> {
    let text = match &args.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|source| format!("failed to read {}: {source}", path.display()))?,
        None => std::io::read_to_string(std::io::stdin())?,
    };
    let corpus = corpus::parse_corpus(&text)?;
    warn_duplicates(&corpus);
    let mut cache = match &args.cache {
        Some(path) => CorpusCache::open(path)?,
        None => CorpusCache::in_memory(),
    };

    let ids = &args.invariants;
    let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; ids.len()]; corpus.len()];
    let mut holes = Vec::new();
    for (row, entry) in corpus.entries.iter().enumerate() {
        for (col, &id) in ids.iter().enumerate() {
            match cache.lookup(&entry.graph6, id) {
                Some(value) => table[row][col] = Some(value),
                None => holes.push((row, col)),
            }
        }
    }
    let computed: Vec<((usize, usize), Option<usize>)> = holes
        .par_iter()
        .map(|&(row, col)| {
            let value = invariants::invariant_value(&corpus.entries[row].graph, ids[col]).ok();
            ((row, col), value)
        })
        .collect();
    for ((row, col), value) in computed {
        if let Some(value) = value {
            cache.record(&corpus.entries[row].graph6, ids[col], value);
            table[row][col] = Some(value);
        }
    }
    cache.persist()?;

    for (row, entry) in corpus.entries.iter().enumerate() {
        let cells: Vec<String> = ids
            .iter()
            .enumerate()
            .map(|(col, &id)| match table[row][col] {
                Some(value) => format!("{}={value}", short_label(id)),
                None => format!("{}=-", short_label(id)),
            })
            .collect();
        println!("{} {}", entry.graph6, cells.join(" "));
    }
    Ok(false)
}

fn cmd_check(args: &CheckArgs) -> Result<bool, Box<dyn Error>> {
    let corpus = load(&args.corpus)?;
    let mut rows: Vec<(&str, TheoremReport)> = corpus
        .entries
        .par_iter()
        .map(|entry| {
            theorems::check(args.theorem, &entry.graph)
                .map(|report| (entry.graph6.as_str(), report))
        })
        .collect::<Result<_, _>>()?;
    rows.sort_by_key(|(a, _)| *a);

    let mut violations = 0usize;
    let mut tight = 0usize;
    for (graph6, report) in &rows {
        violations += usize::from(!report.holds);
        tight += usize::from(report.tight);
        if !args.summary {
            println!("{}", report.record_line(graph6));
        }
    }
    println!(
        "# theorem={} graphs={} violations={violations} tight={tight}",
        args.theorem,
        rows.len()
    );
    Ok(violations > 0)
}

fn cmd_family(args: &FamilyArgs) -> Result<bool, Box<dyn Error>> {
    let graph = if let Some(r) = args.g_r {
        families::build_gr_example(r)?
    } else if let Some(ell) = args.claw_free {
        families::build_claw_free_chain(ell)?
    } else if let Some(r) = args.one_r_tree {
        families::build_1r_tree(r, &args.expand)?
    } else {
        unreachable!("clap enforces exactly one constructor flag");
    };
    println!("{}", encode_graph6(&graph));
    Ok(false)
}

fn cmd_conjecture(args: &ConjectureArgs) -> Result<bool, Box<dyn Error>> {
    let corpus = load(&args.corpus)?;
    let config = EngineConfig::default();
    let mut found = conjecture::generate(&corpus.entries, args.target, &config)?;
    if args.minimize {
        found = found
            .iter()
            .map(|c| conjecture::minimize_hypothesis(c, &corpus.entries))
            .collect();
    }
    if args.dalmatian {
        found = conjecture::significance_filter(&found, &corpus.entries);
    }
    found.truncate(args.top);
    for conjecture in &found {
        println!("{}", conjecture.output_line());
    }
    Ok(false)
}

fn cmd_verify_corpus(args: &VerifyCorpusArgs) -> Result<bool, Box<dyn Error>> {
    let corpus = load(&args.corpus)?;
    for theorem in theorems::registry() {
        if theorem.is_conjecture() && !args.include_conjectures {
            continue;
        }
        match theorems::verify_corpus(theorem, &corpus.entries) {
            Ok(summary) => println!(
                "{theorem}\tgraphs={}\thypothesis_met={}\tholds={}\ttight={}",
                summary.graphs,
                summary.hypothesis_met,
                summary.holds,
                summary.tight.len()
            ),
            Err(TheoremError::Violation { theorem, graph6 }) => {
                println!("violation\t{theorem}\t{graph6}");
                return Ok(true);
            }
            Err(other) => return Err(other.into()),
        }
    }
    Ok(false)
}

fn cmd_selftest(args: &SelftestArgs) -> Result<bool, Box<dyn Error>> {
    let corpus = corpus::parse_corpus(corpus::EMBEDDED_SELFTEST_CORPUS)?;
    let mut entries = corpus.entries;
    if let Some(limit) = args.limit {
        entries.truncate(limit);
    }
    let ids = selftest_catalog();

    let render = |v: Option<usize>| match v {
        Some(value) => value.to_string(),
        None => "-".to_string(),
    };
    let mut mismatches: Vec<String> = entries
        .par_iter()
        .flat_map_iter(|entry| {
            ids.iter().filter_map(|&id| {
                let solver = invariants::invariant_value(&entry.graph, id).ok();
                let oracle = bruteforce::oracle_value(&entry.graph, id);
                (solver != oracle).then(|| {
                    format!(
                        "mismatch\t{}\t{id}\tsolver={}\toracle={}",
                        entry.graph6,
                        render(solver),
                        render(oracle)
                    )
                })
            })
        })
        .collect();
    mismatches.sort_unstable();
    for line in &mismatches {
        println!("{line}");
    }
    println!(
        "# selftest graphs={} invariants={} mismatches={}",
        entries.len(),
        ids.len(),
        mismatches.len()
    );
    Ok(!mismatches.is_empty())
}

/// Every invariant the selftest exercises, including one parameterized
/// instance of each `k`-indexed family.
fn selftest_catalog() -> Vec<InvariantId> {
    vec![
        InvariantId::Alpha,
        InvariantId::AlphaK(1),
        InvariantId::AlphaK(2),
        InvariantId::AlphaLocalK(1),
        InvariantId::Mu,
        InvariantId::Gamma,
        InvariantId::GammaTotal,
        InvariantId::GammaK(2),
        InvariantId::GammaConnected,
        InvariantId::GammaIndependent,
        InvariantId::GammaEdge,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_invariant_columns_match_the_table_order() {
        let cli = Cli::try_parse_from(["conjgraph", "invariants", "--file", "x.g6"]).unwrap();
        let Command::Invariants(args) = cli.command else {
            panic!("expected the invariants subcommand");
        };
        let labels: Vec<String> = args.invariants.iter().map(|&id| short_label(id)).collect();
        assert_eq!(
            labels,
            ["alpha", "mu", "gamma", "gamma_t", "gamma_c", "gamma_e"]
        );
    }

    #[test]
    fn invariant_lists_parse_parameterized_ids() {
        let cli =
            Cli::try_parse_from(["conjgraph", "invariants", "--invariants", "alpha,gamma_k:2"])
                .unwrap();
        let Command::Invariants(args) = cli.command else {
            panic!("expected the invariants subcommand");
        };
        assert_eq!(
            args.invariants,
            vec![InvariantId::Alpha, InvariantId::GammaK(2)]
        );
    }

    #[test]
    fn family_requires_exactly_one_constructor() {
        assert!(Cli::try_parse_from(["conjgraph", "family"]).is_err());
        assert!(
            Cli::try_parse_from(["conjgraph", "family", "--G-r", "3", "--claw-free", "2"]).is_err()
        );
        assert!(Cli::try_parse_from(["conjgraph", "family", "--expand", "1"]).is_err());
        assert!(Cli::try_parse_from(["conjgraph", "family", "--G-r", "3"]).is_ok());
    }

    #[test]
    fn usage_errors_are_told_apart_from_help_requests() {
        for argv in [
            vec!["conjgraph", "frobnicate"],
            vec!["conjgraph", "check", "--theorem", "THM_9_9"],
            vec!["conjgraph"],
        ] {
            let err = Cli::try_parse_from(argv).unwrap_err();
            assert!(err.use_stderr(), "usage errors map to exit code 2");
        }
        let help = Cli::try_parse_from(["conjgraph", "--help"]).unwrap_err();
        assert!(!help.use_stderr(), "help requests map to exit code 0");
    }

    #[test]
    fn theorem_values_parse_through_clap() {
        let cli = Cli::try_parse_from([
            "conjgraph",
            "check",
            "--theorem",
            "THM_2_4(3,1)",
            "--corpus",
            "x.g6",
        ])
        .unwrap();
        let Command::Check(args) = cli.command else {
            panic!("expected the check subcommand");
        };
        assert_eq!(args.theorem, TheoremId::Thm24 { r: 3, k: 1 });
    }
}
