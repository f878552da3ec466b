//! Verifies every registered statement over the embedded corpus of connected
//! graphs on up to seven vertices and prints one summary line per statement:
//! how many graphs met the hypothesis and how many attain equality.
//!
//! Run with `cargo run --release --example corpus_verification`.

use conjgraph::corpus::{parse_corpus, EMBEDDED_SELFTEST_CORPUS};
use conjgraph::theorems::{registry, verify_corpus};

fn main() {
    let corpus = parse_corpus(EMBEDDED_SELFTEST_CORPUS).expect("embedded corpus parses");
    println!(
        "corpus: {} connected graphs on up to 7 vertices\n",
        corpus.len()
    );

    for theorem in registry() {
        let summary = verify_corpus(theorem, &corpus.entries)
            .expect("every registered statement holds on the corpus");
        let sample = summary
            .tight
            .first()
            .map(|g6| format!(", e.g. {g6}"))
            .unwrap_or_default();
        println!(
            "{:<16} hypothesis met on {:>3}, tight on {:>3}{sample}",
            theorem.to_string(),
            summary.hypothesis_met,
            summary.tight.len()
        );
    }
}
