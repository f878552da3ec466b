//! Runs the conjecture engine over the embedded corpus of connected graphs
//! on up to seven vertices, then narrows the output in two steps: relaxing
//! each hypothesis to the weakest one the data supports, and keeping only
//! conjectures that sharpen a kept bound somewhere.
//!
//! Run with `cargo run --release --example conjecture_search`.

use conjgraph::conjecture::{generate, minimize_hypothesis, significance_filter, EngineConfig};
use conjgraph::corpus::{parse_corpus, EMBEDDED_SELFTEST_CORPUS};
use conjgraph::InvariantId;

fn main() {
    let corpus = parse_corpus(EMBEDDED_SELFTEST_CORPUS).expect("embedded corpus parses");
    println!(
        "corpus: {} connected graphs on up to 7 vertices",
        corpus.len()
    );

    let config = EngineConfig::default();
    let found = generate(&corpus.entries, InvariantId::Alpha, &config)
        .expect("alpha is in the default catalog");
    println!("\ntop proposals bounding alpha:");
    for conjecture in found.iter().take(8) {
        println!("  {}", conjecture.output_line());
    }

    // Every emitted inequality already holds on the whole corpus; minimizing
    // keeps the support and drops hypothesis clauses the data never needed.
    let minimized: Vec<_> = found
        .iter()
        .map(|c| minimize_hypothesis(c, &corpus.entries))
        .collect();
    let relaxed = found
        .iter()
        .zip(&minimized)
        .filter(|(a, b)| a.hypothesis != b.hypothesis)
        .count();
    println!(
        "\nminimize_hypothesis relaxed {relaxed} of {} proposals",
        found.len()
    );

    let significant = significance_filter(&minimized, &corpus.entries);
    println!(
        "significance filter kept {} of {}:",
        significant.len(),
        minimized.len()
    );
    for conjecture in significant.iter().take(8) {
        println!("  {}", conjecture.output_line());
    }
}
