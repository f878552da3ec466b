//! Evaluates every registered statement on the Petersen graph and prints the
//! resulting reports: both sides of each inequality, whether it holds, and
//! whether it is tight.
//!
//! Run with `cargo run --example theorem_reports`.

use conjgraph::parse_graph6;
use conjgraph::theorems::{check, registry};

fn main() {
    let petersen = parse_graph6("IheA@GUAo").expect("valid graph6");
    println!("Petersen graph, all registered statements:\n");

    for theorem in registry() {
        let report = check(theorem, &petersen).expect("Petersen is within all search caps");
        let side = |s: &Option<conjgraph::Rational>| match s {
            Some(v) => v.to_string(),
            None => "-".to_string(),
        };
        let status = if !report.hypothesis_met {
            "hypothesis unmet, holds vacuously"
        } else if report.tight {
            "tight"
        } else {
            "holds"
        };
        println!("{theorem}: {}", theorem.statement());
        println!(
            "    lhs={} rhs={} -> {status}",
            side(&report.lhs),
            side(&report.rhs)
        );
        if !report.diagnostics.is_empty() {
            let parts: Vec<String> = report
                .diagnostics
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            println!("    diagnostics: {}", parts.join(", "));
        }
        if let Some(cert) = &report.certificate {
            assert!(cert.validate(&petersen), "certificates must re-check");
            println!("    certificate: {cert:?}");
        }
        println!();
    }
}
