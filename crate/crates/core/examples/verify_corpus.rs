//! Runs every theorem check on the built-in corpus and prints a summary.

use std::time::Instant;

use arrangements::verify::{corpus, run_check, THEOREMS};

fn main() {
    let corpus = corpus();
    let mut failures = 0;
    for t in THEOREMS {
        let start = Instant::now();
        let mut passed = 0;
        for e in &corpus {
            let r = run_check(t, e).expect("known theorem");
            if r.passed {
                passed += 1;
            } else {
                failures += 1;
                println!("  FAIL {} on {}: {}", r.theorem, r.arrangement, r.detail);
            }
        }
        println!("{t:<24} {passed}/{} ({:.2?})", corpus.len(), start.elapsed());
    }
    println!("{failures} failures");
}
