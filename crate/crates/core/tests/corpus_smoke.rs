//! Full default-corpus regression: no check may come back violated, and
//! the corpus must exercise every statement non-vacuously at least once
//! (see the acceptance suite for the timed version).

use starring_core::corpus::{run_corpus, CorpusSpec};
use starring_core::theorems::TheoremId;

#[test]
fn default_corpus_zero_violations() {
    let summary = run_corpus(&CorpusSpec::default(), None).unwrap();
    println!("{summary}");
    assert!(
        summary.violations.is_empty(),
        "violations: {:#?}",
        summary.violations
    );
    for id in TheoremId::ALL {
        assert!(
            summary.tally(id).holds > 0,
            "{id} never held non-vacuously"
        );
    }
}
