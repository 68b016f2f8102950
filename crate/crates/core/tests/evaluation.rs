mod common;

use approx::assert_relative_eq;
use simplex_core::evalmetrics::{evaluate_corpus, load_records};
use simplex_core::BigramFactor;

// Frozen from scripts/eval_oracle.py (exact fractions, direct products).
const SARI: [f64; 10] = [
    0.6746521309214808,
    0.9397727272727273,
    0.4861111111111111,
    0.8888888888888888,
    0.8888888888888888,
    0.7194444444444444,
    0.705026455026455,
    0.5892857142857143,
    0.8657407407407407,
    0.8888888888888888,
];
const MEAN_SARI: f64 = 0.764669999046934;
// (phi, mean original, mean simplified, decrease %)
const PERPLEXITY: [(f64, f64, f64, f64); 2] = [
    (0.0, 24.87755334767622, 8.852465184839115, 64.41585287298354),
    (0.5, 64.34893396953409, 21.440205014585317, 66.68133612790517),
];

fn records() -> Vec<simplex_core::evalmetrics::EvaluationRecord> {
    load_records(
        &common::fixture("eval/orig.txt"),
        &common::fixture("eval/system.txt"),
        &[common::fixture("eval/ref0.txt"), common::fixture("eval/ref1.txt")],
    )
    .unwrap()
}

#[test]
fn fixture_corpus_matches_oracle() {
    let fx = common::load();
    let recs = records();
    assert_eq!(recs.len(), 10);
    for (phi, orig, simp, decrease) in PERPLEXITY {
        let report = evaluate_corpus(&recs, &fx.model, BigramFactor::new(phi).unwrap()).unwrap();
        for (got, want) in report.sari.iter().zip(SARI) {
            assert_relative_eq!(*got, want, max_relative = 1e-9);
        }
        assert_relative_eq!(report.mean_sari, MEAN_SARI, max_relative = 1e-9);
        assert_relative_eq!(report.mean_pp_original, orig, max_relative = 1e-9);
        assert_relative_eq!(report.mean_pp_simplified, simp, max_relative = 1e-9);
        assert_relative_eq!(report.perplexity_decrease, decrease, max_relative = 1e-9);
    }
}

#[test]
fn mismatched_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let short = dir.path().join("short.txt");
    std::fs::write(&short, "a b\n").unwrap();
    let err = load_records(&common::fixture("eval/orig.txt"), &common::fixture("eval/system.txt"), &[&short])
        .unwrap_err();
    assert!(err.to_string().contains("short.txt"), "{err}");
}
