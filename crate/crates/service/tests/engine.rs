use std::path::PathBuf;
use std::sync::Arc;
use std::thread;

use simplex_service::{ApiError, Engine, ResourceArgs};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/fixtures").join(name)
}

fn args() -> ResourceArgs {
    ResourceArgs {
        corpus: Some(fixture("corpus.txt")),
        lexicon: Some(fixture("classifier.mlp")),
        thesaurus: Some(fixture("thesaurus.tsv")),
        vectors: Some(fixture("vectors.txt")),
        embed: Some("mock".into()),
        mode: "we".into(),
        phi: 0.0,
        model: "default".into(),
        ..ResourceArgs::default()
    }
}

fn sentences() -> Vec<String> {
    let mut lines: Vec<String> = std::fs::read_to_string(fixture("corpus.txt"))
        .unwrap()
        .lines()
        .take(40)
        .map(String::from)
        .collect();
    lines.push("Oregano is an indispensable ingredient in Greek cuisine .".into());
    lines
}

#[test]
fn concurrent_requests_match_serial() {
    let engine = Arc::new(Engine::load(&args(), None).unwrap());
    let modes = ["we", "transformer"];
    let serial: Vec<String> = sentences()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let cfg = engine.config(Some(modes[i % 2]), Some(0.3), None).unwrap();
            serde_json::to_string(&engine.respond(s, &cfg).unwrap()).unwrap()
        })
        .collect();
    let handles: Vec<_> = (0..4)
        .map(|t| {
            let engine = Arc::clone(&engine);
            thread::spawn(move || {
                let mut out = Vec::new();
                let all = sentences();
                // each thread walks the list from a different offset
                for k in 0..all.len() {
                    let i = (k + t * 7) % all.len();
                    let cfg = engine.config(Some(modes[i % 2]), Some(0.3), None).unwrap();
                    out.push((i, serde_json::to_string(&engine.respond(&all[i], &cfg).unwrap()).unwrap()));
                }
                out
            })
        })
        .collect();
    for h in handles {
        for (i, json) in h.join().unwrap() {
            assert_eq!(json, serial[i], "sentence {i}");
        }
    }
}

#[test]
fn request_validation() {
    let engine = Engine::load(&args(), None).unwrap();
    assert!(matches!(engine.config(Some("bert"), None, None), Err(ApiError::BadRequest(_))));
    assert!(matches!(engine.config(Some("we"), Some(-0.1), None), Err(ApiError::BadRequest(_))));
    let cfg = engine.config(Some("we"), None, None).unwrap();
    assert!(matches!(engine.respond("   ", &cfg), Err(ApiError::BadRequest(_))));
}

#[test]
fn missing_mode_resources_are_unavailable() {
    let engine = Engine::load(&ResourceArgs { vectors: None, embed: None, ..args() }, None).unwrap();
    for mode in ["we", "transformer"] {
        let cfg = engine.config(Some(mode), None, None).unwrap();
        let err = engine.respond("the house is big .", &cfg).unwrap_err();
        assert_eq!(err.status(), 503, "{mode}");
    }
}

#[test]
fn lexicon_is_trained_when_no_classifier_is_given() {
    let engine = Engine::load(&ResourceArgs { lexicon: Some(fixture("lexicon.tsv")), ..args() }, None).unwrap();
    let cfg = engine.config(Some("we"), None, None).unwrap();
    let resp = engine.respond("the house is big .", &cfg).unwrap();
    assert_eq!(resp.simplified.split(' ').count(), 5);
}
