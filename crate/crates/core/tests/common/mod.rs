#![allow(dead_code)]

use std::path::PathBuf;

use simplex_core::{ComplexityClassifier, NGramModel, Thesaurus, WordVectors};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixtures").join(name)
}

pub struct Fixtures {
    pub model: NGramModel,
    pub classifier: ComplexityClassifier,
    pub thesaurus: Thesaurus,
    pub vectors: WordVectors,
}

pub fn load() -> Fixtures {
    Fixtures {
        model: NGramModel::from_corpus_file(fixture("corpus.txt")).unwrap(),
        classifier: ComplexityClassifier::load(fixture("classifier.mlp")).unwrap(),
        thesaurus: Thesaurus::load(fixture("thesaurus.tsv")).unwrap(),
        vectors: WordVectors::load(fixture("vectors.txt")).unwrap(),
    }
}

pub fn corpus_lines() -> Vec<String> {
    std::fs::read_to_string(fixture("corpus.txt"))
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}
