//! SimpLex core: lexical simplification of English sentences.
//!
//! Complex words are detected with a small MLP over corpus features, replaced
//! by re-inflected thesaurus synonyms, and the resulting candidate sentences
//! are ranked by n-gram perplexity or sentence-embedding similarity.

pub mod complexity;
pub mod embeddings;
pub mod error;
pub mod evalmetrics;
pub mod langmodel;
pub mod morphology;
pub mod pipeline;
pub mod ranking;
pub mod thesaurus;

pub use complexity::{ComplexityClassifier, Label, WordFeatures};
pub use embeddings::{MockEmbedder, SentenceEmbedder, WordVectors};
pub use error::{Error, Result};
pub use langmodel::{NGramModel, Sentence};
pub use morphology::{InflectionSpec, Morphology, PosTag};
pub use pipeline::{Mode, SimplificationConfig, SimplificationResult, Simplifier};
pub use ranking::{BigramFactor, PerplexityScore};
pub use thesaurus::{SynonymSource, Thesaurus};
