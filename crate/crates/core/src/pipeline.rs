//! The simplification loop: detect complex words, fetch and re-inflect
//! synonyms, filter them, and pick the best candidate sentence.
//!
//! Tokens are visited left to right over the working sentence, so each
//! decision sees the replacements made before it.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complexity::{extract_features, ComplexityClassifier, Label};
use crate::embeddings::{cosine, SentenceEmbedder, WordVectors};
use crate::error::{Error, Result};
use crate::langmodel::{NGramModel, Sentence};
use crate::morphology::{fix_article, match_case, Degree, InflectionSpec, Morphology, PosTag};
use crate::ranking::{cosine_scores, pp_score, rank_by_perplexity, BigramFactor, PerplexityScore};
use crate::thesaurus::{SynonymSource, Thesaurus};

pub const TRACE_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "we")]
    WordEmbedding,
    #[serde(rename = "transformer")]
    Transformer,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::WordEmbedding => "we",
            Mode::Transformer => "transformer",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "we" => Ok(Mode::WordEmbedding),
            "transformer" => Ok(Mode::Transformer),
            other => Err(Error::Validation(format!(
                "unknown mode {other:?} (expected \"we\" or \"transformer\")"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplificationConfig {
    pub mode: Mode,
    pub phi: BigramFactor,
    pub model_id: String,
}

impl Default for SimplificationConfig {
    fn default() -> Self {
        SimplificationConfig {
            mode: Mode::WordEmbedding,
            phi: BigramFactor::ZERO,
            model_id: "mock".into(),
        }
    }
}

/// A thesaurus synonym and the surface form it takes in the sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynonymCandidate {
    pub lemma: String,
    pub pos: PosTag,
    pub surface: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CosineFilter {
    Applied {
        /// `None` when no synonym had a vector.
        mean: Option<f64>,
        /// `(surface, cosine)` for synonyms that have a vector.
        scores: Vec<(String, f64)>,
        /// True when nothing beat the mean and the best single synonym was kept.
        fallback: bool,
    },
    /// The target word has no vector, so nothing was filtered.
    SkippedNoTargetVector,
    /// No synonyms reached this stage.
    Empty,
    /// Transformer mode does not filter on word vectors.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateScore {
    pub synonym: String,
    pub sentence: String,
    /// Combined perplexity (word-embedding mode) or cosine (transformer mode).
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArticleFix {
    pub position: usize,
    pub from: String,
    pub to: String,
}

/// What happened at one position predicted complex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplacementTrace {
    /// Zero-based token index.
    pub position: usize,
    pub original: String,
    pub pos: PosTag,
    pub lemma: String,
    /// `(p_simple, p_complex)`.
    pub probabilities: [f64; 2],
    /// Synonym lemmas that could not be inflected to a single word.
    pub dropped: Vec<String>,
    pub fetched: Vec<SynonymCandidate>,
    /// Surfaces predicted simple, in fetched order.
    pub complexity_filtered: Vec<String>,
    pub cosine_filter: CosineFilter,
    /// Surfaces that became candidate sentences.
    pub survivors: Vec<String>,
    pub candidates: Vec<CandidateScore>,
    pub chosen: Option<String>,
    pub article_fix: Option<ArticleFix>,
    pub error: Option<String>,
}

impl ReplacementTrace {
    /// `chosen ∈ survivors ⊆ complexity_filtered ⊆ fetched`.
    pub fn is_subset_chain(&self) -> bool {
        let fetched: HashSet<&str> = self.fetched.iter().map(|c| c.surface.as_str()).collect();
        let filtered: HashSet<&str> = self.complexity_filtered.iter().map(String::as_str).collect();
        self.complexity_filtered.iter().all(|s| fetched.contains(s.as_str()))
            && self.survivors.iter().all(|s| filtered.contains(s.as_str()))
            && self
                .chosen
                .as_ref()
                .is_none_or(|c| self.survivors.contains(c))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplificationResult {
    pub output: Sentence,
    pub traces: Vec<ReplacementTrace>,
    pub pp_score: PerplexityScore,
}

/// One candidate per synonym: position `k` replaced (keeping the original
/// token's capitalization) and a preceding a/an made to agree.
pub fn generate_candidates(s: &Sentence, k: usize, syns: &[String]) -> Result<Vec<Sentence>> {
    syns.iter().map(|syn| substitute(s, k, syn).map(|(c, _)| c)).collect()
}

fn substitute(s: &Sentence, k: usize, syn: &str) -> Result<(Sentence, Option<ArticleFix>)> {
    let original = s
        .get(k)
        .ok_or_else(|| Error::Validation(format!("position {k} out of range")))?;
    let mut out = s.with_token(k, &match_case(original, syn))?;
    let mut fix = None;
    if k > 0 {
        let article = s.get(k - 1).unwrap();
        if let Some(fixed) = fix_article(article, syn) {
            fix = Some(ArticleFix {
                position: k - 1,
                from: article.to_owned(),
                to: fixed.clone(),
            });
            out = out.with_token(k - 1, &fixed)?;
        }
    }
    Ok((out, fix))
}

/// Keeps synonyms the classifier predicts simple, order preserved.
pub fn filter_synonyms_complexity(
    syns: &[String],
    classifier: &ComplexityClassifier,
    model: &NGramModel,
    thesaurus: &Thesaurus,
) -> Vec<String> {
    syns.iter()
        .filter(|s| classifier.predict(&extract_features(s, model, thesaurus)).label == Label::Simple)
        .cloned()
        .collect()
}

/// Keeps synonyms whose cosine to `word` is strictly above the mean over
/// synonyms that have vectors; synonyms without vectors are dropped. If that
/// leaves nothing, the single best synonym is kept (earliest on ties). When
/// `word` has no vector the input is returned unchanged.
pub fn filter_synonyms_cosine(word: &str, syns: &[String], vectors: &WordVectors) -> (Vec<String>, CosineFilter) {
    filter_cosine_with(syns, vectors.get(word), |s| vectors.get(s))
}

fn filter_cosine_with<'v>(
    syns: &[String],
    target: Option<&'v [f64]>,
    lookup: impl Fn(&str) -> Option<&'v [f64]>,
) -> (Vec<String>, CosineFilter) {
    if syns.is_empty() {
        return (Vec::new(), CosineFilter::Empty);
    }
    let Some(target) = target else {
        return (syns.to_vec(), CosineFilter::SkippedNoTargetVector);
    };
    let scores: Vec<(String, f64)> = syns
        .iter()
        .filter_map(|s| {
            let v = lookup(s)?;
            cosine(target, v).ok().map(|c| (s.clone(), c))
        })
        .collect();
    if scores.is_empty() {
        return (
            Vec::new(),
            CosineFilter::Applied {
                mean: None,
                scores,
                fallback: false,
            },
        );
    }
    let mean = scores.iter().map(|(_, c)| c).sum::<f64>() / scores.len() as f64;
    let mut kept: Vec<String> = scores.iter().filter(|(_, c)| *c > mean).map(|(s, _)| s.clone()).collect();
    let fallback = kept.is_empty();
    if fallback {
        let best = scores
            .iter()
            .fold(&scores[0], |b, x| if x.1 > b.1 { x } else { b });
        kept.push(best.0.clone());
    }
    (
        kept,
        CosineFilter::Applied {
            mean: Some(mean),
            scores,
            fallback,
        },
    )
}

/// Read-only resources for [`Simplifier::simplify`].
#[derive(Clone, Copy)]
pub struct Simplifier<'a> {
    pub model: &'a NGramModel,
    pub classifier: &'a ComplexityClassifier,
    /// Offline thesaurus; always the source of synset sizes.
    pub thesaurus: &'a Thesaurus,
    /// Where synonyms come from; usually the same offline thesaurus.
    pub synonyms: &'a dyn SynonymSource,
    pub morphology: &'a Morphology,
    pub vectors: Option<&'a WordVectors>,
    pub embedder: Option<&'a dyn SentenceEmbedder>,
}

fn bypassed(token: &str) -> bool {
    token.chars().count() < 3 || !token.chars().any(char::is_alphabetic)
}

impl<'a> Simplifier<'a> {
    pub fn new(
        model: &'a NGramModel,
        classifier: &'a ComplexityClassifier,
        thesaurus: &'a Thesaurus,
    ) -> Self {
        Simplifier {
            model,
            classifier,
            thesaurus,
            synonyms: thesaurus,
            morphology: Morphology::bundled(),
            vectors: None,
            embedder: None,
        }
    }

    pub fn with_vectors(mut self, vectors: &'a WordVectors) -> Self {
        self.vectors = Some(vectors);
        self
    }

    pub fn with_embedder(mut self, embedder: &'a dyn SentenceEmbedder) -> Self {
        self.embedder = Some(embedder);
        self
    }

    pub fn with_synonyms(mut self, source: &'a dyn SynonymSource) -> Self {
        self.synonyms = source;
        self
    }

    /// Errors only when the mode's resources are missing; provider failures
    /// at a position leave that word in place and are recorded in its trace.
    pub fn simplify(&self, sentence: &Sentence, cfg: &SimplificationConfig) -> Result<SimplificationResult> {
        match cfg.mode {
            Mode::WordEmbedding if self.vectors.is_none() => {
                return Err(Error::Validation("word-embedding mode needs word vectors".into()))
            }
            Mode::Transformer if self.embedder.is_none() => {
                return Err(Error::Validation("transformer mode needs a sentence embedder".into()))
            }
            _ => {}
        }
        let mut working = sentence.clone();
        let mut traces = Vec::new();
        for k in 0..working.len() {
            let token = working.get(k).unwrap().to_owned();
            if bypassed(&token) {
                continue;
            }
            let prediction = self
                .classifier
                .predict(&extract_features(&token, self.model, self.thesaurus));
            if prediction.label == Label::Simple {
                continue;
            }
            let (next, trace) = self.replace_at(&working, k, prediction.probabilities, cfg);
            working = next;
            traces.push(trace);
        }
        let pp_score = pp_score(self.model, &working, cfg.phi);
        Ok(SimplificationResult {
            output: working,
            traces,
            pp_score,
        })
    }

    fn replace_at(
        &self,
        working: &Sentence,
        k: usize,
        probabilities: [f64; 2],
        cfg: &SimplificationConfig,
    ) -> (Sentence, ReplacementTrace) {
        let original = working.get(k).unwrap().to_owned();
        let word = original.to_lowercase();
        let pos = self.morphology.tag_pos(working)[k];
        let lemma = self.morphology.lemmatize(&word, pos);
        let mut trace = ReplacementTrace {
            position: k,
            original,
            pos,
            lemma: lemma.clone(),
            probabilities,
            dropped: Vec::new(),
            fetched: Vec::new(),
            complexity_filtered: Vec::new(),
            cosine_filter: CosineFilter::Empty,
            survivors: Vec::new(),
            candidates: Vec::new(),
            chosen: None,
            article_fix: None,
            error: None,
        };
        if pos == PosTag::Other {
            return (working.clone(), trace);
        }
        let lemmas = match self.synonyms.synonyms(&lemma, pos) {
            Ok(l) => l,
            Err(e) => {
                trace.error = Some(e.to_string());
                return (working.clone(), trace);
            }
        };
        let spec = self.morphology.infer_spec(&word, pos);
        for syn in lemmas {
            match self.surface_form(&syn, spec) {
                Some(surface) if surface != word && !trace.fetched.iter().any(|c| c.surface == surface) => {
                    trace.fetched.push(SynonymCandidate {
                        lemma: syn,
                        pos,
                        surface,
                    })
                }
                Some(_) => {}
                None => trace.dropped.push(syn),
            }
        }
        let surfaces: Vec<String> = trace.fetched.iter().map(|c| c.surface.clone()).collect();
        trace.complexity_filtered =
            filter_synonyms_complexity(&surfaces, self.classifier, self.model, self.thesaurus);

        trace.survivors = match cfg.mode {
            Mode::WordEmbedding => {
                let vectors = self.vectors.expect("checked in simplify");
                let lemma_of = |surface: &str| {
                    trace
                        .fetched
                        .iter()
                        .find(|c| c.surface == surface)
                        .map(|c| c.lemma.clone())
                };
                let target = vectors.get(&word).or_else(|| vectors.get(&lemma));
                let (kept, outcome) = filter_cosine_with(&trace.complexity_filtered, target, |s| {
                    vectors.get(s).or_else(|| lemma_of(s).and_then(|l| vectors.get(&l)))
                });
                trace.cosine_filter = outcome;
                kept
            }
            Mode::Transformer => {
                trace.cosine_filter = CosineFilter::NotApplicable;
                trace.complexity_filtered.clone()
            }
        };
        if trace.survivors.is_empty() {
            return (working.clone(), trace);
        }

        let built: Vec<(Sentence, Option<ArticleFix>)> = match trace
            .survivors
            .iter()
            .map(|syn| substitute(working, k, syn))
            .collect::<Result<_>>()
        {
            Ok(b) => b,
            Err(e) => {
                trace.error = Some(e.to_string());
                return (working.clone(), trace);
            }
        };
        let candidates: Vec<Sentence> = built.iter().map(|(s, _)| s.clone()).collect();
        let best = match cfg.mode {
            Mode::WordEmbedding => {
                let scores: Vec<f64> = candidates
                    .iter()
                    .map(|c| pp_score(self.model, c, cfg.phi).combined)
                    .collect();
                let best = rank_by_perplexity(self.model, &candidates, cfg.phi).map(|(i, _)| i);
                self.record_scores(&mut trace, &candidates, scores);
                best
            }
            Mode::Transformer => {
                let embedder = self.embedder.expect("checked in simplify");
                match cosine_scores(embedder, &cfg.model_id, working, &candidates) {
                    Ok(scores) => {
                        let best = scores
                            .iter()
                            .enumerate()
                            .fold(0, |b, (i, &c)| if c > scores[b] { i } else { b });
                        self.record_scores(&mut trace, &candidates, scores);
                        Ok(best)
                    }
                    Err(e) => Err(e),
                }
            }
        };
        match best {
            Ok(i) => {
                trace.chosen = Some(trace.survivors[i].clone());
                trace.article_fix = built[i].1.clone();
                (built[i].0.clone(), trace)
            }
            Err(e) => {
                trace.error = Some(e.to_string());
                (working.clone(), trace)
            }
        }
    }

    fn record_scores(&self, trace: &mut ReplacementTrace, candidates: &[Sentence], scores: Vec<f64>) {
        trace.candidates = trace
            .survivors
            .iter()
            .zip(candidates)
            .zip(scores)
            .map(|((syn, sentence), score)| CandidateScore {
                synonym: syn.clone(),
                sentence: sentence.to_string(),
                score,
            })
            .collect();
    }

    /// Single-word surface form of `lemma`, or `None` for multiword synonyms
    /// and adjectives that only compare periphrastically ("more vital").
    fn surface_form(&self, lemma: &str, spec: Option<InflectionSpec>) -> Option<String> {
        if lemma.contains(char::is_whitespace) || lemma.contains('_') {
            return None;
        }
        match spec {
            None => Some(lemma.to_owned()),
            Some(InflectionSpec::Degree(d))
                if d != Degree::Positive && !self.morphology.takes_synthetic_degree(lemma) =>
            {
                None
            }
            Some(spec) => Some(self.morphology.inflect(lemma, spec)),
        }
    }
}
