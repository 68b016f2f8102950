//! Sentence perplexity under the n-gram model, and candidate selection.

use serde::{Deserialize, Serialize};

use crate::embeddings::{cosine, SentenceEmbedder};
use crate::error::{Error, Result};
use crate::langmodel::{NGramModel, Sentence};

/// Weight of the bigram perplexity in the combined score, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct BigramFactor(f64);

impl BigramFactor {
    pub const ZERO: BigramFactor = BigramFactor(0.0);

    pub fn new(phi: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&phi) {
            Ok(BigramFactor(phi))
        } else {
            Err(Error::Validation(format!("phi must lie in [0, 1], got {phi}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for BigramFactor {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        BigramFactor::new(v)
    }
}

impl From<BigramFactor> for f64 {
    fn from(b: BigramFactor) -> f64 {
        b.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerplexityScore {
    pub pp1: f64,
    pub pp2: f64,
    pub combined: f64,
}

fn lower(s: &Sentence) -> Vec<String> {
    s.tokens().iter().map(|t| t.to_lowercase()).collect()
}

/// Unigram perplexity, `2^(-(1/n) Σ log2 p(w_i))`.
pub fn pp1(m: &NGramModel, s: &Sentence) -> f64 {
    let toks = lower(s);
    let sum: f64 = toks.iter().map(|w| m.unigram_prob(w).log2()).sum();
    (-sum / toks.len() as f64).exp2()
}

/// Bigram perplexity; the first token contributes its unigram probability.
pub fn pp2(m: &NGramModel, s: &Sentence) -> f64 {
    let toks = lower(s);
    let mut sum = m.unigram_prob(&toks[0]).log2();
    for pair in toks.windows(2) {
        sum += m.bigram_prob(&pair[0], &pair[1]).log2();
    }
    (-sum / toks.len() as f64).exp2()
}

pub fn pp_score(m: &NGramModel, s: &Sentence, phi: BigramFactor) -> PerplexityScore {
    let (a, b) = (pp1(m, s), pp2(m, s));
    PerplexityScore {
        pp1: a,
        pp2: b,
        combined: (1.0 - phi.0) * a + phi.0 * b,
    }
}

fn require_candidates(candidates: &[Sentence]) -> Result<()> {
    if candidates.is_empty() {
        Err(Error::Validation("no candidates to rank".into()))
    } else {
        Ok(())
    }
}

/// Index and score of the lowest combined perplexity; earliest wins ties.
pub fn rank_by_perplexity(
    m: &NGramModel,
    candidates: &[Sentence],
    phi: BigramFactor,
) -> Result<(usize, PerplexityScore)> {
    require_candidates(candidates)?;
    let mut best: Option<(usize, PerplexityScore)> = None;
    for (i, c) in candidates.iter().enumerate() {
        let score = pp_score(m, c, phi);
        if best.is_none_or(|(_, b)| score.combined < b.combined) {
            best = Some((i, score));
        }
    }
    Ok(best.unwrap())
}

/// Index and cosine of the candidate most similar to `original`; earliest
/// wins ties. All sentences are embedded in one provider call.
pub fn rank_by_cosine(
    embedder: &dyn SentenceEmbedder,
    model_id: &str,
    original: &Sentence,
    candidates: &[Sentence],
) -> Result<(usize, f64)> {
    Ok(cosine_scores(embedder, model_id, original, candidates)?
        .into_iter()
        .enumerate()
        .fold(None, |best: Option<(usize, f64)>, (i, c)| match best {
            Some((_, b)) if c <= b => best,
            _ => Some((i, c)),
        })
        .unwrap())
}

/// Cosine of every candidate against `original`, in order.
pub fn cosine_scores(
    embedder: &dyn SentenceEmbedder,
    model_id: &str,
    original: &Sentence,
    candidates: &[Sentence],
) -> Result<Vec<f64>> {
    require_candidates(candidates)?;
    let mut batch = Vec::with_capacity(candidates.len() + 1);
    batch.push(original.clone());
    batch.extend_from_slice(candidates);
    let vectors = embedder.embed(model_id, &batch)?;
    if vectors.len() != batch.len() {
        return Err(Error::Provider(format!(
            "embedder returned {} vectors for {} sentences",
            vectors.len(),
            batch.len()
        )));
    }
    vectors[1..].iter().map(|v| cosine(&vectors[0], v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::MockEmbedder;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn s(t: &str) -> Sentence {
        Sentence::parse(t).unwrap()
    }

    fn tiny() -> NGramModel {
        NGramModel::build(&[s("the cat sat"), s("the dog sat")]).unwrap()
    }

    #[test]
    fn hand_fixtures() {
        let m = tiny();
        assert_relative_eq!(pp1(&m, &s("the cat")), 2f64.powf(1.5), max_relative = 1e-12);
        assert_relative_eq!(pp1(&m, &s("the cat")), 2.828427, epsilon = 1e-6);
        assert_relative_eq!(pp1(&m, &s("the the")), 2.0, max_relative = 1e-12);
        assert_relative_eq!(pp2(&m, &s("the cat")), 2.0, max_relative = 1e-12);
        assert_relative_eq!(pp2(&m, &s("cat sat")), 2.0, max_relative = 1e-12);
        let half = BigramFactor::new(0.5).unwrap();
        assert_relative_eq!(pp_score(&m, &s("the cat"), half).combined, 2.414214, epsilon = 1e-6);
        assert_eq!(pp_score(&m, &s("the cat"), BigramFactor::ZERO).combined, pp1(&m, &s("the cat")));
        let one = BigramFactor::new(1.0).unwrap();
        assert_eq!(pp_score(&m, &s("the cat"), one).combined, pp2(&m, &s("the cat")));
    }

    #[test]
    fn case_is_ignored_for_scoring() {
        let m = tiny();
        assert_eq!(pp1(&m, &s("The CAT")), pp1(&m, &s("the cat")));
    }

    #[test]
    fn single_token_sentences() {
        let m = NGramModel::build(&[s("a")]).unwrap();
        assert_eq!(pp1(&m, &s("a")), 1.0);
        let t = tiny();
        assert_eq!(pp1(&t, &s("dog")), pp2(&t, &s("dog")));
    }

    #[test]
    fn phi_validation() {
        assert!(BigramFactor::new(-0.1).is_err());
        assert!(BigramFactor::new(1.5).is_err());
        assert!(BigramFactor::new(f64::NAN).is_err());
        assert!(serde_json::from_str::<BigramFactor>("2.0").is_err());
    }

    #[test]
    fn perplexity_ranking() {
        let m = tiny();
        let (i, _) = rank_by_perplexity(&m, &[s("cat dog"), s("the dog")], BigramFactor::ZERO).unwrap();
        assert_eq!(i, 1);
        let (i, _) = rank_by_perplexity(&m, &[s("cat")], BigramFactor::ZERO).unwrap();
        assert_eq!(i, 0);
        let (i, _) = rank_by_perplexity(&m, &[s("the cat"), s("the cat")], BigramFactor::ZERO).unwrap();
        assert_eq!(i, 0);
        assert!(rank_by_perplexity(&m, &[], BigramFactor::ZERO).is_err());
    }

    #[test]
    fn cosine_ranking() {
        let mock = MockEmbedder::default();
        let orig = s("the old man walked slowly home");
        let cands = [
            s("the old woman walked quietly home"),
            s("the old man walked quietly home"),
            orig.clone(),
        ];
        let (i, c) = rank_by_cosine(&mock, "m", &orig, &cands).unwrap();
        assert_eq!((i, c), (2, 1.0));
        let (i, _) = rank_by_cosine(&mock, "m", &orig, &cands[..2]).unwrap();
        assert_eq!(i, 1);
        let (i, c) = rank_by_cosine(&mock, "m", &orig, &cands[..1]).unwrap();
        assert_eq!(i, 0);
        assert!(c < 1.0);
    }

    proptest! {
        #[test]
        fn combined_lies_between(
            words in prop::collection::vec(0usize..6, 1..6),
            phi in 0.0f64..=1.0,
        ) {
            let vocab = ["the", "cat", "sat", "dog", "zebra", "on"];
            let sent = Sentence::new(words.iter().map(|&i| vocab[i].to_string()).collect()).unwrap();
            let sc = pp_score(&tiny(), &sent, BigramFactor::new(phi).unwrap());
            let (lo, hi) = (sc.pp1.min(sc.pp2), sc.pp1.max(sc.pp2));
            prop_assert!(sc.combined >= lo * (1.0 - 1e-12) && sc.combined <= hi * (1.0 + 1e-12));
        }

        #[test]
        fn more_probable_token_lowers_pp1(words in prop::collection::vec(0usize..4, 1..6), k in 0usize..6) {
            let vocab = ["the", "cat", "sat", "dog"];
            let m = tiny();
            let k = k % words.len();
            let toks: Vec<String> = words.iter().map(|&i| vocab[i].to_string()).collect();
            let sent = Sentence::new(toks).unwrap();
            for alt in vocab {
                if m.unigram_prob(alt) > m.unigram_prob(sent.get(k).unwrap()) {
                    let swapped = sent.with_token(k, alt).unwrap();
                    prop_assert!(pp1(&m, &swapped) < pp1(&m, &sent));
                }
            }
        }
    }
}
