//! Word vectors, sentence embedders and cosine similarity.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::langmodel::Sentence;

pub type EmbeddingVector = Vec<f64>;

pub const EMB_MAGIC: &str = "SIMPLEX-EMB1";

/// Cosine similarity clamped to `[-1, 1]`.
pub fn cosine(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return Err(Error::ZeroNorm);
    }
    Ok((dot / (na * nb)).clamp(-1.0, 1.0))
}

/// Static word vectors read from the common text format.
#[derive(Debug, Clone, Default)]
pub struct WordVectors {
    dim: usize,
    vectors: HashMap<String, EmbeddingVector>,
}

impl WordVectors {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        Self::parse(&fs::read_to_string(path)?, path)
    }

    /// One `word v1 v2 ...` per line. A leading `count dim` header is skipped.
    /// The first vector fixes the dimension.
    pub fn parse(text: &str, origin: impl AsRef<Path>) -> Result<Self> {
        let origin = origin.as_ref();
        let mut store = WordVectors::default();
        for (i, line) in text.lines().enumerate() {
            let mut parts = line.split_whitespace();
            let Some(word) = parts.next() else { continue };
            let rest: Vec<&str> = parts.collect();
            if i == 0 && rest.len() == 1 && word.parse::<usize>().is_ok() && rest[0].parse::<usize>().is_ok() {
                continue;
            }
            let fail = |msg: String| Error::parse(origin, i + 1, msg);
            let vec = rest
                .iter()
                .map(|t| match t.parse::<f64>() {
                    Ok(v) if v.is_finite() => Ok(v),
                    _ => Err(fail(format!("malformed component {t:?}"))),
                })
                .collect::<Result<EmbeddingVector>>()?;
            if vec.is_empty() {
                return Err(fail(format!("no components for {word:?}")));
            }
            if store.dim == 0 {
                store.dim = vec.len();
            } else if vec.len() != store.dim {
                return Err(fail(format!(
                    "dimension {} does not match {} from the first vector",
                    vec.len(),
                    store.dim
                )));
            }
            store.vectors.insert(word.to_owned(), vec);
        }
        if store.vectors.is_empty() {
            return Err(Error::parse(origin, 0, "no vectors found"));
        }
        Ok(store)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// `None` when the word has no vector.
    pub fn get(&self, word: &str) -> Option<&[f64]> {
        self.vectors.get(word).map(Vec::as_slice)
    }
}

/// Produces sentence embeddings for a named model.
pub trait SentenceEmbedder: Send + Sync {
    /// One vector per sentence, same order.
    fn embed(&self, model: &str, sentences: &[Sentence]) -> Result<Vec<EmbeddingVector>>;

    fn embed_one(&self, model: &str, sentence: &Sentence) -> Result<EmbeddingVector> {
        let mut v = self.embed(model, std::slice::from_ref(sentence))?;
        v.pop()
            .ok_or_else(|| Error::Provider("embedder returned no vectors".into()))
    }
}

/// Deterministic stand-in for a transformer: every token maps to a unit
/// vector derived from a hash of `(model, lowercased token)`, and a sentence
/// is the mean of its token vectors.
#[derive(Debug, Clone, Copy)]
pub struct MockEmbedder {
    pub dim: usize,
}

impl Default for MockEmbedder {
    fn default() -> Self {
        MockEmbedder { dim: 128 }
    }
}

fn fnv1a(parts: &[&[u8]]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in parts {
        for &b in *part {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        h ^= 0xff;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

impl MockEmbedder {
    pub fn token_vector(&self, model: &str, token: &str) -> EmbeddingVector {
        let seed = fnv1a(&[model.as_bytes(), token.to_lowercase().as_bytes()]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut v: EmbeddingVector = (0..self.dim).map(|_| StandardNormal.sample(&mut rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
        v
    }

    pub fn sentence_vector(&self, model: &str, sentence: &Sentence) -> EmbeddingVector {
        let mut acc = vec![0.0; self.dim];
        for token in sentence.tokens() {
            for (a, t) in acc.iter_mut().zip(self.token_vector(model, token)) {
                *a += t;
            }
        }
        let n = sentence.len() as f64;
        acc.iter_mut().for_each(|a| *a /= n);
        acc
    }
}

impl SentenceEmbedder for MockEmbedder {
    fn embed(&self, model: &str, sentences: &[Sentence]) -> Result<Vec<EmbeddingVector>> {
        Ok(sentences.iter().map(|s| self.sentence_vector(model, s)).collect())
    }
}

/// Precomputed embeddings keyed by model id and exact sentence text.
///
/// File layout: a `SIMPLEX-EMB1` line, then `model<TAB>sentence<TAB>v1 v2 ...`
/// per entry. Numbers use the shortest exact decimal form, so a saved cache
/// reloads bit-identically.
#[derive(Debug, Clone, Default)]
pub struct EmbeddingCache {
    dim: usize,
    entries: HashMap<(String, String), EmbeddingVector>,
}

impl EmbeddingCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, model: &str, sentence: &Sentence, vector: EmbeddingVector) -> Result<()> {
        if model.contains(['\t', '\n']) {
            return Err(Error::Validation("model id may not contain tabs or newlines".into()));
        }
        if vector.is_empty() || vector.iter().any(|v| !v.is_finite()) {
            return Err(Error::Validation("embedding must be non-empty and finite".into()));
        }
        if self.dim == 0 {
            self.dim = vector.len();
        } else if vector.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: vector.len(),
            });
        }
        self.entries.insert((model.to_owned(), sentence.to_string()), vector);
        Ok(())
    }

    pub fn get(&self, model: &str, sentence: &Sentence) -> Option<&[f64]> {
        self.entries
            .get(&(model.to_owned(), sentence.to_string()))
            .map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut keys: Vec<&(String, String)> = self.entries.keys().collect();
        keys.sort();
        let mut out = format!("{EMB_MAGIC}\n");
        for key in keys {
            let nums: Vec<String> = self.entries[key].iter().map(|v| format!("{v:?}")).collect();
            out.push_str(&format!("{}\t{}\t{}\n", key.0, key.1, nums.join(" ")));
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        let mut lines = text.lines().enumerate();
        if lines.next().map(|(_, l)| l) != Some(EMB_MAGIC) {
            return Err(Error::BadMagic(path.to_owned(), EMB_MAGIC));
        }
        let mut cache = EmbeddingCache::new();
        for (i, line) in lines {
            if line.is_empty() {
                continue;
            }
            let fail = |msg: String| Error::parse(path, i + 1, msg);
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(fail("expected model<TAB>sentence<TAB>vector".into()));
            }
            let sentence = Sentence::parse(cols[1]).map_err(|e| fail(e.to_string()))?;
            let vector = cols[2]
                .split_whitespace()
                .map(|t| t.parse::<f64>().map_err(|_| fail(format!("malformed component {t:?}"))))
                .collect::<Result<EmbeddingVector>>()?;
            cache
                .insert(cols[0], &sentence, vector)
                .map_err(|e| fail(e.to_string()))?;
        }
        Ok(cache)
    }
}

impl SentenceEmbedder for EmbeddingCache {
    fn embed(&self, model: &str, sentences: &[Sentence]) -> Result<Vec<EmbeddingVector>> {
        sentences
            .iter()
            .map(|s| {
                self.get(model, s).map(<[f64]>::to_vec).ok_or_else(|| Error::MissingEmbedding {
                    model: model.to_owned(),
                    sentence: s.to_string(),
                })
            })
            .collect()
    }
}

/// Session cache in front of another embedder, so repeated queries return the
/// first answer. Concurrent identical insertions are harmless.
pub struct Memoized<E> {
    inner: E,
    cache: Mutex<HashMap<(String, String), EmbeddingVector>>,
}

impl<E: SentenceEmbedder> Memoized<E> {
    pub fn new(inner: E) -> Self {
        Memoized {
            inner,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn inner(&self) -> &E {
        &self.inner
    }
}

impl<E: SentenceEmbedder> SentenceEmbedder for Memoized<E> {
    fn embed(&self, model: &str, sentences: &[Sentence]) -> Result<Vec<EmbeddingVector>> {
        let key = |s: &Sentence| (model.to_owned(), s.to_string());
        let missing: Vec<Sentence> = {
            let cache = self.cache.lock().unwrap();
            let mut seen = std::collections::HashSet::new();
            sentences
                .iter()
                .filter(|s| !cache.contains_key(&key(s)) && seen.insert(s.to_string()))
                .cloned()
                .collect()
        };
        if !missing.is_empty() {
            let fresh = self.inner.embed(model, &missing)?;
            if fresh.len() != missing.len() {
                return Err(Error::Provider(format!(
                    "embedder returned {} vectors for {} sentences",
                    fresh.len(),
                    missing.len()
                )));
            }
            let mut cache = self.cache.lock().unwrap();
            for (s, v) in missing.iter().zip(fresh) {
                cache.entry(key(s)).or_insert(v);
            }
        }
        let cache = self.cache.lock().unwrap();
        Ok(sentences.iter().map(|s| cache[&key(s)].clone()).collect())
    }
}
