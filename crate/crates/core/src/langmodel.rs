//! Unigram/bigram statistics over a tokenized corpus.
//!
//! The model backs two consumers: the word-complexity features (frequency,
//! sentence count) and sentence perplexity scoring. Probabilities follow
//! `p(w) = f_w / |V|` and `p(w | v) = f_{v,w} / f_v`; anything unseen falls
//! back to the floor `1 / (|V| * total_tokens)` so log-space scoring never
//! sees a zero.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Magic header of the binary model cache.
pub const LM_MAGIC: &[u8; 12] = b"SIMPLEX-LM1\n";

/// A non-empty sequence of whitespace-free tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Sentence {
    tokens: Vec<String>,
}

impl Sentence {
    pub fn new(tokens: Vec<String>) -> Result<Self> {
        if tokens.is_empty() {
            return Err(Error::InvalidSentence("sentence has no tokens".into()));
        }
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() {
                return Err(Error::InvalidSentence(format!("token {i} is empty")));
            }
            if t.chars().any(char::is_whitespace) {
                return Err(Error::InvalidSentence(format!(
                    "token {i} ({t:?}) contains whitespace"
                )));
            }
        }
        Ok(Sentence { tokens })
    }

    /// Splits on whitespace. Case is preserved.
    pub fn parse(text: &str) -> Result<Self> {
        Sentence::new(text.split_whitespace().map(str::to_owned).collect())
    }

    /// Splits on whitespace and lowercases, the corpus tokenization policy.
    pub fn parse_lowercase(text: &str) -> Result<Self> {
        Sentence::new(text.split_whitespace().map(str::to_lowercase).collect())
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, idx: usize) -> Option<&str> {
        self.tokens.get(idx).map(String::as_str)
    }

    /// Copy of this sentence with the token at `idx` replaced.
    pub fn with_token(&self, idx: usize, token: &str) -> Result<Self> {
        let mut tokens = self.tokens.clone();
        match tokens.get_mut(idx) {
            Some(slot) => *slot = token.to_owned(),
            None => {
                return Err(Error::Validation(format!(
                    "position {idx} out of range for a {}-token sentence",
                    self.len()
                )))
            }
        }
        Sentence::new(tokens)
    }

    pub fn lowercased(&self) -> Sentence {
        Sentence {
            tokens: self.tokens.iter().map(|t| t.to_lowercase()).collect(),
        }
    }

    pub fn into_tokens(self) -> Vec<String> {
        self.tokens
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens.join(" "))
    }
}

impl TryFrom<Vec<String>> for Sentence {
    type Error = Error;

    fn try_from(tokens: Vec<String>) -> Result<Self> {
        Sentence::new(tokens)
    }
}

impl From<Sentence> for Vec<String> {
    fn from(s: Sentence) -> Self {
        s.tokens
    }
}

/// Immutable unigram/bigram count tables.
#[derive(Debug, Clone, PartialEq)]
pub struct NGramModel {
    vocab: Vec<String>,
    index: HashMap<String, u32>,
    unigrams: Vec<u64>,
    sentence_counts: Vec<u64>,
    bigrams: HashMap<(u32, u32), u64>,
    bigram_mass: Vec<u64>,
    total_tokens: u64,
}

impl NGramModel {
    /// Tallies counts over `sentences`. Tokens are taken as given; callers
    /// lowercase beforehand. Bigrams never cross sentence boundaries.
    pub fn build(sentences: &[Sentence]) -> Result<Self> {
        if sentences.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let mut counts: HashMap<&str, (u64, u64)> = HashMap::new();
        let mut pairs: HashMap<(&str, &str), u64> = HashMap::new();
        let mut total = 0u64;
        for s in sentences {
            let mut seen: HashSet<&str> = HashSet::new();
            for t in s.tokens() {
                let entry = counts.entry(t.as_str()).or_default();
                entry.0 += 1;
                if seen.insert(t.as_str()) {
                    entry.1 += 1;
                }
                total += 1;
            }
            for w in s.tokens().windows(2) {
                *pairs.entry((w[0].as_str(), w[1].as_str())).or_default() += 1;
            }
        }

        let mut vocab: Vec<String> = counts.keys().map(|w| (*w).to_owned()).collect();
        vocab.sort();
        let index: HashMap<String, u32> = vocab
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let unigrams = vocab.iter().map(|w| counts[w.as_str()].0).collect();
        let sentence_counts = vocab.iter().map(|w| counts[w.as_str()].1).collect();
        let bigrams = pairs
            .into_iter()
            .map(|((a, b), c)| ((index[a], index[b]), c))
            .collect();

        Ok(NGramModel::assemble(vocab, index, unigrams, sentence_counts, bigrams, total))
    }

    fn assemble(
        vocab: Vec<String>,
        index: HashMap<String, u32>,
        unigrams: Vec<u64>,
        sentence_counts: Vec<u64>,
        bigrams: HashMap<(u32, u32), u64>,
        total_tokens: u64,
    ) -> Self {
        let mut bigram_mass = vec![0u64; vocab.len()];
        for (&(a, _), &c) in &bigrams {
            bigram_mass[a as usize] += c;
        }
        NGramModel {
            vocab,
            index,
            unigrams,
            sentence_counts,
            bigrams,
            bigram_mass,
            total_tokens,
        }
    }

    /// Reads a UTF-8 corpus, one sentence per line. Lines are lowercased and
    /// whitespace-split; blank lines are skipped.
    pub fn from_corpus_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path.as_ref())?;
        let sentences = corpus_sentences(&text);
        NGramModel::build(&sentences)
    }

    /// Loads either a binary model cache (detected by its magic) or a plain
    /// text corpus.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let bytes = fs::read(path)?;
        if bytes.starts_with(LM_MAGIC) {
            NGramModel::from_bytes(&bytes)
        } else {
            let text = String::from_utf8(bytes)
                .map_err(|e| Error::parse(path, 0, format!("corpus is not UTF-8: {e}")))?;
            NGramModel::build(&corpus_sentences(&text))
        }
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_bytes())?;
        Ok(())
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab.len()
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.vocab.iter().map(String::as_str)
    }

    pub fn contains(&self, w: &str) -> bool {
        self.index.contains_key(w)
    }

    pub fn unigram_count(&self, w: &str) -> u64 {
        self.index.get(w).map_or(0, |&i| self.unigrams[i as usize])
    }

    pub fn bigram_count(&self, v: &str, w: &str) -> u64 {
        match (self.index.get(v), self.index.get(w)) {
            (Some(&a), Some(&b)) => self.bigrams.get(&(a, b)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Number of bigram occurrences starting with `v`.
    pub fn bigram_mass(&self, v: &str) -> u64 {
        self.index.get(v).map_or(0, |&i| self.bigram_mass[i as usize])
    }

    /// Observed bigram successors of `v` with their counts.
    pub fn successors<'a>(&'a self, v: &str) -> Vec<(&'a str, u64)> {
        let Some(&a) = self.index.get(v) else {
            return Vec::new();
        };
        let mut out: Vec<(&str, u64)> = self
            .bigrams
            .iter()
            .filter(|((x, _), _)| *x == a)
            .map(|(&(_, b), &c)| (self.vocab[b as usize].as_str(), c))
            .collect();
        out.sort();
        out
    }

    /// Probability assigned to unseen unigrams and bigrams.
    pub fn floor(&self) -> f64 {
        1.0 / (self.vocab.len() as f64 * self.total_tokens as f64)
    }

    /// `f_w / |V|`, or the floor for unseen words. Not a distribution: the
    /// values do not sum to one over the vocabulary.
    pub fn unigram_prob(&self, w: &str) -> f64 {
        match self.unigram_count(w) {
            0 => self.floor(),
            f => f as f64 / self.vocab.len() as f64,
        }
    }

    /// `f_{v,w} / f_v`, or the floor when either count is zero.
    pub fn bigram_prob(&self, v: &str, w: &str) -> f64 {
        let fv = self.unigram_count(v);
        let fvw = self.bigram_count(v, w);
        if fv == 0 || fvw == 0 {
            self.floor()
        } else {
            fvw as f64 / fv as f64
        }
    }

    /// `(occurrences, sentence_count)`; `(0, 0)` out of vocabulary.
    pub fn word_stats(&self, w: &str) -> (u64, u64) {
        self.index.get(w).map_or((0, 0), |&i| {
            (self.unigrams[i as usize], self.sentence_counts[i as usize])
        })
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(64 + self.vocab.len() * 24);
        out.extend_from_slice(LM_MAGIC);
        out.extend_from_slice(&self.total_tokens.to_le_bytes());
        out.extend_from_slice(&(self.vocab.len() as u32).to_le_bytes());
        for (i, w) in self.vocab.iter().enumerate() {
            out.extend_from_slice(&(w.len() as u32).to_le_bytes());
            out.extend_from_slice(w.as_bytes());
            out.extend_from_slice(&self.unigrams[i].to_le_bytes());
            out.extend_from_slice(&self.sentence_counts[i].to_le_bytes());
        }
        let mut pairs: Vec<_> = self.bigrams.iter().collect();
        pairs.sort();
        out.extend_from_slice(&(pairs.len() as u64).to_le_bytes());
        for (&(a, b), &c) in pairs {
            out.extend_from_slice(&a.to_le_bytes());
            out.extend_from_slice(&b.to_le_bytes());
            out.extend_from_slice(&c.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let corrupt = |message: &str| Error::Corrupt {
            kind: "language model",
            message: message.to_owned(),
        };
        let mut r = ByteReader::new(bytes);
        if r.take(LM_MAGIC.len()).ok_or_else(|| corrupt("truncated header"))? != LM_MAGIC {
            return Err(corrupt("bad magic"));
        }
        let total_tokens = r.u64().ok_or_else(|| corrupt("truncated total"))?;
        let n = r.u32().ok_or_else(|| corrupt("truncated vocab size"))? as usize;
        let mut vocab = Vec::with_capacity(n);
        let mut unigrams = Vec::with_capacity(n);
        let mut sentence_counts = Vec::with_capacity(n);
        for _ in 0..n {
            let len = r.u32().ok_or_else(|| corrupt("truncated word"))? as usize;
            let raw = r.take(len).ok_or_else(|| corrupt("truncated word"))?;
            let w = std::str::from_utf8(raw).map_err(|_| corrupt("word is not UTF-8"))?;
            vocab.push(w.to_owned());
            unigrams.push(r.u64().ok_or_else(|| corrupt("truncated count"))?);
            sentence_counts.push(r.u64().ok_or_else(|| corrupt("truncated count"))?);
        }
        let m = r.u64().ok_or_else(|| corrupt("truncated bigram count"))? as usize;
        let mut bigrams = HashMap::with_capacity(m);
        for _ in 0..m {
            let a = r.u32().ok_or_else(|| corrupt("truncated bigram"))?;
            let b = r.u32().ok_or_else(|| corrupt("truncated bigram"))?;
            let c = r.u64().ok_or_else(|| corrupt("truncated bigram"))?;
            if a as usize >= n || b as usize >= n {
                return Err(corrupt("bigram index out of range"));
            }
            bigrams.insert((a, b), c);
        }
        if !r.is_empty() {
            return Err(corrupt("trailing bytes"));
        }
        if n == 0 {
            return Err(corrupt("empty vocabulary"));
        }
        if unigrams.iter().sum::<u64>() != total_tokens {
            return Err(corrupt("unigram counts do not sum to the token total"));
        }
        let index: HashMap<String, u32> = vocab
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        if index.len() != n {
            return Err(corrupt("duplicate vocabulary entry"));
        }
        Ok(NGramModel::assemble(vocab, index, unigrams, sentence_counts, bigrams, total_tokens))
    }
}

/// Splits corpus text into lowercased sentences, one per non-blank line.
pub fn corpus_sentences(text: &str) -> Vec<Sentence> {
    text.lines()
        .filter_map(|line| Sentence::parse_lowercase(line).ok())
        .collect()
}

struct ByteReader<'a> {
    buf: &'a [u8],
}

impl<'a> ByteReader<'a> {
    fn new(buf: &'a [u8]) -> Self {
        ByteReader { buf }
    }

    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        if self.buf.len() < n {
            return None;
        }
        let (head, tail) = self.buf.split_at(n);
        self.buf = tail;
        Some(head)
    }

    fn u32(&mut self) -> Option<u32> {
        self.take(4).map(|b| u32::from_le_bytes(b.try_into().unwrap()))
    }

    fn u64(&mut self) -> Option<u64> {
        self.take(8).map(|b| u64::from_le_bytes(b.try_into().unwrap()))
    }

    fn is_empty(&self) -> bool {
        self.buf.is_empty()
    }
}
