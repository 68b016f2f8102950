//! Synonym lookup and synset sizes.
//!
//! File format, one record per line:
//! `lemma<TAB>pos<TAB>sense_count<TAB>syn1,syn2,...`

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::morphology::PosTag;

/// Anything that can answer "synonyms of this lemma with this POS".
pub trait SynonymSource: Send + Sync {
    fn synonyms(&self, lemma: &str, pos: PosTag) -> Result<Vec<String>>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThesaurusEntry {
    pub lemma: String,
    pub pos: PosTag,
    pub synonyms: Vec<String>,
}

/// Offline thesaurus loaded from a file. Immutable after load.
#[derive(Debug, Clone, Default)]
pub struct Thesaurus {
    entries: HashMap<(String, PosTag), Vec<String>>,
    senses: HashMap<String, u32>,
}

impl Thesaurus {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        Self::parse(&fs::read_to_string(path)?, path)
    }

    /// Parses thesaurus text; `origin` only labels error messages. Repeated
    /// `(lemma, pos)` records are merged.
    pub fn parse(text: &str, origin: impl AsRef<Path>) -> Result<Self> {
        let origin = origin.as_ref();
        let mut th = Thesaurus::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fail = |msg: String| Error::parse(origin, i + 1, msg);
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 4 {
                return Err(fail(format!("expected 4 tab-separated fields, found {}", cols.len())));
            }
            let lemma = cols[0].trim().to_lowercase();
            if lemma.is_empty() {
                return Err(fail("empty lemma".into()));
            }
            let pos: PosTag = cols[1].parse().map_err(|e: Error| fail(e.to_string()))?;
            let senses: u32 = cols[2]
                .trim()
                .parse()
                .map_err(|_| fail(format!("bad sense count {:?}", cols[2])))?;
            *th.senses.entry(lemma.clone()).or_default() += senses;

            let list = th.entries.entry((lemma.clone(), pos)).or_default();
            for syn in cols[3].split(',') {
                let syn = syn.trim().to_lowercase();
                if !syn.is_empty() && syn != lemma && !list.contains(&syn) {
                    list.push(syn);
                }
            }
        }
        th.entries.retain(|_, v| !v.is_empty());
        Ok(th)
    }

    /// Synonyms of `lemma` under `pos`, in file order; empty when unknown.
    pub fn lookup(&self, lemma: &str, pos: PosTag) -> &[String] {
        self.entries
            .get(&(lemma.to_lowercase(), pos))
            .map_or(&[], Vec::as_slice)
    }

    pub fn entry(&self, lemma: &str, pos: PosTag) -> Option<ThesaurusEntry> {
        let synonyms = self.lookup(lemma, pos);
        (!synonyms.is_empty()).then(|| ThesaurusEntry {
            lemma: lemma.to_lowercase(),
            pos,
            synonyms: synonyms.to_vec(),
        })
    }

    /// Sense groups recorded for `word` summed over every POS.
    pub fn synset_size(&self, word: &str) -> u32 {
        self.senses.get(&word.to_lowercase()).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl SynonymSource for Thesaurus {
    fn synonyms(&self, lemma: &str, pos: PosTag) -> Result<Vec<String>> {
        Ok(self.lookup(lemma, pos).to_vec())
    }
}
