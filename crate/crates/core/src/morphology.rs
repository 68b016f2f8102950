//! Rule-plus-exception English morphology: POS tagging, lemmatization and
//! re-inflection of synonym lemmas into the surface form a sentence needs.
//!
//! Lemmatization proposes candidate stems from suffix rules and keeps only
//! the ones that inflect back to the input word; among those, a stem listed
//! in the tag lexicon wins. Irregular forms come from exception tables.
//!
//! Data files (tab-separated, `#` comments) live under `data/morph/`:
//!
//! | file                   | columns                                                   |
//! |------------------------|-----------------------------------------------------------|
//! | `tags.tsv`             | word, comma-separated tags (first is the default)         |
//! | `irregular_verbs.tsv`  | lemma, past, past participle, [3rd singular], [-ing form] |
//! | `irregular_nouns.tsv`  | singular, plural                                          |
//! | `irregular_degree.tsv` | positive, comparative, superlative, tag                   |
//! | `doubling.tsv`         | multi-syllable lemmas that double their final consonant   |
//! | `roundtrip.tsv`        | surface, tag, lemma (test lexicon)                        |

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::langmodel::Sentence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosTag {
    Noun,
    Verb,
    #[serde(rename = "adj")]
    Adjective,
    #[serde(rename = "adv")]
    Adverb,
    Other,
}

impl PosTag {
    pub const CONTENT: [PosTag; 4] = [PosTag::Noun, PosTag::Verb, PosTag::Adjective, PosTag::Adverb];

    pub fn as_str(self) -> &'static str {
        match self {
            PosTag::Noun => "noun",
            PosTag::Verb => "verb",
            PosTag::Adjective => "adj",
            PosTag::Adverb => "adv",
            PosTag::Other => "other",
        }
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PosTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "noun" | "n" => Ok(PosTag::Noun),
            "verb" | "v" => Ok(PosTag::Verb),
            "adj" | "adjective" | "a" => Ok(PosTag::Adjective),
            "adv" | "adverb" | "r" => Ok(PosTag::Adverb),
            "other" | "x" => Ok(PosTag::Other),
            other => Err(Error::Validation(format!("unknown part of speech {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerbForm {
    Base,
    ThirdSingular,
    PresentParticiple,
    PastParticiple,
    Past,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Number {
    Singular,
    Plural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degree {
    Positive,
    Comparative,
    Superlative,
}

/// The inflection a surface word carries relative to its lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InflectionSpec {
    Verb(VerbForm),
    Noun(Number),
    Degree(Degree),
}

impl InflectionSpec {
    fn candidates(tag: PosTag) -> &'static [InflectionSpec] {
        use InflectionSpec as S;
        match tag {
            // Base before Past so "put" stays base; participle before past so
            // regular "-ed" forms read as participles.
            PosTag::Verb => &[
                S::Verb(VerbForm::Base),
                S::Verb(VerbForm::ThirdSingular),
                S::Verb(VerbForm::PresentParticiple),
                S::Verb(VerbForm::PastParticiple),
                S::Verb(VerbForm::Past),
            ],
            PosTag::Noun => &[S::Noun(Number::Singular), S::Noun(Number::Plural)],
            PosTag::Adjective | PosTag::Adverb => &[
                S::Degree(Degree::Positive),
                S::Degree(Degree::Comparative),
                S::Degree(Degree::Superlative),
            ],
            PosTag::Other => &[],
        }
    }

    pub fn applies_to(self, tag: PosTag) -> bool {
        matches!(
            (self, tag),
            (InflectionSpec::Verb(_), PosTag::Verb)
                | (InflectionSpec::Noun(_), PosTag::Noun)
                | (InflectionSpec::Degree(_), PosTag::Adjective | PosTag::Adverb)
        )
    }
}

#[derive(Debug, Clone, Default)]
struct IrregularVerb {
    past: String,
    past_participle: String,
    third_singular: Option<String>,
    present_participle: Option<String>,
}

/// Loaded morphology tables. Immutable; every operation is a pure lookup.
#[derive(Debug, Clone, Default)]
pub struct Morphology {
    tags: HashMap<String, Vec<PosTag>>,
    verbs: HashMap<String, IrregularVerb>,
    verb_lemmas: HashMap<String, String>,
    plurals: HashMap<String, String>,
    singulars: HashMap<String, String>,
    degrees: HashMap<String, (String, String)>,
    degree_lemmas: HashMap<(String, PosTag), String>,
    doubling: HashSet<String>,
}

const TAGS: &str = include_str!("../data/morph/tags.tsv");
const IRREGULAR_VERBS: &str = include_str!("../data/morph/irregular_verbs.tsv");
const IRREGULAR_NOUNS: &str = include_str!("../data/morph/irregular_nouns.tsv");
const IRREGULAR_DEGREE: &str = include_str!("../data/morph/irregular_degree.tsv");
const DOUBLING: &str = include_str!("../data/morph/doubling.tsv");
/// Round-trip test lexicon: `surface<TAB>TAG<TAB>lemma`.
pub const ROUNDTRIP_LEXICON: &str = include_str!("../data/morph/roundtrip.tsv");

const DETERMINERS: &[&str] = &[
    "the", "a", "an", "this", "that", "these", "those", "his", "her", "its", "their", "our",
    "my", "your", "every", "each", "some", "any", "no",
];
const VERB_CUES: &[&str] = &[
    "to", "will", "would", "can", "could", "may", "might", "must", "shall", "should", "do",
    "does", "did", "i", "you", "he", "she", "it", "we", "they", "is", "are", "was", "were",
    "be", "been", "being", "has", "have", "had",
];

fn rows<'a>(text: &'a str) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split('\t').map(str::trim).collect()))
        }
    })
}

impl Morphology {
    /// Tables compiled into the binary.
    pub fn bundled() -> &'static Morphology {
        static SHARED: OnceLock<Morphology> = OnceLock::new();
        SHARED.get_or_init(|| {
            Morphology::from_sources(TAGS, IRREGULAR_VERBS, IRREGULAR_NOUNS, IRREGULAR_DEGREE, DOUBLING)
                .expect("bundled morphology tables are well-formed")
        })
    }

    /// Loads the five table files from `dir`.
    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let read = |name: &str| fs::read_to_string(dir.join(name));
        Morphology::from_sources(
            &read("tags.tsv")?,
            &read("irregular_verbs.tsv")?,
            &read("irregular_nouns.tsv")?,
            &read("irregular_degree.tsv")?,
            &read("doubling.tsv")?,
        )
    }

    pub fn from_sources(
        tags: &str,
        verbs: &str,
        nouns: &str,
        degrees: &str,
        doubling: &str,
    ) -> Result<Self> {
        let mut m = Morphology::default();
        for (line, cols) in rows(tags) {
            if cols.len() != 2 {
                return Err(Error::parse("tags.tsv", line, "expected word<TAB>tags"));
            }
            let parsed = cols[1]
                .split(',')
                .map(PosTag::from_str)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::parse("tags.tsv", line, e.to_string()))?;
            m.tags.insert(cols[0].to_lowercase(), parsed);
        }
        for (line, cols) in rows(verbs) {
            if !(3..=5).contains(&cols.len()) {
                return Err(Error::parse("irregular_verbs.tsv", line, "expected 3 to 5 columns"));
            }
            let opt = |i: usize| cols.get(i).filter(|s| !s.is_empty()).map(|s| s.to_string());
            let entry = IrregularVerb {
                past: cols[1].to_owned(),
                past_participle: cols[2].to_owned(),
                third_singular: opt(3),
                present_participle: opt(4),
            };
            let lemma = cols[0].to_owned();
            for form in [Some(entry.past.clone()), Some(entry.past_participle.clone()), entry.third_singular.clone(), entry.present_participle.clone()]
                .into_iter()
                .flatten()
            {
                m.verb_lemmas.entry(form).or_insert_with(|| lemma.clone());
            }
            m.verbs.insert(lemma, entry);
        }
        for (line, cols) in rows(nouns) {
            if cols.len() != 2 {
                return Err(Error::parse("irregular_nouns.tsv", line, "expected singular<TAB>plural"));
            }
            m.plurals.insert(cols[0].to_owned(), cols[1].to_owned());
            m.singulars.insert(cols[1].to_owned(), cols[0].to_owned());
        }
        for (line, cols) in rows(degrees) {
            if cols.len() != 4 {
                return Err(Error::parse("irregular_degree.tsv", line, "expected 4 columns"));
            }
            let tag = PosTag::from_str(cols[3])
                .map_err(|e| Error::parse("irregular_degree.tsv", line, e.to_string()))?;
            m.degrees
                .insert(cols[0].to_owned(), (cols[1].to_owned(), cols[2].to_owned()));
            for form in [cols[1], cols[2]] {
                m.degree_lemmas.insert((form.to_owned(), tag), cols[0].to_owned());
            }
        }
        for (_, cols) in rows(doubling) {
            m.doubling.insert(cols[0].to_owned());
        }
        Ok(m)
    }

    /// Tags listed for `word` in the lexicon, default first.
    pub fn lexicon_tags(&self, word: &str) -> Option<&[PosTag]> {
        self.tags.get(word).map(Vec::as_slice)
    }

    fn is_known(&self, lemma: &str, tag: PosTag) -> bool {
        self.tags.get(lemma).is_some_and(|t| t.contains(&tag))
    }

    fn is_irregular_lemma(&self, lemma: &str, tag: PosTag) -> bool {
        match tag {
            PosTag::Verb => self.verbs.contains_key(lemma),
            PosTag::Noun => self.plurals.contains_key(lemma),
            PosTag::Adjective | PosTag::Adverb => self
                .degree_lemmas
                .get(&(self.inflect(lemma, InflectionSpec::Degree(Degree::Comparative)), tag))
                .is_some_and(|l| l == lemma),
            PosTag::Other => false,
        }
    }

    /// One tag per token: lexicon entry, else a lexicon lemma reachable by
    /// lemmatization, else suffix heuristics. Ambiguous words are resolved by
    /// the preceding token.
    pub fn tag_pos(&self, sentence: &Sentence) -> Vec<PosTag> {
        let mut out: Vec<PosTag> = Vec::with_capacity(sentence.len());
        for (i, token) in sentence.tokens().iter().enumerate() {
            let word = token.to_lowercase();
            let options = self.tag_options(&word);
            let tag = if options.len() <= 1 {
                options.first().copied().unwrap_or(PosTag::Other)
            } else {
                let prev = i.checked_sub(1).map(|j| sentence.tokens()[j].to_lowercase());
                let prev_tag = out.last().copied();
                let prefer = match prev.as_deref() {
                    Some(p) if DETERMINERS.contains(&p) => Some(PosTag::Noun),
                    Some(p) if VERB_CUES.contains(&p) => Some(PosTag::Verb),
                    _ if prev_tag == Some(PosTag::Adjective) => Some(PosTag::Noun),
                    _ => None,
                };
                prefer
                    .filter(|p| options.contains(p))
                    .unwrap_or(options[0])
            };
            out.push(tag);
        }
        out
    }

    fn tag_options(&self, word: &str) -> Vec<PosTag> {
        if !word.chars().any(char::is_alphabetic) {
            return vec![PosTag::Other];
        }
        if let Some(tags) = self.tags.get(word) {
            return tags.clone();
        }
        let derived: Vec<PosTag> = PosTag::CONTENT
            .into_iter()
            .filter(|&t| {
                let lemma = self.lemmatize(word, t);
                lemma != word && (self.is_known(&lemma, t) || self.is_irregular_lemma(&lemma, t))
            })
            .collect();
        if !derived.is_empty() {
            return derived;
        }
        vec![suffix_tag(word)]
    }

    /// Base form of `word` read as `tag`. Idempotent on its own output.
    pub fn lemmatize(&self, word: &str, tag: PosTag) -> String {
        let w = word.to_lowercase();
        if tag == PosTag::Other || self.is_known(&w, tag) {
            return w;
        }
        let irregular = match tag {
            PosTag::Verb => self.verb_lemmas.get(&w),
            PosTag::Noun => self.singulars.get(&w),
            _ => self.degree_lemmas.get(&(w.clone(), tag)),
        };
        if let Some(lemma) = irregular {
            return lemma.clone();
        }
        let consistent: Vec<String> = lemma_candidates(&w, tag)
            .into_iter()
            .filter(|c| !c.is_empty() && *c != w)
            .filter(|c| {
                InflectionSpec::candidates(tag)
                    .iter()
                    .any(|&spec| self.inflect(c, spec) == w)
            })
            .collect();
        consistent
            .iter()
            .find(|c| self.is_known(c, tag))
            .or_else(|| consistent.first())
            .cloned()
            .unwrap_or(w)
    }

    /// The inflection of `word` relative to its lemma, or `None` for tags
    /// that carry no inflection (the candidate then passes through as-is).
    pub fn infer_spec(&self, word: &str, tag: PosTag) -> Option<InflectionSpec> {
        let w = word.to_lowercase();
        let lemma = self.lemmatize(&w, tag);
        let specs = InflectionSpec::candidates(tag);
        specs
            .iter()
            .copied()
            .find(|&spec| self.inflect(&lemma, spec) == w)
            .or_else(|| specs.first().map(|_| suffix_spec(&w, tag)))
    }

    /// Surface form of `lemma` under `spec`: irregular table first, then the
    /// regular spelling rules.
    pub fn inflect(&self, lemma: &str, spec: InflectionSpec) -> String {
        let out = match spec {
            InflectionSpec::Verb(form) => self.inflect_verb(lemma, form),
            InflectionSpec::Noun(Number::Singular) => lemma.to_owned(),
            InflectionSpec::Noun(Number::Plural) => match self.plurals.get(lemma) {
                Some(p) => p.clone(),
                None => sibilant_plural(lemma),
            },
            InflectionSpec::Degree(Degree::Positive) => lemma.to_owned(),
            InflectionSpec::Degree(d) => match self.degrees.get(lemma) {
                Some((cmp, sup)) => {
                    if d == Degree::Comparative {
                        cmp.clone()
                    } else {
                        sup.clone()
                    }
                }
                None => {
                    let suffix = if d == Degree::Comparative { "er" } else { "est" };
                    self.attach(lemma, suffix)
                }
            },
        };
        if out.is_empty() {
            lemma.to_owned()
        } else {
            out
        }
    }

    /// Whether `lemma` forms single-word comparatives ("bigger") rather than
    /// periphrastic ones ("more vital").
    pub fn takes_synthetic_degree(&self, lemma: &str) -> bool {
        if self.degrees.contains_key(lemma) {
            return true;
        }
        if lemma.ends_with("ly") && lemma.len() >= 6 {
            return false;
        }
        match syllables(lemma) {
            0 | 1 => true,
            2 => ["y", "le", "er", "ow"].iter().any(|s| lemma.ends_with(s)),
            _ => false,
        }
    }

    fn inflect_verb(&self, lemma: &str, form: VerbForm) -> String {
        let irregular = self.verbs.get(lemma);
        match form {
            VerbForm::Base => lemma.to_owned(),
            VerbForm::ThirdSingular => match irregular.and_then(|v| v.third_singular.clone()) {
                Some(s) => s,
                None if ends_consonant_o(lemma) => format!("{lemma}es"),
                None => sibilant_plural(lemma),
            },
            VerbForm::Past => match irregular {
                Some(v) => v.past.clone(),
                None => self.attach(lemma, "ed"),
            },
            VerbForm::PastParticiple => match irregular {
                Some(v) => v.past_participle.clone(),
                None => self.attach(lemma, "ed"),
            },
            VerbForm::PresentParticiple => match irregular.and_then(|v| v.present_participle.clone()) {
                Some(s) => s,
                None => self.attach(lemma, "ing"),
            },
        }
    }

    /// Appends a vowel-initial suffix (`ed`, `ing`, `er`, `est`) applying
    /// e-dropping, y-to-i and final-consonant doubling.
    fn attach(&self, stem: &str, suffix: &str) -> String {
        if suffix == "ing" {
            if let Some(base) = stem.strip_suffix("ie") {
                return format!("{base}ying");
            }
            if stem.len() > 2
                && stem.ends_with('e')
                && !["ee", "ye", "oe"].iter().any(|s| stem.ends_with(s))
            {
                return format!("{}ing", &stem[..stem.len() - 1]);
            }
        } else {
            if stem.ends_with('e') {
                return format!("{stem}{}", &suffix[1..]);
            }
            if ends_consonant_y(stem) {
                return format!("{}i{suffix}", &stem[..stem.len() - 1]);
            }
        }
        if self.doubles_final(stem) {
            let last = stem.chars().last().unwrap();
            return format!("{stem}{last}{suffix}");
        }
        format!("{stem}{suffix}")
    }

    fn doubles_final(&self, stem: &str) -> bool {
        self.doubling.contains(stem) || (syllables(stem) == 1 && ends_cvc(stem))
    }
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Approximate syllable count: vowel groups (y counts after a consonant),
/// minus a silent final e.
fn syllables(word: &str) -> usize {
    let chars: Vec<char> = word.chars().collect();
    let mut groups = 0;
    let mut prev_vowel = false;
    for (i, &c) in chars.iter().enumerate() {
        let vowel = is_vowel(c) || (c == 'y' && i > 0 && !prev_vowel);
        if vowel && !prev_vowel {
            groups += 1;
        }
        prev_vowel = vowel;
    }
    let n = chars.len();
    if groups > 1 && n >= 2 && chars[n - 1] == 'e' && !is_vowel(chars[n - 2]) && chars[n - 2] != 'l' {
        groups -= 1;
    }
    groups
}

fn ends_cvc(word: &str) -> bool {
    let c: Vec<char> = word.chars().collect();
    let n = c.len();
    n >= 3
        && !is_vowel(c[n - 1])
        && !matches!(c[n - 1], 'w' | 'x' | 'y')
        && is_vowel(c[n - 2])
        && !is_vowel(c[n - 3])
        && !(c[n - 3] == 'q')
}

fn ends_consonant_y(word: &str) -> bool {
    let c: Vec<char> = word.chars().collect();
    let n = c.len();
    n >= 2 && c[n - 1] == 'y' && !is_vowel(c[n - 2])
}

fn ends_consonant_o(word: &str) -> bool {
    let c: Vec<char> = word.chars().collect();
    let n = c.len();
    n >= 2 && c[n - 1] == 'o' && !is_vowel(c[n - 2])
}

fn is_sibilant(word: &str) -> bool {
    ["s", "x", "z", "ch", "sh"].iter().any(|s| word.ends_with(s))
}

fn sibilant_plural(word: &str) -> String {
    if ends_consonant_y(word) {
        format!("{}ies", &word[..word.len() - 1])
    } else if is_sibilant(word) {
        format!("{word}es")
    } else {
        format!("{word}s")
    }
}

/// Whether a bare stem left by stripping `-ed`/`-ing`/`-er` probably lost a
/// final e ("situat" -> "situate", "hop" -> "hope").
fn prefers_restored_e(stem: &str) -> bool {
    const ENDINGS: &[&str] = &["at", "ut", "iz", "yz", "v", "c", "bl", "pl", "dl", "gl", "tl", "u", "ur", "ag", "ng"];
    if ENDINGS.iter().any(|e| stem.ends_with(e)) && !stem.ends_with("ing") {
        return true;
    }
    let c: Vec<char> = stem.chars().collect();
    let n = c.len();
    if n >= 2 && matches!(c[n - 1], 's' | 'g' | 'z') && (is_vowel(c[n - 2]) || c[n - 2] == 'n' || c[n - 2] == 'r') {
        return true;
    }
    syllables(stem) == 1 && ends_cvc(stem)
}

fn strip_vowel_suffix(word: &str, suffix: &str) -> Vec<String> {
    let Some(stem) = word.strip_suffix(suffix) else {
        return Vec::new();
    };
    if stem.len() < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let c: Vec<char> = stem.chars().collect();
    let n = c.len();
    let doubled = n >= 2 && c[n - 1] == c[n - 2] && !is_vowel(c[n - 1]);
    if doubled && !matches!(c[n - 1], 's' | 'l' | 'z' | 'f') {
        out.push(stem[..stem.len() - 1].to_owned());
        out.push(stem.to_owned());
    } else if prefers_restored_e(stem) {
        out.push(format!("{stem}e"));
        out.push(stem.to_owned());
    } else {
        out.push(stem.to_owned());
        out.push(format!("{stem}e"));
    }
    if doubled && matches!(c[n - 1], 's' | 'l' | 'z' | 'f') {
        out.push(stem[..stem.len() - 1].to_owned());
    }
    out
}

fn strip_s(word: &str, tag: PosTag) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(stem) = word.strip_suffix("ies") {
        if stem.len() >= 2 {
            out.push(format!("{stem}y"));
        }
    }
    if let Some(es) = word.strip_suffix("es") {
        let s = &word[..word.len() - 1];
        let strong = ["sses", "zzes", "xes", "ches", "shes", "oes"].iter().any(|x| word.ends_with(x));
        if strong {
            out.push(es.to_owned());
            out.push(s.to_owned());
        } else {
            out.push(s.to_owned());
            out.push(es.to_owned());
        }
    } else if word.ends_with('s') && !word.ends_with("ss") {
        let protected = tag == PosTag::Noun && (word.ends_with("us") || word.ends_with("is"));
        if !protected {
            out.push(word[..word.len() - 1].to_owned());
        }
    }
    out
}

fn lemma_candidates(w: &str, tag: PosTag) -> Vec<String> {
    let mut out = Vec::new();
    match tag {
        PosTag::Noun => out.extend(strip_s(w, tag)),
        PosTag::Verb => {
            out.extend(strip_s(w, tag));
            if let Some(stem) = w.strip_suffix("ied") {
                out.push(format!("{stem}y"));
            }
            if let Some(stem) = w.strip_suffix("ying") {
                out.push(format!("{stem}ie"));
            }
            out.extend(strip_vowel_suffix(w, "ed"));
            if let Some(stem) = w.strip_suffix('d') {
                out.push(stem.to_owned());
            }
            out.extend(strip_vowel_suffix(w, "ing"));
        }
        PosTag::Adjective | PosTag::Adverb => {
            for (y, plain) in [("ier", "er"), ("iest", "est")] {
                if let Some(stem) = w.strip_suffix(y) {
                    out.push(format!("{stem}y"));
                }
                out.extend(strip_vowel_suffix(w, plain));
            }
            if let Some(stem) = w.strip_suffix('r') {
                out.push(stem.to_owned());
            }
            if let Some(stem) = w.strip_suffix("st") {
                out.push(stem.to_owned());
            }
        }
        PosTag::Other => {}
    }
    out
}

/// Fallback tag for words missing from the lexicon.
pub fn suffix_tag(word: &str) -> PosTag {
    if word.ends_with("ly") {
        PosTag::Adverb
    } else if ["ous", "al", "ive"].iter().any(|s| word.ends_with(s)) {
        PosTag::Adjective
    } else if word.ends_with("ed") || word.ends_with("ing") {
        PosTag::Verb
    } else {
        PosTag::Noun
    }
}

fn suffix_spec(word: &str, tag: PosTag) -> InflectionSpec {
    match tag {
        PosTag::Verb if word.ends_with("ing") => InflectionSpec::Verb(VerbForm::PresentParticiple),
        PosTag::Verb if word.ends_with("ed") => InflectionSpec::Verb(VerbForm::PastParticiple),
        PosTag::Verb if word.ends_with('s') => InflectionSpec::Verb(VerbForm::ThirdSingular),
        PosTag::Verb => InflectionSpec::Verb(VerbForm::Base),
        PosTag::Noun if word.ends_with('s') && !word.ends_with("ss") => InflectionSpec::Noun(Number::Plural),
        PosTag::Noun => InflectionSpec::Noun(Number::Singular),
        _ if word.ends_with("est") => InflectionSpec::Degree(Degree::Superlative),
        _ if word.ends_with("er") => InflectionSpec::Degree(Degree::Comparative),
        _ => InflectionSpec::Degree(Degree::Positive),
    }
}

/// Indefinite article agreeing with `next` ("a"/"an"), keeping the
/// capitalization of `article`. `None` if `article` is not an indefinite
/// article or already agrees.
pub fn fix_article(article: &str, next: &str) -> Option<String> {
    let lower = article.to_lowercase();
    if lower != "a" && lower != "an" {
        return None;
    }
    let wanted = match next.chars().next() {
        Some(c) if is_vowel(c.to_ascii_lowercase()) => "an",
        _ => "a",
    };
    if lower == wanted {
        return None;
    }
    Some(match_case(article, wanted))
}

/// Applies the capitalization pattern of `original` to `replacement`.
pub fn match_case(original: &str, replacement: &str) -> String {
    let mut chars = original.chars();
    let Some(first) = chars.next() else {
        return replacement.to_owned();
    };
    let all_upper = original.chars().count() > 1 && original.chars().all(|c| !c.is_lowercase());
    if all_upper {
        replacement.to_uppercase()
    } else if first.is_uppercase() {
        let mut r = replacement.chars();
        match r.next() {
            Some(f) => f.to_uppercase().chain(r).collect(),
            None => String::new(),
        }
    } else {
        replacement.to_owned()
    }
}
