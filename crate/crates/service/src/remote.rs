//! HTTP-backed providers: sentence embeddings (`POST /embed`) and synonyms
//! (`GET /synonyms`). Both keep a session cache so repeated queries agree.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use simplex_core::embeddings::EmbeddingVector;
use simplex_core::{Error, PosTag, Result, Sentence, SentenceEmbedder, SynonymSource};

fn client() -> reqwest::blocking::Client {
    reqwest::blocking::Client::builder()
        .connect_timeout(Duration::from_secs(2))
        .timeout(Duration::from_secs(30))
        .build()
        .expect("HTTP client configuration is static")
}

fn join(base: &str, path: &str) -> String {
    format!("{}/{}", base.trim_end_matches('/'), path)
}

#[derive(Serialize)]
struct EmbedRequest<'a> {
    model: &'a str,
    sentences: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum EmbedResponse {
    Wrapped { vectors: Vec<EmbeddingVector> },
    Bare(Vec<EmbeddingVector>),
}

/// Client for a sentence-embedding endpoint. Wrap in
/// [`Memoized`](simplex_core::embeddings::Memoized) for session caching.
pub struct RemoteEmbedder {
    url: String,
    http: reqwest::blocking::Client,
}

impl RemoteEmbedder {
    pub fn new(endpoint: &str) -> Self {
        RemoteEmbedder {
            url: join(endpoint, "embed"),
            http: client(),
        }
    }
}

impl SentenceEmbedder for RemoteEmbedder {
    fn embed(&self, model: &str, sentences: &[Sentence]) -> Result<Vec<EmbeddingVector>> {
        let body = EmbedRequest {
            model,
            sentences: sentences.iter().map(Sentence::to_string).collect(),
        };
        let provider = |e: reqwest::Error| Error::Provider(format!("{}: {e}", self.url));
        let resp = self
            .http
            .post(&self.url)
            .json(&body)
            .send()
            .and_then(|r| r.error_for_status())
            .map_err(provider)?;
        let vectors = match resp.json::<EmbedResponse>().map_err(provider)? {
            EmbedResponse::Wrapped { vectors } | EmbedResponse::Bare(vectors) => vectors,
        };
        if vectors.len() != sentences.len() {
            return Err(Error::Provider(format!(
                "{} returned {} vectors for {} sentences",
                self.url,
                vectors.len(),
                sentences.len()
            )));
        }
        Ok(vectors)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SynonymResponse {
    Wrapped { synonyms: Vec<String> },
    Bare(Vec<String>),
}

/// Synonyms from a remote thesaurus. Answers are cached per `(lemma, pos)`.
pub struct RemoteThesaurus {
    url: String,
    http: reqwest::blocking::Client,
    cache: Mutex<HashMap<(String, PosTag), Vec<String>>>,
}

impl RemoteThesaurus {
    pub fn new(endpoint: &str) -> Self {
        RemoteThesaurus {
            url: join(endpoint, "synonyms"),
            http: client(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl SynonymSource for RemoteThesaurus {
    fn synonyms(&self, lemma: &str, pos: PosTag) -> Result<Vec<String>> {
        let key = (lemma.to_lowercase(), pos);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let provider = |e: reqwest::Error| Error::Provider(format!("{}: {e}", self.url));
        let resp = self
            .http
            .get(&self.url)
            .query(&[("lemma", key.0.as_str()), ("pos", pos.as_str())])
            .send()
            .and_then(|r| r.error_for_status())
            .map_err(provider)?;
        let raw = match resp.json::<SynonymResponse>().map_err(provider)? {
            SynonymResponse::Wrapped { synonyms } | SynonymResponse::Bare(synonyms) => synonyms,
        };
        let mut list: Vec<String> = Vec::new();
        for s in raw {
            let s = s.trim().to_lowercase();
            if !s.is_empty() && s != key.0 && !list.contains(&s) {
                list.push(s);
            }
        }
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(key).or_insert(list).clone())
    }
}
