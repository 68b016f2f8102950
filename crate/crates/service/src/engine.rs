//! Resource loading and the request path shared by the CLI and HTTP server.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::{Deserialize, Serialize};
use simplex_core::complexity::{self, MLP_MAGIC};
use simplex_core::embeddings::{EmbeddingCache, Memoized};
use simplex_core::pipeline::{ReplacementTrace, TRACE_VERSION};
use simplex_core::{
    BigramFactor, ComplexityClassifier, MockEmbedder, Mode, NGramModel, Sentence, SentenceEmbedder,
    SimplificationConfig, Simplifier, SynonymSource, Thesaurus, WordVectors,
};

use crate::error::{ApiError, SetupError};
use crate::remote::{RemoteEmbedder, RemoteThesaurus};

/// Resource locations and defaults. Every flag can also come from the
/// environment.
#[derive(Args, Debug, Clone, Default)]
pub struct ResourceArgs {
    /// Corpus text (one sentence per line) or a SIMPLEX-LM1 cache.
    #[arg(long, env = "SIMPLEX_CORPUS")]
    pub corpus: Option<PathBuf>,

    /// Trained classifier (SIMPLEX-MLP1) or a word<TAB>rating lexicon to train from.
    #[arg(long, env = "SIMPLEX_LEXICON")]
    pub lexicon: Option<PathBuf>,

    /// Offline thesaurus file.
    #[arg(long, env = "SIMPLEX_THESAURUS")]
    pub thesaurus: Option<PathBuf>,

    /// Remote thesaurus base URL; synset sizes still come from --thesaurus.
    #[arg(long, env = "SIMPLEX_THESAURUS_ENDPOINT")]
    pub thesaurus_endpoint: Option<String>,

    /// Word vectors in text format (word-embedding mode).
    #[arg(long, env = "SIMPLEX_VECTORS")]
    pub vectors: Option<PathBuf>,

    /// Sentence embeddings: an http(s) base URL, a SIMPLEX-EMB1 cache file,
    /// or `mock` / `mock:<dim>`.
    #[arg(long = "embed-endpoint", env = "SIMPLEX_EMBED_ENDPOINT")]
    pub embed: Option<String>,

    /// Default mode: we | transformer.
    #[arg(long, env = "SIMPLEX_MODE", default_value = "we")]
    pub mode: String,

    /// Default bigram weight in [0, 1].
    #[arg(long, env = "SIMPLEX_PHI", default_value_t = 0.0)]
    pub phi: f64,

    /// Sentence-embedding model id.
    #[arg(long, env = "SIMPLEX_MODEL", default_value = "default")]
    pub model: String,
}

impl ResourceArgs {
    pub fn defaults(&self) -> Result<SimplificationConfig, SetupError> {
        let mode = self
            .mode
            .parse::<Mode>()
            .map_err(|e| SetupError::Config(format!("--mode: {e}")))?;
        let phi = BigramFactor::new(self.phi).map_err(|e| SetupError::Config(format!("--phi: {e}")))?;
        Ok(SimplificationConfig {
            mode,
            phi,
            model_id: self.model.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimplifyRequest {
    pub sentence: String,
    pub mode: String,
    #[serde(default)]
    pub phi: Option<f64>,
    #[serde(default)]
    pub model: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplifyResponse {
    pub simplified: String,
    pub trace: Vec<ReplacementTrace>,
    pub pp_score: f64,
    pub trace_version: u32,
}

/// Everything loaded at start-up, shared read-only across requests.
pub struct Engine {
    pub model: NGramModel,
    pub classifier: ComplexityClassifier,
    pub thesaurus: Thesaurus,
    pub remote_thesaurus: Option<RemoteThesaurus>,
    pub vectors: Option<WordVectors>,
    pub embedder: Option<Box<dyn SentenceEmbedder>>,
    pub defaults: SimplificationConfig,
}

fn required<'a>(path: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, SetupError> {
    path.as_deref()
        .ok_or_else(|| SetupError::Config(format!("--{flag} is required")))
}

pub fn load_model(path: &Path) -> Result<NGramModel, SetupError> {
    NGramModel::load(path).map_err(|e| SetupError::resource(format!("corpus {}", path.display()), e))
}

fn load_classifier(path: &Path, model: &NGramModel, thesaurus: &Thesaurus) -> Result<ComplexityClassifier, SetupError> {
    let what = || format!("lexicon {}", path.display());
    let head = fs::read(path).map_err(|e| SetupError::resource(what(), e.into()))?;
    if head.starts_with(MLP_MAGIC.as_bytes()) {
        return ComplexityClassifier::load(path).map_err(|e| SetupError::resource(what(), e));
    }
    let lexicon = complexity::load_lexicon(path).map_err(|e| SetupError::resource(what(), e))?;
    let data = complexity::lexicon_dataset(&lexicon, model, thesaurus).map_err(|e| SetupError::resource(what(), e))?;
    ComplexityClassifier::train(&data, &complexity::TrainConfig::default())
        .map(|t| t.classifier)
        .map_err(|e| SetupError::resource(what(), e))
}

fn load_embedder(source: &str) -> Result<Box<dyn SentenceEmbedder>, SetupError> {
    if source.starts_with("http://") || source.starts_with("https://") {
        return Ok(Box::new(Memoized::new(RemoteEmbedder::new(source))));
    }
    if source == "mock" {
        return Ok(Box::new(MockEmbedder::default()));
    }
    if let Some(dim) = source.strip_prefix("mock:") {
        let dim: usize = dim
            .parse()
            .ok()
            .filter(|d| *d > 0)
            .ok_or_else(|| SetupError::Config(format!("--embed-endpoint: bad mock dimension {dim:?}")))?;
        return Ok(Box::new(MockEmbedder { dim }));
    }
    EmbeddingCache::load(source)
        .map(|c| Box::new(c) as Box<dyn SentenceEmbedder>)
        .map_err(|e| SetupError::resource(format!("embedding cache {source}"), e))
}

impl Engine {
    /// Loads every configured resource. With `require` set, the resources
    /// that mode needs must be configured.
    pub fn load(args: &ResourceArgs, require: Option<Mode>) -> Result<Self, SetupError> {
        let defaults = args.defaults()?;
        let corpus = required(&args.corpus, "corpus")?;
        let lexicon = required(&args.lexicon, "lexicon")?;
        let thesaurus_path = required(&args.thesaurus, "thesaurus")?;
        match require {
            Some(Mode::WordEmbedding) if args.vectors.is_none() => {
                return Err(SetupError::Config("mode we needs --vectors".into()))
            }
            Some(Mode::Transformer) if args.embed.is_none() => {
                return Err(SetupError::Config("mode transformer needs --embed-endpoint".into()))
            }
            _ => {}
        }

        let model = load_model(corpus)?;
        let thesaurus = Thesaurus::load(thesaurus_path)
            .map_err(|e| SetupError::resource(format!("thesaurus {}", thesaurus_path.display()), e))?;
        let classifier = load_classifier(lexicon, &model, &thesaurus)?;
        let vectors = args
            .vectors
            .as_deref()
            .map(|p| WordVectors::load(p).map_err(|e| SetupError::resource(format!("vectors {}", p.display()), e)))
            .transpose()?;
        let embedder = args.embed.as_deref().map(load_embedder).transpose()?;
        Ok(Engine {
            model,
            classifier,
            thesaurus,
            remote_thesaurus: args.thesaurus_endpoint.as_deref().map(RemoteThesaurus::new),
            vectors,
            embedder,
            defaults,
        })
    }

    pub fn simplifier(&self) -> Simplifier<'_> {
        let mut s = Simplifier::new(&self.model, &self.classifier, &self.thesaurus);
        if let Some(remote) = &self.remote_thesaurus {
            s = s.with_synonyms(remote as &dyn SynonymSource);
        }
        if let Some(v) = &self.vectors {
            s = s.with_vectors(v);
        }
        if let Some(e) = &self.embedder {
            s = s.with_embedder(e.as_ref());
        }
        s
    }

    /// Turns request fields into a pipeline config, falling back to the
    /// start-up defaults.
    pub fn config(&self, mode: Option<&str>, phi: Option<f64>, model: Option<&str>) -> Result<SimplificationConfig, ApiError> {
        let mode = match mode {
            Some(m) => m.parse().map_err(|e: simplex_core::Error| ApiError::BadRequest(e.to_string()))?,
            None => self.defaults.mode,
        };
        let phi = match phi {
            Some(p) => BigramFactor::new(p).map_err(|e| ApiError::BadRequest(e.to_string()))?,
            None => self.defaults.phi,
        };
        Ok(SimplificationConfig {
            mode,
            phi,
            model_id: model.map_or_else(|| self.defaults.model_id.clone(), str::to_owned),
        })
    }

    /// Simplifies one sentence. Missing mode resources and an unreachable
    /// embedding provider are reported as unavailable.
    pub fn respond(&self, sentence: &str, cfg: &SimplificationConfig) -> Result<SimplifyResponse, ApiError> {
        let sentence = Sentence::parse(sentence).map_err(|e| ApiError::BadRequest(e.to_string()))?;
        match cfg.mode {
            Mode::WordEmbedding if self.vectors.is_none() => {
                return Err(ApiError::Unavailable("word vectors are not configured".into()))
            }
            Mode::Transformer => match &self.embedder {
                None => return Err(ApiError::Unavailable("no sentence-embedding provider is configured".into())),
                Some(e) => {
                    if let Err(err) = e.embed_one(&cfg.model_id, &sentence) {
                        return Err(ApiError::Unavailable(format!("sentence-embedding provider: {err}")));
                    }
                }
            },
            _ => {}
        }
        let result = self
            .simplifier()
            .simplify(&sentence, cfg)
            .map_err(|e| ApiError::Internal(e.to_string()))?;
        Ok(SimplifyResponse {
            simplified: result.output.to_string(),
            trace: result.traces,
            pp_score: result.pp_score.combined,
            trace_version: TRACE_VERSION,
        })
    }
}
