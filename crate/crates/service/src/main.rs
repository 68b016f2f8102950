use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Parser, Subcommand};
use simplex_core::complexity::{self, TrainConfig};
use simplex_core::evalmetrics::{evaluate_corpus, load_records};
use simplex_core::{BigramFactor, ComplexityClassifier, NGramModel, Thesaurus};
use simplex_service::engine::load_model;
use simplex_service::{server, ApiError, Engine, ResourceArgs, SetupError};

#[derive(Parser)]
#[command(name = "simplex", version, about = "Lexical text simplification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simplify one sentence per input line.
    Simplify {
        #[command(flatten)]
        resources: ResourceArgs,
        /// Input file; standard input when omitted or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write one JSON trace line per sentence to this file, or to stderr
        /// when no path is given.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        trace: Option<Option<PathBuf>>,
    },
    /// Score system output against references.
    Evaluate {
        #[arg(long)]
        orig: PathBuf,
        #[arg(long)]
        system: PathBuf,
        /// Reference file; repeat for several reference sets.
        #[arg(long = "refs", required = true)]
        refs: Vec<PathBuf>,
        #[arg(long, env = "SIMPLEX_CORPUS")]
        corpus: PathBuf,
        #[arg(long, env = "SIMPLEX_PHI", default_value_t = 0.0)]
        phi: f64,
    },
    /// Serve the HTTP API.
    Serve {
        #[command(flatten)]
        resources: ResourceArgs,
        #[arg(long, env = "SIMPLEX_LISTEN", default_value = "0.0.0.0:8080")]
        listen: String,
    },
    /// Train the complexity classifier from a rated lexicon.
    Train {
        #[arg(long, env = "SIMPLEX_LEXICON")]
        lexicon: PathBuf,
        #[arg(long, env = "SIMPLEX_CORPUS")]
        corpus: PathBuf,
        #[arg(long, env = "SIMPLEX_THESAURUS")]
        thesaurus: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Held-out share for the printed report.
        #[arg(long, default_value_t = 0.05)]
        test_fraction: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        epochs: usize,
    },
    /// Count a corpus once and write the binary model cache.
    BuildLm {
        #[arg(long, env = "SIMPLEX_CORPUS")]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simplify { resources, input, trace } => simplify(&resources, input, trace),
        Command::Evaluate {
            orig,
            system,
            refs,
            corpus,
            phi,
        } => evaluate(orig, system, refs, corpus, phi),
        Command::Serve { resources, listen } => serve(&resources, &listen),
        Command::Train {
            lexicon,
            corpus,
            thesaurus,
            out,
            test_fraction,
            seed,
            epochs,
        } => train(lexicon, corpus, thesaurus, out, test_fraction, seed, epochs),
        Command::BuildLm { corpus, out } => build_lm(corpus, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let code = err.downcast_ref::<SetupError>().map_or(1, SetupError::exit_code);
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}

fn simplify(resources: &ResourceArgs, input: Option<PathBuf>, trace: Option<Option<PathBuf>>) -> anyhow::Result<()> {
    let defaults = resources.defaults()?;
    let engine = Engine::load(resources, Some(defaults.mode))?;
    let reader: Box<dyn BufRead> = match input.as_deref() {
        None => Box::new(io::stdin().lock()),
        Some(p) if p.as_os_str() == "-" => Box::new(io::stdin().lock()),
        Some(p) => Box::new(BufReader::new(
            File::open(p).map_err(|e| SetupError::resource(format!("input {}", p.display()), e.into()))?,
        )),
    };
    let mut trace_out: Option<Box<dyn Write>> = match trace {
        None => None,
        Some(None) => Some(Box::new(io::stderr())),
        Some(Some(p)) => Some(Box::new(
            File::create(&p).map_err(|e| SetupError::resource(format!("trace {}", p.display()), e.into()))?,
        )),
    };
    let mut out = io::stdout().lock();
    for line in reader.lines() {
        let line = line.context("reading input")?;
        if line.trim().is_empty() {
            writeln!(out)?;
            continue;
        }
        let resp = engine.respond(&line, &defaults).map_err(|e| match e {
            ApiError::Unavailable(msg) => SetupError::resource("sentence embeddings", simplex_core::Error::Provider(msg)),
            other => SetupError::Config(other.to_string()),
        })?;
        writeln!(out, "{}", resp.simplified)?;
        if let Some(t) = trace_out.as_mut() {
            writeln!(t, "{}", serde_json::to_string(&resp)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn evaluate(orig: PathBuf, system: PathBuf, refs: Vec<PathBuf>, corpus: PathBuf, phi: f64) -> anyhow::Result<()> {
    let phi = BigramFactor::new(phi).map_err(|e| SetupError::Config(format!("--phi: {e}")))?;
    let records = load_records(&orig, &system, &refs).map_err(|e| match e {
        simplex_core::Error::Validation(msg) => SetupError::Config(msg),
        other => SetupError::resource("evaluation files", other),
    })?;
    let model = load_model(&corpus)?;
    let report = evaluate_corpus(&records, &model, phi)?;

    let mut out = io::stdout().lock();
    writeln!(out, "{:>6}  {:>8}", "record", "SARI")?;
    for (i, s) in report.sari.iter().enumerate() {
        writeln!(out, "{i:>6}  {s:>8.4}")?;
    }
    writeln!(out)?;
    writeln!(out, "{:<22}{:>12.4}", "mean SARI", report.mean_sari)?;
    writeln!(out, "{:<22}{:>12.4}", "mean PP (original)", report.mean_pp_original)?;
    writeln!(out, "{:<22}{:>12.4}", "mean PP (simplified)", report.mean_pp_simplified)?;
    writeln!(out, "{:<22}{:>11.2}%", "perplexity decrease", report.perplexity_decrease)?;
    writeln!(out)?;
    writeln!(out, "records={}", records.len())?;
    writeln!(out, "references={}", refs.len())?;
    writeln!(out, "sari={:?}", report.mean_sari)?;
    writeln!(out, "pp_original={:?}", report.mean_pp_original)?;
    writeln!(out, "pp_simplified={:?}", report.mean_pp_simplified)?;
    writeln!(out, "perplexity_decrease={:?}", report.perplexity_decrease)?;
    Ok(())
}

fn serve(resources: &ResourceArgs, listen: &str) -> anyhow::Result<()> {
    // Blocking HTTP clients inside the engine must be built, and dropped,
    // outside the async runtime.
    let engine = Arc::new(Engine::load(resources, None)?);
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .context("starting runtime")?;
    let app = server::router(Arc::clone(&engine));
    let result = runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(listen)
            .await
            .map_err(|e| SetupError::Config(format!("--listen {listen}: {e}")))?;
        println!("listening on {}", listener.local_addr()?);
        io::stdout().flush()?;
        axum::serve(listener, app)
            .with_graceful_shutdown(async {
                let _ = tokio::signal::ctrl_c().await;
            })
            .await?;
        anyhow::Ok(())
    });
    drop(runtime);
    drop(engine);
    result
}

#[allow(clippy::too_many_arguments)]
fn train(
    lexicon: PathBuf,
    corpus: PathBuf,
    thesaurus: PathBuf,
    out: PathBuf,
    test_fraction: f64,
    seed: u64,
    epochs: usize,
) -> anyhow::Result<()> {
    if !(0.0..1.0).contains(&test_fraction) {
        return Err(SetupError::Config(format!("--test-fraction must be in [0, 1), got {test_fraction}")).into());
    }
    let model = load_model(&corpus)?;
    let thesaurus = Thesaurus::load(&thesaurus)
        .map_err(|e| SetupError::resource(format!("thesaurus {}", thesaurus.display()), e))?;
    let words = complexity::load_lexicon(&lexicon)
        .map_err(|e| SetupError::resource(format!("lexicon {}", lexicon.display()), e))?;
    let data = complexity::lexicon_dataset(&words, &model, &thesaurus)?;
    let (train, test) = complexity::split(&data, test_fraction, seed);
    let cfg = TrainConfig {
        epochs,
        seed,
        ..TrainConfig::default()
    };
    let trained = ComplexityClassifier::train(&train, &cfg)?;
    trained.classifier.save(&out)?;

    println!("trained on {} words, held out {}", train.len(), test.len());
    if let Some(loss) = trained.losses.last() {
        println!("final_loss={loss:?}");
    }
    if !test.is_empty() {
        let r = complexity::classification_report(&trained.classifier, &test);
        println!("accuracy={:?}", r.accuracy);
        println!("simple_precision={:?}", r.simple.precision);
        println!("simple_recall={:?}", r.simple.recall);
        println!("complex_precision={:?}", r.complex.precision);
        println!("complex_recall={:?}", r.complex.recall);
    }
    Ok(())
}

fn build_lm(corpus: PathBuf, out: PathBuf) -> anyhow::Result<()> {
    let model = NGramModel::from_corpus_file(&corpus)
        .map_err(|e| SetupError::resource(format!("corpus {}", corpus.display()), e))?;
    model.save(&out)?;
    let bytes = fs::metadata(&out).map(|m| m.len()).unwrap_or(0);
    println!("vocabulary={} bytes={bytes}", model.vocab_size());
    Ok(())
}
