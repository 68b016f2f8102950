//! Acceptance suite. Prints one PASS / FAIL / SKIP line per criterion and
//! exits non-zero if anything failed.
//!
//! The dataset criterion needs external resources:
//! `SIMPLEX_ACCEPT_LEXICON` (word<TAB>rating, ratings 1..6) and
//! `SIMPLEX_ACCEPT_CORPUS` (at least 50k sentences, one per line), plus an
//! optional `SIMPLEX_ACCEPT_THESAURUS`. Without them it is skipped.

use std::collections::HashMap;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::process::{Child, Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simplex_core::complexity::{
    classification_report, lexicon_dataset, load_lexicon, split, ComplexityClassifier, Scaler, TrainConfig,
    N_FEATURES, N_PARAMS,
};
use simplex_core::evalmetrics::{perplexity_decrease, sari};
use simplex_core::ranking::{pp1, pp2, pp_score};
use simplex_core::{
    BigramFactor, Label, MockEmbedder, Mode, NGramModel, Sentence, SimplificationConfig, Simplifier, Thesaurus,
    WordFeatures, WordVectors,
};

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

use Outcome::{Fail, Pass, Skip};

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Pass(detail)
    } else {
        Fail(detail)
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/fixtures").join(name)
}

fn s(text: &str) -> Sentence {
    Sentence::parse(text).unwrap()
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

// ---------------------------------------------------------------- perplexity

/// Counts and probabilities straight from the definition, scored as a
/// product of probabilities rather than a sum of logs.
struct CountOracle {
    uni: HashMap<String, f64>,
    bi: HashMap<(String, String), f64>,
    vocab: f64,
    total: f64,
}

impl CountOracle {
    fn new(corpus: &[Vec<String>]) -> Self {
        let mut uni = HashMap::new();
        let mut bi = HashMap::new();
        let mut total = 0.0;
        for sent in corpus {
            for (i, w) in sent.iter().enumerate() {
                *uni.entry(w.clone()).or_insert(0.0) += 1.0;
                total += 1.0;
                if i > 0 {
                    *bi.entry((sent[i - 1].clone(), w.clone())).or_insert(0.0) += 1.0;
                }
            }
        }
        let vocab = uni.len() as f64;
        CountOracle { uni, bi, vocab, total }
    }

    fn floor(&self) -> f64 {
        1.0 / (self.vocab * self.total)
    }

    fn p1(&self, w: &str) -> f64 {
        self.uni.get(w).map_or(self.floor(), |f| f / self.vocab)
    }

    fn p2(&self, v: &str, w: &str) -> f64 {
        match (self.uni.get(v), self.bi.get(&(v.to_string(), w.to_string()))) {
            (Some(fv), Some(fvw)) => fvw / fv,
            _ => self.floor(),
        }
    }

    fn pp1(&self, toks: &[String]) -> f64 {
        let prod: f64 = toks.iter().map(|w| self.p1(w)).product();
        prod.powf(-1.0 / toks.len() as f64)
    }

    fn pp2(&self, toks: &[String]) -> f64 {
        let mut prod = self.p1(&toks[0]);
        for i in 1..toks.len() {
            prod *= self.p2(&toks[i - 1], &toks[i]);
        }
        prod.powf(-1.0 / toks.len() as f64)
    }
}

fn random_tokens(rng: &mut ChaCha8Rng, vocab: usize, max_len: usize) -> Vec<String> {
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| format!("w{}", rng.gen_range(0..vocab))).collect()
}

fn perplexity_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let vocab = rng.gen_range(1..=10);
        let corpus: Vec<Vec<String>> = (0..rng.gen_range(1..=5)).map(|_| random_tokens(&mut rng, vocab, 6)).collect();
        let sentences: Vec<Sentence> = corpus.iter().map(|t| Sentence::new(t.clone()).unwrap()).collect();
        let model = NGramModel::build(&sentences).unwrap();
        let oracle = CountOracle::new(&corpus);
        // one extra symbol so some queries fall outside the vocabulary
        let query = random_tokens(&mut rng, vocab + 1, 6);
        let sent = Sentence::new(query.clone()).unwrap();
        let phi = rng.gen_range(0.0..=1.0);
        let score = pp_score(&model, &sent, BigramFactor::new(phi).unwrap());
        let (o1, o2) = (oracle.pp1(&query), oracle.pp2(&query));
        worst = worst
            .max(rel_err(score.pp1, o1))
            .max(rel_err(score.pp2, o2))
            .max(rel_err(score.combined, (1.0 - phi) * o1 + phi * o2));
    }
    let elapsed = start.elapsed();
    check(
        worst < 1e-9 && elapsed < Duration::from_secs(5),
        format!("1000 pairs, max rel err {worst:.2e}, {:.2}s", elapsed.as_secs_f64()),
    )
}

fn hand_fixtures() -> Outcome {
    let m = NGramModel::build(&[s("the cat sat"), s("the dog sat")]).unwrap();
    let x = s("the cat");
    let a = pp1(&m, &x);
    let b = pp2(&m, &x);
    let c = pp_score(&m, &x, BigramFactor::new(0.5).unwrap()).combined;
    let ok = (a - 2.828427).abs() < 1e-6 && (b - 2.0).abs() < 1e-6 && (c - 2.414214).abs() < 1e-6;
    check(ok, format!("pp1 {a:.6}, pp2 {b:.6}, pp_score(0.5) {c:.6}"))
}

// ---------------------------------------------------------------- classifier

fn gradient_check() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for b in 0..20u64 {
        let clf = ComplexityClassifier::random(500 + b, Scaler::identity());
        let size = rng.gen_range(1..=32);
        let batch: Vec<([f64; N_FEATURES], Label)> = (0..size)
            .map(|_| {
                let x = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
                (x, if rng.gen_bool(0.5) { Label::Simple } else { Label::Complex })
            })
            .collect();
        let (_, analytic) = clf.loss_and_gradient(&batch);
        let base = clf.params();
        let mut probe = clf.clone();
        for p in 0..N_PARAMS {
            let mut up = base;
            up[p] += h;
            probe.set_params(&up);
            let plus = probe.loss(&batch);
            let mut down = base;
            down[p] -= h;
            probe.set_params(&down);
            let minus = probe.loss(&batch);
            let numeric = (plus - minus) / (2.0 * h);
            let denom = analytic[p].abs().max(numeric.abs()).max(1e-8);
            worst = worst.max((analytic[p] - numeric).abs() / denom);
        }
    }
    let elapsed = start.elapsed();
    check(
        worst < 1e-4 && elapsed < Duration::from_secs(10),
        format!("20 batches, max rel err {worst:.2e}, {:.2}s", elapsed.as_secs_f64()),
    )
}

fn synthetic_accuracy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let data: Vec<(WordFeatures, Label)> = (0..500)
        .map(|_| {
            let x: [f64; N_FEATURES] = std::array::from_fn(|_| rng.gen_range(0.0..1.0));
            let label = if x[0] + x[2] > 1.0 { Label::Simple } else { Label::Complex };
            (WordFeatures(x), label)
        })
        .collect();
    let (train, test) = split(&data, 0.2, 11);
    let cfg = TrainConfig::default();
    let trained = match ComplexityClassifier::train(&train, &cfg) {
        Ok(t) => t,
        Err(e) => return Fail(e.to_string()),
    };
    let acc = classification_report(&trained.classifier, &test).accuracy;
    check(acc >= 0.95, format!("held-out accuracy {acc:.3} after {} epochs", cfg.epochs))
}

fn dataset_precision() -> Outcome {
    let (Ok(lexicon), Ok(corpus)) = (std::env::var("SIMPLEX_ACCEPT_LEXICON"), std::env::var("SIMPLEX_ACCEPT_CORPUS"))
    else {
        return Skip("set SIMPLEX_ACCEPT_LEXICON and SIMPLEX_ACCEPT_CORPUS to run".into());
    };
    let lines = std::fs::read_to_string(&corpus).map(|t| t.lines().filter(|l| !l.trim().is_empty()).count());
    match lines {
        Ok(n) if n >= 50_000 => {}
        Ok(n) => return Skip(format!("corpus has {n} sentences, need 50000")),
        Err(e) => return Fail(format!("{corpus}: {e}")),
    }
    let thesaurus = match std::env::var("SIMPLEX_ACCEPT_THESAURUS") {
        Ok(p) => Thesaurus::load(p),
        Err(_) => Thesaurus::load(fixture("thesaurus.tsv")),
    };
    let run = || -> simplex_core::Result<(f64, f64)> {
        let model = NGramModel::load(&corpus)?;
        let words = load_lexicon(&lexicon)?;
        let data = lexicon_dataset(&words, &model, &thesaurus?)?;
        let (train, test) = split(&data, 0.05, 42);
        let trained = ComplexityClassifier::train(&train, &TrainConfig::default())?;
        let r = classification_report(&trained.classifier, &test);
        Ok((r.simple.precision, r.complex.precision))
    };
    match run() {
        Ok((ps, pc)) => check(
            (ps - 0.79).abs() <= 0.10 && (pc - 0.69).abs() <= 0.10,
            format!("simple precision {ps:.3} (0.79 +/- 0.10), complex precision {pc:.3} (0.69 +/- 0.10)"),
        ),
        Err(e) => Fail(e.to_string()),
    }
}

// ---------------------------------------------------------------- SARI

/// Brute force over n-gram lists with linear membership tests.
fn sari_oracle(input: &[String], output: &[String], refs: &[Vec<String>]) -> f64 {
    fn grams(t: &[String], n: usize) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = Vec::new();
        if t.len() >= n {
            for i in 0..=t.len() - n {
                let g = t[i..i + n].to_vec();
                if !out.contains(&g) {
                    out.push(g);
                }
            }
        }
        out
    }
    fn score(sys: &[Vec<String>], reference: &[Vec<String>], f1: bool) -> f64 {
        if sys.is_empty() || reference.is_empty() {
            return if sys.is_empty() && reference.is_empty() { 1.0 } else { 0.0 };
        }
        let hit = sys.iter().filter(|g| reference.contains(g)).count() as f64;
        let p = hit / sys.len() as f64;
        if !f1 {
            return p;
        }
        let r = hit / reference.len() as f64;
        if hit == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }
    let longest = refs.iter().map(Vec::len).chain([input.len(), output.len()]).max().unwrap();
    let orders = longest.min(4);
    let mut total = 0.0;
    for n in 1..=orders {
        let i = grams(input, n);
        let o = grams(output, n);
        let rs: Vec<Vec<Vec<String>>> = refs.iter().map(|r| grams(r, n)).collect();
        let mut any_ref = Vec::new();
        for r in &rs {
            for g in r {
                if !any_ref.contains(g) {
                    any_ref.push(g.clone());
                }
            }
        }
        let in_all = |g: &Vec<String>| rs.iter().all(|r| r.contains(g));
        let add_sys: Vec<_> = o.iter().filter(|g| !i.contains(g)).cloned().collect();
        let add_ref: Vec<_> = any_ref.iter().filter(|g| !i.contains(g)).cloned().collect();
        let keep_sys: Vec<_> = o.iter().filter(|g| i.contains(g)).cloned().collect();
        let keep_ref: Vec<_> = i.iter().filter(|g| in_all(g)).cloned().collect();
        let del_sys: Vec<_> = i.iter().filter(|g| !o.contains(g)).cloned().collect();
        let del_ref: Vec<_> = i.iter().filter(|g| !any_ref.contains(g)).cloned().collect();
        total += score(&add_sys, &add_ref, true) + score(&keep_sys, &keep_ref, true) + score(&del_sys, &del_ref, false);
    }
    total / (3 * orders) as f64
}

fn sari_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let input = random_tokens(&mut rng, 5, 6);
        let output = random_tokens(&mut rng, 5, 6);
        let refs: Vec<Vec<String>> = (0..rng.gen_range(1..=3)).map(|_| random_tokens(&mut rng, 5, 6)).collect();
        let to_s = |t: &Vec<String>| Sentence::new(t.clone()).unwrap();
        let got = match sari(&to_s(&input), &to_s(&output), &refs.iter().map(to_s).collect::<Vec<_>>()) {
            Ok(v) => v,
            Err(e) => return Fail(e.to_string()),
        };
        worst = worst.max((got - sari_oracle(&input, &output, &refs)).abs());
    }
    let x = s("oregano is an indispensable ingredient in greek cuisine .");
    let identity = sari(&x, &x, std::slice::from_ref(&x)).unwrap();
    check(
        worst < 1e-9 && identity == 1.0,
        format!("50 triples, max abs diff {worst:.2e}; identity triple {identity}"),
    )
}

// ---------------------------------------------------------------- pipeline

/// Rare thesaurus words, some inflected, spliced into corpus sentences so
/// the replacement path is exercised.
const INJECTED: &[&str] = &[
    "purchased", "utilize", "physicians", "residence", "commenced", "numerous", "enormous", "rapidly",
    "sufficient", "obtains", "demonstrate", "individual", "vehicles", "indispensable", "terminated",
];

const OREGANO: &str = "Oregano is an indispensable ingredient in Greek cuisine .";

struct Fixtures {
    model: NGramModel,
    classifier: ComplexityClassifier,
    thesaurus: Thesaurus,
    vectors: WordVectors,
}

fn load_fixtures() -> Fixtures {
    Fixtures {
        model: NGramModel::from_corpus_file(fixture("corpus.txt")).unwrap(),
        classifier: ComplexityClassifier::load(fixture("classifier.mlp")).unwrap(),
        thesaurus: Thesaurus::load(fixture("thesaurus.tsv")).unwrap(),
        vectors: WordVectors::load(fixture("vectors.txt")).unwrap(),
    }
}

fn corpus_lines() -> Vec<String> {
    std::fs::read_to_string(fixture("corpus.txt"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(str::to_owned)
        .collect()
}

fn transformer_cfg() -> SimplificationConfig {
    SimplificationConfig {
        mode: Mode::Transformer,
        model_id: "mock".into(),
        ..SimplificationConfig::default()
    }
}

fn pipeline_properties(fx: &Fixtures) -> Outcome {
    let mock = MockEmbedder::default();
    let simp = Simplifier::new(&fx.model, &fx.classifier, &fx.thesaurus)
        .with_vectors(&fx.vectors)
        .with_embedder(&mock);
    let lines = corpus_lines();
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let mut replaced = 0;
    for case in 0..100 {
        let mut toks: Vec<String> = lines.choose(&mut rng).unwrap().split_whitespace().map(String::from).collect();
        if toks.len() > 2 && rng.gen_bool(0.5) {
            let k = rng.gen_range(0..toks.len() - 1);
            toks.swap(k, k + 1);
        }
        if rng.gen_bool(0.6) {
            let k = rng.gen_range(0..toks.len());
            toks[k] = INJECTED.choose(&mut rng).unwrap().to_string();
        }
        if rng.gen_bool(0.3) {
            let mut chars = toks[0].chars();
            let first = chars.next().unwrap();
            toks[0] = first.to_uppercase().chain(chars).collect();
        }
        let input = Sentence::new(toks).unwrap();
        let cfg = if case % 2 == 0 { SimplificationConfig::default() } else { transformer_cfg() };
        let result = match simp.simplify(&input, &cfg) {
            Ok(r) => r,
            Err(e) => return Fail(format!("case {case}: {e}")),
        };
        if result.output.len() != input.len() {
            return Fail(format!("case {case}: token count changed for {input}"));
        }
        let touched: Vec<usize> = result
            .traces
            .iter()
            .filter(|t| t.chosen.is_some())
            .map(|t| t.position)
            .chain(result.traces.iter().filter_map(|t| t.article_fix.as_ref().map(|f| f.position)))
            .collect();
        for (k, (a, b)) in input.tokens().iter().zip(result.output.tokens()).enumerate() {
            if a != b && !touched.contains(&k) {
                return Fail(format!("case {case}: position {k} changed without a trace in {input}"));
            }
        }
        if let Some(t) = result.traces.iter().find(|t| !t.is_subset_chain()) {
            return Fail(format!("case {case}: trace at {} is not a subset chain", t.position));
        }
        match simp.simplify(&input, &cfg) {
            Ok(again) if again == result => {}
            _ => return Fail(format!("case {case}: second run differs for {input}")),
        }
        replaced += result.traces.iter().filter(|t| t.chosen.is_some()).count();
    }

    let we = Simplifier::new(&fx.model, &fx.classifier, &fx.thesaurus).with_vectors(&fx.vectors);
    let originals: Vec<Sentence> = lines.iter().map(|l| s(l)).collect();
    let mut simplified = Vec::new();
    for o in &originals {
        match we.simplify(o, &SimplificationConfig::default()) {
            Ok(r) => simplified.push(r.output),
            Err(e) => return Fail(e.to_string()),
        }
    }
    let pd = perplexity_decrease(&fx.model, &originals, &simplified, BigramFactor::ZERO).unwrap();
    check(
        pd > 0.0,
        format!("100 sentences, {replaced} replacements; corpus perplexity decrease {pd:.3}%"),
    )
}

fn oregano_sentence(fx: &Fixtures) -> Outcome {
    let input = s(OREGANO);
    let we = Simplifier::new(&fx.model, &fx.classifier, &fx.thesaurus).with_vectors(&fx.vectors);
    let out = match we.simplify(&input, &SimplificationConfig::default()) {
        Ok(r) => r.output,
        Err(e) => return Fail(e.to_string()),
    };
    let replaced = !out.tokens().iter().any(|t| t == "indispensable");

    let mock = MockEmbedder::default();
    let tr = Simplifier::new(&fx.model, &fx.classifier, &fx.thesaurus).with_embedder(&mock);
    let a = tr.simplify(&input, &transformer_cfg());
    let b = tr.simplify(&input, &transformer_cfg());
    let identical = match (&a, &b) {
        (Ok(a), Ok(b)) => {
            a == b && a.pp_score.combined.to_bits() == b.pp_score.combined.to_bits()
        }
        _ => false,
    };
    check(
        replaced && out.len() == input.len() && identical,
        format!("\"{out}\"; transformer mock runs identical: {identical}"),
    )
}

// ---------------------------------------------------------------- service

struct Server(Child);

impl Drop for Server {
    fn drop(&mut self) {
        let _ = self.0.kill();
        let _ = self.0.wait();
    }
}

fn resource_args() -> Vec<String> {
    [
        ("--corpus", "corpus.txt"),
        ("--lexicon", "classifier.mlp"),
        ("--thesaurus", "thesaurus.tsv"),
        ("--vectors", "vectors.txt"),
    ]
    .iter()
    .flat_map(|(flag, file)| [flag.to_string(), fixture(file).display().to_string()])
    .collect()
}

fn service_contract() -> Outcome {
    match run_service_contract() {
        Ok(o) => o,
        Err(e) => Fail(format!("{e:#}")),
    }
}

fn run_service_contract() -> anyhow::Result<Outcome> {
    let bin = env!("CARGO_BIN_EXE_simplex");
    let dir = tempfile::tempdir()?;
    let sentences: Vec<String> = corpus_lines().into_iter().step_by(3).take(19).chain([OREGANO.to_string()]).collect();
    let input = dir.path().join("input.txt");
    let trace = dir.path().join("trace.jsonl");
    std::fs::write(&input, sentences.join("\n") + "\n")?;

    let status = Command::new(bin)
        .arg("simplify")
        .args(resource_args())
        .args(["--mode", "we", "--phi", "0.0", "--input"])
        .arg(&input)
        .arg("--trace")
        .arg(&trace)
        .stdout(Stdio::null())
        .status()?;
    if !status.success() {
        return Ok(Fail(format!("cli simplify exited with {status}")));
    }
    let cli_lines: Vec<String> = std::fs::read_to_string(&trace)?.lines().map(String::from).collect();

    let mut child = Command::new(bin)
        .arg("serve")
        .args(resource_args())
        .args(["--embed-endpoint", "http://127.0.0.1:1", "--listen", "127.0.0.1:0"])
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()?;
    let stdout = child.stdout.take().unwrap();
    let _server = Server(child);
    let mut first = String::new();
    BufReader::new(stdout).read_line(&mut first)?;
    let addr = first
        .trim()
        .strip_prefix("listening on ")
        .ok_or_else(|| anyhow::anyhow!("unexpected server banner {first:?}"))?
        .to_string();
    let base = format!("http://{addr}");
    let http = reqwest::blocking::Client::new();

    let health = http.get(format!("{base}/health")).send()?;
    let health_ok = health.status() == 200 && health.json::<serde_json::Value>()?["status"] == "ok";

    let mut identical = 0;
    for (sentence, cli) in sentences.iter().zip(&cli_lines) {
        let body = serde_json::json!({ "sentence": sentence, "mode": "we", "phi": 0.0 });
        let resp = http.post(format!("{base}/simplify")).json(&body).send()?;
        if resp.status() == 200 && resp.text()? == *cli {
            identical += 1;
        }
    }

    let malformed = [
        "not json",
        r#"{"sentence": ""}"#,
        r#"{"sentence": "", "mode": "we"}"#,
        r#"{"sentence": "a b", "mode": "bert"}"#,
        r#"{"sentence": "a b", "mode": "we", "phi": 1.5}"#,
        r#"{"mode": "we"}"#,
    ];
    let mut bad_request = 0;
    for body in malformed {
        let resp = http.post(format!("{base}/simplify")).body(body).send()?;
        if resp.status() == 400 {
            bad_request += 1;
        }
    }

    let unavailable = http
        .post(format!("{base}/simplify"))
        .json(&serde_json::json!({ "sentence": OREGANO, "mode": "transformer" }))
        .send()?
        .status();

    Ok(check(
        health_ok && identical == sentences.len() && cli_lines.len() == sentences.len() && bad_request == malformed.len()
            && unavailable == 503,
        format!(
            "health {}; {identical}/{} byte-identical; {bad_request}/{} malformed -> 400; unreachable embedder -> {}",
            if health_ok { "ok" } else { "bad" },
            sentences.len(),
            malformed.len(),
            unavailable.as_u16()
        ),
    ))
}

// ----------------------------------------------------------------

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let fx = load_fixtures();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("perplexity oracle", Box::new(perplexity_oracle)),
        ("perplexity hand fixtures", Box::new(hand_fixtures)),
        ("mlp gradient check", Box::new(gradient_check)),
        ("classifier synthetic accuracy", Box::new(synthetic_accuracy)),
        ("classifier dataset precision", Box::new(dataset_precision)),
        ("sari oracle equivalence", Box::new(sari_equivalence)),
        ("pipeline properties", Box::new(|| pipeline_properties(&fx))),
        ("end-to-end example", Box::new(|| oregano_sentence(&fx))),
        ("service contract", Box::new(service_contract)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let (tag, detail) = match run() {
            Pass(d) => ("PASS", d),
            Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Skip(d) => ("SKIP", d),
        };
        println!("{tag}  {name:<32} {detail}");
    }
    println!("acceptance: {} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
