//! Word complexity: five corpus/lexical features and a 5-3-2 MLP trained
//! with Adam on per-unit binary cross-entropy.

#![allow(clippy::needless_range_loop)]

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::langmodel::NGramModel;
use crate::thesaurus::Thesaurus;

pub const N_FEATURES: usize = 5;
pub const N_HIDDEN: usize = 3;
pub const N_OUTPUT: usize = 2;
/// Number of trainable parameters: W1, b1, W2, b2 flattened in that order.
pub const N_PARAMS: usize = N_HIDDEN * N_FEATURES + N_HIDDEN + N_OUTPUT * N_HIDDEN + N_OUTPUT;

pub const MLP_MAGIC: &str = "SIMPLEX-MLP1";

/// `(unigram_prob, sentence_count, occurrences, length, synset_size)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WordFeatures(pub [f64; N_FEATURES]);

impl WordFeatures {
    pub fn unigram_prob(&self) -> f64 {
        self.0[0]
    }
    pub fn sentence_count(&self) -> f64 {
        self.0[1]
    }
    pub fn occurrences(&self) -> f64 {
        self.0[2]
    }
    pub fn length(&self) -> f64 {
        self.0[3]
    }
    pub fn synset_size(&self) -> f64 {
        self.0[4]
    }
}

/// Features of `word` (lowercased before lookup).
pub fn extract_features(word: &str, model: &NGramModel, thesaurus: &Thesaurus) -> WordFeatures {
    let w = word.to_lowercase();
    let (occ, sents) = model.word_stats(&w);
    WordFeatures([
        model.unigram_prob(&w),
        sents as f64,
        occ as f64,
        w.chars().count() as f64,
        thesaurus.synset_size(&w) as f64,
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Simple,
    Complex,
}

impl Label {
    fn index(self) -> usize {
        match self {
            Label::Simple => 0,
            Label::Complex => 1,
        }
    }

    fn one_hot(self) -> [f64; N_OUTPUT] {
        match self {
            Label::Simple => [1.0, 0.0],
            Label::Complex => [0.0, 1.0],
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Simple => "simple",
            Label::Complex => "complex",
        })
    }
}

/// Rating below 3 is simple, 3 and above complex.
pub fn relabel(rating: f64) -> Result<Label> {
    if !(1.0..=6.0).contains(&rating) {
        return Err(Error::Validation(format!("rating {rating} outside [1, 6]")));
    }
    Ok(if rating < 3.0 { Label::Simple } else { Label::Complex })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub label: Label,
    /// Raw sigmoid outputs `(p_simple, p_complex)`; not renormalized.
    pub probabilities: [f64; N_OUTPUT],
}

/// Per-feature z-score parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scaler {
    pub mean: [f64; N_FEATURES],
    pub std: [f64; N_FEATURES],
}

impl Scaler {
    pub fn identity() -> Self {
        Scaler {
            mean: [0.0; N_FEATURES],
            std: [1.0; N_FEATURES],
        }
    }

    /// Population mean/stddev; constant features get stddev 1.
    pub fn fit(xs: &[WordFeatures]) -> Self {
        let n = xs.len().max(1) as f64;
        let mut mean = [0.0; N_FEATURES];
        let mut std = [0.0; N_FEATURES];
        for x in xs {
            for j in 0..N_FEATURES {
                mean[j] += x.0[j] / n;
            }
        }
        for x in xs {
            for j in 0..N_FEATURES {
                std[j] += (x.0[j] - mean[j]).powi(2) / n;
            }
        }
        for s in &mut std {
            *s = s.sqrt();
            if !s.is_finite() || *s < 1e-12 {
                *s = 1.0;
            }
        }
        Scaler { mean, std }
    }

    pub fn transform(&self, x: &WordFeatures) -> [f64; N_FEATURES] {
        std::array::from_fn(|j| (x.0[j] - self.mean[j]) / self.std[j])
    }
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// `log(1 + e^z)` without overflow.
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub epsilon: f64,
    pub epochs: usize,
    pub batch_size: usize,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            learning_rate: 0.001,
            beta1: 0.9,
            beta2: 0.999,
            epsilon: 1e-8,
            epochs: 200,
            batch_size: 32,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Trained {
    pub classifier: ComplexityClassifier,
    /// Mean training loss after each epoch.
    pub losses: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexityClassifier {
    pub w1: [[f64; N_FEATURES]; N_HIDDEN],
    pub b1: [f64; N_HIDDEN],
    pub w2: [[f64; N_HIDDEN]; N_OUTPUT],
    pub b2: [f64; N_OUTPUT],
    pub scaler: Scaler,
}

struct Forward {
    z1: [f64; N_HIDDEN],
    h: [f64; N_HIDDEN],
    z2: [f64; N_OUTPUT],
}

impl ComplexityClassifier {
    pub fn zeros() -> Self {
        ComplexityClassifier {
            w1: [[0.0; N_FEATURES]; N_HIDDEN],
            b1: [0.0; N_HIDDEN],
            w2: [[0.0; N_HIDDEN]; N_OUTPUT],
            b2: [0.0; N_OUTPUT],
            scaler: Scaler::identity(),
        }
    }

    /// He-initialized hidden layer, Xavier-initialized output layer, zero biases.
    pub fn random(seed: u64, scaler: Scaler) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let he = Normal::new(0.0, (2.0 / N_FEATURES as f64).sqrt()).unwrap();
        let xavier = Normal::new(0.0, (2.0 / (N_HIDDEN + N_OUTPUT) as f64).sqrt()).unwrap();
        let mut c = ComplexityClassifier::zeros();
        c.scaler = scaler;
        for row in &mut c.w1 {
            for w in row {
                *w = he.sample(&mut rng);
            }
        }
        for row in &mut c.w2 {
            for w in row {
                *w = xavier.sample(&mut rng);
            }
        }
        c
    }

    pub fn params(&self) -> [f64; N_PARAMS] {
        let mut p = [0.0; N_PARAMS];
        let mut i = 0;
        let mut push = |v: f64| {
            p[i] = v;
            i += 1;
        };
        self.w1.iter().flatten().for_each(|&v| push(v));
        self.b1.iter().for_each(|&v| push(v));
        self.w2.iter().flatten().for_each(|&v| push(v));
        self.b2.iter().for_each(|&v| push(v));
        p
    }

    pub fn set_params(&mut self, p: &[f64; N_PARAMS]) {
        let mut it = p.iter().copied();
        let mut next = || it.next().unwrap();
        for row in &mut self.w1 {
            row.iter_mut().for_each(|w| *w = next());
        }
        self.b1.iter_mut().for_each(|w| *w = next());
        for row in &mut self.w2 {
            row.iter_mut().for_each(|w| *w = next());
        }
        self.b2.iter_mut().for_each(|w| *w = next());
    }

    fn forward(&self, x: &[f64; N_FEATURES]) -> Forward {
        let z1: [f64; N_HIDDEN] = std::array::from_fn(|i| {
            self.b1[i] + (0..N_FEATURES).map(|j| self.w1[i][j] * x[j]).sum::<f64>()
        });
        let h = z1.map(|z| z.max(0.0));
        let z2 = std::array::from_fn(|k| {
            self.b2[k] + (0..N_HIDDEN).map(|i| self.w2[k][i] * h[i]).sum::<f64>()
        });
        Forward { z1, h, z2 }
    }

    /// Prediction from raw features (the stored scaler is applied here).
    pub fn predict(&self, x: &WordFeatures) -> Prediction {
        self.predict_scaled(&self.scaler.transform(x))
    }

    /// Prediction from features already standardized with this
    /// classifier's scaler.
    pub fn predict_scaled(&self, x: &[f64; N_FEATURES]) -> Prediction {
        let probabilities = self.forward(x).z2.map(sigmoid);
        let label = if probabilities[1] > probabilities[0] {
            Label::Complex
        } else {
            Label::Simple
        };
        Prediction {
            label,
            probabilities,
        }
    }

    /// Mean over the batch of the summed per-unit binary cross-entropy, and
    /// its gradient with respect to [`params`](Self::params). Inputs are
    /// standardized features.
    pub fn loss_and_gradient(&self, batch: &[([f64; N_FEATURES], Label)]) -> (f64, [f64; N_PARAMS]) {
        let mut grad = ComplexityClassifier::zeros();
        let n = batch.len().max(1) as f64;
        let mut loss = 0.0;
        for (x, label) in batch {
            let f = self.forward(x);
            let t = label.one_hot();
            let mut dz2 = [0.0; N_OUTPUT];
            for k in 0..N_OUTPUT {
                // -t log σ(z) - (1-t) log(1-σ(z)) = softplus(z) - t z
                loss += softplus(f.z2[k]) - t[k] * f.z2[k];
                dz2[k] = (sigmoid(f.z2[k]) - t[k]) / n;
            }
            for k in 0..N_OUTPUT {
                grad.b2[k] += dz2[k];
                for i in 0..N_HIDDEN {
                    grad.w2[k][i] += dz2[k] * f.h[i];
                }
            }
            for i in 0..N_HIDDEN {
                if f.z1[i] <= 0.0 {
                    continue;
                }
                let dz1: f64 = (0..N_OUTPUT).map(|k| dz2[k] * self.w2[k][i]).sum();
                grad.b1[i] += dz1;
                for j in 0..N_FEATURES {
                    grad.w1[i][j] += dz1 * x[j];
                }
            }
        }
        (loss / n, grad.params())
    }

    /// Loss only; see [`loss_and_gradient`](Self::loss_and_gradient).
    pub fn loss(&self, batch: &[([f64; N_FEATURES], Label)]) -> f64 {
        let n = batch.len().max(1) as f64;
        batch
            .iter()
            .map(|(x, label)| {
                let z2 = self.forward(x).z2;
                let t = label.one_hot();
                (0..N_OUTPUT).map(|k| softplus(z2[k]) - t[k] * z2[k]).sum::<f64>()
            })
            .sum::<f64>()
            / n
    }

    pub fn train(data: &[(WordFeatures, Label)], cfg: &TrainConfig) -> Result<Trained> {
        if data.is_empty() {
            return Err(Error::Validation("training set is empty".into()));
        }
        let simple = data.iter().filter(|(_, l)| *l == Label::Simple).count();
        if simple == 0 || simple == data.len() {
            return Err(Error::Validation("training set needs both classes".into()));
        }
        if cfg.batch_size == 0 {
            return Err(Error::Validation("batch size must be positive".into()));
        }
        let xs: Vec<WordFeatures> = data.iter().map(|(x, _)| *x).collect();
        let scaler = Scaler::fit(&xs);
        let scaled: Vec<([f64; N_FEATURES], Label)> =
            data.iter().map(|(x, l)| (scaler.transform(x), *l)).collect();

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut clf = ComplexityClassifier::random(cfg.seed, scaler);
        let mut params = clf.params();
        let mut m = [0.0; N_PARAMS];
        let mut v = [0.0; N_PARAMS];
        let mut step = 0i32;
        let mut order: Vec<usize> = (0..scaled.len()).collect();
        let mut losses = Vec::with_capacity(cfg.epochs);
        let mut batch = Vec::with_capacity(cfg.batch_size);

        for _ in 0..cfg.epochs {
            order.shuffle(&mut rng);
            for chunk in order.chunks(cfg.batch_size) {
                batch.clear();
                batch.extend(chunk.iter().map(|&i| scaled[i]));
                let (_, g) = clf.loss_and_gradient(&batch);
                step += 1;
                let c1 = 1.0 - cfg.beta1.powi(step);
                let c2 = 1.0 - cfg.beta2.powi(step);
                for p in 0..N_PARAMS {
                    m[p] = cfg.beta1 * m[p] + (1.0 - cfg.beta1) * g[p];
                    v[p] = cfg.beta2 * v[p] + (1.0 - cfg.beta2) * g[p] * g[p];
                    params[p] -= cfg.learning_rate * (m[p] / c1) / ((v[p] / c2).sqrt() + cfg.epsilon);
                }
                clf.set_params(&params);
            }
            losses.push(clf.loss(&scaled));
        }
        Ok(Trained {
            classifier: clf,
            losses,
        })
    }

    pub fn to_text(&self) -> String {
        let row = |vals: &mut dyn Iterator<Item = &f64>| {
            vals.map(|v| format!("{v:?}")).collect::<Vec<_>>().join(" ")
        };
        let mut s = String::new();
        writeln!(s, "{MLP_MAGIC}").unwrap();
        writeln!(s, "arch {N_FEATURES} {N_HIDDEN} {N_OUTPUT}").unwrap();
        writeln!(s, "mean {}", row(&mut self.scaler.mean.iter())).unwrap();
        writeln!(s, "std {}", row(&mut self.scaler.std.iter())).unwrap();
        writeln!(s, "w1 {}", row(&mut self.w1.iter().flatten())).unwrap();
        writeln!(s, "b1 {}", row(&mut self.b1.iter())).unwrap();
        writeln!(s, "w2 {}", row(&mut self.w2.iter().flatten())).unwrap();
        writeln!(s, "b2 {}", row(&mut self.b2.iter())).unwrap();
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let corrupt = |message: String| Error::Corrupt {
            kind: "classifier",
            message,
        };
        let mut lines = text.lines();
        if lines.next() != Some(MLP_MAGIC) {
            return Err(corrupt(format!("missing {MLP_MAGIC} header")));
        }
        let mut field = |name: &str, len: usize| -> Result<Vec<f64>> {
            let line = lines.next().ok_or_else(|| corrupt(format!("missing {name} line")))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(name) {
                return Err(corrupt(format!("expected {name} line, got {line:?}")));
            }
            let vals = parts
                .map(|p| p.parse::<f64>().map_err(|_| corrupt(format!("bad number {p:?} in {name}"))))
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != len {
                return Err(corrupt(format!("{name} has {} values, expected {len}", vals.len())));
            }
            if vals.iter().any(|v| !v.is_finite()) {
                return Err(corrupt(format!("non-finite value in {name}")));
            }
            Ok(vals)
        };
        let arch = field("arch", 3)?;
        if arch != [N_FEATURES as f64, N_HIDDEN as f64, N_OUTPUT as f64] {
            return Err(corrupt(format!("unsupported architecture {arch:?}")));
        }
        let mean = field("mean", N_FEATURES)?;
        let std = field("std", N_FEATURES)?;
        let mut params = field("w1", N_HIDDEN * N_FEATURES)?;
        params.extend(field("b1", N_HIDDEN)?);
        params.extend(field("w2", N_OUTPUT * N_HIDDEN)?);
        params.extend(field("b2", N_OUTPUT)?);
        if std.contains(&0.0) {
            return Err(corrupt("zero standard deviation".into()));
        }
        let mut c = ComplexityClassifier::zeros();
        c.scaler = Scaler {
            mean: mean.try_into().unwrap(),
            std: std.try_into().unwrap(),
        };
        c.set_params(&params.try_into().unwrap());
        Ok(c)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        if !text.starts_with(MLP_MAGIC) {
            return Err(Error::BadMagic(path.to_owned(), MLP_MAGIC));
        }
        Self::from_text(&text)
    }
}

/// Reads `word<TAB>rating` lines.
pub fn load_lexicon(path: impl AsRef<Path>) -> Result<Vec<(String, f64)>> {
    let path = path.as_ref();
    parse_lexicon(&fs::read_to_string(path)?, path)
}

pub fn parse_lexicon(text: &str, origin: impl AsRef<Path>) -> Result<Vec<(String, f64)>> {
    let origin = origin.as_ref();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |msg: String| Error::parse(origin, i + 1, msg);
        let (word, rating) = line
            .split_once('\t')
            .ok_or_else(|| fail("expected word<TAB>rating".into()))?;
        let rating: f64 = rating
            .trim()
            .parse()
            .map_err(|_| fail(format!("bad rating {rating:?}")))?;
        relabel(rating).map_err(|e| fail(e.to_string()))?;
        out.push((word.trim().to_lowercase(), rating));
    }
    Ok(out)
}

/// Labelled feature vectors for every lexicon word.
pub fn lexicon_dataset(
    lexicon: &[(String, f64)],
    model: &NGramModel,
    thesaurus: &Thesaurus,
) -> Result<Vec<(WordFeatures, Label)>> {
    lexicon
        .iter()
        .map(|(w, r)| Ok((extract_features(w, model, thesaurus), relabel(*r)?)))
        .collect()
}

/// Seeded shuffle, then the last `test_fraction` of the items is held out.
pub fn split<T: Clone>(data: &[T], test_fraction: f64, seed: u64) -> (Vec<T>, Vec<T>) {
    let mut items = data.to_vec();
    items.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let n_test = ((data.len() as f64) * test_fraction).round() as usize;
    let test = items.split_off(items.len() - n_test.min(items.len()));
    (items, test)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub accuracy: f64,
    pub simple: ClassMetrics,
    pub complex: ClassMetrics,
}

/// Precision/recall per class; an undefined ratio is reported as 0.
pub fn classification_report(clf: &ComplexityClassifier, data: &[(WordFeatures, Label)]) -> ClassificationReport {
    let mut confusion = [[0usize; 2]; 2]; // [truth][predicted]
    for (x, truth) in data {
        confusion[truth.index()][clf.predict(x).label.index()] += 1;
    }
    let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    let metrics = |c: usize| {
        let tp = confusion[c][c];
        let predicted = confusion[0][c] + confusion[1][c];
        let support = confusion[c][0] + confusion[c][1];
        let precision = ratio(tp, predicted);
        let recall = ratio(tp, support);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        ClassMetrics {
            precision,
            recall,
            f1,
            support,
        }
    };
    ClassificationReport {
        accuracy: ratio(confusion[0][0] + confusion[1][1], data.len()),
        simple: metrics(0),
        complex: metrics(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langmodel::Sentence;
    use rand::Rng;

    fn tiny() -> NGramModel {
        NGramModel::build(&[
            Sentence::parse("the cat sat").unwrap(),
            Sentence::parse("the dog sat").unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn feature_examples() {
        let th = Thesaurus::parse("zebra\tnoun\t2\thorse\n", "t").unwrap();
        assert_eq!(extract_features("the", &tiny(), &th).0, [0.5, 2.0, 2.0, 3.0, 0.0]);
        assert_eq!(extract_features("zebra", &tiny(), &th).0, [1.0 / 24.0, 0.0, 0.0, 5.0, 2.0]);
        let single = NGramModel::build(&[Sentence::parse("a").unwrap()]).unwrap();
        assert_eq!(
            extract_features("a", &single, &Thesaurus::empty()).0,
            [1.0, 1.0, 1.0, 1.0, 0.0]
        );
    }

    #[test]
    fn relabel_boundaries() {
        assert_eq!(relabel(1.2).unwrap(), Label::Simple);
        assert_eq!(relabel(5.8).unwrap(), Label::Complex);
        assert_eq!(relabel(3.0).unwrap(), Label::Complex);
        assert_eq!(relabel(2.999).unwrap(), Label::Simple);
        assert!(relabel(0.5).is_err());
        assert!(relabel(6.5).is_err());
        assert!(relabel(f64::NAN).is_err());
    }

    #[test]
    fn zero_classifier_ties_to_simple() {
        let p = ComplexityClassifier::zeros().predict(&WordFeatures([3.0, 1.0, 4.0, 1.0, 5.0]));
        assert_eq!(p.probabilities, [0.5, 0.5]);
        assert_eq!(p.label, Label::Simple);
    }

    #[test]
    fn swapped_output_rows_flip_labels() {
        let clf = ComplexityClassifier::random(7, Scaler::identity());
        let mut swapped = clf.clone();
        swapped.w2.swap(0, 1);
        swapped.b2.swap(0, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let x = WordFeatures(std::array::from_fn(|_| rng.gen_range(-3.0..3.0)));
            let a = clf.predict(&x);
            let b = swapped.predict(&x);
            assert_eq!(a.probabilities, [b.probabilities[1], b.probabilities[0]]);
            if a.probabilities[0] != a.probabilities[1] {
                assert_ne!(a.label, b.label);
            }
        }
    }

    #[test]
    fn raw_and_scaled_inputs_agree() {
        let scaler = Scaler {
            mean: [0.1, 5.0, 7.0, 6.0, 2.0],
            std: [0.05, 3.0, 9.0, 2.0, 1.5],
        };
        let clf = ComplexityClassifier::random(3, scaler);
        let x = WordFeatures([0.2, 4.0, 9.0, 8.0, 1.0]);
        assert_eq!(clf.predict(&x), clf.predict_scaled(&scaler.transform(&x)));
    }

    #[test]
    fn params_round_trip() {
        let clf = ComplexityClassifier::random(11, Scaler::identity());
        let mut other = ComplexityClassifier::zeros();
        other.set_params(&clf.params());
        assert_eq!(other, clf);
    }

    #[test]
    fn training_rejects_degenerate_sets() {
        let cfg = TrainConfig::default();
        assert!(ComplexityClassifier::train(&[], &cfg).is_err());
        let one_class = vec![(WordFeatures([0.0; 5]), Label::Simple); 4];
        assert!(ComplexityClassifier::train(&one_class, &cfg).is_err());
    }

    #[test]
    fn persistence_is_bit_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut clf = ComplexityClassifier::random(5, Scaler {
            mean: [1e-7, 2.5, 3.0, 7.25, 0.1],
            std: [3.3e-5, 1.0 / 3.0, 2.0, 1.1, 0.7],
        });
        clf.b1 = [0.1, -1.0 / 7.0, 1e300];
        let text = clf.to_text();
        let back = ComplexityClassifier::from_text(&text).unwrap();
        assert_eq!(back, clf);
        for _ in 0..20 {
            let x = WordFeatures(std::array::from_fn(|_| rng.gen_range(0.0..10.0)));
            let (a, b) = (clf.predict(&x), back.predict(&x));
            assert_eq!(a.probabilities[0].to_bits(), b.probabilities[0].to_bits());
            assert_eq!(a.probabilities[1].to_bits(), b.probabilities[1].to_bits());
        }
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let text = ComplexityClassifier::zeros().to_text();
        assert!(ComplexityClassifier::from_text("nope").is_err());
        assert!(ComplexityClassifier::from_text(&text.replace("arch 5 3 2", "arch 5 4 2")).is_err());
        let truncated: String = text.lines().take(5).collect::<Vec<_>>().join("\n");
        assert!(ComplexityClassifier::from_text(&truncated).is_err());
    }

    #[test]
    fn lexicon_parsing() {
        let lex = parse_lexicon("Cat\t1.5\n# c\n\ndog\t3\n", "lex").unwrap();
        assert_eq!(lex, [("cat".to_string(), 1.5), ("dog".to_string(), 3.0)]);
        let err = parse_lexicon("cat\t1\nbad\t9\n", "lex").unwrap_err();
        assert!(err.to_string().starts_with("lex:2:"), "{err}");
    }

    #[test]
    fn split_sizes() {
        let data: Vec<u32> = (0..100).collect();
        let (train, test) = split(&data, 0.05, 1);
        assert_eq!((train.len(), test.len()), (95, 5));
        let (train2, _) = split(&data, 0.05, 1);
        assert_eq!(train, train2);
    }
}
