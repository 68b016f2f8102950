//! SARI and perplexity decrease.
//!
//! SARI here works on n-gram *sets* per order 1..=4. For input `I`, output
//! `O` and references `R_1..R_m`:
//!
//! * add: `O \ I` scored by F1 against `(∪R) \ I`
//! * keep: `O ∩ I` scored by F1 against `I ∩ (∩R)`
//! * delete: `I \ O` scored by precision against `I \ (∪R)`
//!
//! A component whose system and reference sets are both empty scores 1; if
//! exactly one is empty it scores 0. An order counts only if some sentence
//! in the triple has at least that many tokens.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::langmodel::{NGramModel, Sentence};
use crate::ranking::{pp_score, BigramFactor};

pub const MAX_ORDER: usize = 4;

type Gram<'a> = &'a [String];

fn grams(s: &Sentence, n: usize) -> HashSet<Gram<'_>> {
    s.tokens().windows(n).collect()
}

fn f1(sys: &HashSet<Gram>, reference: &HashSet<Gram>) -> f64 {
    match (sys.is_empty(), reference.is_empty()) {
        (true, true) => 1.0,
        (true, false) | (false, true) => 0.0,
        _ => {
            let hit = sys.intersection(reference).count() as f64;
            if hit == 0.0 {
                return 0.0;
            }
            let p = hit / sys.len() as f64;
            let r = hit / reference.len() as f64;
            2.0 * p * r / (p + r)
        }
    }
}

fn precision(sys: &HashSet<Gram>, reference: &HashSet<Gram>) -> f64 {
    match (sys.is_empty(), reference.is_empty()) {
        (true, true) => 1.0,
        (true, false) | (false, true) => 0.0,
        _ => sys.intersection(reference).count() as f64 / sys.len() as f64,
    }
}

/// Add, keep and delete scores per included order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SariComponents {
    pub order: usize,
    pub add: f64,
    pub keep: f64,
    pub delete: f64,
}

pub fn sari_components(input: &Sentence, output: &Sentence, references: &[Sentence]) -> Result<Vec<SariComponents>> {
    if references.is_empty() {
        return Err(Error::Validation("SARI needs at least one reference".into()));
    }
    let longest = references
        .iter()
        .chain([input, output])
        .map(Sentence::len)
        .max()
        .unwrap();
    let mut out = Vec::new();
    for n in 1..=MAX_ORDER.min(longest) {
        let i = grams(input, n);
        let o = grams(output, n);
        let refs: Vec<HashSet<Gram>> = references.iter().map(|r| grams(r, n)).collect();
        let r_union: HashSet<Gram> = refs.iter().flatten().copied().collect();
        let r_inter: HashSet<Gram> = refs[0]
            .iter()
            .filter(|g| refs[1..].iter().all(|r| r.contains(*g)))
            .copied()
            .collect();

        let add_sys: HashSet<Gram> = o.difference(&i).copied().collect();
        let add_ref: HashSet<Gram> = r_union.difference(&i).copied().collect();
        let keep_sys: HashSet<Gram> = o.intersection(&i).copied().collect();
        let keep_ref: HashSet<Gram> = i.intersection(&r_inter).copied().collect();
        let del_sys: HashSet<Gram> = i.difference(&o).copied().collect();
        let del_ref: HashSet<Gram> = i.difference(&r_union).copied().collect();

        out.push(SariComponents {
            order: n,
            add: f1(&add_sys, &add_ref),
            keep: f1(&keep_sys, &keep_ref),
            delete: precision(&del_sys, &del_ref),
        });
    }
    Ok(out)
}

/// Mean of add, keep and delete over included orders, in `[0, 1]`.
pub fn sari(input: &Sentence, output: &Sentence, references: &[Sentence]) -> Result<f64> {
    let parts = sari_components(input, output, references)?;
    let total: f64 = parts.iter().map(|c| c.add + c.keep + c.delete).sum();
    Ok((total / (3 * parts.len()) as f64).clamp(0.0, 1.0))
}

/// `100 (mean_orig - mean_simp) / mean_orig` over combined perplexities.
pub fn perplexity_decrease(
    m: &NGramModel,
    originals: &[Sentence],
    simplified: &[Sentence],
    phi: BigramFactor,
) -> Result<f64> {
    let (orig, simp) = mean_perplexities(m, originals, simplified, phi)?;
    Ok(decrease(orig, simp))
}

fn decrease(orig: f64, simp: f64) -> f64 {
    if orig == simp {
        0.0
    } else {
        100.0 * (orig - simp) / orig
    }
}

fn mean_perplexities(
    m: &NGramModel,
    originals: &[Sentence],
    simplified: &[Sentence],
    phi: BigramFactor,
) -> Result<(f64, f64)> {
    if originals.len() != simplified.len() {
        return Err(Error::Validation(format!(
            "{} original sentences but {} simplified",
            originals.len(),
            simplified.len()
        )));
    }
    if originals.is_empty() {
        return Err(Error::Validation("no sentences to compare".into()));
    }
    let mean = |xs: &[Sentence]| xs.iter().map(|s| pp_score(m, s, phi).combined).sum::<f64>() / xs.len() as f64;
    Ok((mean(originals), mean(simplified)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationRecord {
    pub input: Sentence,
    pub system_output: Sentence,
    pub references: Vec<Sentence>,
}

impl EvaluationRecord {
    pub fn new(input: Sentence, system_output: Sentence, references: Vec<Sentence>) -> Result<Self> {
        if references.is_empty() {
            return Err(Error::Validation("record has no references".into()));
        }
        Ok(EvaluationRecord {
            input,
            system_output,
            references,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub sari: Vec<f64>,
    pub mean_sari: f64,
    pub mean_pp_original: f64,
    pub mean_pp_simplified: f64,
    pub perplexity_decrease: f64,
}

pub fn evaluate_corpus(records: &[EvaluationRecord], m: &NGramModel, phi: BigramFactor) -> Result<EvaluationReport> {
    if records.is_empty() {
        return Err(Error::Validation("no records to evaluate".into()));
    }
    let sari = records
        .iter()
        .enumerate()
        .map(|(index, r)| {
            sari(&r.input, &r.system_output, &r.references).map_err(|e| Error::Record {
                index,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<f64>>>()?;
    let originals: Vec<Sentence> = records.iter().map(|r| r.input.clone()).collect();
    let outputs: Vec<Sentence> = records.iter().map(|r| r.system_output.clone()).collect();
    let (orig, simp) = mean_perplexities(m, &originals, &outputs, phi)?;
    Ok(EvaluationReport {
        mean_sari: sari.iter().sum::<f64>() / sari.len() as f64,
        sari,
        mean_pp_original: orig,
        mean_pp_simplified: simp,
        perplexity_decrease: decrease(orig, simp),
    })
}

fn read_lines(path: &Path) -> Result<Vec<Sentence>> {
    fs::read_to_string(path)?
        .lines()
        .enumerate()
        .map(|(i, l)| Sentence::parse(l).map_err(|e| Error::parse(path, i + 1, e.to_string())))
        .collect()
}

/// Aligned line-by-line files: inputs, system outputs, and one file per
/// reference set.
pub fn load_records(orig: &Path, system: &Path, refs: &[impl AsRef<Path>]) -> Result<Vec<EvaluationRecord>> {
    if refs.is_empty() {
        return Err(Error::Validation("at least one reference file is required".into()));
    }
    let inputs = read_lines(orig)?;
    let outputs = read_lines(system)?;
    let mismatch = |other: &Path, n: usize| {
        Error::Validation(format!(
            "{} has {} lines but {} has {n}",
            orig.display(),
            inputs.len(),
            other.display()
        ))
    };
    if outputs.len() != inputs.len() {
        return Err(mismatch(system, outputs.len()));
    }
    let mut ref_sets = Vec::new();
    for r in refs {
        let lines = read_lines(r.as_ref())?;
        if lines.len() != inputs.len() {
            return Err(mismatch(r.as_ref(), lines.len()));
        }
        ref_sets.push(lines);
    }
    inputs
        .into_iter()
        .zip(outputs)
        .enumerate()
        .map(|(i, (input, output))| {
            EvaluationRecord::new(input, output, ref_sets.iter().map(|r| r[i].clone()).collect())
        })
        .collect()
}
