use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::metrics::{gmean, ConfusionMatrix, GmeanVariant};
use super::stats::{paired_t_test, win_tie_loss, TTest, WinTieLoss, TIE_EPSILON};
use crate::classifiers::ClassifierSpec;
use crate::dataset::{FoldSplit, MultimodalDataset};
use crate::ensemble::{train, Mode};
use crate::error::{Error, Result};
use crate::rng::derive_seed;

/// Significance level for the `*` annotation.
pub const SIGNIFICANCE: f64 = 0.05;

const FOLD_STREAM: u64 = 0xF01D;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvSettings {
    pub folds: usize,
    pub val_fraction: f64,
    pub r: f64,
    pub candidates: Vec<ClassifierSpec>,
    pub seed: u64,
    pub metric: GmeanVariant,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateScore {
    pub classifier: String,
    /// Percentages; `None` when the candidate failed or the set was empty.
    pub val_gmean: Option<f64>,
    pub test_gmean: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldResult {
    pub fold_index: usize,
    pub selected: String,
    /// Test G-mean of the selected candidate under the configured metric, in percent.
    pub test_gmean: f64,
    pub test_gmean_recall_geomean: f64,
    pub test_gmean_paper_literal: f64,
    pub val_confusion: Option<ConfusionMatrix>,
    pub test_confusion: ConfusionMatrix,
    pub candidates: Vec<CandidateScore>,
}

impl FoldResult {
    pub fn selected_index(&self) -> usize {
        self.candidates
            .iter()
            .position(|c| c.classifier == self.selected)
            .expect("selected candidate is listed")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodSummary {
    pub mode: Mode,
    pub folds: Vec<FoldResult>,
    pub mean: f64,
    /// Sample standard deviation over folds.
    pub std: f64,
}

impl MethodSummary {
    pub fn from_folds(mode: Mode, folds: Vec<FoldResult>) -> Self {
        let g: Vec<f64> = folds.iter().map(|f| f.test_gmean).collect();
        let (mean, std) = mean_std(&g);
        Self { mode, folds, mean, std }
    }

    pub fn test_gmeans(&self) -> Vec<f64> {
        self.folds.iter().map(|f| f.test_gmean).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub t_test: TTest,
    pub win_tie_loss: WinTieLoss,
    /// `W`, `L`, `X` or `T`, with `*` appended when `p <= 0.05`.
    pub annotation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub imbalmed: MethodSummary,
    pub baseline: MethodSummary,
    pub comparison: Comparison,
}

/// Mean and sample standard deviation (0 for fewer than two values).
pub fn mean_std(v: &[f64]) -> (f64, f64) {
    if v.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    if v.len() < 2 {
        return (mean, 0.0);
    }
    let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

pub fn annotate(wtl: &WinTieLoss, p: f64) -> String {
    let mut s = wtl.verdict().to_string();
    if p <= SIGNIFICANCE {
        s.push('*');
    }
    s
}

/// Paired comparison of per-fold scores `a` against `b`.
pub fn compare_scores(a: &[f64], b: &[f64]) -> Result<Comparison> {
    let t_test = paired_t_test(a, b)?;
    let wtl = win_tie_loss(a, b, TIE_EPSILON)?;
    Ok(Comparison {
        annotation: annotate(&wtl, t_test.p),
        t_test,
        win_tie_loss: wtl,
    })
}

fn fold_seed(seed: u64, fold: usize) -> u64 {
    derive_seed(seed, &[FOLD_STREAM, fold as u64])
}

fn score(cm: &ConfusionMatrix, metric: GmeanVariant) -> Result<f64> {
    Ok(100.0 * gmean(cm, metric)?)
}

fn confusion(
    ds: &MultimodalDataset,
    ens: &crate::ensemble::MultimodalEnsemble,
    idx: &[usize],
) -> Result<ConfusionMatrix> {
    let predicted = ens.predict_classes(ds, idx)?;
    let truth: Vec<usize> = idx.iter().map(|&i| ds.labels()[i]).collect();
    ConfusionMatrix::from_predictions(&truth, &predicted, ds.n_classes())
}

struct Evaluated {
    val: Option<ConfusionMatrix>,
    test: ConfusionMatrix,
}

fn evaluate_candidate(
    ds: &MultimodalDataset,
    split: &FoldSplit,
    spec: &ClassifierSpec,
    settings: &CvSettings,
    mode: Mode,
) -> Result<Evaluated> {
    let ens = train(
        ds,
        split,
        spec,
        settings.r,
        mode,
        fold_seed(settings.seed, split.fold_index),
    )?;
    let val = if split.val_idx.is_empty() {
        None
    } else {
        Some(confusion(ds, &ens, &split.val_idx)?)
    };
    let test = confusion(ds, &ens, &split.test_idx)?;
    Ok(Evaluated { val, test })
}

fn run_fold(ds: &MultimodalDataset, split: &FoldSplit, settings: &CvSettings, mode: Mode) -> Result<FoldResult> {
    let mut scores = Vec::with_capacity(settings.candidates.len());
    let mut best: Option<(usize, Option<f64>, Evaluated)> = None;
    for (ci, spec) in settings.candidates.iter().enumerate() {
        let outcome = evaluate_candidate(ds, split, spec, settings, mode).and_then(|e| {
            let val = e.val.as_ref().map(|cm| score(cm, settings.metric)).transpose()?;
            let test = score(&e.test, settings.metric)?;
            Ok((e, val, test))
        });
        match outcome {
            Ok((e, val, test)) => {
                scores.push(CandidateScore {
                    classifier: spec.tag().to_string(),
                    val_gmean: val,
                    test_gmean: Some(test),
                    error: None,
                });
                // strictly greater keeps the first candidate on ties
                let better = match &best {
                    None => true,
                    Some((_, best_val, _)) => matches!((val, best_val), (Some(v), Some(b)) if v > *b),
                };
                if better {
                    best = Some((ci, val, e));
                }
            }
            Err(err) => scores.push(CandidateScore {
                classifier: spec.tag().to_string(),
                val_gmean: None,
                test_gmean: None,
                error: Some(err.to_string()),
            }),
        }
    }
    let Some((ci, _, e)) = best else {
        let reason = scores
            .iter()
            .filter_map(|s| s.error.as_deref())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::NoCandidate {
            fold: split.fold_index,
            reason,
        });
    };
    Ok(FoldResult {
        fold_index: split.fold_index,
        selected: settings.candidates[ci].tag().to_string(),
        test_gmean: score(&e.test, settings.metric)?,
        test_gmean_recall_geomean: score(&e.test, GmeanVariant::RecallGeomean)?,
        test_gmean_paper_literal: score(&e.test, GmeanVariant::PaperLiteral)?,
        val_confusion: e.val,
        test_confusion: e.test,
        candidates: scores,
    })
}

fn validate(settings: &CvSettings) -> Result<()> {
    if settings.candidates.is_empty() {
        return Err(Error::InvalidParameter(
            "at least one classifier candidate is required".into(),
        ));
    }
    let mut tags: Vec<&str> = settings.candidates.iter().map(|c| c.tag()).collect();
    tags.sort_unstable();
    if tags.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter(
            "classifier candidates must be distinct families".into(),
        ));
    }
    Ok(())
}

/// Folds in order of fold index. Folds run in parallel; each fold trains the
/// candidates in list order.
pub fn run_cv_experiment(ds: &MultimodalDataset, settings: &CvSettings, mode: Mode) -> Result<Vec<FoldResult>> {
    validate(settings)?;
    let folds = ds.stratified_kfold(settings.folds, settings.val_fraction, settings.seed)?;
    run_on_folds(ds, &folds, settings, mode)
}

pub fn run_on_folds(
    ds: &MultimodalDataset,
    folds: &[FoldSplit],
    settings: &CvSettings,
    mode: Mode,
) -> Result<Vec<FoldResult>> {
    validate(settings)?;
    folds
        .par_iter()
        .map(|split| run_fold(ds, split, settings, mode))
        .collect()
}

/// Both modes on the same folds and seeds, then a paired comparison of the
/// per-fold test G-means (IMBALMED first).
pub fn compare_methods(ds: &MultimodalDataset, settings: &CvSettings) -> Result<ComparisonReport> {
    validate(settings)?;
    let folds = ds.stratified_kfold(settings.folds, settings.val_fraction, settings.seed)?;
    let imbalmed = MethodSummary::from_folds(Mode::Imbalmed, run_on_folds(ds, &folds, settings, Mode::Imbalmed)?);
    let baseline = MethodSummary::from_folds(
        Mode::UnbalancedBaseline,
        run_on_folds(ds, &folds, settings, Mode::UnbalancedBaseline)?,
    );
    let comparison = compare_scores(&imbalmed.test_gmeans(), &baseline.test_gmeans())?;
    Ok(ComparisonReport {
        imbalmed,
        baseline,
        comparison,
    })
}
