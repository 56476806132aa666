//! Probabilistic classifiers over `c` classes.
//!
//! Every model maps a real feature vector to a probability vector over the
//! classes. Native implementations cover linear models, naive Bayes, nearest
//! neighbours, decision trees and a bagged tree ensemble. Any other engine can
//! be bridged by implementing [`ProbabilisticClassifier`].
//!
//! Default hyperparameters (used when a family is selected by tag):
//!
//! | family                | defaults                                                        |
//! |-----------------------|-----------------------------------------------------------------|
//! | `logistic_regression` | full-batch gradient descent, rate 0.1, 500 iterations, L2 1e-4  |
//! | `gaussian_nb`         | per-class diagonal variances, variance floor 1e-9               |
//! | `knn`                 | k = 5, Euclidean, vote fractions                                |
//! | `decision_tree`       | gini, max depth 8, min 2 samples per leaf                       |
//! | `nearest_centroid`    | softmax over negative Euclidean distances                       |
//! | `random_forest`       | 25 trees, bootstrap, sqrt(features) per split, tree defaults    |
//!
//! Outputs are clipped to `[1e-12, 1]` and renormalized.

mod centroid;
mod forest;
mod knn;
mod logistic;
mod naive_bayes;
mod tree;

use std::fmt;
use std::str::FromStr;

use ndarray::{Array2, ArrayView2};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use centroid::NearestCentroid;
pub use forest::{ForestParams, MaxFeatures, RandomForest};
pub use knn::{KNearestNeighbors, KnnParams};
pub use logistic::{loss_and_gradient, LogisticRegression, LogisticRegressionParams};
pub use naive_bayes::{GaussianNaiveBayes, GaussianNbParams};
pub use tree::{DecisionTree, TreeParams};

pub const PROBABILITY_FLOOR: f64 = 1e-12;

pub trait ProbabilisticClassifier {
    fn n_classes(&self) -> usize;

    fn n_features(&self) -> usize;

    /// Class probabilities for one sample. Callers go through
    /// [`predict_proba`](Self::predict_proba), which checks the dimension.
    fn predict_proba_unchecked(&self, x: &[f64]) -> Vec<f64>;

    fn predict_proba(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n_features() {
            return Err(Error::DimensionMismatch {
                expected: self.n_features(),
                found: x.len(),
            });
        }
        Ok(self.predict_proba_unchecked(x))
    }

    fn predict_proba_batch(&self, x: ArrayView2<'_, f64>) -> Result<Array2<f64>> {
        if x.ncols() != self.n_features() {
            return Err(Error::DimensionMismatch {
                expected: self.n_features(),
                found: x.ncols(),
            });
        }
        let mut out = Array2::zeros((x.nrows(), self.n_classes()));
        for (row, mut dst) in x.rows().into_iter().zip(out.rows_mut()) {
            let p = match row.as_slice() {
                Some(s) => self.predict_proba_unchecked(s),
                None => self.predict_proba_unchecked(&row.to_vec()),
            };
            dst.assign(&ndarray::ArrayView1::from(&p));
        }
        Ok(out)
    }
}

/// Clip to `[PROBABILITY_FLOOR, 1]` and renormalize.
pub fn finalize_probabilities(mut p: Vec<f64>) -> Vec<f64> {
    for v in p.iter_mut() {
        *v = v.clamp(PROBABILITY_FLOOR, 1.0);
    }
    let s: f64 = p.iter().sum();
    p.iter_mut().for_each(|v| *v /= s);
    p
}

/// Numerically stable softmax.
pub(crate) fn softmax(scores: &[f64]) -> Vec<f64> {
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exp: Vec<f64> = scores.iter().map(|s| (s - max).exp()).collect();
    let sum: f64 = exp.iter().sum();
    exp.into_iter().map(|e| e / sum).collect()
}

pub(crate) fn check_training_data(x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize) -> Result<()> {
    if x.nrows() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.nrows(),
            found: y.len(),
        });
    }
    if n_classes < 2 {
        return Err(Error::TooFewClasses(n_classes));
    }
    if y.len() < n_classes {
        return Err(Error::TooFewRows {
            required: n_classes,
            found: y.len(),
        });
    }
    if x.ncols() == 0 {
        return Err(Error::InvalidParameter("no feature columns".into()));
    }
    if let Some(&bad) = y.iter().find(|&&v| v >= n_classes) {
        return Err(Error::InvalidParameter(format!("label index {bad} out of range")));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteInput);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    LogisticRegression,
    GaussianNb,
    Knn,
    DecisionTree,
    NearestCentroid,
    RandomForest,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::LogisticRegression,
        Family::GaussianNb,
        Family::Knn,
        Family::DecisionTree,
        Family::NearestCentroid,
        Family::RandomForest,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::LogisticRegression => "logistic_regression",
            Family::GaussianNb => "gaussian_nb",
            Family::Knn => "knn",
            Family::DecisionTree => "decision_tree",
            Family::NearestCentroid => "nearest_centroid",
            Family::RandomForest => "random_forest",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown classifier family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ModelParams {
    LogisticRegression(LogisticRegressionParams),
    GaussianNb(GaussianNbParams),
    Knn(KnnParams),
    DecisionTree(TreeParams),
    NearestCentroid,
    RandomForest(ForestParams),
}

impl ModelParams {
    pub fn defaults(family: Family) -> Self {
        match family {
            Family::LogisticRegression => ModelParams::LogisticRegression(Default::default()),
            Family::GaussianNb => ModelParams::GaussianNb(Default::default()),
            Family::Knn => ModelParams::Knn(Default::default()),
            Family::DecisionTree => ModelParams::DecisionTree(Default::default()),
            Family::NearestCentroid => ModelParams::NearestCentroid,
            Family::RandomForest => ModelParams::RandomForest(Default::default()),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            ModelParams::LogisticRegression(_) => Family::LogisticRegression,
            ModelParams::GaussianNb(_) => Family::GaussianNb,
            ModelParams::Knn(_) => Family::Knn,
            ModelParams::DecisionTree(_) => Family::DecisionTree,
            ModelParams::NearestCentroid => Family::NearestCentroid,
            ModelParams::RandomForest(_) => Family::RandomForest,
        }
    }
}

/// A classifier family with fixed hyperparameters and a seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifierSpec {
    params: ModelParams,
    seed: u64,
}

impl ClassifierSpec {
    pub fn new(params: ModelParams, seed: u64) -> Self {
        Self { params, seed }
    }

    pub fn from_family(family: Family, seed: u64) -> Self {
        Self::new(ModelParams::defaults(family), seed)
    }

    pub fn family(&self) -> Family {
        self.params.family()
    }

    pub fn tag(&self) -> &'static str {
        self.family().tag()
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Same hyperparameters, different seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        Self {
            params: self.params.clone(),
            seed,
        }
    }

    pub fn fit(&self, x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize) -> Result<FittedModel> {
        check_training_data(x, y, n_classes)?;
        Ok(match &self.params {
            ModelParams::LogisticRegression(p) => {
                FittedModel::LogisticRegression(LogisticRegression::fit(p, x, y, n_classes))
            }
            ModelParams::GaussianNb(p) => FittedModel::GaussianNb(GaussianNaiveBayes::fit(p, x, y, n_classes)?),
            ModelParams::Knn(p) => FittedModel::Knn(KNearestNeighbors::fit(p, x, y, n_classes)?),
            ModelParams::DecisionTree(p) => FittedModel::DecisionTree(DecisionTree::fit(p, x, y, n_classes)),
            ModelParams::NearestCentroid => FittedModel::NearestCentroid(NearestCentroid::fit(x, y, n_classes)?),
            ModelParams::RandomForest(p) => FittedModel::RandomForest(RandomForest::fit(p, x, y, n_classes, self.seed)),
        })
    }
}

/// Any fitted native model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "model", rename_all = "snake_case")]
pub enum FittedModel {
    LogisticRegression(LogisticRegression),
    GaussianNb(GaussianNaiveBayes),
    Knn(KNearestNeighbors),
    DecisionTree(DecisionTree),
    NearestCentroid(NearestCentroid),
    RandomForest(RandomForest),
}

impl FittedModel {
    fn inner(&self) -> &dyn ProbabilisticClassifier {
        match self {
            FittedModel::LogisticRegression(m) => m,
            FittedModel::GaussianNb(m) => m,
            FittedModel::Knn(m) => m,
            FittedModel::DecisionTree(m) => m,
            FittedModel::NearestCentroid(m) => m,
            FittedModel::RandomForest(m) => m,
        }
    }
}

impl ProbabilisticClassifier for FittedModel {
    fn n_classes(&self) -> usize {
        self.inner().n_classes()
    }

    fn n_features(&self) -> usize {
        self.inner().n_features()
    }

    fn predict_proba_unchecked(&self, x: &[f64]) -> Vec<f64> {
        self.inner().predict_proba_unchecked(x)
    }
}
