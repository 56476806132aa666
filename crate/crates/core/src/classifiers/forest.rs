use ndarray::ArrayView2;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::tree::FeatureSampler;
use super::{finalize_probabilities, DecisionTree, ProbabilisticClassifier, TreeParams};
use crate::rng::rng_for;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaxFeatures {
    /// `max(1, floor(sqrt(a)))`
    Sqrt,
    All,
    Count(usize),
}

impl MaxFeatures {
    fn resolve(self, a: usize) -> usize {
        match self {
            MaxFeatures::Sqrt => ((a as f64).sqrt().floor() as usize).max(1),
            MaxFeatures::All => a,
            MaxFeatures::Count(n) => n.clamp(1, a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForestParams {
    pub n_trees: usize,
    pub bootstrap: bool,
    pub max_features: MaxFeatures,
    pub tree: TreeParams,
}

impl Default for ForestParams {
    fn default() -> Self {
        Self {
            n_trees: 25,
            bootstrap: true,
            max_features: MaxFeatures::Sqrt,
            tree: TreeParams::default(),
        }
    }
}

/// Bagged CART trees with per-split feature subsampling. Probabilities are the
/// mean of the trees' leaf distributions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomForest {
    trees: Vec<DecisionTree>,
    n_classes: usize,
    n_features: usize,
}

impl RandomForest {
    pub(super) fn fit(p: &ForestParams, x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize, seed: u64) -> Self {
        let n = y.len();
        let max_features = p.max_features.resolve(x.ncols());
        let trees = (0..p.n_trees.max(1))
            .map(|t| {
                let mut rng = rng_for(seed, &[0xF0_4E57, t as u64]);
                let samples: Vec<usize> = if p.bootstrap {
                    (0..n).map(|_| rng.gen_range(0..n)).collect()
                } else {
                    (0..n).collect()
                };
                let sampler = FeatureSampler {
                    rng: &mut rng,
                    max_features,
                };
                DecisionTree::grow(&p.tree, x, y, n_classes, samples, Some(sampler))
            })
            .collect();
        Self {
            trees,
            n_classes,
            n_features: x.ncols(),
        }
    }

    pub fn n_trees(&self) -> usize {
        self.trees.len()
    }
}

impl ProbabilisticClassifier for RandomForest {
    fn n_classes(&self) -> usize {
        self.n_classes
    }

    fn n_features(&self) -> usize {
        self.n_features
    }

    fn predict_proba_unchecked(&self, x: &[f64]) -> Vec<f64> {
        let mut acc = vec![0.0; self.n_classes];
        for t in &self.trees {
            for (a, d) in acc.iter_mut().zip(t.leaf_distribution(x)) {
                *a += d;
            }
        }
        let n = self.trees.len() as f64;
        finalize_probabilities(acc.into_iter().map(|v| v / n).collect())
    }
}
