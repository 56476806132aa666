use ndarray::{Array2, ArrayView2};
use serde::{Deserialize, Serialize};

use super::{finalize_probabilities, ProbabilisticClassifier};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnnParams {
    pub k: usize,
}

impl Default for KnnParams {
    fn default() -> Self {
        Self { k: 5 }
    }
}

/// Vote-fraction k-nearest-neighbours. Distance ties go to the lower
/// training index; `k` is capped at the training size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KNearestNeighbors {
    k: usize,
    n_classes: usize,
    x: Array2<f64>,
    y: Vec<usize>,
}

impl KNearestNeighbors {
    pub(super) fn fit(p: &KnnParams, x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize) -> Result<Self> {
        if p.k == 0 {
            return Err(Error::InvalidParameter("knn needs k >= 1".into()));
        }
        Ok(Self {
            k: p.k.min(y.len()),
            n_classes,
            x: x.to_owned(),
            y: y.to_vec(),
        })
    }
}

impl ProbabilisticClassifier for KNearestNeighbors {
    fn n_classes(&self) -> usize {
        self.n_classes
    }

    fn n_features(&self) -> usize {
        self.x.ncols()
    }

    fn predict_proba_unchecked(&self, q: &[f64]) -> Vec<f64> {
        let mut d: Vec<(f64, usize)> = self
            .x
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, r)| (r.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>(), i))
            .collect();
        d.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut votes = vec![0.0; self.n_classes];
        for &(_, i) in &d[..self.k] {
            votes[self.y[i]] += 1.0;
        }
        votes.iter_mut().for_each(|v| *v /= self.k as f64);
        finalize_probabilities(votes)
    }
}
