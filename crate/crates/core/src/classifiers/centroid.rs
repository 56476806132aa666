use ndarray::{Array2, ArrayView2};
use serde::{Deserialize, Serialize};

use super::{finalize_probabilities, softmax, ProbabilisticClassifier};
use crate::error::{Error, Result};

/// Probabilities are a softmax over negative Euclidean distances to the class means.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NearestCentroid {
    centroids: Array2<f64>,
}

impl NearestCentroid {
    pub(super) fn fit(x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize) -> Result<Self> {
        let mut centroids = Array2::zeros((n_classes, x.ncols()));
        let mut counts = vec![0usize; n_classes];
        for (row, &k) in x.rows().into_iter().zip(y) {
            counts[k] += 1;
            let mut c = centroids.row_mut(k);
            c += &row;
        }
        if let Some(k) = counts.iter().position(|&c| c == 0) {
            return Err(Error::EmptyClass(k));
        }
        for (k, mut c) in centroids.rows_mut().into_iter().enumerate() {
            c /= counts[k] as f64;
        }
        Ok(Self { centroids })
    }

    pub fn centroids(&self) -> &Array2<f64> {
        &self.centroids
    }
}

impl ProbabilisticClassifier for NearestCentroid {
    fn n_classes(&self) -> usize {
        self.centroids.nrows()
    }

    fn n_features(&self) -> usize {
        self.centroids.ncols()
    }

    fn predict_proba_unchecked(&self, x: &[f64]) -> Vec<f64> {
        let neg: Vec<f64> = self
            .centroids
            .rows()
            .into_iter()
            .map(|c| -c.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
            .collect();
        finalize_probabilities(softmax(&neg))
    }
}
