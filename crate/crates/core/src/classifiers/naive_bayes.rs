use ndarray::{Array2, ArrayView2};
use serde::{Deserialize, Serialize};

use super::{finalize_probabilities, softmax, ProbabilisticClassifier};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianNbParams {
    pub var_floor: f64,
}

impl Default for GaussianNbParams {
    fn default() -> Self {
        Self { var_floor: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianNaiveBayes {
    log_priors: Vec<f64>,
    means: Array2<f64>,
    variances: Array2<f64>,
}

impl GaussianNaiveBayes {
    pub(super) fn fit(p: &GaussianNbParams, x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize) -> Result<Self> {
        let a = x.ncols();
        let mut counts = vec![0usize; n_classes];
        let mut means = Array2::zeros((n_classes, a));
        for (row, &k) in x.rows().into_iter().zip(y) {
            counts[k] += 1;
            let mut m = means.row_mut(k);
            m += &row;
        }
        if let Some(k) = counts.iter().position(|&c| c == 0) {
            return Err(Error::EmptyClass(k));
        }
        for (k, mut m) in means.rows_mut().into_iter().enumerate() {
            m /= counts[k] as f64;
        }
        let mut variances = Array2::<f64>::zeros((n_classes, a));
        for (row, &k) in x.rows().into_iter().zip(y) {
            for j in 0..a {
                let d = row[j] - means[[k, j]];
                variances[[k, j]] += d * d;
            }
        }
        for (k, mut v) in variances.rows_mut().into_iter().enumerate() {
            v.mapv_inplace(|s| (s / counts[k] as f64).max(p.var_floor));
        }
        let n = y.len() as f64;
        Ok(Self {
            log_priors: counts.iter().map(|&c| (c as f64 / n).ln()).collect(),
            means,
            variances,
        })
    }

    pub fn means(&self) -> &Array2<f64> {
        &self.means
    }

    pub fn variances(&self) -> &Array2<f64> {
        &self.variances
    }

    pub fn priors(&self) -> Vec<f64> {
        self.log_priors.iter().map(|l| l.exp()).collect()
    }
}

impl ProbabilisticClassifier for GaussianNaiveBayes {
    fn n_classes(&self) -> usize {
        self.log_priors.len()
    }

    fn n_features(&self) -> usize {
        self.means.ncols()
    }

    fn predict_proba_unchecked(&self, x: &[f64]) -> Vec<f64> {
        let joint: Vec<f64> = (0..self.n_classes())
            .map(|k| {
                let mut ll = self.log_priors[k];
                for (j, &v) in x.iter().enumerate() {
                    let var = self.variances[[k, j]];
                    let d = v - self.means[[k, j]];
                    ll -= 0.5 * (2.0 * std::f64::consts::PI * var).ln() + d * d / (2.0 * var);
                }
                ll
            })
            .collect();
        finalize_probabilities(softmax(&joint))
    }
}
