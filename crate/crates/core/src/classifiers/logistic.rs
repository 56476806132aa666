use ndarray::{Array2, ArrayView2};
use serde::{Deserialize, Serialize};

use super::{finalize_probabilities, softmax, ProbabilisticClassifier};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticRegressionParams {
    pub learning_rate: f64,
    pub iterations: usize,
    pub l2: f64,
}

impl Default for LogisticRegressionParams {
    fn default() -> Self {
        Self {
            learning_rate: 0.1,
            iterations: 500,
            l2: 1e-4,
        }
    }
}

/// Multinomial logistic regression. `weights` is `c × (a + 1)`; the last
/// column is the intercept, which is not penalized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticRegression {
    weights: Array2<f64>,
}

fn scores(weights: &Array2<f64>, x: &[f64]) -> Vec<f64> {
    let a = x.len();
    weights
        .rows()
        .into_iter()
        .map(|w| {
            let mut z = w[a];
            for (wj, xj) in w.iter().zip(x) {
                z += wj * xj;
            }
            z
        })
        .collect()
}

/// Mean cross-entropy plus `l2 / 2 · ‖W‖²` (intercepts excluded), and its
/// gradient with respect to `weights`.
pub fn loss_and_gradient(weights: &Array2<f64>, x: ArrayView2<'_, f64>, y: &[usize], l2: f64) -> (f64, Array2<f64>) {
    let (n, a) = x.dim();
    let c = weights.nrows();
    let mut grad = Array2::zeros((c, a + 1));
    let mut loss = 0.0;
    for (row, &label) in x.rows().into_iter().zip(y) {
        let xs = row.to_vec();
        let z = scores(weights, &xs);
        let max = z.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let log_norm = max + z.iter().map(|v| (v - max).exp()).sum::<f64>().ln();
        loss -= z[label] - log_norm;
        for k in 0..c {
            let p = (z[k] - log_norm).exp();
            let residual = p - if k == label { 1.0 } else { 0.0 };
            for j in 0..a {
                grad[[k, j]] += residual * xs[j];
            }
            grad[[k, a]] += residual;
        }
    }
    let n = n as f64;
    loss /= n;
    grad.mapv_inplace(|g| g / n);
    for k in 0..c {
        for j in 0..a {
            loss += 0.5 * l2 * weights[[k, j]] * weights[[k, j]];
            grad[[k, j]] += l2 * weights[[k, j]];
        }
    }
    (loss, grad)
}

impl LogisticRegression {
    pub(super) fn fit(p: &LogisticRegressionParams, x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize) -> Self {
        let mut weights = Array2::zeros((n_classes, x.ncols() + 1));
        for _ in 0..p.iterations {
            let (_, grad) = loss_and_gradient(&weights, x, y, p.l2);
            weights.scaled_add(-p.learning_rate, &grad);
        }
        Self { weights }
    }

    pub fn weights(&self) -> &Array2<f64> {
        &self.weights
    }
}

impl ProbabilisticClassifier for LogisticRegression {
    fn n_classes(&self) -> usize {
        self.weights.nrows()
    }

    fn n_features(&self) -> usize {
        self.weights.ncols() - 1
    }

    fn predict_proba_unchecked(&self, x: &[f64]) -> Vec<f64> {
        finalize_probabilities(softmax(&scores(&self.weights, x)))
    }
}
