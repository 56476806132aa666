use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c × c` counts, rows = true class, columns = predicted class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    counts: Vec<Vec<u64>>,
}

impl ConfusionMatrix {
    pub fn new(n_classes: usize) -> Self {
        Self {
            counts: vec![vec![0; n_classes]; n_classes],
        }
    }

    pub fn from_counts(counts: Vec<Vec<u64>>) -> Result<Self> {
        let c = counts.len();
        if let Some(row) = counts.iter().find(|r| r.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: row.len(),
            });
        }
        Ok(Self { counts })
    }

    pub fn from_predictions(truth: &[usize], predicted: &[usize], n_classes: usize) -> Result<Self> {
        if truth.len() != predicted.len() {
            return Err(Error::DimensionMismatch {
                expected: truth.len(),
                found: predicted.len(),
            });
        }
        let mut cm = Self::new(n_classes);
        for (&t, &p) in truth.iter().zip(predicted) {
            if t >= n_classes || p >= n_classes {
                return Err(Error::InvalidParameter(format!(
                    "class index out of range for {n_classes} classes"
                )));
            }
            cm.counts[t][p] += 1;
        }
        Ok(cm)
    }

    pub fn n_classes(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// One-vs-rest recall of class `k`, 0 when the class has no samples.
    pub fn recall(&self, k: usize) -> f64 {
        let tp = self.counts[k][k];
        let row: u64 = self.counts[k].iter().sum();
        ratio(tp, row)
    }

    /// One-vs-rest specificity of class `k`, 0 when every sample is of class `k`.
    pub fn specificity(&self, k: usize) -> f64 {
        let total = self.total();
        let row: u64 = self.counts[k].iter().sum();
        let col: u64 = self.counts.iter().map(|r| r[k]).sum();
        let tp = self.counts[k][k];
        let fp = col - tp;
        let tn = total - row - fp;
        ratio(tn, tn + fp)
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GmeanVariant {
    /// `(∏ recall_k)^(1/c)`; for two classes this is `sqrt(recall · specificity)`.
    #[default]
    #[serde(alias = "recall-geomean")]
    RecallGeomean,
    /// `(∏ recall_k · specificity_k)^(1/c)`.
    #[serde(alias = "paper-literal")]
    PaperLiteral,
}

impl GmeanVariant {
    pub fn tag(self) -> &'static str {
        match self {
            GmeanVariant::RecallGeomean => "recall-geomean",
            GmeanVariant::PaperLiteral => "paper-literal",
        }
    }
}

impl fmt::Display for GmeanVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GmeanVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "recall-geomean" => Ok(GmeanVariant::RecallGeomean),
            "paper-literal" => Ok(GmeanVariant::PaperLiteral),
            _ => Err(Error::InvalidParameter(format!("unknown metric {s:?}"))),
        }
    }
}

/// G-mean as a fraction in `[0, 1]`.
pub fn gmean(cm: &ConfusionMatrix, variant: GmeanVariant) -> Result<f64> {
    if cm.total() == 0 {
        return Err(Error::InvalidParameter("G-mean of an empty confusion matrix".into()));
    }
    let c = cm.n_classes();
    let product: f64 = (0..c)
        .map(|k| match variant {
            GmeanVariant::RecallGeomean => cm.recall(k),
            GmeanVariant::PaperLiteral => cm.recall(k) * cm.specificity(k),
        })
        .product();
    Ok(product.powf(1.0 / c as f64))
}
