//! Seeded synthetic imbalanced multimodal data.
//!
//! Numeric features of class `k` are drawn from an isotropic unit Gaussian
//! centred at `separation / √2 · (e_k − 1/c)` on the first `c` numeric
//! coordinates (zero elsewhere), so every pair of class means is exactly
//! `separation` apart. Categorical features take one of three tokens with
//! class-dependent probabilities `softmax(separation / 2 · [t == k mod 3])`.
//! Every cell is blanked independently with probability `missing_rate`.
//! Class counts are `round(p_k · n)` for all but the last class, which takes
//! the remainder; rows are shuffled.

use ndarray::Array2;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::dataset::{Cell, FeatureKind, LabelSpace, ModalityTable, MultimodalDataset};
use crate::error::{Error, Result};
use crate::rng::rng_for;

const CATEGORY_TOKENS: [&str; 3] = ["a", "b", "c"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModalitySpec {
    pub n_numeric: usize,
    #[serde(default)]
    pub n_categorical: usize,
    pub separation: f64,
}

impl ModalitySpec {
    pub fn new(n_numeric: usize, n_categorical: usize, separation: f64) -> Self {
        Self {
            n_numeric,
            n_categorical,
            separation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub n_samples: usize,
    pub class_proportions: Vec<f64>,
    pub modalities: Vec<ModalitySpec>,
    #[serde(default)]
    pub missing_rate: f64,
    #[serde(default)]
    pub seed: u64,
}

impl SynthConfig {
    /// Named presets: `binary`, `ternary`, and `adni12m` (1,340 samples with a
    /// 91.34% / 8.66% split, three modalities at separation 2).
    pub fn preset(name: &str, seed: u64) -> Result<Self> {
        let three = |sep: f64| vec![ModalitySpec::new(5, 1, sep); 3];
        let cfg = match name {
            "binary" => Self {
                n_samples: 600,
                class_proportions: vec![0.8, 0.2],
                modalities: three(2.0),
                missing_rate: 0.05,
                seed,
            },
            "ternary" => Self {
                n_samples: 900,
                class_proportions: vec![0.6, 0.25, 0.15],
                modalities: three(2.0),
                missing_rate: 0.05,
                seed,
            },
            "adni12m" => Self {
                n_samples: 1340,
                class_proportions: vec![0.9134, 0.0866],
                modalities: three(2.0),
                missing_rate: 0.05,
                seed,
            },
            _ => return Err(Error::InvalidParameter(format!("unknown synthetic preset {name:?}"))),
        };
        Ok(cfg)
    }

    pub fn n_classes(&self) -> usize {
        self.class_proportions.len()
    }

    pub fn validate(&self) -> Result<()> {
        let c = self.n_classes();
        if c < 2 {
            return Err(Error::TooFewClasses(c));
        }
        if self.class_proportions.iter().any(|&p| p.is_nan() || p <= 0.0) {
            return Err(Error::InvalidParameter("class proportions must be positive".into()));
        }
        let total: f64 = self.class_proportions.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "class proportions sum to {total}, not 1"
            )));
        }
        if !(0.0..1.0).contains(&self.missing_rate) {
            return Err(Error::InvalidParameter(format!(
                "missing_rate must lie in [0, 1), got {}",
                self.missing_rate
            )));
        }
        if self.modalities.is_empty() {
            return Err(Error::InvalidParameter("at least one modality is required".into()));
        }
        for (i, m) in self.modalities.iter().enumerate() {
            if !m.separation.is_finite() || m.separation < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "modality {i}: separation must be >= 0"
                )));
            }
            if m.n_numeric + m.n_categorical == 0 {
                return Err(Error::InvalidParameter(format!("modality {i} has no features")));
            }
            if m.separation > 0.0 && m.n_numeric < c {
                return Err(Error::InvalidParameter(format!(
                    "modality {i}: placing {c} class means needs at least {c} numeric features"
                )));
            }
        }
        Ok(())
    }

    pub fn class_counts(&self) -> Result<Vec<usize>> {
        let n = self.n_samples as f64;
        let c = self.n_classes();
        let mut counts: Vec<i64> = self.class_proportions[..c - 1]
            .iter()
            .map(|p| (p * n).round() as i64)
            .collect();
        counts.push(self.n_samples as i64 - counts.iter().sum::<i64>());
        if let Some(k) = counts.iter().position(|&x| x <= 0) {
            return Err(Error::EmptyClass(k));
        }
        Ok(counts.into_iter().map(|x| x as usize).collect())
    }

    /// Configured numeric class means of modality `i`, `c × n_numeric`.
    pub fn class_means(&self, i: usize) -> Array2<f64> {
        let c = self.n_classes();
        let m = &self.modalities[i];
        let scale = m.separation / std::f64::consts::SQRT_2;
        Array2::from_shape_fn((c, m.n_numeric), |(k, j)| {
            if j < c && m.separation > 0.0 {
                scale * ((j == k) as u8 as f64 - 1.0 / c as f64)
            } else {
                0.0
            }
        })
    }

    /// Category probabilities of class `k` in modality `i`.
    pub fn category_probabilities(&self, i: usize, k: usize) -> [f64; 3] {
        let s = self.modalities[i].separation / 2.0;
        let logits: Vec<f64> = (0..3).map(|t| if t == k % 3 { s } else { 0.0 }).collect();
        let z: f64 = logits.iter().map(|l| l.exp()).sum();
        [logits[0].exp() / z, logits[1].exp() / z, logits[2].exp() / z]
    }
}

pub fn generate(cfg: &SynthConfig) -> Result<MultimodalDataset> {
    cfg.validate()?;
    let counts = cfg.class_counts()?;
    let c = cfg.n_classes();
    let n = cfg.n_samples;

    let mut labels: Vec<usize> = counts
        .iter()
        .enumerate()
        .flat_map(|(k, &m)| std::iter::repeat_n(k, m))
        .collect();
    labels.shuffle(&mut rng_for(cfg.seed, &[0x1ABE1]));

    let width = n.to_string().len();
    let ids: Vec<String> = (1..=n).map(|i| format!("s{i:0width$}")).collect();

    let mut tables = Vec::with_capacity(cfg.modalities.len());
    for (i, m) in cfg.modalities.iter().enumerate() {
        let means = cfg.class_means(i);
        let cat_probs: Vec<[f64; 3]> = (0..c).map(|k| cfg.category_probabilities(i, k)).collect();
        let mut rng = rng_for(cfg.seed, &[0xDA7A, i as u64]);
        let mut rows = Vec::with_capacity(n);
        for &k in &labels {
            let mut row = Vec::with_capacity(m.n_numeric + m.n_categorical);
            for j in 0..m.n_numeric {
                let z: f64 = rng.sample(StandardNormal);
                row.push(Cell::Number(means[[k, j]] + z));
            }
            for _ in 0..m.n_categorical {
                let u: f64 = rng.gen();
                let p = &cat_probs[k];
                let t = if u < p[0] {
                    0
                } else if u < p[0] + p[1] {
                    1
                } else {
                    2
                };
                row.push(Cell::Category(CATEGORY_TOKENS[t].to_string()));
            }
            for cell in row.iter_mut() {
                if rng.gen::<f64>() < cfg.missing_rate {
                    *cell = Cell::Missing;
                }
            }
            rows.push(row);
        }
        let mut names: Vec<String> = (1..=m.n_numeric).map(|j| format!("m{}_x{j}", i + 1)).collect();
        names.extend((1..=m.n_categorical).map(|j| format!("m{}_g{j}", i + 1)));
        let mut kinds = vec![FeatureKind::Numeric; m.n_numeric];
        kinds.extend(std::iter::repeat_n(FeatureKind::Categorical, m.n_categorical));
        tables.push(ModalityTable::new(
            format!("modality_{}", i + 1),
            names,
            kinds,
            rows,
            ids.clone(),
        )?);
    }

    let label_space = LabelSpace::new((0..c).map(|k| format!("class_{k}")).collect())?;
    MultimodalDataset::new(tables, labels, label_space)
}
