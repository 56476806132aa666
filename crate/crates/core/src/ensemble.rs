//! Per-modality undersampling ensembles and two-level late fusion.
//!
//! Training fits one preprocessing pipeline per modality on the fold's
//! training pool, draws every balanced subset once from the pool's labels (the
//! same sample indices serve every modality, since rows are aligned), and fits
//! one classifier per (modality, subset). Prediction averages member outputs
//! within a modality, averages the modality outputs, and takes the argmax with
//! ties going to the lowest class index.
//!
//! Averages are taken per class component as `min + Σ (v - min) / n` with the
//! terms summed in ascending order, so the fused vector is bit-identical under
//! any permutation of its inputs and exact when all inputs agree.

use std::path::Path;

use ndarray::{Array2, Axis};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balance::{build_all_subsets, RepresentativenessVector};
use crate::classifiers::{ClassifierSpec, FittedModel, ProbabilisticClassifier};
use crate::dataset::{Cell, FoldSplit, LabelSpace, MultimodalDataset};
use crate::error::{Error, Result};
use crate::preprocess::PreprocessPipeline;
use crate::rng::derive_seed;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Imbalmed,
    UnbalancedBaseline,
}

impl Mode {
    pub fn tag(self) -> &'static str {
        match self {
            Mode::Imbalmed => "imbalmed",
            Mode::UnbalancedBaseline => "unbalanced_baseline",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "imbalmed" => Ok(Mode::Imbalmed),
            "unbalanced_baseline" => Ok(Mode::UnbalancedBaseline),
            _ => Err(Error::InvalidParameter(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Member {
    /// `None` for the baseline member trained on the whole pool.
    pub representativeness: Option<RepresentativenessVector>,
    pub model: FittedModel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModalityEnsemble {
    pub modality: usize,
    pub name: String,
    pipeline: PreprocessPipeline,
    members: Vec<Member>,
}

impl ModalityEnsemble {
    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn pipeline(&self) -> &PreprocessPipeline {
        &self.pipeline
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Each member's output for every row of `x` (already preprocessed).
    fn member_outputs_batch(&self, x: &Array2<f64>) -> Result<Vec<Array2<f64>>> {
        self.members
            .iter()
            .map(|m| m.model.predict_proba_batch(x.view()))
            .collect()
    }

    fn preprocess_one(&self, raw: &[Cell]) -> Result<Array2<f64>> {
        self.pipeline.apply_rows(std::iter::once(raw), 1)
    }

    /// Raw member outputs for one sample, in member order.
    pub fn member_outputs(&self, raw: &[Cell]) -> Result<Vec<Vec<f64>>> {
        let x = self.preprocess_one(raw)?;
        self.members
            .iter()
            .map(|m| m.model.predict_proba(x.row(0).as_slice().expect("contiguous")))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultimodalEnsemble {
    format_version: u32,
    modalities: Vec<ModalityEnsemble>,
    label_space: LabelSpace,
    r: f64,
    mode: Mode,
    classifier: ClassifierSpec,
}

/// Uniform mean of probability vectors (see the module notes on summation order).
pub fn fuse_mean(dists: &[Vec<f64>]) -> Result<Vec<f64>> {
    let first = dists
        .first()
        .ok_or_else(|| Error::InvalidParameter("nothing to fuse".into()))?;
    let c = first.len();
    if let Some(bad) = dists.iter().find(|d| d.len() != c) {
        return Err(Error::DimensionMismatch {
            expected: c,
            found: bad.len(),
        });
    }
    let n = dists.len() as f64;
    let mut column = Vec::with_capacity(dists.len());
    Ok((0..c)
        .map(|k| {
            column.clear();
            column.extend(dists.iter().map(|d| d[k]));
            column.sort_by(f64::total_cmp);
            let base = column[0];
            base + column.iter().map(|v| v - base).sum::<f64>() / n
        })
        .collect())
}

/// Index of the largest entry; the first one on ties.
pub fn argmax(p: &[f64]) -> usize {
    let mut best = 0;
    for (k, &v) in p.iter().enumerate().skip(1) {
        if v > p[best] {
            best = k;
        }
    }
    best
}

pub fn train(
    ds: &MultimodalDataset,
    split: &FoldSplit,
    spec: &ClassifierSpec,
    r: f64,
    mode: Mode,
    seed: u64,
) -> Result<MultimodalEnsemble> {
    let c = ds.n_classes();
    let pool = &split.train_idx;
    let pool_labels: Vec<usize> = pool.iter().map(|&i| ds.labels()[i]).collect();

    // subsets index into the pool, shared by every modality
    let subsets: Vec<(Option<RepresentativenessVector>, Vec<usize>)> = match mode {
        Mode::Imbalmed => build_all_subsets(&pool_labels, c, r, seed)?
            .into_iter()
            .map(|s| (Some(s.spec), s.indices))
            .collect(),
        Mode::UnbalancedBaseline => vec![(None, (0..pool.len()).collect())],
    };

    let prepared: Vec<(PreprocessPipeline, Array2<f64>)> = ds
        .modalities()
        .par_iter()
        .map(|table| {
            let pipeline = PreprocessPipeline::fit(table, pool)?;
            let x = pipeline.apply(table, pool)?;
            Ok((pipeline, x))
        })
        .collect::<Result<_>>()?;

    let grid: Vec<(usize, usize)> = (0..prepared.len())
        .flat_map(|i| (0..subsets.len()).map(move |j| (i, j)))
        .collect();
    let models: Vec<FittedModel> = grid
        .par_iter()
        .map(|&(i, j)| {
            let (_, x) = &prepared[i];
            let idx = &subsets[j].1;
            let xs = x.select(Axis(0), idx);
            let ys: Vec<usize> = idx.iter().map(|&p| pool_labels[p]).collect();
            let member_spec = spec.with_seed(derive_seed(spec.seed(), &[seed, i as u64, j as u64]));
            member_spec.fit(xs.view(), &ys, c)
        })
        .collect::<Result<_>>()?;

    let mut models = models.into_iter();
    let modalities = prepared
        .into_iter()
        .enumerate()
        .map(|(i, (pipeline, _))| ModalityEnsemble {
            modality: i,
            name: ds.modalities()[i].name().to_string(),
            pipeline,
            members: subsets
                .iter()
                .map(|(rv, _)| Member {
                    representativeness: rv.clone(),
                    model: models.next().expect("one model per grid cell"),
                })
                .collect(),
        })
        .collect();

    Ok(MultimodalEnsemble {
        format_version: FORMAT_VERSION,
        modalities,
        label_space: ds.label_space().clone(),
        r,
        mode,
        classifier: spec.clone(),
    })
}

/// Mean of the members' outputs for one raw modality row.
pub fn predict_unimodal(ens: &ModalityEnsemble, x: &[Cell]) -> Result<Vec<f64>> {
    fuse_mean(&ens.member_outputs(x)?)
}

/// Mean of the per-modality fused outputs. `sample` holds one raw row per modality.
pub fn predict_multimodal(ens: &MultimodalEnsemble, sample: &[&[Cell]]) -> Result<Vec<f64>> {
    if sample.len() != ens.modalities.len() {
        return Err(Error::DimensionMismatch {
            expected: ens.modalities.len(),
            found: sample.len(),
        });
    }
    let per_modality = ens
        .modalities
        .iter()
        .zip(sample)
        .map(|(m, x)| predict_unimodal(m, x))
        .collect::<Result<Vec<_>>>()?;
    fuse_mean(&per_modality)
}

pub fn predict_class(ens: &MultimodalEnsemble, sample: &[&[Cell]]) -> Result<usize> {
    Ok(argmax(&predict_multimodal(ens, sample)?))
}

impl MultimodalEnsemble {
    pub fn modalities(&self) -> &[ModalityEnsemble] {
        &self.modalities
    }

    pub fn label_space(&self) -> &LabelSpace {
        &self.label_space
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn classifier(&self) -> &ClassifierSpec {
        &self.classifier
    }

    pub fn n_members(&self) -> usize {
        self.modalities.iter().map(ModalityEnsemble::len).sum()
    }

    /// Fused probabilities for dataset rows `idx`, one row per sample.
    /// Equal to calling [`predict_multimodal`] on each sample.
    pub fn predict_proba_rows(&self, ds: &MultimodalDataset, idx: &[usize]) -> Result<Array2<f64>> {
        if ds.n_modalities() != self.modalities.len() {
            return Err(Error::DimensionMismatch {
                expected: self.modalities.len(),
                found: ds.n_modalities(),
            });
        }
        let c = self.label_space.n_classes();
        let per_modality: Vec<Array2<f64>> = self
            .modalities
            .par_iter()
            .zip(ds.modalities().par_iter())
            .map(|(m, table)| {
                let x = m.pipeline.apply(table, idx)?;
                let outs = m.member_outputs_batch(&x)?;
                let mut fused = Array2::zeros((idx.len(), c));
                for row in 0..idx.len() {
                    let dists: Vec<Vec<f64>> = outs.iter().map(|o| o.row(row).to_vec()).collect();
                    fused.row_mut(row).assign(&ndarray::Array1::from(fuse_mean(&dists)?));
                }
                Ok(fused)
            })
            .collect::<Result<_>>()?;
        let mut out = Array2::zeros((idx.len(), c));
        for row in 0..idx.len() {
            let dists: Vec<Vec<f64>> = per_modality.iter().map(|p| p.row(row).to_vec()).collect();
            out.row_mut(row).assign(&ndarray::Array1::from(fuse_mean(&dists)?));
        }
        Ok(out)
    }

    pub fn predict_classes(&self, ds: &MultimodalDataset, idx: &[usize]) -> Result<Vec<usize>> {
        let p = self.predict_proba_rows(ds, idx)?;
        Ok(p.rows()
            .into_iter()
            .map(|r| argmax(r.as_slice().expect("contiguous")))
            .collect())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let ens: Self = serde_json::from_str(text)?;
        if ens.format_version != FORMAT_VERSION {
            return Err(Error::InvalidModel(format!(
                "artifact format version {} is not supported (expected {FORMAT_VERSION})",
                ens.format_version
            )));
        }
        Ok(ens)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()?).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }
}
