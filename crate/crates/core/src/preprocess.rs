//! Train-fitted preprocessing.
//!
//! Stages run in a fixed order, all parameters coming from the training rows:
//!
//! 1. drop every feature whose missing fraction exceeds one half;
//! 2. expand categorical features into one indicator column per training
//!    category (a missing category makes all of its indicators missing);
//! 3. z-score every output column with the mean and population standard
//!    deviation of its observed training values (zero deviation divides by 1);
//! 4. fill each remaining gap with the mean of that column over the `k`
//!    nearest training rows under the nan-aware Euclidean distance
//!    `sqrt(D / |O| · Σ_{j∈O} (x_j - y_j)²)`, where `O` is the set of columns
//!    both rows observe and `D` the total column count. Only training rows
//!    that observe the column are eligible donors; ties go to the lower row
//!    index; with no eligible donor the column's training mean is used.

use std::collections::BTreeSet;

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::dataset::{Cell, FeatureKind, ModalityTable};
use crate::error::{Error, Result};

pub const DEFAULT_NEIGHBORS: usize = 5;
pub const MAX_MISSING_FRACTION: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
enum Encoding {
    Numeric,
    OneHot(Vec<String>),
}

impl Encoding {
    fn width(&self) -> usize {
        match self {
            Encoding::Numeric => 1,
            Encoding::OneHot(cats) => cats.len(),
        }
    }
}

/// Nan-aware k-nearest-neighbour imputer over a fixed reference matrix.
/// Missing entries are `NaN`, both in the reference and in queries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KnnImputer {
    #[serde(with = "nan_matrix")]
    reference: Array2<f64>,
    k: usize,
    column_means: Vec<f64>,
}

impl PartialEq for KnnImputer {
    /// Missing reference entries compare equal to each other.
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.column_means == other.column_means
            && self.reference.dim() == other.reference.dim()
            && self
                .reference
                .iter()
                .zip(other.reference.iter())
                .all(|(a, b)| a == b || (a.is_nan() && b.is_nan()))
    }
}

impl KnnImputer {
    pub fn new(reference: Array2<f64>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        let column_means = reference
            .columns()
            .into_iter()
            .map(|col| {
                let (sum, n) = col
                    .iter()
                    .filter(|v| !v.is_nan())
                    .fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
                if n == 0 {
                    0.0
                } else {
                    sum / n as f64
                }
            })
            .collect();
        Ok(Self {
            reference,
            k,
            column_means,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn reference(&self) -> &Array2<f64> {
        &self.reference
    }

    /// Distance to every reference row; `None` where no column is observed by both.
    fn distances(&self, query: &[f64]) -> Vec<Option<f64>> {
        let d_total = query.len() as f64;
        self.reference
            .rows()
            .into_iter()
            .map(|r| {
                let mut sum = 0.0;
                let mut observed = 0usize;
                for (a, b) in query.iter().zip(r.iter()) {
                    if !a.is_nan() && !b.is_nan() {
                        sum += (a - b) * (a - b);
                        observed += 1;
                    }
                }
                (observed > 0).then(|| (d_total / observed as f64 * sum).sqrt())
            })
            .collect()
    }

    /// Fill the gaps of one row in place. `row_id` is only used for errors.
    pub fn impute_row(&self, row: &mut [f64], row_id: usize) -> Result<()> {
        if row.len() != self.reference.ncols() {
            return Err(Error::DimensionMismatch {
                expected: self.reference.ncols(),
                found: row.len(),
            });
        }
        let missing: Vec<usize> = (0..row.len()).filter(|&j| row[j].is_nan()).collect();
        if missing.is_empty() {
            return Ok(());
        }
        let dist = self.distances(row);
        let mut ranked: Vec<(f64, usize)> = dist.iter().enumerate().filter_map(|(i, d)| d.map(|d| (d, i))).collect();
        if ranked.is_empty() {
            return Err(Error::NoObservedOverlap(row_id));
        }
        ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

        for j in missing {
            let mut sum = 0.0;
            let mut taken = 0usize;
            for &(_, i) in &ranked {
                let v = self.reference[[i, j]];
                if v.is_nan() {
                    continue;
                }
                sum += v;
                taken += 1;
                if taken == self.k {
                    break;
                }
            }
            row[j] = if taken == 0 {
                self.column_means[j]
            } else {
                sum / taken as f64
            };
        }
        Ok(())
    }

    pub fn impute(&self, mut matrix: Array2<f64>) -> Result<Array2<f64>> {
        for (i, mut row) in matrix.rows_mut().into_iter().enumerate() {
            let slice = row.as_slice_mut().expect("standard layout");
            self.impute_row(slice, i)?;
        }
        Ok(matrix)
    }
}

/// Fitted preprocessing for one modality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PreprocessPipeline {
    feature_names: Vec<String>,
    feature_kinds: Vec<FeatureKind>,
    kept: Vec<usize>,
    dropped_features: Vec<String>,
    encodings: Vec<Encoding>,
    output_names: Vec<String>,
    means: Vec<f64>,
    stds: Vec<f64>,
    imputer: KnnImputer,
}

impl PreprocessPipeline {
    /// Fit on the rows `rows` of `table` with the default neighbour count.
    pub fn fit(table: &ModalityTable, rows: &[usize]) -> Result<Self> {
        Self::fit_with_k(table, rows, DEFAULT_NEIGHBORS)
    }

    pub fn fit_with_k(table: &ModalityTable, rows: &[usize], k: usize) -> Result<Self> {
        if rows.len() < k + 1 {
            return Err(Error::TooFewRows {
                required: k + 1,
                found: rows.len(),
            });
        }
        let n = rows.len() as f64;
        let mut kept = Vec::new();
        let mut dropped_features = Vec::new();
        for j in 0..table.n_features() {
            let missing = table.select_rows(rows).filter(|r| r[j].is_missing()).count();
            if missing as f64 / n > MAX_MISSING_FRACTION {
                dropped_features.push(table.feature_names()[j].clone());
            } else {
                kept.push(j);
            }
        }
        if kept.is_empty() {
            return Err(Error::AllFeaturesDropped);
        }

        let mut encodings = Vec::with_capacity(kept.len());
        let mut output_names = Vec::new();
        for &j in &kept {
            let name = &table.feature_names()[j];
            match table.feature_kinds()[j] {
                FeatureKind::Numeric => {
                    encodings.push(Encoding::Numeric);
                    output_names.push(name.clone());
                }
                FeatureKind::Categorical => {
                    let cats: BTreeSet<&str> = table
                        .select_rows(rows)
                        .filter_map(|r| match &r[j] {
                            Cell::Category(s) => Some(s.as_str()),
                            _ => None,
                        })
                        .collect();
                    let cats: Vec<String> = cats.into_iter().map(str::to_string).collect();
                    output_names.extend(cats.iter().map(|c| format!("{name}={c}")));
                    encodings.push(Encoding::OneHot(cats));
                }
            }
        }

        let mut pipeline = Self {
            feature_names: table.feature_names().to_vec(),
            feature_kinds: table.feature_kinds().to_vec(),
            kept,
            dropped_features,
            encodings,
            means: vec![0.0; output_names.len()],
            stds: vec![1.0; output_names.len()],
            output_names,
            imputer: KnnImputer::new(Array2::zeros((0, 0)), k)?,
        };

        let encoded = pipeline.encode(table.select_rows(rows), rows.len());
        for (c, col) in encoded.columns().into_iter().enumerate() {
            let observed: Vec<f64> = col.iter().copied().filter(|v| !v.is_nan()).collect();
            if observed.is_empty() {
                continue;
            }
            let mean = observed.iter().sum::<f64>() / observed.len() as f64;
            let var = observed.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / observed.len() as f64;
            pipeline.means[c] = mean;
            pipeline.stds[c] = var.sqrt();
        }
        let normalized = pipeline.normalize(encoded);
        pipeline.imputer = KnnImputer::new(normalized, k)?;
        Ok(pipeline)
    }

    pub fn dropped_features(&self) -> &[String] {
        &self.dropped_features
    }

    pub fn output_names(&self) -> &[String] {
        &self.output_names
    }

    pub fn n_outputs(&self) -> usize {
        self.output_names.len()
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn stds(&self) -> &[f64] {
        &self.stds
    }

    pub fn imputer(&self) -> &KnnImputer {
        &self.imputer
    }

    /// Categories per retained categorical feature, in indicator-column order.
    pub fn onehot_map(&self) -> Vec<(&str, &[String])> {
        self.kept
            .iter()
            .zip(&self.encodings)
            .filter_map(|(&j, e)| match e {
                Encoding::OneHot(c) => Some((self.feature_names[j].as_str(), c.as_slice())),
                Encoding::Numeric => None,
            })
            .collect()
    }

    fn check_schema(&self, table: &ModalityTable) -> Result<()> {
        if table.feature_names() != self.feature_names.as_slice()
            || table.feature_kinds() != self.feature_kinds.as_slice()
        {
            return Err(Error::InvalidParameter(format!(
                "table {:?} does not have the schema the pipeline was fitted on",
                table.name()
            )));
        }
        Ok(())
    }

    /// Drop and one-hot encode; missing entries become `NaN`.
    fn encode<'a>(&self, rows: impl Iterator<Item = &'a [Cell]>, n_rows: usize) -> Array2<f64> {
        let mut out = Array2::from_elem((n_rows, self.output_names.len()), f64::NAN);
        for (i, row) in rows.enumerate() {
            let mut c = 0;
            for (&j, enc) in self.kept.iter().zip(&self.encodings) {
                match (enc, &row[j]) {
                    (Encoding::Numeric, Cell::Number(v)) => out[[i, c]] = *v,
                    (Encoding::OneHot(cats), Cell::Category(s)) => {
                        for (t, cat) in cats.iter().enumerate() {
                            out[[i, c + t]] = if cat == s { 1.0 } else { 0.0 };
                        }
                    }
                    _ => {}
                }
                c += enc.width();
            }
        }
        out
    }

    fn normalize(&self, mut m: Array2<f64>) -> Array2<f64> {
        for (c, mut col) in m.columns_mut().into_iter().enumerate() {
            let div = if self.stds[c] > 0.0 { self.stds[c] } else { 1.0 };
            let mean = self.means[c];
            col.mapv_inplace(|v| (v - mean) / div);
        }
        m
    }

    /// Drop, encode, normalize and impute `rows` of `table`.
    pub fn apply(&self, table: &ModalityTable, rows: &[usize]) -> Result<Array2<f64>> {
        self.check_schema(table)?;
        self.apply_rows(table.select_rows(rows), rows.len())
    }

    /// Same as [`apply`](Self::apply) for raw rows that follow the fitted schema.
    pub fn apply_rows<'a>(&self, rows: impl Iterator<Item = &'a [Cell]>, n_rows: usize) -> Result<Array2<f64>> {
        let rows: Vec<&[Cell]> = rows.collect();
        if let Some(bad) = rows.iter().find(|r| r.len() != self.feature_names.len()) {
            return Err(Error::DimensionMismatch {
                expected: self.feature_names.len(),
                found: bad.len(),
            });
        }
        debug_assert_eq!(rows.len(), n_rows);
        let encoded = self.encode(rows.into_iter(), n_rows);
        self.imputer.impute(self.normalize(encoded))
    }

    /// Categorical tokens in `rows` that were not seen in training. They are
    /// encoded as all-zero indicators before normalization.
    pub fn unseen_categories<'a>(&self, rows: impl Iterator<Item = &'a [Cell]>) -> Vec<(String, String)> {
        let mut out = BTreeSet::new();
        for row in rows {
            for (&j, enc) in self.kept.iter().zip(&self.encodings) {
                if let (Encoding::OneHot(cats), Cell::Category(s)) = (enc, &row[j]) {
                    if !cats.contains(s) {
                        out.insert((self.feature_names[j].clone(), s.clone()));
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}

/// `Array2<f64>` with `NaN` entries, stored as nullable numbers.
mod nan_matrix {
    use ndarray::Array2;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        rows: usize,
        cols: usize,
        data: Vec<Option<f64>>,
    }

    pub fn serialize<S: Serializer>(m: &Array2<f64>, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            rows: m.nrows(),
            cols: m.ncols(),
            data: m.iter().map(|v| (!v.is_nan()).then_some(*v)).collect(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Array2<f64>, D::Error> {
        let r = Repr::deserialize(d)?;
        let data = r.data.into_iter().map(|v| v.unwrap_or(f64::NAN)).collect();
        Array2::from_shape_vec((r.rows, r.cols), data).map_err(serde::de::Error::custom)
    }
}
