//! Multimodal tabular data: modality tables with missing values, CSV
//! ingestion, sample alignment across modalities and stratified folds.
//!
//! CSV conventions: UTF-8, comma separated, one header row. The first column of
//! a modality file holds the sample id; every other column is a feature. A cell
//! that is empty or exactly `NA` (after trimming whitespace) is missing. The
//! labels file has an id column followed by a column named `label`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::io::Read;
use std::path::Path;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::rng_for;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeatureKind {
    Numeric,
    Categorical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Cell {
    Missing,
    Number(f64),
    Category(String),
}

impl Cell {
    pub fn is_missing(&self) -> bool {
        matches!(self, Cell::Missing)
    }
}

pub(crate) fn is_missing_token(raw: &str) -> bool {
    let t = raw.trim();
    t.is_empty() || t == "NA"
}

/// Ordered class names. Class index `k` is the position in [`classes`](Self::classes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSpace {
    classes: Vec<String>,
}

impl LabelSpace {
    pub fn new(classes: Vec<String>) -> Result<Self> {
        if classes.len() < 2 {
            return Err(Error::TooFewClasses(classes.len()));
        }
        let mut seen = HashSet::new();
        for c in &classes {
            if !seen.insert(c.as_str()) {
                return Err(Error::InvalidParameter(format!("duplicate class name {c:?}")));
            }
        }
        Ok(Self { classes })
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c == name)
    }
}

/// One modality: `n_samples × n_features` cells plus the sample ids of the rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModalityTable {
    name: String,
    feature_names: Vec<String>,
    feature_kinds: Vec<FeatureKind>,
    rows: Vec<Vec<Cell>>,
    sample_ids: Vec<String>,
}

impl ModalityTable {
    pub fn new(
        name: impl Into<String>,
        feature_names: Vec<String>,
        feature_kinds: Vec<FeatureKind>,
        rows: Vec<Vec<Cell>>,
        sample_ids: Vec<String>,
    ) -> Result<Self> {
        let name = name.into();
        if feature_names.len() != feature_kinds.len() {
            return Err(Error::DimensionMismatch {
                expected: feature_names.len(),
                found: feature_kinds.len(),
            });
        }
        if rows.len() != sample_ids.len() {
            return Err(Error::DimensionMismatch {
                expected: sample_ids.len(),
                found: rows.len(),
            });
        }
        if rows.is_empty() {
            return Err(Error::NoDataRows(name));
        }
        let mut seen = HashSet::with_capacity(sample_ids.len());
        for id in &sample_ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateSampleId(id.clone()));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != feature_names.len() {
                return Err(Error::MalformedRow {
                    line: i + 2,
                    expected: feature_names.len() + 1,
                    found: row.len() + 1,
                });
            }
            for (cell, kind) in row.iter().zip(&feature_kinds) {
                let ok = match (cell, kind) {
                    (Cell::Missing, _) => true,
                    (Cell::Number(v), FeatureKind::Numeric) => v.is_finite(),
                    (Cell::Category(_), FeatureKind::Categorical) => true,
                    _ => false,
                };
                if !ok {
                    return Err(Error::InvalidParameter(format!(
                        "cell {cell:?} in row {i} does not match its column kind"
                    )));
                }
            }
        }
        Ok(Self {
            name,
            feature_names,
            feature_kinds,
            rows,
            sample_ids,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn feature_kinds(&self) -> &[FeatureKind] {
        &self.feature_kinds
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn sample_ids(&self) -> &[String] {
        &self.sample_ids
    }

    pub fn row(&self, i: usize) -> &[Cell] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn missing_count(&self) -> usize {
        self.rows.iter().flatten().filter(|c| c.is_missing()).count()
    }

    /// Rows gathered by index, in the order given.
    pub fn select_rows<'a>(&'a self, idx: &'a [usize]) -> impl Iterator<Item = &'a [Cell]> + 'a {
        idx.iter().map(move |&i| self.rows[i].as_slice())
    }

    /// Same table with rows reordered to `ids`. Every id must be present.
    fn reindexed(&self, ids: &[String]) -> Self {
        let pos: HashMap<&str, usize> = self
            .sample_ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        let rows = ids.iter().map(|id| self.rows[pos[id.as_str()]].clone()).collect();
        Self {
            name: self.name.clone(),
            feature_names: self.feature_names.clone(),
            feature_kinds: self.feature_kinds.clone(),
            rows,
            sample_ids: ids.to_vec(),
        }
    }

    /// Write in the modality CSV format. Numbers use Rust's shortest round-trip
    /// representation so a written table parses back to identical values.
    pub fn write_csv<W: std::io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header = vec!["id".to_string()];
        header.extend(self.feature_names.iter().cloned());
        w.write_record(&header)?;
        for (id, row) in self.sample_ids.iter().zip(&self.rows) {
            let mut rec = Vec::with_capacity(row.len() + 1);
            rec.push(id.clone());
            for cell in row {
                rec.push(match cell {
                    Cell::Missing => String::new(),
                    Cell::Number(v) => format!("{v}"),
                    Cell::Category(s) => s.clone(),
                });
            }
            w.write_record(&rec)?;
        }
        w.flush().map_err(|e| Error::io("<csv writer>", e))?;
        Ok(())
    }
}

/// Parse a modality CSV file. The table name is the file stem.
pub fn load_modality_csv(
    path: impl AsRef<Path>,
    kind_hints: Option<&HashMap<String, FeatureKind>>,
) -> Result<ModalityTable> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "modality".to_string());
    read_modality_csv(file, name, kind_hints)
}

pub fn read_modality_csv<R: Read>(
    reader: R,
    name: impl Into<String>,
    kind_hints: Option<&HashMap<String, FeatureKind>>,
) -> Result<ModalityTable> {
    let name = name.into();
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);
    let header: Vec<String> = rdr.headers()?.iter().map(|h| h.trim().to_string()).collect();
    if header.is_empty() {
        return Err(Error::NoDataRows(name));
    }
    let feature_names = header[1..].to_vec();

    let mut ids = Vec::new();
    let mut raw: Vec<Vec<String>> = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        if rec.len() != header.len() {
            return Err(Error::MalformedRow {
                line: i + 2,
                expected: header.len(),
                found: rec.len(),
            });
        }
        ids.push(rec[0].trim().to_string());
        raw.push(rec.iter().skip(1).map(str::to_string).collect());
    }
    if raw.is_empty() {
        return Err(Error::NoDataRows(name));
    }

    let kinds: Vec<FeatureKind> = feature_names
        .iter()
        .enumerate()
        .map(|(j, fname)| {
            if let Some(k) = kind_hints.and_then(|h| h.get(fname)) {
                return *k;
            }
            let numeric = raw.iter().all(|row| {
                let cell = &row[j];
                is_missing_token(cell) || cell.trim().parse::<f64>().map(f64::is_finite).unwrap_or(false)
            });
            if numeric {
                FeatureKind::Numeric
            } else {
                FeatureKind::Categorical
            }
        })
        .collect();

    let mut rows = Vec::with_capacity(raw.len());
    for row in raw {
        let mut cells = Vec::with_capacity(row.len());
        for (j, cell) in row.into_iter().enumerate() {
            if is_missing_token(&cell) {
                cells.push(Cell::Missing);
                continue;
            }
            let t = cell.trim();
            cells.push(match kinds[j] {
                FeatureKind::Numeric => match t.parse::<f64>() {
                    Ok(v) if v.is_finite() => Cell::Number(v),
                    _ => {
                        return Err(Error::InvalidNumber {
                            column: feature_names[j].clone(),
                            value: t.to_string(),
                        })
                    }
                },
                FeatureKind::Categorical => Cell::Category(t.to_string()),
            });
        }
        rows.push(cells);
    }

    ModalityTable::new(name, feature_names, kinds, rows, ids)
}

/// Read an `id,label` file into `(id, label)` pairs.
pub fn read_labels_csv<R: Read>(reader: R) -> Result<Vec<(String, String)>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let header = rdr.headers()?.clone();
    let label_col = header
        .iter()
        .position(|h| h.trim() == "label")
        .filter(|&p| p > 0)
        .ok_or(Error::LabelColumnMissing)?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for rec in rdr.records() {
        let rec = rec?;
        let id = rec[0].trim().to_string();
        let label = rec.get(label_col).unwrap_or("").trim().to_string();
        if is_missing_token(&label) {
            continue;
        }
        if !seen.insert(id.clone()) {
            return Err(Error::DuplicateSampleId(id));
        }
        out.push((id, label));
    }
    Ok(out)
}

pub fn write_labels_csv<W: std::io::Write>(writer: W, ds: &MultimodalDataset) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["id", "label"])?;
    for (id, &y) in ds.sample_ids.iter().zip(&ds.labels) {
        w.write_record([id.as_str(), ds.label_space.classes()[y].as_str()])?;
    }
    w.flush().map_err(|e| Error::io("<csv writer>", e))?;
    Ok(())
}

/// Modality tables aligned row-for-row on a canonical sample order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultimodalDataset {
    modalities: Vec<ModalityTable>,
    labels: Vec<usize>,
    label_space: LabelSpace,
    sample_ids: Vec<String>,
}

impl MultimodalDataset {
    pub fn new(modalities: Vec<ModalityTable>, labels: Vec<usize>, label_space: LabelSpace) -> Result<Self> {
        let first = modalities
            .first()
            .ok_or_else(|| Error::InvalidParameter("a dataset needs at least one modality".into()))?;
        let sample_ids = first.sample_ids().to_vec();
        for m in &modalities[1..] {
            if m.sample_ids() != sample_ids.as_slice() {
                return Err(Error::InvalidParameter(format!(
                    "modality {:?} is not row-aligned with {:?}",
                    m.name(),
                    first.name()
                )));
            }
        }
        if labels.len() != sample_ids.len() {
            return Err(Error::DimensionMismatch {
                expected: sample_ids.len(),
                found: labels.len(),
            });
        }
        if let Some(&bad) = labels.iter().find(|&&y| y >= label_space.n_classes()) {
            return Err(Error::InvalidParameter(format!("label index {bad} out of range")));
        }
        Ok(Self {
            modalities,
            labels,
            label_space,
            sample_ids,
        })
    }

    pub fn modalities(&self) -> &[ModalityTable] {
        &self.modalities
    }

    pub fn n_modalities(&self) -> usize {
        self.modalities.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label_space(&self) -> &LabelSpace {
        &self.label_space
    }

    pub fn n_classes(&self) -> usize {
        self.label_space.n_classes()
    }

    pub fn n_samples(&self) -> usize {
        self.sample_ids.len()
    }

    pub fn sample_ids(&self) -> &[String] {
        &self.sample_ids
    }

    pub fn class_counts(&self) -> Vec<usize> {
        class_counts(&self.labels, self.n_classes())
    }

    /// Raw cells of sample `i`, one slice per modality.
    pub fn sample(&self, i: usize) -> Vec<&[Cell]> {
        self.modalities.iter().map(|m| m.row(i)).collect()
    }

    pub fn stratified_kfold(&self, k: usize, val_fraction: f64, seed: u64) -> Result<Vec<FoldSplit>> {
        stratified_kfold(&self.labels, self.n_classes(), k, val_fraction, seed)
    }
}

pub(crate) fn class_counts(labels: &[usize], n_classes: usize) -> Vec<usize> {
    let mut counts = vec![0; n_classes];
    for &y in labels {
        counts[y] += 1;
    }
    counts
}

/// Join modality tables with a labels file on sample id.
pub fn align(tables: Vec<ModalityTable>, labels_csv: impl AsRef<Path>) -> Result<MultimodalDataset> {
    let path = labels_csv.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    align_with_labels(tables, &read_labels_csv(file)?)
}

/// The canonical id order is the lexicographic order of the ids shared by every
/// table and the label list, so it does not depend on the row order of any input.
pub fn align_with_labels(tables: Vec<ModalityTable>, labels: &[(String, String)]) -> Result<MultimodalDataset> {
    if tables.is_empty() {
        return Err(Error::InvalidParameter("align needs at least one table".into()));
    }
    let label_of: HashMap<&str, &str> = labels.iter().map(|(i, l)| (i.as_str(), l.as_str())).collect();

    let mut common: BTreeSet<&str> = tables[0].sample_ids().iter().map(String::as_str).collect();
    for t in &tables[1..] {
        let ids: HashSet<&str> = t.sample_ids().iter().map(String::as_str).collect();
        common.retain(|id| ids.contains(id));
    }
    common.retain(|id| label_of.contains_key(id));
    if common.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    let ids: Vec<String> = common.iter().map(|s| s.to_string()).collect();

    let mut names = Vec::with_capacity(ids.len());
    for id in &ids {
        let l = label_of
            .get(id.as_str())
            .ok_or_else(|| Error::UnlabeledSample(id.clone()))?;
        names.push(*l);
    }
    let classes: Vec<String> = names
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(str::to_string)
        .collect();
    let label_space = LabelSpace::new(classes)?;
    let y = names
        .iter()
        .map(|n| label_space.index_of(n).expect("label drawn from the same set"))
        .collect();

    let modalities = tables.iter().map(|t| t.reindexed(&ids)).collect();
    MultimodalDataset::new(modalities, y, label_space)
}

/// Train/validation/test partition for one cross-validation fold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldSplit {
    pub fold_index: usize,
    pub train_idx: Vec<usize>,
    pub val_idx: Vec<usize>,
    pub test_idx: Vec<usize>,
}

/// Stratified k-fold with a stratified validation slice carved from each
/// fold's training portion.
///
/// Each class is shuffled and dealt round-robin into `k` shards, so shard sizes
/// per class differ by at most one. Fold `i` tests on shard `i`. From the
/// remaining samples of each class, `max(1, round(val_fraction · remaining))`
/// go to validation (none when `val_fraction == 0`). All index lists are sorted.
pub fn stratified_kfold(
    labels: &[usize],
    n_classes: usize,
    k: usize,
    val_fraction: f64,
    seed: u64,
) -> Result<Vec<FoldSplit>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    if !(0.0..1.0).contains(&val_fraction) {
        return Err(Error::InvalidParameter(format!(
            "val_fraction must lie in [0, 1), got {val_fraction}"
        )));
    }
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); n_classes];
    for (i, &y) in labels.iter().enumerate() {
        if y >= n_classes {
            return Err(Error::InvalidParameter(format!("label index {y} out of range")));
        }
        by_class[y].push(i);
    }
    for (class, members) in by_class.iter().enumerate() {
        if members.len() < k {
            return Err(Error::InsufficientClassCount {
                class,
                count: members.len(),
                required: k,
            });
        }
    }

    // shards[class][fold]
    let shards: Vec<Vec<Vec<usize>>> = by_class
        .iter()
        .enumerate()
        .map(|(class, members)| {
            let mut shuffled = members.clone();
            shuffled.shuffle(&mut rng_for(seed, &[0x5EED_F01D, class as u64]));
            let mut out = vec![Vec::new(); k];
            for (pos, idx) in shuffled.into_iter().enumerate() {
                out[pos % k].push(idx);
            }
            out
        })
        .collect();

    let mut folds = Vec::with_capacity(k);
    for fold in 0..k {
        let mut train = Vec::new();
        let mut val = Vec::new();
        let mut test = Vec::new();
        for (class, class_shards) in shards.iter().enumerate() {
            test.extend_from_slice(&class_shards[fold]);
            let mut rest: Vec<usize> = class_shards
                .iter()
                .enumerate()
                .filter(|(f, _)| *f != fold)
                .flat_map(|(_, s)| s.iter().copied())
                .collect();
            rest.sort_unstable();
            let n_val = if val_fraction > 0.0 {
                ((val_fraction * rest.len() as f64).round() as usize).max(1)
            } else {
                0
            };
            if n_val >= rest.len() {
                return Err(Error::InsufficientClassCount {
                    class,
                    count: rest.len() + class_shards[fold].len(),
                    required: k + 1,
                });
            }
            rest.shuffle(&mut rng_for(seed, &[0x0A11_DA7E, fold as u64, class as u64]));
            val.extend_from_slice(&rest[..n_val]);
            train.extend_from_slice(&rest[n_val..]);
        }
        train.sort_unstable();
        val.sort_unstable();
        test.sort_unstable();
        folds.push(FoldSplit {
            fold_index: fold,
            train_idx: train,
            val_idx: val,
            test_idx: test,
        });
    }
    Ok(folds)
}
