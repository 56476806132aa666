use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed CSV row {line}: expected {expected} fields, found {found}")]
    MalformedRow { line: usize, expected: usize, found: usize },
    #[error("duplicate sample id {0:?}")]
    DuplicateSampleId(String),
    #[error("table {0:?} has no data rows")]
    NoDataRows(String),
    #[error("column {column:?} is declared numeric but holds {value:?}")]
    InvalidNumber { column: String, value: String },
    #[error("labels file has no `label` column")]
    LabelColumnMissing,
    #[error("no sample id is shared by every modality and the labels file")]
    EmptyIntersection,
    #[error("sample id {0:?} has no label")]
    UnlabeledSample(String),
    #[error("label space needs at least two classes, found {0}")]
    TooFewClasses(usize),
    #[error("class {class} has {count} samples, need at least {required}")]
    InsufficientClassCount {
        class: usize,
        count: usize,
        required: usize,
    },
    #[error("class {0} has no samples in the pool")]
    EmptyClass(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("every feature was dropped by the sparsity filter")]
    AllFeaturesDropped,
    #[error("need at least {required} training rows, got {found}")]
    TooFewRows { required: usize, found: usize },
    #[error("row {0} shares no observed column with any reference row")]
    NoObservedOverlap(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("non-finite value in classifier input")]
    NonFiniteInput,
    #[error("invalid model data: {0}")]
    InvalidModel(String),
    #[error("no candidate classifier trained successfully in fold {fold}: {reason}")]
    NoCandidate { fold: usize, reason: String },
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
