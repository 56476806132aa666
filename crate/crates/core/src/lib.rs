//! Class-rebalanced undersampling ensembles for imbalanced multimodal tabular data.
//!
//! Each modality gets its own ensemble of classifiers. Every member is trained
//! on an undersampled copy of the training pool whose class composition is one
//! point of a systematically enumerated grid of class-representativeness
//! vectors. Member probabilities are averaged within a modality, the modality
//! averages are averaged again, and the final label is the argmax.
//!
//! The crate is organised bottom-up:
//!
//! * [`dataset`]: modality tables, CSV ingestion, alignment, stratified folds
//! * [`preprocess`]: train-fitted sparsity drop, one-hot, z-score, k-NN imputation
//! * [`balance`]: representativeness enumeration and balanced subsets
//! * [`classifiers`]: probabilistic classifier interface and native models
//! * [`ensemble`]: per-modality ensembles and two-level late fusion
//! * [`eval`]: G-mean, cross-validated experiments, paired t-test, win/tie/loss
//! * [`synth`]: seeded synthetic imbalanced multimodal data
//! * [`cli`]: configuration, orchestration and report documents

pub mod balance;
pub mod classifiers;
pub mod cli;
pub mod dataset;
pub mod ensemble;
pub mod error;
pub mod eval;
pub mod preprocess;
pub mod rng;
pub mod synth;

pub use error::{Error, Result};
