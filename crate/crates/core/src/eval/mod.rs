//! Evaluation: confusion matrices and G-mean, the paired t-test and
//! win/tie/loss rates, and the cross-validated experiment runner that compares
//! IMBALMED against the unbalanced baseline.
//!
//! G-means are reported as percentages. The runner picks, per fold, the
//! candidate classifier with the highest validation G-mean (first candidate on
//! ties or when the fold has no validation samples) and reports its test score.

mod experiment;
mod metrics;
mod stats;

pub use experiment::{
    annotate, compare_methods, compare_scores, mean_std, run_cv_experiment, run_on_folds, CandidateScore, Comparison,
    ComparisonReport, CvSettings, FoldResult, MethodSummary, SIGNIFICANCE,
};
pub use metrics::{gmean, ConfusionMatrix, GmeanVariant};
pub use stats::{
    ln_gamma, paired_t_test, regularized_incomplete_beta, student_t_cdf, two_sided_p, win_tie_loss, TTest, WinTieLoss,
    TIE_EPSILON,
};
