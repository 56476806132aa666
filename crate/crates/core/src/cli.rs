//! Command-line interface: argument parsing, experiment configuration, and
//! report emission.
//!
//! Exit codes: 0 success, 1 I/O or parse failure, 2 invalid parameters,
//! 3 experiment failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::balance::{enumerate_representativeness, enumeration_size};
use crate::classifiers::{ClassifierSpec, Family};
use crate::dataset::{align, load_modality_csv, write_labels_csv, MultimodalDataset};
use crate::ensemble::Mode;
use crate::error::Error;
use crate::eval::{compare_scores, run_on_folds, Comparison, CvSettings, FoldResult, GmeanVariant, MethodSummary};
use crate::synth::{generate, SynthConfig};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_EXPERIMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "imbalmed",
    version,
    about = "Balanced undersampling ensembles with multimodal late fusion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every representativeness vector for (classes, r) as CSV rows `j,w_1..w_c,b_1..b_c`.
    Enumerate {
        #[arg(long)]
        classes: usize,
        #[arg(long)]
        r: f64,
        /// Print a header line first.
        #[arg(long)]
        header: bool,
    },
    /// Run the modes listed in the config and write a report.
    Run(ExperimentArgs),
    /// Run IMBALMED and the unbalanced baseline on the same folds and compare them.
    Compare(ExperimentArgs),
    /// Write a synthetic dataset as modality CSVs plus `labels.csv`.
    GenSynth {
        /// TOML synthetic-data config.
        #[arg(long, conflicts_with = "preset")]
        config: Option<PathBuf>,
        /// Named preset: binary, ternary or adni12m.
        #[arg(long)]
        preset: Option<String>,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// TOML experiment config.
    #[arg(long)]
    pub config: PathBuf,
    /// Report path (overrides `output`).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads; 0 uses every core. Results do not depend on this.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// recall-geomean or paper-literal.
    #[arg(long)]
    pub metric: Option<GmeanVariant>,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub folds: Option<usize>,
}

fn default_folds() -> usize {
    10
}

fn default_val_fraction() -> f64 {
    0.1
}

fn default_modes() -> Vec<Mode> {
    vec![Mode::Imbalmed, Mode::UnbalancedBaseline]
}

/// Flat experiment config. Relative paths resolve against the config file's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub modality_paths: Vec<PathBuf>,
    pub labels_path: PathBuf,
    #[serde(default)]
    pub task: String,
    /// Defaults to 0.1 for two classes and 0.11 otherwise.
    #[serde(default)]
    pub r: Option<f64>,
    #[serde(default = "default_folds")]
    pub folds: usize,
    #[serde(default = "default_val_fraction")]
    pub val_fraction: f64,
    pub classifiers: Vec<String>,
    #[serde(default)]
    pub metric: GmeanVariant,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// Optional flat CSV of per-fold G-means.
    #[serde(default)]
    pub fold_csv: Option<PathBuf>,
    #[serde(default = "default_modes")]
    pub modes: Vec<Mode>,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}

/// The settings that determine a report's content, as echoed into it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub modality_paths: Vec<PathBuf>,
    pub labels_path: PathBuf,
    pub task: String,
    pub r: f64,
    pub folds: usize,
    pub val_fraction: f64,
    pub classifiers: Vec<String>,
    pub metric: GmeanVariant,
    pub seed: u64,
    pub modes: Vec<Mode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub n_samples: usize,
    pub modalities: Vec<String>,
    pub classes: Vec<String>,
    pub class_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodBlock {
    pub mode: Mode,
    pub mean_gmean: f64,
    pub std_gmean: f64,
    pub best_classifier_per_fold: Vec<String>,
    pub folds: Vec<FoldResult>,
}

impl From<MethodSummary> for MethodBlock {
    fn from(s: MethodSummary) -> Self {
        Self {
            mode: s.mode,
            mean_gmean: s.mean,
            std_gmean: s.std,
            best_classifier_per_fold: s.folds.iter().map(|f| f.selected.clone()).collect(),
            folds: s.folds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonBlock {
    pub method: Mode,
    pub against: Mode,
    pub per_fold: Vec<[f64; 2]>,
    #[serde(flatten)]
    pub result: Comparison,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub seed: u64,
    pub config: ConfigEcho,
    pub dataset: DatasetSummary,
    pub methods: Vec<MethodBlock>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub comparison: Option<ComparisonBlock>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Long-format `fold,mode,classifier,gmean` rows.
    pub fn fold_csv(&self) -> String {
        let mut out = String::from("fold,mode,classifier,gmean\n");
        for m in &self.methods {
            for f in &m.folds {
                let _ = writeln!(out, "{},{},{},{}", f.fold_index, m.mode, f.selected, f.test_gmean);
            }
        }
        out
    }

    /// Human-readable summary with G-means to two decimals.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<22} {:>16}  best classifier per fold", "method", "G-mean (%)");
        for m in &self.methods {
            let _ = writeln!(
                out,
                "{:<22} {:>7.2} ± {:<6.2}  {}",
                m.mode.tag(),
                m.mean_gmean,
                m.std_gmean,
                m.best_classifier_per_fold.join(",")
            );
        }
        if let Some(c) = &self.comparison {
            let w = &c.result.win_tie_loss;
            let _ = writeln!(
                out,
                "{} vs {}: W-T-L {:.0}-{:.0}-{:.0} ({})  t = {:.4}  p = {:.4}",
                c.method, c.against, w.win, w.tie, w.loss, c.result.annotation, c.result.t_test.t, c.result.t_test.p
            );
        }
        out
    }
}

/// An error tagged with the exit code of the stage that raised it.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub stage: &'static str,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} failed: {}", self.stage, self.message)
    }
}

fn fail(code: i32, stage: &'static str) -> impl FnOnce(Error) -> CliError {
    move |e| CliError {
        code,
        stage,
        message: e.to_string(),
    }
}

fn invalid(stage: &'static str, message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_INVALID,
        stage,
        message: message.into(),
    }
}

fn io_error(stage: &'static str, path: &Path, e: std::io::Error) -> CliError {
    CliError {
        code: EXIT_IO,
        stage,
        message: format!("{}: {e}", path.display()),
    }
}

/// Parse `args` (program name first), run, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate { classes, r, header } => {
            print!("{}", enumerate_csv(classes, r, header)?);
            Ok(())
        }
        Command::Run(args) => run_experiment(&args, false),
        Command::Compare(args) => run_experiment(&args, true),
        Command::GenSynth {
            config,
            preset,
            out,
            seed,
        } => gen_synth(config.as_deref(), preset.as_deref(), &out, seed),
    }
}

pub fn enumerate_csv(classes: usize, r: f64, header: bool) -> Result<String, CliError> {
    let vectors = enumerate_representativeness(classes, r).map_err(fail(EXIT_INVALID, "enumerate"))?;
    let mut out = String::new();
    if header {
        let w: Vec<String> = (1..=classes).map(|k| format!("w_{k}")).collect();
        let b: Vec<String> = (1..=classes).map(|k| format!("b_{k}")).collect();
        let _ = writeln!(out, "j,{},{}", w.join(","), b.join(","));
    }
    for v in vectors {
        let w: Vec<String> = v.weights.iter().map(u32::to_string).collect();
        let b: Vec<String> = v.fractions.iter().map(f64::to_string).collect();
        let _ = writeln!(out, "{},{},{}", v.index + 1, w.join(","), b.join(","));
    }
    Ok(out)
}

fn resolve(base: &Path, p: &Path) -> PathBuf {
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

pub fn default_r(n_classes: usize) -> f64 {
    if n_classes == 2 {
        0.1
    } else {
        0.11
    }
}

fn run_experiment(args: &ExperimentArgs, force_both: bool) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.config).map_err(|e| io_error("config", &args.config, e))?;
    let mut cfg = ExperimentConfig::from_toml(&text).map_err(|e| CliError {
        code: EXIT_IO,
        stage: "config",
        message: format!("{}: {e}", args.config.display()),
    })?;
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(m) = args.metric {
        cfg.metric = m;
    }
    if let Some(r) = args.r {
        cfg.r = Some(r);
    }
    if let Some(k) = args.folds {
        cfg.folds = k;
    }
    if force_both {
        cfg.modes = default_modes();
    }
    let base = args.config.parent().unwrap_or(Path::new("")).to_path_buf();
    let output = args
        .out
        .clone()
        .or_else(|| cfg.output.as_ref().map(|p| resolve(&base, p)))
        .ok_or_else(|| invalid("config", "no output path: set `output` or pass --out"))?;

    let ds = load_dataset(&cfg, &base)?;
    let report = with_threads(args.threads, || build_report(&cfg, &ds))?;

    write_file(&output, report.to_json())?;
    if let Some(p) = &cfg.fold_csv {
        write_file(&resolve(&base, p), report.fold_csv())?;
    }
    print!("{}", report.summary_table());
    Ok(())
}

fn write_file(path: &Path, contents: String) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| io_error("write", dir, e))?;
    }
    fs::write(path, contents).map_err(|e| io_error("write", path, e))
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> Result<T, CliError> + Send) -> Result<T, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| invalid("threads", e.to_string()))?;
    pool.install(f)
}

pub fn load_dataset(cfg: &ExperimentConfig, base: &Path) -> Result<MultimodalDataset, CliError> {
    if cfg.modality_paths.is_empty() {
        return Err(invalid("config", "modality_paths is empty"));
    }
    let tables = cfg
        .modality_paths
        .iter()
        .map(|p| load_modality_csv(resolve(base, p), None))
        .collect::<crate::Result<Vec<_>>>()
        .map_err(fail(EXIT_IO, "load"))?;
    align(tables, resolve(base, &cfg.labels_path)).map_err(fail(EXIT_IO, "align"))
}

fn settings(cfg: &ExperimentConfig, ds: &MultimodalDataset) -> Result<CvSettings, CliError> {
    let c = ds.n_classes();
    let r = cfg.r.unwrap_or_else(|| default_r(c));
    enumeration_size(c, r).map_err(fail(EXIT_INVALID, "validate"))?;
    if cfg.classifiers.is_empty() {
        return Err(invalid("validate", "at least one classifier tag is required"));
    }
    if cfg.modes.is_empty() {
        return Err(invalid("validate", "at least one mode is required"));
    }
    let candidates = cfg
        .classifiers
        .iter()
        .map(|t| t.parse::<Family>().map(|f| ClassifierSpec::from_family(f, cfg.seed)))
        .collect::<crate::Result<Vec<_>>>()
        .map_err(fail(EXIT_INVALID, "validate"))?;
    // surfaces fold-construction problems as parameter errors
    ds.stratified_kfold(cfg.folds, cfg.val_fraction, cfg.seed)
        .map_err(fail(EXIT_INVALID, "validate"))?;
    Ok(CvSettings {
        folds: cfg.folds,
        val_fraction: cfg.val_fraction,
        r,
        candidates,
        seed: cfg.seed,
        metric: cfg.metric,
    })
}

/// Runs every configured mode on one shared set of folds.
pub fn build_report(cfg: &ExperimentConfig, ds: &MultimodalDataset) -> Result<ReportDocument, CliError> {
    let settings = settings(cfg, ds)?;
    let folds = ds
        .stratified_kfold(settings.folds, settings.val_fraction, settings.seed)
        .map_err(fail(EXIT_INVALID, "validate"))?;
    let mut modes = cfg.modes.clone();
    modes.sort();
    modes.dedup();
    let mut summaries = Vec::with_capacity(modes.len());
    for &mode in &modes {
        let results = run_on_folds(ds, &folds, &settings, mode).map_err(fail(EXIT_EXPERIMENT, "experiment"))?;
        summaries.push(MethodSummary::from_folds(mode, results));
    }
    let comparison = match summaries.as_slice() {
        [a, b] => {
            let (ga, gb) = (a.test_gmeans(), b.test_gmeans());
            let result = compare_scores(&ga, &gb).map_err(fail(EXIT_EXPERIMENT, "compare"))?;
            Some(ComparisonBlock {
                method: a.mode,
                against: b.mode,
                per_fold: ga.into_iter().zip(gb).map(|(x, y)| [x, y]).collect(),
                result,
            })
        }
        _ => None,
    };
    Ok(ReportDocument {
        schema_version: REPORT_SCHEMA_VERSION,
        tool: env!("CARGO_PKG_NAME").to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        seed: settings.seed,
        config: ConfigEcho {
            modality_paths: cfg.modality_paths.clone(),
            labels_path: cfg.labels_path.clone(),
            task: cfg.task.clone(),
            r: settings.r,
            folds: settings.folds,
            val_fraction: settings.val_fraction,
            classifiers: cfg.classifiers.clone(),
            metric: settings.metric,
            seed: settings.seed,
            modes,
        },
        dataset: DatasetSummary {
            n_samples: ds.n_samples(),
            modalities: ds.modalities().iter().map(|m| m.name().to_string()).collect(),
            classes: ds.label_space().classes().to_vec(),
            class_counts: ds.class_counts(),
        },
        methods: summaries.into_iter().map(MethodBlock::from).collect(),
        comparison,
    })
}

fn gen_synth(config: Option<&Path>, preset: Option<&str>, out: &Path, seed: Option<u64>) -> Result<(), CliError> {
    let mut cfg = match config {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| io_error("config", p, e))?;
            toml::from_str::<SynthConfig>(&text).map_err(|e| CliError {
                code: EXIT_IO,
                stage: "config",
                message: format!("{}: {e}", p.display()),
            })?
        }
        None => SynthConfig::preset(preset.unwrap_or("binary"), 0).map_err(fail(EXIT_INVALID, "gen-synth"))?,
    };
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let ds = generate(&cfg).map_err(fail(EXIT_INVALID, "gen-synth"))?;
    write_dataset(&ds, out)?;
    println!(
        "wrote {} modalities and labels for {} samples to {}",
        ds.n_modalities(),
        ds.n_samples(),
        out.display()
    );
    Ok(())
}

/// One `<modality name>.csv` per modality plus `labels.csv`.
pub fn write_dataset(ds: &MultimodalDataset, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|e| io_error("write", dir, e))?;
    let mut written = Vec::new();
    for table in ds.modalities() {
        let path = dir.join(format!("{}.csv", table.name()));
        let file = fs::File::create(&path).map_err(|e| io_error("write", &path, e))?;
        table
            .write_csv(std::io::BufWriter::new(file))
            .map_err(fail(EXIT_IO, "write"))?;
        written.push(path);
    }
    let path = dir.join("labels.csv");
    let file = fs::File::create(&path).map_err(|e| io_error("write", &path, e))?;
    write_labels_csv(std::io::BufWriter::new(file), ds).map_err(fail(EXIT_IO, "write"))?;
    written.push(path);
    Ok(written)
}
