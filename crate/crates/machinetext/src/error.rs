use thiserror::Error;

/// Errors produced by corpus loading, featurization, model training and reporting.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{path}:{line}: {msg}")]
    Malformed { path: String, line: usize, msg: String },

    #[error("missing required column `{0}`")]
    MissingColumn(String),

    #[error("row {row}: label `{value}` is not coercible to 0/1")]
    InvalidLabel { row: usize, value: String },

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("degenerate document: {0}")]
    DegenerateDocument(String),

    #[error("empty lexicon `{0}`")]
    EmptyLexicon(String),

    #[error("empty document")]
    EmptyDocument,

    #[error("corpus must contain both classes")]
    SingleClass,

    #[error("sample too small: need at least {need} values, got {got}")]
    SampleTooSmall { need: usize, got: usize },

    #[error("empty vocabulary after filtering")]
    EmptyVocabulary,

    #[error("degenerate ablation: class vocabularies share no tokens")]
    DegenerateAblation,

    #[error("corpus too small: {0}")]
    CorpusTooSmall(String),

    #[error("zero-variance input: {0}")]
    ZeroVariance(String),

    #[error("prediction length mismatch: {predictions} predictions vs {truth} labels")]
    LengthMismatch { predictions: usize, truth: usize },

    #[error("class {label} has {size} members, fewer than k={k}")]
    ClassSmallerThanK { label: u8, size: usize, k: usize },

    #[error("feature fingerprint mismatch: model was trained on a different feature space")]
    FingerprintMismatch,

    #[error("unsupported operation for model kind `{0}`")]
    UnsupportedKind(String),

    #[error("unsupported model file version `{found}` (supported: {supported})")]
    ModelVersion { found: String, supported: String },

    #[error("negative feature value {value} at row {row}: multinomial NB requires nonnegative counts")]
    NegativeFeature { row: usize, value: f64 },

    #[error("tied vote with tie-breaking disabled")]
    TiedVote,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
