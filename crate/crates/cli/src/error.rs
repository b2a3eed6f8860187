use std::path::PathBuf;
use thiserror::Error;

/// Failure categories of the command-line pipeline.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("line {line}: malformed row: {reason}")]
    MalformedRow { line: u64, reason: String },

    #[error("line {line}: duplicate observation for ({entity}, {year}, {variable})")]
    DuplicateObservation {
        line: u64,
        entity: String,
        year: i32,
        variable: String,
    },

    #[error("variable `{0}` is not mapped to a model variable")]
    UnmappedVariable(String),

    #[error("dummy threshold {threshold} lies outside the sample years {first}..={last}")]
    ThresholdOutOfRange { threshold: i32, first: i32, last: i32 },

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: panelbreak_core::Error,
    },

    #[error(transparent)]
    Core(#[from] panelbreak_core::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

fn core_code(e: &panelbreak_core::Error) -> i32 {
    use panelbreak_core::Error as E;
    match e {
        E::UnknownVariable(_) | E::UnknownEntity(_) | E::InvalidSpec(_) | E::InvalidPanel(_) | E::InvalidPValue(_) => {
            EXIT_VALIDATION
        }
        _ => EXIT_NUMERICAL,
    }
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Stage { source, .. } | CliError::Core(source) => core_code(source),
            _ => EXIT_VALIDATION,
        }
    }
}
