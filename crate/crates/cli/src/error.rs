use ncrw_homology::HomologyError;
use ncrw_resolution::ResolutionError;
use ncrw_rewrite::RewriteError;

/// Errors that end a run without a report. Property failures are not errors; they are
/// reported with status `failed`.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or a violated precondition. Exit code 2.
    Input(String),
    /// A step or rule bound was hit. Exit code 3.
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Limit(m) => write!(f, "limit exceeded: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<RewriteError> for CliError {
    fn from(e: RewriteError) -> Self {
        match e {
            RewriteError::StepLimitExceeded { .. } => CliError::Limit(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<ResolutionError> for CliError {
    fn from(e: ResolutionError) -> Self {
        match e {
            ResolutionError::Rewrite(e) => e.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        CliError::Input(e.to_string())
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        }
    )*};
}

input_error!(std::io::Error, serde_json::Error, ncrw_core::CoreError, ncrw_ars::ArsError, ncrw_automaton::AutomatonError);
