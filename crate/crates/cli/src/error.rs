/// Failures surfaced by the command-line front-end.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad configuration or arguments; exit status 2.
    #[error("configuration error: {0}")]
    Config(String),
    /// Unparseable operator specification; exit status 2.
    #[error("operator spec error: {0}")]
    Operator(String),
    /// Unreadable input or unwritable output; exit status 2.
    #[error("i/o error: {0}")]
    Io(String),
    #[error("computation failed: {0}")]
    Compute(#[from] swcorr::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Operator(_) | CliError::Io(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}
