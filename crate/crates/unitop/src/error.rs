use std::fmt;

/// Failure classes, each with a fixed process exit code.
#[derive(Debug)]
pub enum AppError {
    /// A gated assertion failed: a real finding.
    Assertion(String),
    /// Bad input file, flag or guard violation.
    Input(String),
    Io(String),
}

impl AppError {
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Assertion(_) => 1,
            AppError::Input(_) => 2,
            AppError::Io(_) => 3,
        }
    }

    pub fn io(context: impl fmt::Display, err: std::io::Error) -> Self {
        AppError::Io(format!("{context}: {err}"))
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Assertion(m) => write!(f, "assertion failed: {m}"),
            AppError::Input(m) => write!(f, "input error: {m}"),
            AppError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for AppError {}

/// Variant name of a core error, e.g. `NotClosedUnderUnion`.
pub fn kind(err: &unitop_core::Error) -> String {
    let debug = format!("{err:?}");
    debug
        .split(|c: char| !c.is_alphanumeric() && c != '_')
        .next()
        .unwrap_or_default()
        .to_string()
}

impl From<unitop_core::Error> for AppError {
    fn from(err: unitop_core::Error) -> Self {
        AppError::Input(format!("{err} [{}]", kind(&err)))
    }
}
