use thiserror::Error;

use crate::ast::Pos;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{file}:{line}:{col}: {msg}")]
    Parse { file: String, line: usize, col: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] confalg::Error),
}

impl CliError {
    pub fn parse(file: &str, pos: Pos, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            file: file.into(),
            line: pos.line,
            col: pos.col,
            msg: msg.into(),
        }
    }

    /// 2 for input problems, 3 when the size guard aborted a computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(confalg::Error::SizeGuard { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
