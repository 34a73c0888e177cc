use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A malformed row in one of the TSV inputs. `line` is 1-based.
    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },

    #[error("duplicate sentence id {0}")]
    DuplicateId(u32),

    #[error("empty question")]
    EmptyQuestion,

    #[error("corpus has no tokens; word probabilities are undefined")]
    EmptyCorpus,

    #[error("invalid index file: {0}")]
    IndexFormat(String),

    #[error("naive bayes training set is empty")]
    EmptyTrainingSet,

    #[error("qa pair {line}: expected sentence id {id} is not in the index")]
    DanglingExpectedId { line: usize, id: u32 },

    #[error("config: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(file: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            file: file.into(),
            line,
            message: message.into(),
        }
    }
}
