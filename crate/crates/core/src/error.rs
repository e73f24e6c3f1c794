use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("component lists differ: [{left}] vs [{right}]")]
    ComponentMismatch { left: String, right: String },

    #[error("unknown component label `{0}`")]
    UnknownLabel(String),

    #[error("invalid component list: {0}")]
    InvalidComponents(String),

    #[error("operation would produce an empty point")]
    EmptyWidth,

    #[error("width {width} exceeds the cap of {cap} for {what}")]
    WidthCap {
        width: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("invalid subnetwork: {0}")]
    InvalidSpec(String),

    #[error("signed digraph is not simple: both signs on {source_label} -> {target_label}")]
    NotSimple { source_label: String, target_label: String },

    #[error("invalid circular form: {0}")]
    InvalidCircularForm(String),

    #[error("cycle is not a cycle of the host graph")]
    CycleNotInGraph,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by exceeding a width cap.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::WidthCap { .. })
    }
}
