use serde::Serialize;

use real_schemes::classify::ClassifyError;
use real_schemes::model::ModelError;
use real_schemes::scheme::{IndexError, SchemeError};
use real_schemes::zform::ZFormError;

/// Exit status of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Fail = 1,
    Input = 2,
    Io = 3,
}

/// Machine-readable error printed as the only output of a failed run.
#[derive(Debug, Clone, Serialize)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    #[serde(skip)]
    pub exit: Exit,
}

impl CliError {
    pub fn input(code: &'static str, message: impl Into<String>) -> Self {
        CliError { code, message: message.into(), position: None, exit: Exit::Input }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError { code: "io", message: message.into(), position: None, exit: Exit::Io }
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        let code = match e {
            SchemeError::Syntax { .. } => "syntax",
            SchemeError::Invariant(_) => "invalid-scheme",
            SchemeError::ModelMismatch(_) => "model-mismatch",
            SchemeError::NotColorable(_) => "not-colorable",
        };
        CliError { code, position: e.position(), message: e.to_string(), exit: Exit::Input }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        let code = match e {
            ModelError::Parameters(_) => "model",
            ModelError::CurveClass(_) => "curve-class",
        };
        CliError::input(code, e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Scheme(e) => e.into(),
            ClassifyError::Model(e) => e.into(),
            ClassifyError::Guard { .. } => CliError::input("guard", e.to_string()),
            ClassifyError::UnknownFilter(_) => CliError::input("filter", e.to_string()),
            ClassifyError::Unsupported(_) => CliError::input("unsupported", e.to_string()),
        }
    }
}

impl From<IndexError> for CliError {
    fn from(e: IndexError) -> Self {
        match e {
            IndexError::Scheme(e) => e.into(),
            IndexError::Unoriented => CliError::input("unoriented", e.to_string()),
            other => CliError::input("index", other.to_string()),
        }
    }
}

impl From<ZFormError> for CliError {
    fn from(e: ZFormError) -> Self {
        CliError::input("form", e.to_string())
    }
}
