//! Procedures that inspect modules from the outside: separation of
//! exponential-polynomial sums, recovery of tensor-product parameters from
//! action samples, the `T`-operators, nilpotency probes, the module-axiom
//! checker and the separating tests between module classes.

mod extract;
mod fingerprint;
mod separate;

use crate::arith::ArithError;

pub use extract::{prony_recover, vandermonde_extract, ExpSumSpec};
pub use fingerprint::{fingerprint, fingerprint_tensor, Fingerprint, FingerprintOptions};
pub use separate::{
    distinguish, local_nilpotency_probe, module_axiom_check, t_operator_apply, Distinction,
    DistinguishOptions, ModuleClass, Nilpotency, Probe, Separable, TOperatorSpec, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("sample indices must be distinct")]
    DuplicateSampleIndex,
    #[error("invalid exponential-sum description: {0}")]
    DegenerateSpec(String),
    #[error("extraction system is singular")]
    SingularSystem,
    #[error("sample at index {0} is inconsistent with the fitted components")]
    InconsistentSamples(i64),
    #[error("characteristic polynomial has roots that are not rational")]
    NonRationalRootsRemain,
    #[error("no linear recurrence of the allowed order fits the samples")]
    RecurrenceNotFound,
    #[error("operation undefined on the zero vector")]
    ZeroVector,
    #[error("recovered data is not valid: {0}")]
    InvalidRecovery(String),
}

impl From<ArithError> for AnalysisError {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::NonRationalRootsRemain => AnalysisError::NonRationalRootsRemain,
            ArithError::SingularMatrix => AnalysisError::SingularSystem,
            other => AnalysisError::DegenerateSpec(other.to_string()),
        }
    }
}
