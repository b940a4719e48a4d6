use crate::crossings::CrossingWitness;

/// Errors reported by the core operations.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("seed cell ({col},{row}) does not have the requested state")]
    SeedStateMismatch { col: i32, row: i32 },

    #[error("component is empty")]
    EmptyComponent,

    #[error("component is not {kind}-connected")]
    Disconnected { kind: &'static str },

    #[error("component too close to window boundary")]
    MarginViolation,

    #[error("not a maximal occupied star component: {0}")]
    NotAComponent(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid s-cycle: {0}")]
    InvalidSCycle(String),

    #[error("merge precondition violated: {0}")]
    MergePrecondition(String),

    #[error("an occupied {kind} left-right crossing exists")]
    CrossingExists {
        kind: &'static str,
        witness: CrossingWitness,
    },

    #[error("enumeration cap exceeded: {cells} cells > cap of {cap}")]
    EnumerationCap { cells: u32, cap: u32 },

    #[error("probability {0} out of range [0, 1]")]
    ProbabilityRange(f64),

    #[error("structure violation: {0}")]
    StructureViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
