//! Error type shared by the framework modules.

use thiserror::Error;

use crate::system::LeafId;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("systems must be distinct instances")]
    DistinctInstances,

    #[error("cannot compose an empty collection of systems")]
    EmptyComposition,

    #[error("non-composable processes: state mismatch on {leaf}")]
    NonComposable { leaf: LeafId },

    #[error("process is not reversible: segment {segment} is irreversible")]
    NotReversible { segment: usize },

    #[error("volume must be positive (got {0})")]
    NonPositiveVolume(f64),

    #[error("gas state requires p > 0 and V > 0 (got p = {pressure}, V = {volume})")]
    InvalidGasState { pressure: f64, volume: f64 },

    #[error("invalid gas specification: {0}")]
    InvalidGasSpec(String),

    #[error("invalid reservoir parameter: {0}")]
    InvalidReservoir(String),

    #[error("friction cannot extract work (got W = {0})")]
    FrictionExtraction(f64),

    #[error("reservoir approximation violated: energy {energy} outside window [{min}, {max}]")]
    WindowOverflow { energy: f64, min: f64, max: f64 },

    #[error("second-kind perpetual motion attempt: work extraction {0} from a reservoir")]
    PerpetualMotion(f64),

    #[error("postulate (iii) requires identical reservoirs")]
    KindMismatch,

    #[error("trivial setting excluded: both heat flows are zero")]
    TrivialSetting,

    #[error("heat flows are not matched: residual {residual} exceeds {tolerance}")]
    UnmatchedHeats { residual: f64, tolerance: f64 },

    #[error("ratio not approximable within denominator cap {cap}: achieved {achieved}")]
    RatioNotApproximable { achieved: f64, cap: u64 },

    #[error("integrator inconsistency: {context} residual {residual}")]
    IntegratorInconsistency { context: String, residual: f64 },

    #[error("{leaf} is not a participant of this process")]
    UnknownLeaf { leaf: LeafId },

    #[error("{leaf} is already a participant of this process")]
    AlreadyParticipant { leaf: LeafId },

    #[error("{leaf} is not a {expected}")]
    WrongLeafKind { leaf: LeafId, expected: &'static str },

    #[error("gas on {leaf} is not in thermal contact with the reservoir isotherm (relative gap {gap})")]
    NotInContact { leaf: LeafId, gap: f64 },

    #[error("engine run violates its invariants: {0}")]
    EngineInvariant(String),

    #[error("temperature anchor must be positive (got {0})")]
    InvalidAnchor(f64),

    #[error("reference kind index {index} out of range for {len} kinds")]
    BadReference { index: usize, len: usize },

    #[error("copy count must be at least 1")]
    ZeroCopies,
}

pub type Result<T> = std::result::Result<T, Error>;
