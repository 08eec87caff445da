//! Counting quadratic maps over finite carriers, the dimension audit
//! against `W`, and the square-zero counterexample to flip-fixed points
//! being diagonal.

mod audit;
mod solve;
mod squarezero;

pub use audit::{dimension_audit, AuditReport};
pub use solve::{
    enumerate_quads, CensusResult, CensusWitness, Oracles, CENSUS_GUARD, GRAM_ORACLE_LIMIT,
    RAW_ORACLE_LIMIT, REPLAY_LIMIT,
};
pub use squarezero::{
    monomial_ideal_membership, squarezero_counterexample_check, Move, PureTensor, SquareZeroReport,
};
