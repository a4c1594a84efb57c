//! Command-line driver for `pickbody`: JSON problem files in, JSON reports
//! (or CSV slice grids) out, plus a seeded self-test battery.

pub mod commands;
pub mod problem;
pub mod report;
pub mod selftest;
pub mod slice;

use pickbody::PickError;
use thiserror::Error;

pub use report::ExitStatus;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent input.
    #[error("input error: {0}")]
    Input(String),

    #[error(transparent)]
    Pick(#[from] PickError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Pick(PickError::Unsolvable) => ExitStatus::Unsolvable,
            CliError::Pick(PickError::InfeasibleGraphDisc { .. } | PickError::NoFeasibleDisc) => {
                ExitStatus::InfeasibleCertificate
            }
            _ => ExitStatus::InputError,
        }
    }
}
