//! Bundle files, verification, and the text/JSON reports.

mod bundle;
mod report;

pub use bundle::{read_bundle, verify_bundle, write_bundle, Bundle, VerifyOutcome, VerifyStatus, FORMAT_TAG};
pub use report::{
    best_curve, bounds_report, table1, BoundsReport, DeltaLine, Table1Report, Table1Row, WelchLine,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IoError {
    #[error("malformed bundle: {0}")]
    Malformed(String),
    #[error("{0}")]
    Io(String),
}
