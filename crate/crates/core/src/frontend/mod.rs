//! User surface: presentation documents, run configuration, and JSON
//! reports produced by [`run`].

mod config;
mod presentation;
mod report;
mod run;

pub use config::{Check, RunConfig};
pub use presentation::{parse_presentation, Generators, PresentationDoc};
pub use report::{sha256_hex, CheckEntry, Report, Status, REPORT_SCHEMA, SCHEMA_VERSION};
pub use run::run;
