//! Library side of the `kl` command: element constructors for the
//! verification scenarios, report types, and the scenarios themselves.

pub mod elements;
pub mod report;
pub mod scenarios;

pub use report::{CacheInfo, Claim, Report};
pub use scenarios::{run, ScenarioOpts};
