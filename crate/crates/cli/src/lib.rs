//! Command-line front end: instance generation, solving, exact minima,
//! certificate checking and batch comparison.

pub mod app;
pub mod certificate;

pub use app::{run, Cli};
pub use certificate::{CertError, Certificate, Kind};
