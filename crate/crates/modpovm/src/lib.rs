//! File formats, parallel execution, reporting and the command-line front
//! end for `modpovm-core`.

pub mod cli;
pub mod exec;
pub mod formats;
pub mod report;
