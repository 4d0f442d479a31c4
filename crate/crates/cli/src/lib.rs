//! Command-line front end for the `kpath` engines: decision and counting
//! commands, a cross-engine verification harness and a scaling benchmark.

pub mod bench;
pub mod cli;
pub mod dispatch;
pub mod generators;
pub mod verify;
