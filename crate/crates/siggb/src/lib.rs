//! Problem files, benchmark suites and the `siggb` command line on top of
//! [`siggb_core`].

pub mod cli;
pub mod problem;
pub mod stats;
pub mod suite;
