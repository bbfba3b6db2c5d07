//! Verification suites, symbol exports and configuration for the `swcorr`
//! command-line tool.

pub mod calculus;
pub mod config;
pub mod error;
pub mod export;
pub mod operator;
pub mod report;
pub mod suites;
