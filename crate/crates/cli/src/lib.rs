//! Command-line front end for `jetframe`: generation of random elements and
//! frames, operations on JSON documents, and the verification suites.

pub mod commands;
pub mod report;
pub mod rng;
pub mod suites;
