//! Report records shared between the binary and its integration tests.

pub mod report;
