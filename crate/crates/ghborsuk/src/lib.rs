//! File formats, result reports and the seeded verification suites behind the
//! `ghborsuk` command line tool.

pub mod io;
pub mod report;
pub mod suites;
