//! Library side of the command-line workbench: the f-vector expression
//! language, file formats, and the JSON run report.  The `polylab` binary
//! is a thin argument-parsing front end over these modules and the core
//! `polylab` crate.

pub mod expr;
pub mod formats;
pub mod report;
