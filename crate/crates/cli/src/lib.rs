//! Command implementations behind the `qfact` binary, plus the property
//! batteries shared by `qfact scan` and the acceptance suite.
//!
//! Every command returns the exact text written to stdout. JSON objects are
//! built from structs or insertion-ordered `serde_json::json!` maps, so
//! keys appear in the documented order and output is byte-deterministic.

pub mod battery;
pub mod commands;
pub mod scan;

pub use commands::{exit_code, CliError, GraphKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;
