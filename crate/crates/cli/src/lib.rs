//! Library surface of the srlab CLI: the ring-spec language, the JSON
//! report schema, the verify-paper battery, and the subcommand builders.
//! The `srlab` binary is a thin wrapper over these.

pub mod battery;
pub mod commands;
pub mod report;
pub mod ringspec;
