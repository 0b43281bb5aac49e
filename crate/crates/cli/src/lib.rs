//! Command-line front end for `edgereg-core`: JSON graph files, DOT export,
//! construction certificates and the randomized lemma checks.

mod commands;
pub mod io;
pub mod json;

pub use commands::{
    cmd_construct, cmd_expand, cmd_export_dot, cmd_invariants, cmd_suspend, cmd_verify, run, Cli,
    Command, ConstructOptions, EXIT_BASE_UNAVAILABLE, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION,
};
