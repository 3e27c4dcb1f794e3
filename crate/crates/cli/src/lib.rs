//! Command-line front end for `biquat`: wire formats, the worked examples
//! and command dispatch. The `biquat` binary is a thin wrapper over [`run`].

pub mod commands;
pub mod examples;
pub mod split;
pub mod wire;

pub use commands::{execute, run, Cli, ExitStatus, Outcome};
pub use wire::{format_biquaternion, parse_biquaternion, WireBiquaternion, WireError};
