//! Library side of the `coxbound` command-line tool: the system file format
//! and the commands that run on it.

pub mod commands;
pub mod system_file;

pub use commands::{CliError, Mode, Output, SimulateArgs};
pub use system_file::{NamedRay, ParseError, SystemFile};
