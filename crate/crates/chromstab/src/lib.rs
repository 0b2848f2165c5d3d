//! File formats, corpus verification and the `chromstab` command line on
//! top of [`chromstab_core`].

pub mod cli;
pub mod corpus;
pub mod edgelist;
mod error;
pub mod oracle_diff;
pub mod verify;

pub use error::{Error, Result};
