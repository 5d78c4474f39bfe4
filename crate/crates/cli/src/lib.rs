//! File formats, the built-in catalog, the command implementations and the
//! acceptance runner behind the `satgenus` binary.

pub mod catalog;
pub mod commands;
pub mod formats;
pub mod verify;
