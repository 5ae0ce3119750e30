//! Command-line front end for `quartic-reduction`.

pub mod commands;
pub mod docs;
pub mod parse;
