//! IO and orchestration companion to the `prime-labeling` core: the
//! versioned graph-document format, DOT export, wall-clock and multi-thread
//! search driving, and the `prime-labeling` command-line tool.

pub mod cli;
pub mod document;
pub mod dot;
pub mod driver;
