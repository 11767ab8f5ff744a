//! Library surface of the `hopfcheck` command-line tool, split out so the
//! integration tests can drive the commands directly.

pub mod commands;
pub mod config;
pub mod parse;

pub use commands::{
    classify_exit, cmd_bichar, cmd_check_theorem, cmd_prime_search, cmd_sklyanin,
    cmd_verify_action, PrimeSearchOptions,
};
pub use config::Config;
