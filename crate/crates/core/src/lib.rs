//! Kostant partition functions for the classical Lie types and magic multiplex
//! juggling sequences, with the bijection between them and the counting
//! identities it yields.
//!
//! Counts are [`Count`] (an unbounded unsigned integer) throughout.

pub mod bcd;
pub mod bijection;
pub mod cli;
pub mod closedforms;
mod error;
pub mod juggling;
pub mod kostant;
pub mod poset;
pub mod roots;
pub mod selftest;

pub use error::{Error, Result};

pub type Count = num_bigint::BigUint;

/// Parses `1,-2,3` (optionally wrapped in `<>`, `()` or `[]`). Empty input is
/// the empty vector.
pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let t = s
        .trim()
        .trim_start_matches(['<', '(', '['])
        .trim_end_matches(['>', ')', ']'])
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer `{}` in `{s}`", x.trim())))
        })
        .collect()
}
