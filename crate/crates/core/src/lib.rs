//! Shortest common superstring approximation built on cycle covers and
//! nice-rotation representatives, with executable checks for the overlap
//! bounds that drive its analysis.
//!
//! The pipeline: normalize the input ([`graph::normalize`]), take a minimum
//! cycle cover of the prefix graph, replace every cycle by a representative
//! `w`-string ([`superstring::representative`]), then solve Max-ATSP-Path
//! over the representatives' overlap graph ([`atsp`]). [`superstring::solve_combined`]
//! returns the better of a generic path-solver solution and the
//! cycle-cover-with-lightest-edge-dropped solution.

pub mod atsp;
pub mod bounds;
pub mod graph;
pub mod rational;
pub mod superstring;
pub mod words;

pub use graph::{Instance, WeightMatrix};
pub use words::{NiceWord, Text};
