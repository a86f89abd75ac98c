//! Lamplighter groups, regular maps between solvable groups, and exact
//! certificates for balanced vertex separators.

pub mod cayley;
pub mod cli;
pub mod groups;
pub mod numbers;
pub mod regmaps;
pub mod report;
pub mod seed;
pub mod separation;
