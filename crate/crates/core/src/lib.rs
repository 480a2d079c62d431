//! Monotone bargaining games and tight game correspondences.
//!
//! Alice owns items `A = {a_1..a_m}`, Bob owns `B = {b_1..b_n}`. A strategy is a
//! non-decreasing map to the other side; a deal is a pair `(a_i, b_j)` with
//! `x(a_i) = b_j` and `y(b_j) = a_i`. Every profile yields at least one deal and
//! the resulting correspondence is tight, so simple Nash equilibria exist for
//! all utilities. [`solver::solve_monotone`] finds one without building the table.
//!
//! Indices of items are 1-based; outcome `(i, j)` of `G_{m,n}` has row-major
//! index `(i - 1) * n + (j - 1)`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod effectivity;
pub mod error;
pub mod hypergraph;
pub mod jordan;
pub mod monotone;
pub mod multiplayer;
pub mod sets;
pub mod solver;
pub mod table;

pub use error::{Error, Result};
pub use hypergraph::{check_dual, dualize, DualityVerdict, DualityWitness, Hypergraph};
pub use monotone::{build_correspondence, count_strategies, deals, Correspondence, MonotoneMap, Outcome, Player};
pub use sets::{OutcomeSet, VertexSet};
pub use solver::{solve_monotone, solve_table, SimpleEquilibrium, UtilityProfile};
pub use table::{CellTable, GameForm};
